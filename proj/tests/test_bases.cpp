#include "common.hpp"

#include "qsc/bases.hpp"
#include "qsc/error.hpp"

namespace qsc {
namespace {

Permutation Pm(std::string_view s) { return parse_permutation(s); }

TEST(Schubert, SmallCases) {
  EXPECT_EQ(schubert(Permutation()), P("1"));
  EXPECT_EQ(schubert(Pm("21")), P("x1"));
  EXPECT_EQ(schubert(Pm("132")), P("x1 + x2"));
  EXPECT_EQ(schubert(Pm("321")), P("x1^2*x2"));
  EXPECT_EQ(schubert(Pm("1432")), P("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"));
}

TEST(Schubert, DescentRecursionAndDuality) {
  auto s4 = all_permutations(4);
  for (const auto& w : s4) {
    EXPECT_EQ(schubert(w), schubert_by_alternate_path(w)) << w.to_string();
    for (int i = 1; i <= 4; ++i) {
      Poly d = divided_difference(i, schubert(w));
      if (w.has_descent(i))
        EXPECT_EQ(d, schubert(w * Permutation::simple(i)));
      else
        EXPECT_TRUE(d.is_zero());
    }
    for (const auto& v : s4) EXPECT_EQ(ct(divided_difference_perm(v, schubert(w))), Integer(v == w ? 1 : 0));
  }
}

TEST(Schubert, Expansion) {
  EXPECT_EQ(schubert_expand(P("x1*x2")), (SchubertExpansion{{Pm("231"), 1}}));
  EXPECT_TRUE(schubert_expand(Poly()).empty());
  for (const auto& w : all_permutations(4)) EXPECT_EQ(schubert_expand(schubert(w)), (SchubertExpansion{{w, 1}}));
  PolyGen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = g.poly(4, 3, 5);
    EXPECT_EQ(reassemble(schubert_expand(f)), f);
  }
}

TEST(Forest, Polynomials) {
  EXPECT_EQ(forest_poly(IndexedForest()), P("1"));
  EXPECT_EQ(forest_poly(IndexedForest::generator(1)), P("x1"));
  EXPECT_EQ(forest_poly(IndexedForest::generator(3)), P("x1 + x2 + x3"));
  auto forests = enumerate_suppfor(4);
  for (const auto& f : forests) {
    const Poly& p = forest_poly(f);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.degree(), f.num_internal());
    for (const auto& h : forests)
      EXPECT_EQ(ct(apply_forest(h, p)), Integer(h == f ? 1 : 0)) << f.to_string() << " " << h.to_string();
    auto q = f.qdes();
    for (int i = 1; i <= 6; ++i) {
      Poly t = t_op(i, p);
      if (std::find(q.begin(), q.end(), i) != q.end())
        EXPECT_EQ(t, forest_poly(f.trim_at(i)));
      else
        EXPECT_TRUE(t.is_zero()) << f.to_string() << " i=" << i;
    }
  }
}

TEST(Forest, Expansion) {
  auto x1 = forest_expand(P("x1"));
  EXPECT_EQ(x1, (ForestExpansion{{Code{1}, 1}}));
  auto x2 = forest_expand(P("x2"));
  EXPECT_EQ(x2, (ForestExpansion{{Code{1}, -1}, {Code{0, 1}, 1}}));
  PolyGen g(3);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = g.poly(4, 3, 6);
    EXPECT_EQ(reassemble(forest_expand(f)), f);
  }
}

TEST(Quasisymmetric, Bases) {
  EXPECT_EQ(monomial_qsym({2, 1}, 2), P("x1^2*x2"));
  EXPECT_EQ(fundamental_qsym({1}, 3), P("x1 + x2 + x3"));
  EXPECT_EQ(gessel_coeffs(P("x1 + x2"), 2), (FundamentalExpansion{{Composition{1}, 1}}));
  EXPECT_THROW(gessel_coeffs(P("x2"), 2), PreconditionError);
  // Leading reverse-lex monomial of F_a is x_k^{a_k} ... x_n^{a_n}.
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const auto& a : codes_of_degree(n, d)) {
        if (std::find(a.begin(), a.end(), 0) != a.end()) continue;
        Poly f = fundamental_qsym(a, n);
        EXPECT_TRUE(is_quasisymmetric(f, n));
        EXPECT_EQ(gessel_coeffs(f, n), (FundamentalExpansion{{a, 1}}));
      }
  PolyGen g(19);
  for (int trial = 0; trial < 20; ++trial) {
    int n = g.uniform(1, 4);
    Poly f;
    for (int d = 1; d <= 4; ++d)
      for (const auto& b : codes_of_degree(n, d))
        if (std::find(b.begin(), b.end(), 0) == b.end() && g.uniform(0, 2) == 0)
          f += monomial_qsym(b, n) * Integer(g.uniform(-5, 5));
    EXPECT_EQ(reassemble(gessel_coeffs(f, n), n), f);
  }
}

TEST(Quasisymmetric, Ribbons) {
  Ribbon r = ribbon_of({2, 1, 1, 3});
  EXPECT_EQ(r.lambda, (Partition{4, 3, 3, 3}));
  EXPECT_EQ(r.mu, (Partition{2, 2, 2}));
  Ribbon row = ribbon_of({3});
  EXPECT_EQ(row.lambda, (Partition{3}));
  EXPECT_TRUE(row.mu.empty());
  EXPECT_EQ(skew_schur(row, 3), P("x1^3 + x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2 + x2^3 + x2^2*x3 + x2*x3^2 + x3^3"));
  EXPECT_EQ(schur({1, 1}, 3), P("x1*x2 + x1*x3 + x2*x3"));
  // Gessel coefficients of a symmetric polynomial are Hall pairings with ribbons.
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d)
      for (const auto& lam : partitions_of(d, n)) {
        Poly s = schur(lam, n);
        EXPECT_EQ(schur_expand(s, n), (SchurExpansion{{lam, 1}}));
        auto coeffs = gessel_coeffs(s, n);
        for (int k = 1; k <= n; ++k)
          for (const auto& a : codes_of_degree(n - k + 1, d)) {
            if (std::find(a.begin(), a.end(), 0) != a.end()) continue;
            Integer expect = coeffs.count(a) ? coeffs.at(a) : Integer(0);
            EXPECT_EQ(hall_inner_ribbon(s, ribbon_of(a), n), expect);
          }
      }
}

TEST(Structure, LittlewoodRichardson) {
  auto u = Pm("2341");
  auto w = Pm("15243");
  EXPECT_EQ(lr_coeff(u, w, Pm("263415")), 1);
  EXPECT_EQ(lr_coeff(u, w, Pm("264135")), 1);
  EXPECT_EQ(schubert_expand(schubert(u) * schubert(w)), (SchubertExpansion{{Pm("263415"), 1}, {Pm("264135"), 1}}));
  EXPECT_EQ(lr_coeff(Pm("321"), Pm("21"), Pm("312")), 0);
  for (const auto& v : all_permutations(4)) EXPECT_EQ(lr_coeff(Permutation(), v, v), 1);
  for (int n = 1; n <= 4; ++n)
    for (const auto& omega : enumerate_rtseq(n)) {
      auto [uu, vv] = uv_of(omega);
      for (const auto& x : all_permutations(n)) {
        Integer c = lr_via_word(omega, x);
        EXPECT_GE(c, 0);
        EXPECT_EQ(c, lr_coeff(uu, x, vv)) << format_word(omega) << " " << x.to_string();
      }
    }
}

TEST(Structure, Pieri) {
  // The worked example's permutation is a transcription slip for 146532.
  auto w = Pm("146532");
  EXPECT_EQ(pieri_r(4, w), (SchubertExpansion{{Pm("346215"), 1}}));
  EXPECT_EQ(pieri_t(4, w), (SchubertExpansion{{Pm("246315"), 1}}));
  EXPECT_NE(pieri_r(4, Pm("146352")), (SchubertExpansion{{Pm("346215"), 1}}));
  EXPECT_TRUE(pieri_t(1, Pm("2134") * Permutation::simple(1)).empty());
  for (const auto& v : all_permutations(5))
    for (int i = 1; i <= 5; ++i) {
      EXPECT_EQ(pieri_r(i, v), schubert_expand(r_op(i, schubert(v)))) << v.to_string() << " " << i;
      EXPECT_EQ(pieri_t(i, v), schubert_expand(t_op(i, schubert(v)))) << v.to_string() << " " << i;
      if (!v.has_descent(i)) EXPECT_TRUE(pieri_t(i, v).empty());
    }
  EXPECT_EQ(remove_ins(3, Pm("2514763")), Pm("143652"));
  EXPECT_THROW(remove_ins(1, Pm("21")), PreconditionError);
}

TEST(Structure, PositivityWitness) {
  EXPECT_EQ(positivity_witness(Pm("21"), 2), std::vector<int>{1});
  EXPECT_EQ(apply_t_sequence({1}, P("x1")), P("1"));
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      if (w.length() != n - 1) continue;
      auto seq = positivity_witness(w, n);
      ASSERT_EQ(static_cast<int>(seq.size()), n - 1);
      for (int j = 0; j < n - 1; ++j) EXPECT_LE(seq[j], j + 1);
      Poly c = apply_t_sequence(seq, schubert(w));
      EXPECT_EQ(c.degree(), 0);
      EXPECT_GT(ct(c), 0) << w.to_string();
    }
  EXPECT_THROW(positivity_witness(Pm("321"), 3), PreconditionError);
}

}  // namespace
}  // namespace qsc
