#include "qsc/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "qsc/bases.hpp"
#include "qsc/divsym.hpp"
#include "qsc/error.hpp"
#include "qsc/gz.hpp"
#include "qsc/ops.hpp"
#include "qsc/perm.hpp"
#include "qsc/rtword.hpp"

namespace qsc {

namespace {

// Portable draws: the standard distributions are not reproducible across libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 g_;
};

Poly random_poly(Rng& rng, int vars, int max_degree) {
  Poly f;
  int terms = rng.uniform(1, 8);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(vars, 0);
    int d = rng.uniform(0, max_degree);
    for (int k = 0; k < d; ++k) ++e[rng.uniform(0, vars - 1)];
    int c = rng.uniform(-5, 5);
    if (c == 0) c = 1;
    f.add_term(Exponent(e), Integer(c));
  }
  return f;
}

Poly x(int i) { return Poly::variable(i); }

struct Recorder {
  CheckResult r;
  bool expect(bool ok, const std::function<std::string()>& what) {
    ++r.checks;
    if (!ok && r.counterexample.empty()) r.counterexample = what();
    return ok;
  }
  bool failed() const { return !r.counterexample.empty(); }
};

std::string perm_str(const Permutation& p, int n) { return p.to_string(n); }

std::string expansion_str(const SchubertExpansion& e) {
  std::string s;
  for (const auto& [w, c] : e) s += (s.empty() ? "" : " + ") + c.get_str() + "*S_" + w.to_string();
  return s.empty() ? "0" : s;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

std::vector<Exponent> monomials_up_to(int n, int d) {
  std::vector<Exponent> out;
  std::vector<std::uint32_t> e(std::max(n, 0), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      rec(var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult check_operator_relations(int polys, int max_vars, int max_degree, std::uint64_t seed) {
  Rng rng(seed);
  Recorder rec;
  int top = max_vars;
  for (int p = 0; p < polys && !rec.failed(); ++p) {
    int vars = rng.uniform(1, max_vars);
    Poly f = random_poly(rng, vars, max_degree);
    Poly g = random_poly(rng, vars, std::max(max_degree - 2, 0));
    auto tag = [&](const std::string& rel, int i, int j) {
      return [=] { return rel + " fails at i=" + std::to_string(i) + " j=" + std::to_string(j) + " on f=" + format_poly(f); };
    };
    for (int i = 1; i <= top; ++i) {
      for (int j = 1; j <= top; ++j) {
        if (i > j) {
          rec.expect(t_op(i, t_op(j, f)) == t_op(j, t_op(i + 1, f)), tag("T_i T_j = T_j T_{i+1}", i, j));
          rec.expect(r_op(i, t_op(j, f)) == t_op(j, r_op(i + 1, f)), tag("R_i T_j = T_j R_{i+1}", i, j));
        }
        if (i >= j) {
          rec.expect(t_op(i, r_op(j, f)) == r_op(j, t_op(i + 1, f)), tag("T_i R_j = R_j T_{i+1}", i, j));
          rec.expect(r_op(i, r_op(j, f)) == r_op(j, r_op(i + 1, f)), tag("R_i R_j = R_j R_{i+1}", i, j));
        }
        if (j >= i + 2)
          rec.expect(divided_difference(i, divided_difference(j, f)) == divided_difference(j, divided_difference(i, f)),
                     tag("distant commutation", i, j));
      }
      rec.expect(t_op(i, r_op(i + 1, f)) == r_op(i, t_op(i + 1, f)) + r_op(i + 1, t_op(i, f)),
                 tag("T_i R_{i+1} = R_i T_{i+1} + R_{i+1} T_i", i, i));
      Poly di = divided_difference(i, f);
      rec.expect(divided_difference(i, di).is_zero(), tag("d_i d_i = 0", i, i));
      rec.expect(divided_difference(i, divided_difference(i + 1, di)) ==
                     divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f))),
                 tag("braid", i, i + 1));
      rec.expect(di == divided_difference_by_division(i, f), tag("d_i closed form = quotient", i, i));
      Poly ti = t_op(i, f);
      rec.expect(ti == r_op(i, di), tag("T_i = R_i d_i", i, i));
      rec.expect(ti == r_op(i + 1, di), tag("T_i = R_{i+1} d_i", i, i));
      rec.expect(ti == exact_divide(r_op(i + 1, f) - r_op(i, f), x(i)), tag("T_i = (R_{i+1} - R_i)/x_i", i, i));
      rec.expect(divided_difference(i, f * g) == f * divided_difference(i, g) + di * swap_adjacent(i, g),
                 tag("twisted Leibniz", i, i));
    }
  }
  return rec.r;
}

CheckResult check_trim_independence(int max_n, int max_degree) {
  Recorder rec;
  for (int n = 1; n <= max_n && !rec.failed(); ++n) {
    auto monos = monomials_up_to(n, max_degree);
    for (const auto& f : enumerate_nsuppfor(n)) {
      auto words = trim_set(f, n);
      if (!rec.expect(!words.empty(), [&] { return "empty trim set for " + f.to_string(); })) break;
      if (n <= 7)
        rec.expect(words == trim_set_by_backtracking(f, n),
                   [&] { return "trim by backtracking differs for " + f.to_string(); });
      for (const auto& m : monos) {
        Poly ref = apply_word(words[0], Poly::monomial(m));
        for (std::size_t k = 1; k < words.size(); ++k)
          rec.expect(apply_word(words[k], Poly::monomial(m)) == ref, [&] {
            return format_word(words[0]) + " and " + format_word(words[k]) + " differ on " + format_exponent(m);
          });
      }
    }
  }
  return rec.r;
}

CheckResult check_duality(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n && !rec.failed(); ++n) {
    auto forests = enumerate_suppfor(n);
    for (const auto& g : forests) {
      const Poly& pg = forest_poly(g);
      for (const auto& f : forests) {
        Integer v = ct(apply_forest(f, pg));
        rec.expect(v == (f == g ? 1 : 0), [&] {
          return "ct T_F P_G = " + v.get_str() + " for F=" + f.to_string() + " G=" + g.to_string();
        });
      }
    }
  }
  return rec.r;
}

CheckResult check_forest_counts(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n; ++n) {
    std::map<int, Integer> graded;
    auto forests = enumerate_suppfor(n);
    for (const auto& f : forests) graded[f.num_internal()] += 1;
    for (int i = 0; i < n; ++i) {
      Integer ballot = binomial(n + i, i) * (n - i) / (n + i);
      rec.expect(graded[i] == ballot, [&] {
        return "n=" + std::to_string(n) + " degree " + std::to_string(i) + ": " + graded[i].get_str() + " forests, expected " +
               ballot.get_str();
      });
    }
    Integer catalan = binomial(2 * n, n) / (n + 1);
    rec.expect(Integer(static_cast<long>(forests.size())) == catalan,
               [&] { return "n=" + std::to_string(n) + ": total is not Catalan"; });
  }
  return rec.r;
}

CheckResult check_faithfulness(int max_generators, int max_degree) {
  Recorder rec;
  int g = max_generators;
  // One word per marked forest.
  std::map<AugCode, Word> reps;
  std::vector<Letter> letters;
  for (int i = 1; i <= g; ++i) {
    letters.push_back(t_letter(i));
    letters.push_back(r_letter(i));
  }
  std::function<void(Word&)> grow = [&](Word& w) {
    reps.try_emplace(forest_of(w).aug_code(), w);
    if (static_cast<int>(w.size()) == g) return;
    for (const auto& l : letters) {
      w.push_back(l);
      grow(w);
      w.pop_back();
    }
  };
  Word w;
  grow(w);
  // A generic combination of all test monomials: two operators agree on it only if
  // they agree on every monomial.
  int vars = 2 * g;
  Rng rng(20240611);
  Poly probe;
  for (const auto& m : monomials_up_to(vars, max_degree)) probe.add_term(m, Integer(rng.uniform(1, 1000000)));
  std::unordered_map<std::string, Word> seen;
  for (const auto& [code, word] : reps) {
    std::string key = format_poly(apply_word(word, probe));
    auto [it, fresh] = seen.emplace(key, word);
    rec.expect(fresh, [&] { return format_word(word) + " and " + format_word(it->second) + " give the same operator"; });
  }
  // ct functionals of nested forests on RTSeq_n.
  for (int n = 1; n <= g + 1; ++n) {
    auto monos = monomials_up_to(n, max_degree);
    std::map<std::vector<Integer>, NestedForest> funcs;
    for (const auto& f : enumerate_nsuppfor(n)) {
      Word omega = trim_set(f, n).front();
      std::vector<Integer> vals;
      for (const auto& m : monos) vals.push_back(ct(apply_word(omega, Poly::monomial(m))));
      auto [it, fresh] = funcs.emplace(vals, f);
      rec.expect(fresh, [&] { return f.to_string() + " and " + it->second.to_string() + " give the same functional"; });
    }
  }
  return rec.r;
}

CheckResult check_pieri(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n && !rec.failed(); ++n) {
    for (const auto& w : all_permutations(n)) {
      const Poly& s = schubert(w);
      for (int i = 1; i <= n; ++i) {
        auto chain_r = pieri_r(i, w);
        auto op_r = schubert_expand(r_op(i, s));
        rec.expect(chain_r == op_r, [&] {
          return "R_" + std::to_string(i) + " S_" + perm_str(w, n) + ": chains " + expansion_str(chain_r) + ", operator " +
                 expansion_str(op_r);
        });
        auto chain_t = pieri_t(i, w);
        auto op_t = schubert_expand(t_op(i, s));
        rec.expect(chain_t == op_t, [&] {
          return "T_" + std::to_string(i) + " S_" + perm_str(w, n) + ": chains " + expansion_str(chain_t) + ", operator " +
                 expansion_str(op_t);
        });
      }
    }
  }
  return rec.r;
}

CheckResult check_lr_words(int n) {
  Recorder rec;
  auto perms = all_permutations(n);
  for (const auto& omega : enumerate_rtseq(n)) {
    auto [u, v] = uv_of(omega);
    for (const auto& w : perms) {
      Integer a = lr_via_word(omega, w);
      Integer b = lr_coeff(u, w, v);
      rec.expect(a == b && a >= 0, [&] {
        return format_word(omega) + " with w=" + perm_str(w, n) + ": word gives " + a.get_str() + ", ct d_v(S_u S_w) gives " +
               b.get_str();
      });
    }
  }
  return rec.r;
}

CheckResult check_ds_equivalence(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n && !rec.failed(); ++n) {
    for (const auto& m : monomials_up_to(n, n + 1)) {
      Poly f = Poly::monomial(m);
      Poly d = ds_direct(f, n);
      Poly fac = ds_factorized(f, n);
      rec.expect(d == fac, [&] {
        return "n=" + std::to_string(n) + " f=" + format_poly(f) + ": direct " + format_poly(d) + ", factorized " +
               format_poly(fac);
      });
      if (static_cast<int>(m.degree()) <= n - 1) {
        Poly plain = ds_factorized_plain(f, n);
        rec.expect(d == plain, [&] {
          return "n=" + std::to_string(n) + " f=" + format_poly(f) + ": direct " + format_poly(d) + ", plain " +
                 format_poly(plain);
        });
      }
    }
  }
  return rec.r;
}

CheckResult check_ds_positivity(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (w.length() != n - 1) continue;
      const Poly& s = schubert(w);
      Poly d = ds_factorized(s, n);
      rec.expect(d.is_constant() && d.constant_term() > 0,
                 [&] { return "<S_" + perm_str(w, n) + ">_" + std::to_string(n) + " = " + format_poly(d); });
      auto seq = positivity_witness(w, n);
      Poly t = apply_t_sequence(seq, s);
      rec.expect(t.is_constant() && t.constant_term() > 0,
                 [&] { return "witness for " + perm_str(w, n) + " gives " + format_poly(t); });
      for (int j = 0; j < static_cast<int>(seq.size()); ++j)
        rec.expect(seq[j] >= 1 && seq[j] <= j + 1, [&] { return "witness for " + perm_str(w, n) + " is out of range"; });
    }
  }
  return rec.r;
}

CheckResult check_qds(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& m : monomials_up_to(n, n - 1)) {
      if (static_cast<int>(m.degree()) != n - 1) continue;
      Poly f = Poly::monomial(m);
      QPoly a = qds_factorized(f, n);
      QPoly b = qds_direct(f, n);
      rec.expect(a == b, [&] {
        return "n=" + std::to_string(n) + " f=" + format_poly(f) + ": factorized " + format_poly(a) + ", direct " +
               format_poly(b);
      });
      rec.expect(specialize_q(a, 1) == ds_direct(f, n),
                 [&] { return "q=1 differs from DS for f=" + format_poly(f); });
    }
  }
  return rec.r;
}

CheckResult check_gessel(int n, int max_size) {
  Recorder rec;
  for (int d = 0; d <= max_size; ++d) {
    for (const auto& lambda : partitions_of(d, n)) {
      Poly f = schur(lambda, n);
      auto coeffs = gessel_coeffs(f, n);
      std::string name = "s_(";
      for (std::size_t k = 0; k < lambda.size(); ++k) name += (k ? "," : "") + std::to_string(lambda[k]);
      name += ")";
      rec.expect(reassemble(coeffs, n) == f, [&] { return name + " does not reassemble"; });
      if (d == 0) {
        rec.expect(coeffs.size() == 1 && coeffs.begin()->first.empty() && coeffs.begin()->second == f.constant_term(),
                   [&] { return name + ": wrong constant"; });
        continue;
      }
      // Every composition of d with at most n parts, including those with coefficient 0.
      for (int parts = 1; parts <= n; ++parts)
        for (const auto& a : codes_of_degree(parts, d)) {
          if (std::find(a.begin(), a.end(), 0) != a.end()) continue;
          auto it = coeffs.find(a);
          Integer c = it == coeffs.end() ? Integer(0) : it->second;
          Integer h = hall_inner_ribbon(f, ribbon_of(a), n);
          rec.expect(c == h, [&] { return name + ": coefficient " + c.get_str() + " but ribbon pairing " + h.get_str(); });
        }
    }
  }
  return rec.r;
}

CheckResult check_gz_vertices(int max_n) {
  Recorder rec;
  for (int n = 1; n <= max_n; ++n) {
    RVector lambda;
    for (int i = n; i >= 1; --i) lambda.push_back(i);
    for (const auto& omega : enumerate_rtseq(n)) {
      auto face = gz_face(omega);
      auto verts = face_vertices(face, lambda);
      std::size_t expected = std::size_t{1} << t_count(omega);
      std::string name = format_word(omega);
      rec.expect(verts.size() == expected, [&] { return name + ": " + std::to_string(verts.size()) + " vertices"; });
      std::set<RVector> mus;
      for (const auto& p : verts) {
        rec.expect(is_gz_pattern(p) && face_contains(face, lambda, p), [&] { return name + ": vertex off the face"; });
        mus.insert(moment_mu(p));
      }
      rec.expect(mus.size() == verts.size(), [&] { return name + ": mu is not injective on vertices"; });
      auto [u, v] = uv_of(omega);
      auto bip = bruhat_interval_polytope(u, v, lambda);
      rec.expect(std::set<RVector>(bip.begin(), bip.end()) == mus,
                 [&] { return name + ": vertex image differs from the interval points"; });
      auto gf = gz_forest(face);
      rec.expect(gf.forest == nested_forest_of(omega), [&] { return name + ": forest of the face is " + gf.forest.to_string(); });
      auto cube = cube_polytope(gf.forest, lambda);
      std::set<RVector> images;
      for (const auto& p : verts) images.insert(gz_to_cube(face, p));
      auto cv = cube_vertices(cube);
      rec.expect(std::set<RVector>(cv.begin(), cv.end()) == images && images.size() == expected,
                 [&] { return name + ": cube vertices differ"; });
    }
  }
  return rec.r;
}

CheckResult check_hhmp_sampling(int n, int points, std::uint64_t seed) {
  Recorder rec;
  Rng rng(seed);
  RVector lambda;
  for (int i = n; i >= 1; --i) lambda.push_back(i);
  auto words = enumerate_rtseq(n);
  std::vector<FaceChart> charts;
  std::vector<CubeBox> boxes;
  std::vector<std::vector<RVector>> face_points;
  std::map<Word, int> index;
  for (const auto& w : words) {
    index[w] = static_cast<int>(charts.size());
    auto face = gz_face(w);
    charts.push_back(face_chart(face, lambda));
    boxes.push_back(box_of(w));
    std::vector<RVector> pts;
    for (const auto& p : face_vertices(face, lambda)) pts.push_back(moment_mu(p));
    face_points.push_back(std::move(pts));
  }
  std::vector<RVector> perm_points;
  for (const auto& w : all_permutations(n)) perm_points.push_back(act(w, lambda));

  auto combo = [&](const std::vector<RVector>& pts) {
    RVector z(n);
    Rational total;
    for (const auto& p : pts) {
      if (pts.size() > 1 && rng.uniform(0, 3) == 0) continue;
      Rational wt = rng.uniform(1, 97);
      total += wt;
      for (int i = 0; i < n; ++i) z[i] += wt * p[i];
    }
    if (total == 0) return pts.front();
    for (auto& c : z) c /= total;
    return z;
  };

  std::set<Word> top_hit;
  for (int k = 0; k < points && !rec.failed(); ++k) {
    RVector z = (k % 2 == 0) ? combo(perm_points) : combo(face_points[rng.uniform(0, static_cast<int>(words.size()) - 1)]);
    std::string zs = format_rational_vector(z);
    rec.expect(in_permutahedron(z, lambda), [&] { return zs + " rejected by the permutahedron test"; });
    Word located = hhmp_locate(z, lambda);
    int li = index.at(located);
    if (t_count(located) == n - 1) top_hit.insert(located);
    for (std::size_t f = 0; f < words.size(); ++f) {
      bool closed = chart_contains(charts[f], z, false);
      bool open = chart_contains(charts[f], z, true);
      bool expect_closed = box_contains(boxes[f], boxes[li]);
      rec.expect(open == (static_cast<int>(f) == li), [&] {
        return zs + " located in " + format_word(located) + " but relative interior test of " + format_word(words[f]) +
               " says " + (open ? "inside" : "outside");
      });
      rec.expect(closed == expect_closed, [&] {
        return zs + " in " + format_word(located) + ": closed face " + format_word(words[f]) + " containment " +
               (closed ? "true" : "false") + ", box containment " + (expect_closed ? "true" : "false");
      });
    }
  }
  long factorial = 1;
  for (int i = 2; i < n; ++i) factorial *= i;
  rec.expect(static_cast<long>(top_hit.size()) == factorial,
             [&] { return std::to_string(top_hit.size()) + " top cells hit, expected " + std::to_string(factorial); });
  return rec.r;
}

CheckResult check_flags(int n, std::uint64_t seed) {
  Recorder rec;
  Rng rng(seed);
  for (const auto& omega : enumerate_rtseq(n)) {
    auto m = star_matrix(omega);
    std::map<std::pair<int, int>, Rational> values;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        if (m.at(r, c) == '*') {
          Rational v(rng.uniform(1, 50), rng.uniform(1, 7));
          v.canonicalize();
          if (rng.uniform(0, 1)) v = -v;
          values[{r, c}] = v;
        }
    rec.expect(hhmp_membership(flag_from_star_matrix(m, values)),
               [&] { return "generic flag of " + format_word(omega) + " (" + m.to_string() + ") is not a member"; });
  }
  if (n == 3) {
    RMatrix in{{0, 1, 0}, {1, 0, 1}, {1, 2, 3}};   // V_1 inside span(e_2, e_3)
    RMatrix out{{1, 1, 0}, {1, 0, 1}, {1, 2, 3}};  // V_1 generic, e_1 not in V_2
    rec.expect(hhmp_membership(in), [] { return "flag with V_1 in span(e_2,e_3) rejected"; });
    rec.expect(!hhmp_membership(out), [] { return "generic flag accepted"; });
  }
  return rec.r;
}

// ---- suites ----------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ds", "duality", "gessel", "gz", "pieri", "relations", "trim"};
  return names;
}

namespace {

int pick(int max_n, int fallback) { return max_n > 0 ? max_n : fallback; }

CheckResult merge(std::initializer_list<std::function<CheckResult()>> parts) {
  CheckResult out;
  for (const auto& p : parts) {
    CheckResult r = p();
    out.checks += r.checks;
    if (!r.ok()) {
      out.counterexample = r.counterexample;
      break;
    }
  }
  return out;
}

}  // namespace

SuiteReport run_suite(std::string_view name, const VerifyOptions& o) {
  CheckResult r;
  if (name == "relations") {
    r = check_operator_relations(500, pick(o.max_n, 6), 5, o.seed);
  } else if (name == "duality") {
    int n = pick(o.max_n, 5);
    r = merge({[&] { return check_duality(n); }, [&] { return check_forest_counts(std::max(n, 7)); }});
  } else if (name == "trim") {
    int n = pick(o.max_n, 5);
    r = merge({[&] { return check_trim_independence(n, 4); }, [&] { return check_faithfulness(std::min(n, 4), 4); }});
  } else if (name == "pieri") {
    int n = pick(o.max_n, 5);
    r = merge({[&] { return check_pieri(n); }, [&] { return check_lr_words(std::min(n, 4)); }});
  } else if (name == "ds") {
    int n = pick(o.max_n, 5);
    r = merge({[&] { return check_ds_equivalence(std::min(n, 4)); }, [&] { return check_ds_positivity(n); },
               [&] { return check_qds(std::min(n, 4)); }});
  } else if (name == "gessel") {
    r = check_gessel(pick(o.max_n, 4), 5);
  } else if (name == "gz") {
    int n = pick(o.max_n, 4);
    r = merge({[&] { return check_gz_vertices(n); },
               [&] {
                 CheckResult acc;
                 for (int k = 2; k <= n && acc.ok(); ++k) {
                   auto s = check_hhmp_sampling(k, k == n ? 10000 : 1000, o.seed + static_cast<std::uint64_t>(k));
                   acc.checks += s.checks;
                   acc.counterexample = s.counterexample;
                 }
                 return acc;
               },
               [&] {
                 CheckResult acc;
                 for (int k = 1; k <= n && acc.ok(); ++k) {
                   auto s = check_flags(k, o.seed + static_cast<std::uint64_t>(k));
                   acc.checks += s.checks;
                   acc.counterexample = s.counterexample;
                 }
                 return acc;
               }});
  } else {
    throw PreconditionError("unknown verification suite '" + std::string(name) + "'");
  }
  return SuiteReport{std::string(name), r.ok(), r.checks, r.counterexample};
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opts) {
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& s : suite_names()) jobs.push_back(std::async(std::launch::async, [&opts, s] { return run_suite(s, opts); }));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const SuiteReport& a, const SuiteReport& b) { return a.suite < b.suite; });
  return out;
}

std::string format_report(const SuiteReport& r) {
  std::string s = r.suite + ": " + (r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.checks) + " checks)";
  if (!r.passed) s += "\n  counterexample: " + r.counterexample;
  return s;
}

}  // namespace qsc
