#include "common.hpp"

#include <set>

#include "qsc/error.hpp"
#include "qsc/gz.hpp"

namespace qsc {
namespace {

RVector V(std::initializer_list<long> xs) {
  RVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RVector staircase(int n) {
  RVector out;
  for (int i = n; i >= 1; --i) out.emplace_back(i);
  return out;
}

std::set<RVector> mu_images(const GZFace& f, const RVector& lambda) {
  std::set<RVector> out;
  for (const auto& p : face_vertices(f, lambda)) out.insert(moment_mu(p));
  return out;
}

TEST(GZ, PatternsAndMoment) {
  GZPattern top{V({2, 1}), V({2})};
  GZPattern bottom{V({2, 1}), V({1})};
  EXPECT_TRUE(is_gz_pattern(top));
  EXPECT_FALSE(is_gz_pattern(GZPattern{V({2, 1}), V({3})}));
  EXPECT_EQ(moment_mu(top), V({1, 2}));
  EXPECT_EQ(moment_mu(bottom), V({2, 1}));
  EXPECT_EQ(act(Permutation::simple(1), V({2, 1})), V({1, 2}));
  EXPECT_EQ(act(parse_permutation("231"), V({3, 2, 1})), V({1, 3, 2}));
}

TEST(GZ, Faces) {
  auto lambda = staircase(3);
  auto pt = gz_face(parse_word("r1 r1 r1"));
  EXPECT_EQ(pt.dimension(), 0);
  ASSERT_EQ(face_vertices(pt, lambda).size(), 1u);
  EXPECT_EQ(moment_mu(face_vertices(pt, lambda)[0]), lambda);
  for (const char* w : {"r1 t1 t1", "r1 t1 t2"}) {
    auto f = gz_face(parse_word(w));
    EXPECT_EQ(f.dimension(), 2);
    auto verts = face_vertices(f, lambda);
    EXPECT_EQ(verts.size(), 4u);
    for (const auto& p : verts) {
      EXPECT_TRUE(is_gz_pattern(p));
      EXPECT_TRUE(face_contains(f, lambda, p));
      EXPECT_FALSE(face_contains(f, lambda, p, true));
    }
  }
  // The two top cells of Perm(3,2,1) together cover all six vertices.
  auto a = mu_images(gz_face(parse_word("r1 t1 t1")), lambda);
  auto b = mu_images(gz_face(parse_word("r1 t1 t2")), lambda);
  a.insert(b.begin(), b.end());
  EXPECT_EQ(a.size(), 6u);
  EXPECT_THROW(gz_face(parse_word("r1 r3")), PreconditionError);
}

TEST(GZ, FacesMatchBruhatIntervalPolytopes) {
  for (int n = 1; n <= 4; ++n) {
    auto lambda = staircase(n);
    for (const auto& w : enumerate_rtseq(n)) {
      auto f = gz_face(w);
      auto verts = face_vertices(f, lambda);
      EXPECT_EQ(verts.size(), std::size_t{1} << t_count(w));
      auto images = mu_images(f, lambda);
      EXPECT_EQ(images.size(), verts.size()) << format_word(w);
      auto [u, v] = uv_of(w);
      auto bip = bruhat_interval_polytope(u, v, lambda);
      EXPECT_EQ(images, std::set<RVector>(bip.begin(), bip.end())) << format_word(w);
    }
  }
  auto all = bruhat_interval_polytope(Permutation(), Permutation::longest(4), staircase(4));
  EXPECT_EQ(std::set<RVector>(all.begin(), all.end()).size(), 24u);
  auto w = parse_permutation("2413");
  EXPECT_EQ(bruhat_interval_polytope(w, w, staircase(4)), std::vector<RVector>{act(w, staircase(4))});
  EXPECT_THROW(bruhat_interval_polytope(parse_permutation("21"), Permutation(), staircase(2)), PreconditionError);
}

TEST(GZ, FaceLatticeMatchesBoxes) {
  auto lambda = staircase(4);
  auto words = enumerate_rtseq(4);
  std::vector<std::set<RVector>> images;
  for (const auto& w : words) images.push_back(mu_images(gz_face(w), lambda));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      bool sub = std::includes(images[i].begin(), images[i].end(), images[j].begin(), images[j].end());
      EXPECT_EQ(sub, box_contains(box_of(words[i]), box_of(words[j])))
          << format_word(words[i]) << " / " << format_word(words[j]);
    }
}

TEST(GZ, Cubes) {
  auto lambda = staircase(3);
  auto empty = cube_polytope(NestedForest(), lambda);
  EXPECT_EQ(empty.dimension(), 0);
  EXPECT_EQ(cube_vertices(empty).size(), 1u);
  auto wedge = cube_polytope(parse_nested_forest("{1,2}:^.."), lambda);
  ASSERT_EQ(wedge.dimension(), 1);
  EXPECT_TRUE(wedge.left[0].leaf && wedge.left[0].id == 1);
  EXPECT_TRUE(wedge.right[0].leaf && wedge.right[0].id == 2);
  EXPECT_TRUE(cube_contains(wedge, V({3})));
  EXPECT_TRUE(cube_contains(wedge, V({2})));
  EXPECT_FALSE(cube_contains(wedge, V({1})));
  for (int n = 1; n <= 4; ++n) {
    auto lam = staircase(n);
    for (const auto& w : enumerate_rtseq(n)) {
      auto f = gz_face(w);
      auto g = gz_forest(f);
      EXPECT_EQ(g.forest, nested_forest_of(w)) << format_word(w);
      auto cube = cube_polytope(g.forest, lam);
      EXPECT_EQ(cube.dimension(), f.dimension());
      std::set<RVector> mapped;
      for (const auto& p : face_vertices(f, lam)) {
        auto phi = gz_to_cube(f, p);
        EXPECT_TRUE(cube_contains(cube, phi));
        mapped.insert(phi);
      }
      auto cv = cube_vertices(cube);
      EXPECT_EQ(mapped, std::set<RVector>(cv.begin(), cv.end())) << format_word(w);
    }
  }
}

TEST(GZ, Locate) {
  auto lambda = staircase(3);
  EXPECT_EQ(hhmp_locate(lambda, lambda), parse_word("r1 r1 r1"));
  for (const auto& u : all_permutations(3)) {
    auto w = hhmp_locate(act(u, lambda), lambda);
    EXPECT_EQ(t_count(w), 0);
    EXPECT_EQ(uv_of(w).first, u);
  }
  // The barycenter lies on an interior wall between the two top cells.
  auto w = hhmp_locate(V({2, 2, 2}), lambda);
  EXPECT_EQ(w, parse_word("r1 t1 r2"));
  EXPECT_TRUE(chart_contains(face_chart(gz_face(w), lambda), V({2, 2, 2}), true));
  RVector inside{Rational(5, 2), Rational(2), Rational(3, 2)};
  auto top = hhmp_locate(inside, lambda);
  EXPECT_EQ(t_count(top), 2);
  EXPECT_TRUE(chart_contains(face_chart(gz_face(top), lambda), inside, true));
  EXPECT_THROW(hhmp_locate(V({4, 1, 1}), lambda), PreconditionError);
  EXPECT_THROW(hhmp_locate(V({3, 2}), lambda), PreconditionError);
  EXPECT_THROW(hhmp_locate(V({2, 2}), V({1, 1})), PreconditionError);
  EXPECT_TRUE(in_permutahedron(V({2, 2, 2}), lambda));
  EXPECT_FALSE(in_permutahedron(V({1, 1, 4}), lambda));
}

TEST(GZ, LocateIsExclusive) {
  // Every vertex and edge midpoint of every face lands in exactly one relative interior.
  auto lambda = staircase(4);
  std::vector<FaceChart> charts;
  auto words = enumerate_rtseq(4);
  for (const auto& w : words) charts.push_back(face_chart(gz_face(w), lambda));
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto verts = face_vertices(charts[i].face, lambda);
    RVector z(4, Rational(0));
    for (const auto& p : verts) {
      auto m = moment_mu(p);
      for (int k = 0; k < 4; ++k) z[k] += m[k] / static_cast<long>(verts.size());
    }
    auto located = hhmp_locate(z, lambda);
    EXPECT_EQ(located, words[i]);
    int hits = 0;
    for (const auto& c : charts) hits += chart_contains(c, z, true);
    EXPECT_EQ(hits, 1) << format_word(words[i]);
  }
}

TEST(GZ, Flags) {
  RMatrix in{{0, 1, 0}, {1, 0, 1}, {1, 2, 3}};
  RMatrix out{{1, 1, 0}, {1, 0, 1}, {1, 2, 3}};
  EXPECT_TRUE(hhmp_membership(in));
  EXPECT_FALSE(hhmp_membership(out));
  EXPECT_THROW(hhmp_membership(RMatrix{{1, 1}, {1, 1}}), PreconditionError);
  EXPECT_TRUE(hhmp_membership(RMatrix{{1, 1}, {1, 2}}));
  PolyGen g(31);
  for (const auto& w : enumerate_rtseq(4)) {
    auto m = star_matrix(w);
    std::map<std::pair<int, int>, Rational> values;
    for (int r = 1; r <= 4; ++r)
      for (int c = 1; c <= 4; ++c)
        if (m.at(r, c) == '*') values[{r, c}] = Rational(g.uniform(1, 9) * (g.uniform(0, 1) ? 1 : -1), g.uniform(1, 5));
    auto flag = flag_from_star_matrix(m, values);
    EXPECT_TRUE(hhmp_membership(flag)) << format_word(w);
  }
}

TEST(GZ, RationalVectors) {
  EXPECT_EQ(parse_rational_vector("(1, 2/3,-4)"), (RVector{Rational(1), Rational(2, 3), Rational(-4)}));
  EXPECT_EQ(parse_rational_vector("[5]"), V({5}));
  EXPECT_EQ(format_rational_vector(RVector{Rational(1), Rational(-1, 2)}), "(1,-1/2)");
  EXPECT_THROW(parse_rational_vector("(1,,2)"), ParseError);
  EXPECT_THROW(parse_rational_vector("(1/0)"), ParseError);
}

}  // namespace
}  // namespace qsc
