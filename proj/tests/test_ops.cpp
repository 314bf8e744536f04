#include "common.hpp"

#include "qsc/forest.hpp"
#include "qsc/ops.hpp"
#include "qsc/verify.hpp"

namespace qsc {
namespace {

TEST(Ops, DividedDifference) {
  EXPECT_EQ(divided_difference(1, P("x1")), P("1"));
  EXPECT_TRUE(divided_difference(1, P("x1*x2")).is_zero());
  EXPECT_EQ(divided_difference(1, P("x1^2")), P("x1 + x2"));
  EXPECT_EQ(divided_difference(2, P("x1^2*x2^3")), P("x1^2*x2^2 + x1^2*x2*x3 + x1^2*x3^2"));
}

TEST(Ops, BergeronSottile) {
  EXPECT_TRUE(r_op(2, P("x1^2*x2")).is_zero());
  EXPECT_EQ(r_op(1, P("x2")), P("x1"));
  EXPECT_EQ(r_op(4, P("x1*x3^2 - x2")), P("x1*x3^2 - x2"));
  EXPECT_EQ(r_op(2, P("x3 + x1*x4")), P("x2 + x1*x3"));
}

TEST(Ops, QuasisymmetricDividedDifference) {
  EXPECT_EQ(t_op(1, P("x1")), P("1"));
  EXPECT_EQ(t_op(1, P("x2")), P("-1"));
  EXPECT_TRUE(t_op(1, P("x1 + x2")).is_zero());
  EXPECT_EQ(t_op(2, P("x1*x2^2")), t_op_by_division(2, P("x1*x2^2")));
}

TEST(Ops, CyclicOperators) {
  EXPECT_EQ(r_cyc(1, 3, P("x1")), P("x3"));
  EXPECT_EQ(r_cyc(2, 3, P("x1 + x2*x3^2 + x4")), P("x1 + x3*x2^2 + x4"));
  EXPECT_EQ(t_cyc(1, 2, P("x1")), P("1"));
  PolyGen gen(11);
  for (int k = 0; k < 100; ++k) {
    int n = gen.uniform(2, 5), i = gen.uniform(1, n - 1);
    Poly f = gen.poly(n, 4);
    EXPECT_EQ(t_cyc(i, n, f), t_cyc_by_division(i, n, f));
    // Setting x_n = 0 in the output turns R_{i,n} into R_i and T_{i,n} into T_i.
    EXPECT_EQ(substitute(r_cyc(i, n, f), {{n, Poly()}}), r_op(i, f));
    EXPECT_EQ(substitute(t_cyc(i, n, f), {{n, Poly()}}), t_op(i, f));
  }
}

TEST(Ops, ConstantTerm) {
  EXPECT_EQ(ct(P("3 + x1")), 3);
  EXPECT_EQ(ct(P("x1*x2")), 0);
  EXPECT_EQ(ct(P("1")), 1);
}

TEST(Ops, Words) {
  Word a = parse_word("r1 t1 t2 t1 r2"), b = parse_word("r1 t1 t1 r2 t4");
  for (const auto& m : monomials_up_to(5, 3)) EXPECT_EQ(apply_word(a, Poly::monomial(m)), apply_word(b, Poly::monomial(m)));
  Poly f = P("x1^2*x3 - 4*x2");
  EXPECT_EQ(apply_word({}, f), f);
  EXPECT_EQ(apply_word(parse_word("r1 r1 r1"), P("7")), P("7"));
  EXPECT_EQ(format_word(parse_word("  r1   t12 r3 ")), "r1 t12 r3");
  EXPECT_THROW(parse_word("r0"), ParseError);
  EXPECT_THROW(parse_word("r1 s2"), ParseError);
  EXPECT_EQ(t_count(a), 3);
}

TEST(Ops, ForestOperators) {
  Poly f = P("x1^2*x2 + 3*x2*x3^2 - x4^3 + x1*x3*x4");
  EXPECT_EQ(apply_forest(IndexedForest(), f), f);
  EXPECT_EQ(apply_forest(IndexedForest::generator(1), P("x1 + x2")), t_op(1, P("x1 + x2")));
  // 2 * 1 = 1 * 3 in the Thompson monoid.
  EXPECT_EQ(t_op(2, t_op(1, f)), t_op(1, t_op(3, f)));
  EXPECT_EQ(apply_forest(IndexedForest::generator(2) * IndexedForest::generator(1), f), t_op(2, t_op(1, f)));
}

TEST(Ops, SymmetryTests) {
  EXPECT_TRUE(is_quasisymmetric(P("x1 + x2"), 2));
  EXPECT_TRUE(is_symmetric(P("x1 + x2"), 2));
  Poly m = P("x1*x2^2 + x1*x3^2 + x2*x3^2");
  EXPECT_TRUE(is_quasisymmetric(m, 3));
  EXPECT_FALSE(is_symmetric(m, 3));
  EXPECT_FALSE(is_quasisymmetric(P("x2"), 2));
}

class OpsProperty : public ::testing::Test {
 protected:
  PolyGen gen{424242};
};

TEST_F(OpsProperty, CommutationRelations) {
  for (int k = 0; k < 200; ++k) {
    Poly f = gen.poly(6, 5);
    int i = gen.uniform(1, 6), j = gen.uniform(1, 6);
    if (i > j) {
      EXPECT_EQ(t_op(i, t_op(j, f)), t_op(j, t_op(i + 1, f)));
      EXPECT_EQ(r_op(i, t_op(j, f)), t_op(j, r_op(i + 1, f)));
    }
    if (i >= j) {
      EXPECT_EQ(t_op(i, r_op(j, f)), r_op(j, t_op(i + 1, f)));
      EXPECT_EQ(r_op(i, r_op(j, f)), r_op(j, r_op(i + 1, f)));
    }
    EXPECT_EQ(t_op(i, r_op(i + 1, f)), r_op(i, t_op(i + 1, f)) + r_op(i + 1, t_op(i, f)));
  }
}

TEST_F(OpsProperty, NilHeckeAndLeibniz) {
  for (int k = 0; k < 200; ++k) {
    Poly f = gen.poly(6, 5), g = gen.poly(6, 3);
    int i = gen.uniform(1, 5);
    EXPECT_TRUE(divided_difference(i, divided_difference(i, f)).is_zero());
    EXPECT_EQ(divided_difference(i, divided_difference(i + 1, divided_difference(i, f))),
              divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, f))));
    EXPECT_EQ(divided_difference(i, divided_difference(i + 3, f)), divided_difference(i + 3, divided_difference(i, f)));
    EXPECT_EQ(divided_difference(i, f * g), f * divided_difference(i, g) + divided_difference(i, f) * swap_adjacent(i, g));
    EXPECT_EQ(divided_difference(i, f), divided_difference_by_division(i, f));
  }
}

TEST_F(OpsProperty, ThreeFormsOfT) {
  for (int k = 0; k < 200; ++k) {
    Poly f = gen.poly(6, 5);
    int i = gen.uniform(1, 6);
    Poly t = t_op(i, f);
    EXPECT_EQ(t, r_op(i, divided_difference(i, f)));
    EXPECT_EQ(t, r_op(i + 1, divided_difference(i, f)));
    EXPECT_EQ(t, exact_divide(r_op(i + 1, f) - r_op(i, f), Poly::variable(i)));
  }
}

TEST_F(OpsProperty, QuasisymmetricFactorsPullOut) {
  // X(g h) = (R_1 g) X(h) for g quasisymmetric in x_1..x_n and X in {R_i, T_i}, i <= n.
  Poly g = P("x1*x2^2 + x1*x3^2 + x2*x3^2 + 2*x1 + 2*x2 + 2*x3");
  ASSERT_TRUE(is_quasisymmetric(g, 3));
  Poly r1g = r_op(1, g);
  for (int k = 0; k < 100; ++k) {
    Poly h = gen.poly(3, 3);
    for (int i = 1; i <= 3; ++i) {
      EXPECT_EQ(r_op(i, g * h), r1g * r_op(i, h));
      if (i < 3) EXPECT_EQ(t_op(i, g * h), r1g * t_op(i, h));
    }
  }
}

}  // namespace
}  // namespace qsc
