#include "common.hpp"

#include "qsc/error.hpp"
#include "qsc/verify.hpp"

namespace qsc {
namespace {

void expect_ok(const CheckResult& r) {
  EXPECT_TRUE(r.ok()) << r.counterexample;
  EXPECT_GT(r.checks, 0);
}

TEST(Verify, Monomials) {
  EXPECT_EQ(monomials_up_to(2, 1).size(), 3u);
  EXPECT_EQ(monomials_up_to(3, 2).size(), 10u);
  EXPECT_EQ(monomials_up_to(0, 3).size(), 1u);
}

TEST(Verify, IndividualChecks) {
  expect_ok(check_operator_relations(40, 4, 3, 1));
  expect_ok(check_trim_independence(3, 2));
  expect_ok(check_duality(3));
  expect_ok(check_forest_counts(6));
  expect_ok(check_faithfulness(2, 3));
  expect_ok(check_pieri(4));
  expect_ok(check_lr_words(3));
  expect_ok(check_ds_equivalence(3));
  expect_ok(check_ds_positivity(4));
  expect_ok(check_qds(3));
  expect_ok(check_gessel(3, 4));
  expect_ok(check_gz_vertices(3));
  expect_ok(check_hhmp_sampling(3, 300, 5));
  expect_ok(check_flags(3, 5));
}

TEST(Verify, Suites) {
  VerifyOptions opts{3, 11};
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, opts);
    EXPECT_EQ(r.suite, name);
    EXPECT_TRUE(r.passed) << name << ": " << r.counterexample;
    EXPECT_EQ(format_report(r), name + ": PASS (" + std::to_string(r.checks) + " checks)");
  }
  EXPECT_THROW(run_suite("nope", opts), PreconditionError);
}

TEST(Verify, AllSuitesAreSortedAndDeterministic) {
  VerifyOptions opts{3, 2};
  auto a = run_all_suites(opts);
  auto b = run_all_suites(opts);
  ASSERT_EQ(a.size(), suite_names().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].suite, suite_names()[i]);
    EXPECT_EQ(a[i].checks, b[i].checks);
    EXPECT_TRUE(a[i].passed);
  }
}

TEST(Verify, FailureReport) {
  SuiteReport r{"gz", false, 12, "face r1 t1 t1 missing vertex"};
  EXPECT_EQ(format_report(r), "gz: FAIL (12 checks)\n  counterexample: face r1 t1 t1 missing vertex");
}

}  // namespace
}  // namespace qsc
