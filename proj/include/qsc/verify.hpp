#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/poly.hpp"

namespace qsc {

struct VerifyOptions {
  int max_n = 0;           // 0 keeps each suite's default size
  std::uint64_t seed = 7;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  long checks = 0;
  std::string counterexample;  // first failure, empty when passed
};

// relations, duality, trim, pieri, ds, gessel, gz
const std::vector<std::string>& suite_names();
// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts);
// Every suite, in parallel; reports sorted by suite name.
std::vector<SuiteReport> run_all_suites(const VerifyOptions& opts);
std::string format_report(const SuiteReport& r);

// Monomials of degree <= d in x_1..x_n, in lex order of exponents.
std::vector<Exponent> monomials_up_to(int n, int d);

// ---- individual checks, shared with the test binaries ------------------------
// Each returns the number of checks made and fills counterexample on the first failure.
struct CheckResult {
  long checks = 0;
  std::string counterexample;
  bool ok() const { return counterexample.empty(); }
};

CheckResult check_operator_relations(int polys, int max_vars, int max_degree, std::uint64_t seed);
CheckResult check_trim_independence(int max_n, int max_degree);
CheckResult check_duality(int max_n);
CheckResult check_forest_counts(int max_n);
CheckResult check_faithfulness(int max_generators, int max_degree);
CheckResult check_pieri(int max_n);
CheckResult check_lr_words(int n);
CheckResult check_ds_equivalence(int max_n);
CheckResult check_ds_positivity(int max_n);
CheckResult check_qds(int max_n);
CheckResult check_gessel(int n, int max_size);
CheckResult check_gz_vertices(int max_n);
CheckResult check_hhmp_sampling(int n, int points, std::uint64_t seed);
CheckResult check_flags(int n, std::uint64_t seed);

}  // namespace qsc
