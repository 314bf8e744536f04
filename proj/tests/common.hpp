#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <ostream>
#include <random>

#include "qsc/perm.hpp"
#include "qsc/poly.hpp"

namespace qsc {

inline Poly P(std::string_view s) { return parse_poly(s); }
inline QPoly QP(std::string_view s) { return parse_qpoly(s); }

inline void PrintTo(const Poly& f, std::ostream* os) { *os << format_poly(f); }
inline void PrintTo(const QPoly& f, std::ostream* os) { *os << format_poly(f); }
inline void PrintTo(const Permutation& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const Word& w, std::ostream* os) { *os << format_word(w); }

// Small random polynomials in x_1..x_vars with a fixed seed per test.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Poly poly(int vars, int max_degree, int max_terms = 6) {
    Poly f;
    int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<std::uint32_t> e(vars, 0);
      int d = uniform(0, max_degree);
      for (int k = 0; k < d; ++k) ++e[uniform(0, vars - 1)];
      f.add_term(Exponent(e), Integer(uniform(-9, 9)));
    }
    return f;
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace qsc
