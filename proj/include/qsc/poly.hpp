#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/error.hpp"
#include "qsc/scalar.hpp"

namespace qsc {

// Exponent vector of a monomial in x_1, x_2, ...; stored without trailing zeros.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<std::uint32_t> e) : e_(std::move(e)) { normalize(); }
  Exponent(std::initializer_list<std::uint32_t> e) : e_(e) { normalize(); }

  static Exponent unit(int var, std::uint32_t power = 1);

  // 1-based; zero past the stored range.
  std::uint32_t operator[](int var) const {
    return var >= 1 && static_cast<std::size_t>(var) <= e_.size() ? e_[var - 1] : 0;
  }
  int size() const { return static_cast<int>(e_.size()); }
  std::uint32_t degree() const { return deg_; }
  const std::vector<std::uint32_t>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  bool divides(const Exponent& o) const;
  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;  // requires divides

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.e_ == b.e_; }
  friend bool operator<(const Exponent& a, const Exponent& b) { return a.e_ < b.e_; }

 private:
  void normalize();
  std::vector<std::uint32_t> e_;
  std::uint32_t deg_ = 0;
};

// Graded reverse lexicographic order with x_1 > x_2 > ...
struct GrevlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

template <Coefficient C>
class BasicPoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Exponent, C, GrevlexLess>;

  BasicPoly() = default;
  explicit BasicPoly(const C& constant) {
    if (!qsc::is_zero(constant)) terms_.emplace(Exponent{}, constant);
  }
  static BasicPoly monomial(const Exponent& e, const C& c = C(1)) {
    BasicPoly p;
    p.add_term(e, c);
    return p;
  }
  static BasicPoly variable(int i) { return monomial(Exponent::unit(i)); }

  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }

  // Largest variable index appearing; 0 for constants.
  int max_variable() const;
  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }
  bool is_homogeneous() const;
  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C() : it->second;
  }
  C constant_term() const { return coefficient(Exponent{}); }
  // Grevlex-leading term. Requires nonzero.
  const std::pair<const Exponent, C>& leading_term() const { return *terms_.rbegin(); }

  void add_term(const Exponent& e, const C& c);

  BasicPoly& operator+=(const BasicPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicPoly& operator*=(const BasicPoly& o) {
    *this = *this * o;
    return *this;
  }
  BasicPoly& operator*=(const C& c);
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) { return a *= C(-1); }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) { return multiply(a, b); }
  friend BasicPoly operator*(BasicPoly a, const C& c) { return a *= c; }
  friend BasicPoly operator*(const C& c, BasicPoly a) { return a *= c; }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.terms_ == b.terms_; }

  // Applies fn to each exponent; a nullopt drops the term. Colliding images add.
  template <class Fn>
  BasicPoly map_exponents(Fn&& fn) const {
    BasicPoly out;
    for (const auto& [e, c] : terms_) {
      std::optional<Exponent> img = fn(e);
      if (img) out.add_term(*img, c);
    }
    return out;
  }

 private:
  static BasicPoly multiply(const BasicPoly& a, const BasicPoly& b);
  TermMap terms_;
};

using Poly = BasicPoly<Integer>;
using QPoly = BasicPoly<QCoeff>;

template <Coefficient C>
BasicPoly<C> pow(const BasicPoly<C>& f, unsigned k);

// Simultaneous substitution x_i -> images[i]; unlisted variables are kept.
template <Coefficient C>
BasicPoly<C> substitute(const BasicPoly<C>& f, const std::map<int, BasicPoly<C>>& images);

template <Coefficient C>
std::optional<BasicPoly<C>> try_exact_divide(const BasicPoly<C>& f, const BasicPoly<C>& g);

// Throws InexactDivision when g does not divide f.
template <Coefficient C>
BasicPoly<C> exact_divide(const BasicPoly<C>& f, const BasicPoly<C>& g) {
  auto r = try_exact_divide(f, g);
  if (!r) throw InexactDivision();
  return *std::move(r);
}

template <Coefficient C>
C evaluate(const BasicPoly<C>& f, const std::vector<C>& point);  // point[i-1] is x_i

QPoly lift(const Poly& f);
// q -> value; every coefficient becomes an integer.
Poly specialize_q(const QPoly& f, const Integer& q);
// Substitutes x_i -> q^(i-1) and returns the result as a polynomial in q.
QCoeff principal_specialization(const Poly& f);

// Text form: terms joined by + and -, each [integer][*]factor(*factor)* with
// factors x<k>[^e] and q[^e]. Canonical output lists terms in descending grevlex.
Poly parse_poly(std::string_view text);
QPoly parse_qpoly(std::string_view text);
std::string format_poly(const Poly& f);
std::string format_poly(const QPoly& f);
std::string format_exponent(const Exponent& e);

// Quotient f / (product of den). Denominator factors are kept separately so that
// sums over many terms share a factored common denominator.
template <Coefficient C>
class BasicRationalFn {
 public:
  BasicRationalFn() = default;
  explicit BasicRationalFn(BasicPoly<C> num) : num_(std::move(num)) {}
  BasicRationalFn(BasicPoly<C> num, std::vector<BasicPoly<C>> den_factors);

  const BasicPoly<C>& numerator() const { return num_; }
  const std::vector<BasicPoly<C>>& denominator_factors() const { return den_; }
  BasicPoly<C> denominator() const;

  BasicRationalFn& operator+=(const BasicRationalFn& o);
  friend BasicRationalFn operator+(BasicRationalFn a, const BasicRationalFn& b) { return a += b; }
  friend BasicRationalFn operator*(const BasicRationalFn& a, const BasicRationalFn& b) {
    std::vector<BasicPoly<C>> den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return BasicRationalFn(a.num_ * b.num_, std::move(den));
  }
  friend BasicRationalFn operator-(BasicRationalFn a) {
    a.num_ = -a.num_;
    return a;
  }
  // Cross-multiplication test.
  friend bool operator==(const BasicRationalFn& a, const BasicRationalFn& b) {
    return a.num_ * b.denominator() == b.num_ * a.denominator();
  }

 private:
  BasicPoly<C> num_;
  std::vector<BasicPoly<C>> den_;  // each with positive leading coefficient
};

using RationalFn = BasicRationalFn<Integer>;

// Applies a variable permutation to numerator and all denominator factors.
// perm[i-1] is the new index of x_i; indices past perm.size() are fixed.
template <Coefficient C>
BasicPoly<C> permute_variables(const BasicPoly<C>& f, const std::vector<int>& perm);
template <Coefficient C>
BasicRationalFn<C> permute_variables(const BasicRationalFn<C>& f, const std::vector<int>& perm);

// Throws InexactDivision if the quotient is not a polynomial.
template <Coefficient C>
BasicPoly<C> rf_to_poly(const BasicRationalFn<C>& f);

}  // namespace qsc
