#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsc {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline std::optional<Integer> try_divide(const Integer& a, const Integer& b) {
  if (is_zero(b)) return std::nullopt;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Integer polynomial in the formal parameter q. coeffs()[k] multiplies q^k.
class QCoeff {
 public:
  QCoeff() = default;
  QCoeff(long c) : QCoeff(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  QCoeff(const Integer& c) {              // NOLINT(google-explicit-constructor)
    if (!qsc::is_zero(c)) c_.push_back(c);
  }
  explicit QCoeff(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QCoeff q_power(unsigned k, const Integer& c = 1) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return QCoeff(std::move(v));
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  bool is_constant() const { return c_.size() <= 1; }

  Integer evaluate(const Integer& q) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  QCoeff& operator+=(const QCoeff& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  QCoeff& operator-=(const QCoeff& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  QCoeff& operator*=(const QCoeff& o) {
    *this = *this * o;
    return *this;
  }
  friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
  friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
  friend QCoeff operator-(QCoeff a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return QCoeff(std::move(v));
  }
  friend bool operator==(const QCoeff& a, const QCoeff& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && qsc::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Integer> c_;
};

inline bool is_zero(const QCoeff& a) { return a.is_zero(); }

// Exact long division in Z[q]; nullopt when b does not divide a.
std::optional<QCoeff> try_divide(const QCoeff& a, const QCoeff& b);

template <class C>
concept Coefficient = requires(C a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { is_zero(b) } -> std::convertible_to<bool>;
  { try_divide(b, b) } -> std::same_as<std::optional<C>>;
  C(1);
};

}  // namespace qsc
