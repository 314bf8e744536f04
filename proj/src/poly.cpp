#include "qsc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qsc {

// ---- scalars ---------------------------------------------------------------

std::string QCoeff::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = c_[k];
    if (qsc::is_zero(c)) continue;
    Integer a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::optional<QCoeff> try_divide(const QCoeff& a, const QCoeff& b) {
  if (b.is_zero()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  if (a.degree() < db) {
    if (a.is_zero()) return QCoeff();
    return std::nullopt;
  }
  std::vector<Integer> quo(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(rem[k])) continue;
    auto c = try_divide(rem[k], bc[db]);
    if (!c) return std::nullopt;
    quo[k - db] = *c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= *c * bc[j];
  }
  for (const auto& r : rem)
    if (!is_zero(r)) return std::nullopt;
  return QCoeff(std::move(quo));
}

namespace {

bool leading_negative(const Integer& a) { return sgn(a) < 0; }
bool leading_negative(const QCoeff& a) { return !a.is_zero() && sgn(a.coeffs().back()) < 0; }

}  // namespace

// ---- exponents -------------------------------------------------------------

Exponent Exponent::unit(int var, std::uint32_t power) {
  if (var < 1) throw PreconditionError("variable index must be positive");
  std::vector<std::uint32_t> e(var, 0);
  e[var - 1] = power;
  return Exponent(std::move(e));
}

void Exponent::normalize() {
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
  deg_ = 0;
  for (auto v : e_) deg_ += v;
}

bool Exponent::divides(const Exponent& o) const {
  if (e_.size() > o.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
  std::vector<std::uint32_t> r(std::max(e_.size(), o.e_.size()), 0);
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] += e_[i];
  for (std::size_t i = 0; i < o.e_.size(); ++i) r[i] += o.e_[i];
  Exponent out;
  out.e_ = std::move(r);
  out.deg_ = deg_ + o.deg_;
  return out;
}

Exponent Exponent::operator-(const Exponent& o) const {
  if (!o.divides(*this)) throw PreconditionError("exponent subtraction would go negative");
  std::vector<std::uint32_t> r = e_;
  for (std::size_t i = 0; i < o.e_.size(); ++i) r[i] -= o.e_[i];
  return Exponent(std::move(r));
}

bool GrevlexLess::operator()(const Exponent& a, const Exponent& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = std::max(a.size(), b.size()); k >= 1; --k) {
    auto x = a[k], y = b[k];
    if (x != y) return x > y;
  }
  return false;
}

// ---- polynomials -----------------------------------------------------------

template <Coefficient C>
int BasicPoly<C>::max_variable() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.first.size());
  return m;
}

template <Coefficient C>
bool BasicPoly<C>::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

template <Coefficient C>
void BasicPoly<C>::add_term(const Exponent& e, const C& c) {
  if (qsc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = it->second + c;
  if (qsc::is_zero(it->second)) terms_.erase(it);
}

template <Coefficient C>
BasicPoly<C>& BasicPoly<C>::operator*=(const C& c) {
  if (qsc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second = t.second * c;
  return *this;
}

template <Coefficient C>
BasicPoly<C> BasicPoly<C>::multiply(const BasicPoly& a, const BasicPoly& b) {
  BasicPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

template <Coefficient C>
BasicPoly<C> pow(const BasicPoly<C>& f, unsigned k) {
  BasicPoly<C> r(C(1)), base = f;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

template <Coefficient C>
BasicPoly<C> substitute(const BasicPoly<C>& f, const std::map<int, BasicPoly<C>>& images) {
  std::map<std::pair<int, std::uint32_t>, BasicPoly<C>> cache;
  auto power = [&](int var, std::uint32_t k) -> const BasicPoly<C>& {
    auto key = std::make_pair(var, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, pow(images.at(var), k)).first->second;
  };
  BasicPoly<C> out;
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::uint32_t> kept(e.entries());
    BasicPoly<C> term(c);
    for (int v = 1; v <= e.size(); ++v) {
      if (e[v] == 0 || !images.count(v)) continue;
      kept[v - 1] = 0;
      term = term * power(v, e[v]);
    }
    Exponent rest(std::move(kept));
    for (const auto& [te, tc] : term.terms()) out.add_term(te + rest, tc);
  }
  return out;
}

template <Coefficient C>
std::optional<BasicPoly<C>> try_exact_divide(const BasicPoly<C>& f, const BasicPoly<C>& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  BasicPoly<C> r = f, q;
  const auto& [ge, gc] = g.leading_term();
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    if (!ge.divides(re)) return std::nullopt;
    auto c = try_divide(rc, gc);
    if (!c) return std::nullopt;
    auto m = BasicPoly<C>::monomial(re - ge, *c);
    q += m;
    r -= m * g;
  }
  return q;
}

template <Coefficient C>
C evaluate(const BasicPoly<C>& f, const std::vector<C>& point) {
  C acc;
  for (const auto& [e, c] : f.terms()) {
    C t = c;
    for (int v = 1; v <= e.size(); ++v) {
      if (e[v] == 0) continue;
      if (static_cast<std::size_t>(v) > point.size())
        throw PreconditionError("evaluation point has too few coordinates");
      for (std::uint32_t k = 0; k < e[v]; ++k) t = t * point[v - 1];
    }
    acc = acc + t;
  }
  return acc;
}

QPoly lift(const Poly& f) {
  QPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(e, QCoeff(c));
  return out;
}

Poly specialize_q(const QPoly& f, const Integer& q) {
  Poly out;
  for (const auto& [e, c] : f.terms()) out.add_term(e, c.evaluate(q));
  return out;
}

QCoeff principal_specialization(const Poly& f) {
  QCoeff out;
  for (const auto& [e, c] : f.terms()) {
    unsigned k = 0;
    for (int v = 2; v <= e.size(); ++v) k += (v - 1) * e[v];
    out += QCoeff::q_power(k, c);
  }
  return out;
}

template <Coefficient C>
BasicPoly<C> permute_variables(const BasicPoly<C>& f, const std::vector<int>& perm) {
  return f.map_exponents([&](const Exponent& e) -> std::optional<Exponent> {
    std::vector<std::uint32_t> r(std::max<std::size_t>(e.size(), perm.size()), 0);
    for (int v = 1; v <= e.size(); ++v) {
      int to = static_cast<std::size_t>(v) <= perm.size() ? perm[v - 1] : v;
      if (to < 1 || static_cast<std::size_t>(to) > r.size())
        throw PreconditionError("variable permutation out of range");
      r[to - 1] = e[v];
    }
    return Exponent(std::move(r));
  });
}

// ---- rational functions ----------------------------------------------------

template <Coefficient C>
BasicRationalFn<C>::BasicRationalFn(BasicPoly<C> num, std::vector<BasicPoly<C>> den_factors)
    : num_(std::move(num)) {
  for (auto& d : den_factors) {
    if (d.is_zero()) throw PreconditionError("zero denominator");
    if (leading_negative(d.leading_term().second)) {
      d = -d;
      num_ = -num_;
    }
    if (d == BasicPoly<C>(C(1))) continue;
    den_.push_back(std::move(d));
  }
}

template <Coefficient C>
BasicPoly<C> BasicRationalFn<C>::denominator() const {
  BasicPoly<C> d(C(1));
  for (const auto& f : den_) d *= f;
  return d;
}

template <Coefficient C>
BasicRationalFn<C>& BasicRationalFn<C>::operator+=(const BasicRationalFn& o) {
  std::vector<bool> used(den_.size(), false);
  std::vector<BasicPoly<C>> only_other;
  for (const auto& f : o.den_) {
    bool matched = false;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (!used[i] && den_[i] == f) {
        used[i] = matched = true;
        break;
      }
    }
    if (!matched) only_other.push_back(f);
  }
  BasicPoly<C> scale_this(C(1)), scale_other(C(1));
  for (const auto& f : only_other) scale_this *= f;
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (!used[i]) scale_other *= den_[i];
  num_ = num_ * scale_this + o.num_ * scale_other;
  for (auto& f : only_other) den_.push_back(std::move(f));
  return *this;
}

template <Coefficient C>
BasicRationalFn<C> permute_variables(const BasicRationalFn<C>& f, const std::vector<int>& perm) {
  std::vector<BasicPoly<C>> den;
  for (const auto& d : f.denominator_factors()) den.push_back(permute_variables(d, perm));
  return BasicRationalFn<C>(permute_variables(f.numerator(), perm), std::move(den));
}

template <Coefficient C>
BasicPoly<C> rf_to_poly(const BasicRationalFn<C>& f) {
  BasicPoly<C> r = f.numerator();
  for (const auto& d : f.denominator_factors()) r = exact_divide(r, d);
  return r;
}

// ---- text ------------------------------------------------------------------

namespace {

struct ParsedTerm {
  Integer coeff;
  unsigned qpow = 0;
  Exponent x;
};

class PolyParser {
 public:
  PolyParser(std::string_view s, bool allow_q) : s_(s), allow_q_(allow_q) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      ParsedTerm t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }
  unsigned small_number() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 6) throw ParseError("number too large", start);
    return static_cast<unsigned>(std::stoul(d));
  }

  ParsedTerm term() {
    ParsedTerm t;
    t.coeff = 1;
    std::vector<std::uint32_t> x;
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = Integer(digits());
      have_any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        factor(t, x);
      } else if (peek() == 'x' || peek() == 'q') {
        factor(t, x);
      } else {
        t.x = Exponent(std::move(x));
        return t;
      }
    } else {
      factor(t, x);
    }
    have_any = true;
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      factor(t, x);
      skip_ws();
    }
    (void)have_any;
    t.x = Exponent(std::move(x));
    return t;
  }

  void factor(ParsedTerm& t, std::vector<std::uint32_t>& x) {
    std::size_t at = pos_;
    char c = peek();
    if (c == 'x') {
      ++pos_;
      unsigned var = small_number();
      if (var == 0) throw ParseError("variable index must be positive", at);
      unsigned e = exponent();
      if (x.size() < var) x.resize(var, 0);
      x[var - 1] += e;
    } else if (c == 'q') {
      if (!allow_q_) throw ParseError("q is not allowed in the integer ring", at);
      ++pos_;
      t.qpow += exponent();
    } else {
      throw ParseError("expected a factor x<k> or q", at);
    }
  }

  unsigned exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    return small_number();
  }

  std::string_view s_;
  bool allow_q_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e) {
  std::string out;
  for (int v = 1; v <= e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

void append_term(std::string& out, const Integer& c, unsigned qpow, const Exponent& e) {
  Integer a = abs(c);
  if (out.empty()) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  std::string body;
  if (qpow > 0) body = qpow == 1 ? "q" : "q^" + std::to_string(qpow);
  std::string mono = monomial_text(e);
  if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
  if (body.empty()) {
    out += a.get_str();
  } else {
    if (a != 1) out += a.get_str() + "*";
    out += body;
  }
}

}  // namespace

std::string format_exponent(const Exponent& e) {
  std::string m = monomial_text(e);
  return m.empty() ? "1" : m;
}

Poly parse_poly(std::string_view text) {
  Poly out;
  for (auto& t : PolyParser(text, false).parse()) out.add_term(t.x, t.coeff);
  return out;
}

QPoly parse_qpoly(std::string_view text) {
  QPoly out;
  for (auto& t : PolyParser(text, true).parse()) out.add_term(t.x, QCoeff::q_power(t.qpow, t.coeff));
  return out;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) append_term(out, it->second, 0, it->first);
  return out;
}

std::string format_poly(const QPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& cs = it->second.coeffs();
    for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k)
      if (!is_zero(cs[k])) append_term(out, cs[k], static_cast<unsigned>(k), it->first);
  }
  return out;
}

#define QSC_INSTANTIATE(C)                                                                    \
  template class BasicPoly<C>;                                                                \
  template class BasicRationalFn<C>;                                                          \
  template BasicPoly<C> pow(const BasicPoly<C>&, unsigned);                                   \
  template BasicPoly<C> substitute(const BasicPoly<C>&, const std::map<int, BasicPoly<C>>&);  \
  template std::optional<BasicPoly<C>> try_exact_divide(const BasicPoly<C>&, const BasicPoly<C>&); \
  template C evaluate(const BasicPoly<C>&, const std::vector<C>&);                            \
  template BasicPoly<C> permute_variables(const BasicPoly<C>&, const std::vector<int>&);      \
  template BasicRationalFn<C> permute_variables(const BasicRationalFn<C>&, const std::vector<int>&); \
  template BasicPoly<C> rf_to_poly(const BasicRationalFn<C>&);

QSC_INSTANTIATE(Integer)
QSC_INSTANTIATE(QCoeff)

#undef QSC_INSTANTIATE

}  // namespace qsc
