#include "qsc/ops.hpp"

#include <algorithm>
#include <cctype>

namespace qsc {

namespace {

void require_index(int i) {
  if (i < 1) throw PreconditionError("operator index must be at least 1");
}

std::vector<std::uint32_t> padded(const Exponent& e, int len) {
  std::vector<std::uint32_t> v = e.entries();
  if (static_cast<int>(v.size()) < len) v.resize(len, 0);
  return v;
}

}  // namespace

template <Coefficient C>
BasicPoly<C> swap_adjacent(int i, const BasicPoly<C>& f) {
  require_index(i);
  return f.map_exponents([i](const Exponent& e) -> std::optional<Exponent> {
    if (e[i] == e[i + 1]) return e;
    auto v = padded(e, i + 1);
    std::swap(v[i - 1], v[i]);
    return Exponent(std::move(v));
  });
}

template <Coefficient C>
BasicPoly<C> divided_difference(int i, const BasicPoly<C>& f) {
  require_index(i);
  BasicPoly<C> out;
  for (const auto& [e, c] : f.terms()) {
    std::uint32_t a = e[i], b = e[i + 1];
    if (a == b) continue;
    auto v = padded(e, i + 1);
    if (a > b) {
      for (std::uint32_t k = 0; k < a - b; ++k) {
        v[i - 1] = a - 1 - k;
        v[i] = b + k;
        out.add_term(Exponent(v), c);
      }
    } else {
      C neg = -c;
      for (std::uint32_t k = 0; k < b - a; ++k) {
        v[i - 1] = a + k;
        v[i] = b - 1 - k;
        out.add_term(Exponent(v), neg);
      }
    }
  }
  return out;
}

template <Coefficient C>
BasicPoly<C> r_op(int i, const BasicPoly<C>& f) {
  require_index(i);
  return f.map_exponents([i](const Exponent& e) -> std::optional<Exponent> {
    if (e[i] != 0) return std::nullopt;
    if (e.size() < i) return e;
    auto v = e.entries();
    v.erase(v.begin() + (i - 1));
    return Exponent(std::move(v));
  });
}

template <Coefficient C>
BasicPoly<C> t_op(int i, const BasicPoly<C>& f) {
  return r_op(i, divided_difference(i, f));
}

template <Coefficient C>
BasicPoly<C> r_cyc(int i, int n, const BasicPoly<C>& f) {
  if (i < 1 || i > n) throw PreconditionError("R_{i,n} needs 1 <= i <= n");
  if (i == n) return f;
  return f.map_exponents([i, n](const Exponent& e) -> std::optional<Exponent> {
    if (e.size() < i) return e;
    auto v = padded(e, n);
    std::rotate(v.begin() + (i - 1), v.begin() + i, v.begin() + n);
    return Exponent(std::move(v));
  });
}

template <Coefficient C>
BasicPoly<C> t_cyc(int i, int n, const BasicPoly<C>& f) {
  if (i < 1 || i >= n) throw PreconditionError("T_{i,n} needs 1 <= i < n");
  return r_cyc(i, n, divided_difference(i, f));
}

template <Coefficient C>
BasicPoly<C> divided_difference_by_division(int i, const BasicPoly<C>& f) {
  require_index(i);
  auto den = BasicPoly<C>::variable(i) - BasicPoly<C>::variable(i + 1);
  return exact_divide(f - swap_adjacent(i, f), den);
}

template <Coefficient C>
BasicPoly<C> t_op_by_division(int i, const BasicPoly<C>& f) {
  return exact_divide(r_op(i + 1, f) - r_op(i, f), BasicPoly<C>::variable(i));
}

template <Coefficient C>
BasicPoly<C> t_cyc_by_division(int i, int n, const BasicPoly<C>& f) {
  if (i < 1 || i >= n) throw PreconditionError("T_{i,n} needs 1 <= i < n");
  auto den = BasicPoly<C>::variable(i) - BasicPoly<C>::variable(n);
  return exact_divide(r_cyc(i + 1, n, f) - r_cyc(i, n, f), den);
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw ParseError("expected a letter index", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip();
  while (pos < text.size()) {
    std::size_t at = pos;
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
    if (c != 'r' && c != 't') throw ParseError("expected r<j> or t<j>", at);
    ++pos;
    int j = number();
    if (j < 1) throw ParseError("letter index must be positive", at);
    int reps = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      reps = number();
    }
    for (int k = 0; k < reps; ++k) w.push_back({c == 'r' ? LetterKind::R : LetterKind::T, j});
    skip();
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (const auto& x : w) {
    if (!s.empty()) s += ' ';
    s += (x.kind == LetterKind::R ? 'r' : 't') + std::to_string(x.index);
  }
  return s;
}

int t_count(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& x) { return x.kind == LetterKind::T; }));
}

template <Coefficient C>
BasicPoly<C> apply_letter(const Letter& x, const BasicPoly<C>& f) {
  return x.kind == LetterKind::R ? r_op(x.index, f) : t_op(x.index, f);
}

template <Coefficient C>
BasicPoly<C> apply_word(const Word& w, const BasicPoly<C>& f) {
  BasicPoly<C> g = f;
  for (auto it = w.rbegin(); it != w.rend() && !g.is_zero(); ++it) g = apply_letter(*it, g);
  return g;
}

Word t_word_of(const IndexedForest& forest) {
  Word w;
  Code c = forest.code();
  for (std::size_t k = 0; k < c.size(); ++k)
    for (int r = 0; r < c[k]; ++r) w.push_back(t_letter(static_cast<int>(k) + 1));
  return w;
}

template <Coefficient C>
BasicPoly<C> apply_forest(const IndexedForest& forest, const BasicPoly<C>& f) {
  return apply_word(t_word_of(forest), f);
}

template <Coefficient C>
bool is_quasisymmetric(const BasicPoly<C>& f, int n) {
  for (int i = 1; i < n; ++i)
    if (!t_op(i, f).is_zero()) return false;
  return true;
}

template <Coefficient C>
bool is_symmetric(const BasicPoly<C>& f, int n) {
  for (int i = 1; i < n; ++i)
    if (!divided_difference(i, f).is_zero()) return false;
  return true;
}

#define QSC_INSTANTIATE(C)                                                    \
  template BasicPoly<C> swap_adjacent(int, const BasicPoly<C>&);              \
  template BasicPoly<C> divided_difference(int, const BasicPoly<C>&);         \
  template BasicPoly<C> r_op(int, const BasicPoly<C>&);                       \
  template BasicPoly<C> t_op(int, const BasicPoly<C>&);                       \
  template BasicPoly<C> r_cyc(int, int, const BasicPoly<C>&);                 \
  template BasicPoly<C> t_cyc(int, int, const BasicPoly<C>&);                 \
  template BasicPoly<C> divided_difference_by_division(int, const BasicPoly<C>&); \
  template BasicPoly<C> t_op_by_division(int, const BasicPoly<C>&);           \
  template BasicPoly<C> t_cyc_by_division(int, int, const BasicPoly<C>&);     \
  template BasicPoly<C> apply_letter(const Letter&, const BasicPoly<C>&);     \
  template BasicPoly<C> apply_word(const Word&, const BasicPoly<C>&);         \
  template BasicPoly<C> apply_forest(const IndexedForest&, const BasicPoly<C>&); \
  template bool is_quasisymmetric(const BasicPoly<C>&, int);                  \
  template bool is_symmetric(const BasicPoly<C>&, int);

QSC_INSTANTIATE(Integer)
QSC_INSTANTIATE(QCoeff)

#undef QSC_INSTANTIATE

}  // namespace qsc
