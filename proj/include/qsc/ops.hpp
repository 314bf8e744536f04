#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/forest.hpp"
#include "qsc/poly.hpp"

namespace qsc {

enum class LetterKind { R, T };

struct Letter {
  LetterKind kind;
  int index;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Letters X_1 ... X_k; the composite operator applies X_k first.
using Word = std::vector<Letter>;

inline Letter r_letter(int j) { return {LetterKind::R, j}; }
inline Letter t_letter(int j) { return {LetterKind::T, j}; }

// Tokens r<j> / t<j>, optionally with a repeat count "^k"; whitespace optional.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
int t_count(const Word& w);

// s_i f: exchange x_i and x_{i+1}.
template <Coefficient C>
BasicPoly<C> swap_adjacent(int i, const BasicPoly<C>& f);

// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
template <Coefficient C>
BasicPoly<C> divided_difference(int i, const BasicPoly<C>& f);

// R_i f = f(x_1, ..., x_{i-1}, 0, x_i, x_{i+1}, ...).
template <Coefficient C>
BasicPoly<C> r_op(int i, const BasicPoly<C>& f);

// T_i = R_i d_i.
template <Coefficient C>
BasicPoly<C> t_op(int i, const BasicPoly<C>& f);

template <Coefficient C>
C ct(const BasicPoly<C>& f) {
  return f.constant_term();
}

// R_{i,n} f = f(x_1, ..., x_{i-1}, x_n, x_i, ..., x_{n-1}); variables past n are fixed.
template <Coefficient C>
BasicPoly<C> r_cyc(int i, int n, const BasicPoly<C>& f);

// T_{i,n} = (R_{i+1,n} - R_{i,n}) / (x_i - x_n) for i < n.
template <Coefficient C>
BasicPoly<C> t_cyc(int i, int n, const BasicPoly<C>& f);

// Reference forms built from their defining quotients; used to audit the fast paths.
template <Coefficient C>
BasicPoly<C> divided_difference_by_division(int i, const BasicPoly<C>& f);
template <Coefficient C>
BasicPoly<C> t_op_by_division(int i, const BasicPoly<C>& f);
template <Coefficient C>
BasicPoly<C> t_cyc_by_division(int i, int n, const BasicPoly<C>& f);

template <Coefficient C>
BasicPoly<C> apply_letter(const Letter& x, const BasicPoly<C>& f);

template <Coefficient C>
BasicPoly<C> apply_word(const Word& w, const BasicPoly<C>& f);

// T_F = T_{i_1} ... T_{i_k} for any factorization F = i_1 ... i_k.
template <Coefficient C>
BasicPoly<C> apply_forest(const IndexedForest& forest, const BasicPoly<C>& f);

// The word t_1^{c_1} t_2^{c_2} ... of the code factorization.
Word t_word_of(const IndexedForest& forest);

// T_1 f = ... = T_{n-1} f = 0.
template <Coefficient C>
bool is_quasisymmetric(const BasicPoly<C>& f, int n);
// d_1 f = ... = d_{n-1} f = 0.
template <Coefficient C>
bool is_symmetric(const BasicPoly<C>& f, int n);

}  // namespace qsc
