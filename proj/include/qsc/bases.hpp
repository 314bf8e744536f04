#pragma once

#include <map>
#include <vector>

#include "qsc/forest.hpp"
#include "qsc/ops.hpp"
#include "qsc/perm.hpp"
#include "qsc/poly.hpp"
#include "qsc/rtword.hpp"

namespace qsc {

using Composition = std::vector<int>;
using Partition = std::vector<int>;

using SchubertExpansion = std::map<Permutation, Integer>;
using ForestExpansion = std::map<Code, Integer>;          // keyed by forest code
using FundamentalExpansion = std::map<Composition, Integer>;  // keyed by (a_k, ..., a_n)
using SchurExpansion = std::map<Partition, Integer>;

// Weak compositions of d supported in 1..m, in lex order.
std::vector<Code> codes_of_degree(int m, int d);

// ---- Schubert polynomials ----------------------------------------------------

// Cached; safe to call from several threads.
const Poly& schubert(const Permutation& w);
// Same polynomial along a second, independent path (descending from w_0 by the
// largest ascent each time). Used to check path independence.
Poly schubert_by_alternate_path(const Permutation& w);
// del_v = del_{a_1} ... del_{a_l} for the reduced word a of v.
Poly divided_difference_perm(const Permutation& v, const Poly& f);
SchubertExpansion schubert_expand(const Poly& f);
Poly reassemble(const SchubertExpansion& e);

// ---- forest polynomials ------------------------------------------------------

// Cached; solves ct T_G P_F = delta over forests G with the same code support and degree.
const Poly& forest_poly(const IndexedForest& f);
// a_F = ct T_F f.
ForestExpansion forest_expand(const Poly& f);
Poly reassemble(const ForestExpansion& e);

// ---- quasisymmetric and symmetric polynomials --------------------------------

Poly monomial_qsym(const Composition& beta, int n);
// Leading reverse-lex monomial x_k^{a_k} ... x_n^{a_n}, k = n - len + 1.
Poly fundamental_qsym(const Composition& a, int n);
// Coefficient of fundamental_qsym(a, n) is ct T_k^{a_k} ... T_n^{a_n} f. Requires f quasisymmetric.
FundamentalExpansion gessel_coeffs(const Poly& f, int n);
Poly reassemble(const FundamentalExpansion& e, int n);

struct Ribbon {
  Composition rows;  // a_k, ..., a_n from top to bottom
  Partition lambda;
  Partition mu;
};
Ribbon ribbon_of(const Composition& a);
Poly skew_schur(const Partition& lambda, const Partition& mu, int n);
Poly skew_schur(const Ribbon& r, int n);
Poly schur(const Partition& lambda, int n);
// Requires f symmetric in x_1..x_n.
SchurExpansion schur_expand(const Poly& f, int n);
Integer hall_inner(const Poly& f, const Poly& g, int n);
Integer hall_inner_ribbon(const Poly& f, const Ribbon& r, int n);
std::vector<Partition> partitions_of(int d, int max_parts);

// ---- structure constants -----------------------------------------------------

// c^v_{u,w} = ct del_v (S_u S_w).
Integer lr_coeff(const Permutation& u, const Permutation& w, const Permutation& v);
// ct of the composite operator of the word applied to S_w.
Integer lr_via_word(const Word& omega, const Permutation& w);

// Inverse of ins: removes position i, which must hold the value 1.
Permutation remove_ins(int i, const Permutation& x);
SchubertExpansion pieri_r(int i, const Permutation& w);
SchubertExpansion pieri_t(int i, const Permutation& w);

// (i_1, ..., i_{n-1}) with i_j <= j and T_{i_1} ... T_{i_{n-1}} S_w > 0.
// Requires w in S_n with l(w) = n - 1.
std::vector<int> positivity_witness(const Permutation& w, int n);
// T_{i_1} ... T_{i_k} f, with T_{i_k} applied first.
Poly apply_t_sequence(const std::vector<int>& seq, const Poly& f);

}  // namespace qsc
