#pragma once

#include <map>
#include <vector>

#include "qsc/forest.hpp"
#include "qsc/perm.hpp"
#include "qsc/poly.hpp"

namespace qsc {

enum class DsAlgorithm {
  Antisymmetrize,  // sum of sgn(s) s(f E_n), then exact division by the Vandermonde
  RationalSum,     // the plain sum of rational functions; slow, kept as an audit path
};

// D_n = (x_1 - x_2) ... (x_{n-1} - x_n).
Poly ds_denominator(int n);
// Delta_n = prod_{i<j} (x_i - x_j).
Poly vandermonde(int n);

Poly ds_direct(const Poly& f, int n, DsAlgorithm algo = DsAlgorithm::Antisymmetrize);
// T_{1,2}(T_{1,3} + T_{2,3}) ... (T_{1,n} + ... + T_{n-1,n}) f, rightmost factor first.
Poly ds_factorized(const Poly& f, int n);
// T_1(T_1 + T_2) ... (T_1 + ... + T_{n-1}) f. Equals DS when deg f <= n - 1.
Poly ds_factorized_plain(const Poly& f, int n);

// sum over S_n of s(f Dhat / Delta), Dhat = prod_{i+1<j} (q x_i - x_j).
QPoly qds_direct(const Poly& f, int n);
// T_1(T_1 + q T_2) ... (T_1 + ... + q^{n-2} T_{n-1}) f. Requires f homogeneous of degree n - 1.
QPoly qds_factorized(const Poly& f, int n);

// The cycle (n, n-1, ..., n-j+1) and tau_n = sum_j cyc_{j,n}.
Permutation cyc(int j, int n);
std::map<Permutation, Integer> tau_product(int n);  // tau_2 tau_3 ... tau_n in the group algebra

// Groups the sequences (i_1, ..., i_{n-1}), i_j <= j, by the indexed forest
// i_1 * ... * i_{n-1}, with weight q^{sum (i_j - 1)}.
std::map<Code, QCoeff> t_sequence_weights(int n);
// Sum over decreasing labelings of the internal nodes of q^{inv} of the in-order reading.
QCoeff decreasing_labeling_weight(const IndexedForest& f);

}  // namespace qsc
