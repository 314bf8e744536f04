#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qsc/scalar.hpp"

namespace qsc {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;  // row major

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMatrix& m);
int rank(RMatrix m);
// Some solution of A x = b (free variables set to zero), or nullopt.
std::optional<RVector> solve(const RMatrix& a, const RVector& b);
// Throws PreconditionError when singular.
RMatrix inverse(const RMatrix& a);

// Sparse rows for the larger exact systems.
using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column
using SparseMatrix = std::vector<SparseRow>;
// Inverse of a square sparse matrix, as sparse rows. Throws when singular.
SparseMatrix sparse_inverse(const SparseMatrix& a, int n);

}  // namespace qsc
