#include "qsc/linalg.hpp"

#include <algorithm>

#include "qsc/error.hpp"

namespace qsc {

std::vector<int> rref(RMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || m[o][c] == 0) continue;
      Rational f = m[o][c];
      for (std::size_t k = c; k < cols; ++k) m[o][k] -= f * m[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(RMatrix m) { return static_cast<int>(rref(m).size()); }

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  RMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
  RVector x(cols, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

RMatrix inverse(const RMatrix& a) {
  std::size_t n = a.size();
  RMatrix aug = a;
  for (std::size_t r = 0; r < n; ++r) {
    if (aug[r].size() != n) throw PreconditionError("matrix is not square");
    aug[r].resize(2 * n, Rational(0));
    aug[r][n + r] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) throw PreconditionError("singular matrix");
  RMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) out[r].assign(aug[r].begin() + n, aug[r].end());
  return out;
}

namespace {

// a += f * b on sparse rows.
void axpy(SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, f * j->second);
      ++j;
    } else {
      Rational v = i->second + f * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

Rational entry(const SparseRow& r, int c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& p, int k) { return p.first < k; });
  return it != r.end() && it->first == c ? it->second : Rational(0);
}

}  // namespace

SparseMatrix sparse_inverse(const SparseMatrix& a, int n) {
  if (static_cast<int>(a.size()) != n) throw PreconditionError("matrix is not square");
  // Augmented rows: columns [0, n) hold A, [n, 2n) the identity.
  SparseMatrix m = a;
  for (int r = 0; r < n; ++r) m[r].emplace_back(n + r, Rational(1));
  for (int c = 0; c < n; ++c) {
    int p = -1;
    std::size_t best = 0;
    for (int r = c; r < n; ++r) {
      if (entry(m[r], c) == 0) continue;
      if (p < 0 || m[r].size() < best) {
        p = r;
        best = m[r].size();
      }
    }
    if (p < 0) throw PreconditionError("singular matrix");
    std::swap(m[p], m[c]);
    Rational inv = 1 / entry(m[c], c);
    for (auto& e : m[c]) e.second *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      Rational f = entry(m[r], c);
      if (f != 0) axpy(m[r], -f, m[c]);
    }
  }
  SparseMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (auto& [col, v] : m[r])
      if (col >= n) out[r].emplace_back(col - n, v);
  return out;
}

}  // namespace qsc
