#include "qsc/divsym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qsc/error.hpp"
#include "qsc/ops.hpp"

namespace qsc {

namespace {

template <Coefficient C>
BasicPoly<C> difference(const C& a, int i, int j) {
  return BasicPoly<C>::monomial(Exponent::unit(i), a) - BasicPoly<C>::variable(j);
}

void require_vars(const Poly& f, int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (f.max_variable() > n) throw PreconditionError("polynomial uses variables beyond n");
}

std::vector<int> one_line_of(const Permutation& s, int n) { return s.one_line(n); }

int sign_of(const Permutation& s) { return s.length() % 2 ? -1 : 1; }

}  // namespace

Poly ds_denominator(int n) {
  Poly d(Integer(1));
  for (int i = 1; i < n; ++i) d *= difference(Integer(1), i, i + 1);
  return d;
}

Poly vandermonde(int n) {
  Poly d(Integer(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d *= difference(Integer(1), i, j);
  return d;
}

Poly ds_direct(const Poly& f, int n, DsAlgorithm algo) {
  require_vars(f, n);
  if (algo == DsAlgorithm::RationalSum) {
    std::vector<Poly> den;
    for (int i = 1; i < n; ++i) den.push_back(difference(Integer(1), i, i + 1));
    RationalFn base(f, den), sum;
    for (const auto& s : all_permutations(n)) sum += permute_variables(base, one_line_of(s, n));
    return rf_to_poly(sum);
  }
  // f / D_n = f E_n / Delta_n and s(Delta_n) = sgn(s) Delta_n.
  Poly g = f;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) g *= difference(Integer(1), i, j);
  Poly num;
  for (const auto& s : all_permutations(n)) {
    Poly t = permute_variables(g, one_line_of(s, n));
    if (sign_of(s) < 0) num -= t;
    else num += t;
  }
  return exact_divide(num, vandermonde(n));
}

Poly ds_factorized(const Poly& f, int n) {
  require_vars(f, n);
  Poly g = f;
  for (int m = n; m >= 2; --m) {
    Poly next;
    for (int i = 1; i < m; ++i) next += t_cyc(i, m, g);
    g = std::move(next);
  }
  return g;
}

Poly ds_factorized_plain(const Poly& f, int n) {
  require_vars(f, n);
  Poly g = f;
  for (int m = n; m >= 2; --m) {
    Poly next;
    for (int i = 1; i < m; ++i) next += t_op(i, g);
    g = std::move(next);
  }
  return g;
}

QPoly qds_direct(const Poly& f, int n) {
  require_vars(f, n);
  QPoly g = lift(f);
  QCoeff q = QCoeff::q_power(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) g *= difference(q, i, j);
  QPoly num;
  for (const auto& s : all_permutations(n)) {
    QPoly t = permute_variables(g, one_line_of(s, n));
    if (sign_of(s) < 0) num -= t;
    else num += t;
  }
  return exact_divide(num, lift(vandermonde(n)));
}

QPoly qds_factorized(const Poly& f, int n) {
  require_vars(f, n);
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != n - 1))
    throw PreconditionError("q-DS factorization needs f homogeneous of degree n - 1");
  QPoly g = lift(f);
  for (int m = n; m >= 2; --m) {
    QPoly next;
    for (int j = 1; j < m; ++j) next += t_op(j, g) * QCoeff::q_power(j - 1);
    g = std::move(next);
  }
  return g;
}

Permutation cyc(int j, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  // n -> n-1 -> ... -> n-j+1 -> n
  for (int k = n - j + 2; k <= n; ++k) p[k - 1] = k - 1;
  if (j >= 1) p[n - j] = n;
  return Permutation(std::move(p));
}

std::map<Permutation, Integer> tau_product(int n) {
  std::map<Permutation, Integer> acc{{Permutation(), Integer(1)}};
  for (int m = 2; m <= n; ++m) {
    std::map<Permutation, Integer> next;
    for (const auto& [s, c] : acc)
      for (int j = 1; j <= m; ++j) next[s * cyc(j, m)] += c;
    acc = std::move(next);
  }
  return acc;
}

std::map<Code, QCoeff> t_sequence_weights(int n) {
  std::map<Code, QCoeff> out;
  std::function<void(int, const IndexedForest&, unsigned)> rec = [&](int j, const IndexedForest& f, unsigned w) {
    if (j == n) {
      out[f.code()] += QCoeff::q_power(w);
      return;
    }
    for (int i = 1; i <= j; ++i) rec(j + 1, f * IndexedForest::generator(i), w + static_cast<unsigned>(i - 1));
  };
  rec(1, IndexedForest(), 0);
  return out;
}

QCoeff decreasing_labeling_weight(const IndexedForest& f) {
  // Internal nodes of all trees in in-order, with parent links.
  std::vector<int> parent;
  for (const auto& t : f.as_nested().trees()) {
    auto nodes = expand_tree(t);
    std::vector<int> inorder_id(nodes.size(), -1);
    std::vector<int> order;
    std::function<void(int)> walk = [&](int v) {
      if (nodes[v].is_leaf()) return;
      walk(nodes[v].left);
      order.push_back(v);
      walk(nodes[v].right);
    };
    walk(0);
    int base = static_cast<int>(parent.size());
    for (std::size_t k = 0; k < order.size(); ++k) inorder_id[order[k]] = base + static_cast<int>(k);
    for (int v : order) parent.push_back(nodes[v].parent >= 0 ? inorder_id[nodes[v].parent] : -1);
  }
  int k = static_cast<int>(parent.size());
  std::vector<int> label(k);
  std::iota(label.begin(), label.end(), 1);
  QCoeff out;
  do {
    bool ok = true;
    for (int v = 0; v < k && ok; ++v) ok = parent[v] < 0 || label[parent[v]] > label[v];
    if (!ok) continue;
    unsigned inv = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (label[a] > label[b]) ++inv;
    out += QCoeff::q_power(inv);
  } while (std::next_permutation(label.begin(), label.end()));
  return out;
}

}  // namespace qsc
