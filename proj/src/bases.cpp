#include "qsc/bases.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "qsc/error.hpp"
#include "qsc/linalg.hpp"

namespace qsc {

namespace {

Exponent exponent_of(const Code& c) { return Exponent(std::vector<std::uint32_t>(c.begin(), c.end())); }

Poly staircase(int n) {
  std::vector<std::uint32_t> e;
  for (int i = 1; i < n; ++i) e.push_back(static_cast<std::uint32_t>(n - i));
  return Poly::monomial(Exponent(std::move(e)));
}

std::vector<Poly> homogeneous_parts(const Poly& f) {
  std::vector<Poly> parts(std::max(f.degree() + 1, 0));
  for (const auto& [e, c] : f.terms()) parts[e.degree()].add_term(e, c);
  return parts;
}

}  // namespace

std::vector<Code> codes_of_degree(int m, int d) {
  std::vector<Code> out;
  Code cur(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == m - 1 || m == 0) {
      if (m == 0) {
        if (left == 0) out.push_back({});
        return;
      }
      cur[pos] = left;
      out.push_back(trim_code(cur));
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Schubert polynomials ----------------------------------------------------

namespace {
std::shared_mutex schubert_mutex;
std::map<Permutation, Poly> schubert_cache;
}  // namespace

const Poly& schubert(const Permutation& w) {
  {
    std::shared_lock lock(schubert_mutex);
    auto it = schubert_cache.find(w);
    if (it != schubert_cache.end()) return it->second;
  }
  int n = std::max(w.size(), 1);
  Poly p;
  if (w == Permutation::longest(n)) {
    p = staircase(n);
  } else {
    int i = 1;
    while (w.has_descent(i)) ++i;
    p = divided_difference(i, schubert(w * Permutation::simple(i)));
  }
  std::unique_lock lock(schubert_mutex);
  return schubert_cache.try_emplace(w, std::move(p)).first->second;
}

Poly schubert_by_alternate_path(const Permutation& w) {
  int n = std::max(w.size(), 1);
  // Walks down right weak order from w_0 to w, always taking the largest usable descent.
  Permutation x = Permutation::longest(n);
  Poly p = staircase(n);
  while (!(x == w)) {
    int pick = 0;
    for (int i = n - 1; i >= 1 && !pick; --i) {
      if (!x.has_descent(i)) continue;
      Permutation y = x * Permutation::simple(i);
      if ((w.inverse() * y).length() == y.length() - w.length()) pick = i;
    }
    if (!pick) throw Error("no descent path to target");
    p = divided_difference(pick, p);
    x = x * Permutation::simple(pick);
  }
  return p;
}

Poly divided_difference_perm(const Permutation& v, const Poly& f) {
  auto word = reduced_word(v);
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = divided_difference(*it, g);
  return g;
}

SchubertExpansion schubert_expand(const Poly& f) {
  SchubertExpansion out;
  int m = std::max(f.max_variable(), 0);
  for (const auto& part : homogeneous_parts(f)) {
    if (part.is_zero()) continue;
    for (const auto& c : codes_of_degree(m, part.degree())) {
      Permutation w = from_lehmer_code(c);
      Integer a = ct(divided_difference_perm(w, part));
      if (a != 0) out[w] = a;
    }
  }
  if (!(reassemble(out) == f)) throw Error("Schubert expansion does not reassemble");
  return out;
}

Poly reassemble(const SchubertExpansion& e) {
  Poly p;
  for (const auto& [w, c] : e) p += schubert(w) * c;
  return p;
}

// ---- forest polynomials ------------------------------------------------------

namespace {

struct DualSystem {
  std::vector<Code> codes;
  std::map<Code, int> index;
  SparseMatrix inverse;  // rows: monomial codes, columns: forest codes
};

std::shared_mutex forest_mutex;
std::map<std::pair<int, int>, DualSystem> dual_cache;
std::map<Code, Poly> forest_cache;

const DualSystem& dual_system(int m, int d) {
  {
    std::shared_lock lock(forest_mutex);
    auto it = dual_cache.find({m, d});
    if (it != dual_cache.end()) return it->second;
  }
  DualSystem s;
  s.codes = codes_of_degree(m, d);
  for (std::size_t k = 0; k < s.codes.size(); ++k) s.index[s.codes[k]] = static_cast<int>(k);
  int n = static_cast<int>(s.codes.size());
  // A[G][c] = ct T_G x^c. The coefficients of P_F form column F of A^{-1}.
  SparseMatrix a(n);
  for (int g = 0; g < n; ++g) {
    NestedForest forest = IndexedForest::from_code(s.codes[g]).as_nested();
    for (int c = 0; c < n; ++c) {
      int v = ct_monomial(forest, exponent_of(s.codes[c]));
      if (v) a[g].emplace_back(c, Rational(v));
    }
  }
  s.inverse = sparse_inverse(a, n);
  std::unique_lock lock(forest_mutex);
  return dual_cache.try_emplace({m, d}, std::move(s)).first->second;
}

}  // namespace

const Poly& forest_poly(const IndexedForest& f) {
  Code code = f.code();
  {
    std::shared_lock lock(forest_mutex);
    auto it = forest_cache.find(code);
    if (it != forest_cache.end()) return it->second;
  }
  Poly p(Integer(1));
  if (!code.empty()) {
    int m = static_cast<int>(code.size()), d = f.num_internal();
    const DualSystem& s = dual_system(m, d);
    int col = s.index.at(code);
    p = Poly();
    for (std::size_t c = 0; c < s.codes.size(); ++c) {
      for (const auto& [k, v] : s.inverse[c]) {
        if (k != col) continue;
        if (v.get_den() != 1) throw Error("forest polynomial is not integral");
        p.add_term(exponent_of(s.codes[c]), v.get_num());
      }
    }
  }
  std::unique_lock lock(forest_mutex);
  return forest_cache.try_emplace(code, std::move(p)).first->second;
}

ForestExpansion forest_expand(const Poly& f) {
  ForestExpansion out;
  int m = std::max(f.max_variable(), 0);
  for (const auto& part : homogeneous_parts(f)) {
    if (part.is_zero()) continue;
    for (const auto& c : codes_of_degree(m, part.degree())) {
      Integer a = ct(apply_forest(IndexedForest::from_code(c), part));
      if (a != 0) out[c] = a;
    }
  }
  if (!(reassemble(out) == f)) throw Error("forest expansion does not reassemble");
  return out;
}

Poly reassemble(const ForestExpansion& e) {
  Poly p;
  for (const auto& [c, a] : e) p += forest_poly(IndexedForest::from_code(c)) * a;
  return p;
}

// ---- quasisymmetric and symmetric polynomials --------------------------------

Poly monomial_qsym(const Composition& beta, int n) {
  int l = static_cast<int>(beta.size());
  if (l > n) throw PreconditionError("composition has more parts than variables");
  for (int b : beta)
    if (b < 1) throw PreconditionError("composition parts must be positive");
  Poly out;
  std::vector<int> idx(l);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == l) {
      std::vector<std::uint32_t> e(n, 0);
      for (int r = 0; r < l; ++r) e[idx[r] - 1] = static_cast<std::uint32_t>(beta[r]);
      out.add_term(Exponent(std::move(e)), Integer(1));
      return;
    }
    for (int v = lo; v <= n - (l - pos - 1); ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  return out;
}

Poly fundamental_qsym(const Composition& a, int n) {
  if (static_cast<int>(a.size()) > n) throw PreconditionError("composition has more parts than variables");
  for (int b : a)
    if (b < 1) throw PreconditionError("composition parts must be positive");
  Poly out;
  Composition cur;
  // Refinements: each part splits into an ordered composition of itself.
  std::function<void(std::size_t, int)> rec = [&](std::size_t part, int left) {
    if (part == a.size()) {
      if (static_cast<int>(cur.size()) <= n) out += monomial_qsym(cur, n);
      return;
    }
    for (int first = 1; first <= left; ++first) {
      cur.push_back(first);
      if (first == left)
        rec(part + 1, part + 1 < a.size() ? a[part + 1] : 0);
      else
        rec(part, left - first);
      cur.pop_back();
    }
  };
  if (a.empty()) return Poly(Integer(1));
  rec(0, a[0]);
  return out;
}

FundamentalExpansion gessel_coeffs(const Poly& f, int n) {
  if (f.max_variable() > n) throw PreconditionError("polynomial uses variables beyond n");
  if (!is_quasisymmetric(f, n)) throw PreconditionError("polynomial is not quasisymmetric");
  FundamentalExpansion out;
  if (ct(f) != 0) out[{}] = ct(f);
  Composition suffix;  // a_{p+1}, ..., a_n stored reversed
  std::function<void(int, const Poly&)> rec = [&](int p, const Poly& g) {
    if (p < 1) return;
    Poly h = g;
    for (int a = 1;; ++a) {
      h = t_op(p, h);
      if (h.is_zero()) break;
      suffix.push_back(a);
      Integer c = ct(h);
      if (c != 0) out[Composition(suffix.rbegin(), suffix.rend())] = c;
      rec(p - 1, h);
      suffix.pop_back();
    }
  };
  rec(n, f);
  if (!(reassemble(out, n) == f)) throw Error("fundamental expansion does not reassemble");
  return out;
}

Poly reassemble(const FundamentalExpansion& e, int n) {
  Poly p;
  for (const auto& [a, c] : e) p += fundamental_qsym(a, n) * c;
  return p;
}

Ribbon ribbon_of(const Composition& a) {
  if (a.empty()) throw PreconditionError("ribbon needs at least one row");
  for (int b : a)
    if (b < 1) throw PreconditionError("ribbon rows must be positive");
  int m = static_cast<int>(a.size());
  Ribbon r{a, {}, {}};
  for (int row = 1; row <= m; ++row) {
    int tail = std::accumulate(a.begin() + (row - 1), a.end(), 0);
    r.lambda.push_back(tail - (m - row));
    if (row < m) r.mu.push_back(tail - a[row - 1] - (m - row));
  }
  while (!r.mu.empty() && r.mu.back() == 0) r.mu.pop_back();
  return r;
}

Poly skew_schur(const Partition& lambda, const Partition& mu, int n) {
  int rows = static_cast<int>(lambda.size());
  auto mu_at = [&](int r) { return r < static_cast<int>(mu.size()) ? mu[r] : 0; };
  for (int r = 0; r < rows; ++r)
    if (mu_at(r) > lambda[r]) throw PreconditionError("mu is not contained in lambda");
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);
  Poly out;
  std::vector<std::uint32_t> content(n, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      out.add_term(Exponent(content), Integer(1));
      return;
    }
    if (c == lambda[r]) {
      rec(r + 1, r + 1 < rows ? mu_at(r + 1) : 0);
      return;
    }
    int lo = 1;
    if (c > mu_at(r)) lo = t[r][c - 1];
    if (r > 0 && c >= mu_at(r - 1) && c < lambda[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      ++content[v - 1];
      rec(r, c + 1);
      --content[v - 1];
    }
  };
  rec(0, mu_at(0));
  return out;
}

Poly skew_schur(const Ribbon& r, int n) { return skew_schur(r.lambda, r.mu, n); }

Poly schur(const Partition& lambda, int n) { return skew_schur(lambda, {}, n); }

SchurExpansion schur_expand(const Poly& f, int n) {
  if (f.max_variable() > n) throw PreconditionError("polynomial uses variables beyond n");
  if (!is_symmetric(f, n)) throw PreconditionError("polynomial is not symmetric");
  SchurExpansion out;
  Poly g = f;
  while (!g.is_zero()) {
    auto lead = g.terms().begin();
    for (auto it = g.terms().begin(); it != g.terms().end(); ++it)
      if (lead->first < it->first) lead = it;
    Partition lambda(lead->first.entries().begin(), lead->first.entries().end());
    Integer c = lead->second;
    out[lambda] += c;
    g -= schur(lambda, n) * c;
  }
  return out;
}

Integer hall_inner(const Poly& f, const Poly& g, int n) {
  auto a = schur_expand(f, n), b = schur_expand(g, n);
  Integer s = 0;
  for (const auto& [lambda, c] : a) {
    auto it = b.find(lambda);
    if (it != b.end()) s += c * it->second;
  }
  return s;
}

Integer hall_inner_ribbon(const Poly& f, const Ribbon& r, int n) { return hall_inner(f, skew_schur(r, n), n); }

std::vector<Partition> partitions_of(int d, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

// ---- structure constants -----------------------------------------------------

Integer lr_coeff(const Permutation& u, const Permutation& w, const Permutation& v) {
  return ct(divided_difference_perm(v, schubert(u) * schubert(w)));
}

Integer lr_via_word(const Word& omega, const Permutation& w) { return ct(apply_word(omega, schubert(w))); }

Permutation remove_ins(int i, const Permutation& x) {
  if (x(i) != 1) throw PreconditionError("position does not hold the value 1");
  int n = std::max(x.size(), i);
  std::vector<int> p;
  for (int j = 1; j <= n; ++j)
    if (j != i) p.push_back(x(j) - 1);
  return Permutation(std::move(p));
}

SchubertExpansion pieri_r(int i, const Permutation& w) {
  if (i < 1) throw PreconditionError("index must be positive");
  SchubertExpansion out;
  for (const auto& x : decreasing_chain_targets(w, i - 1, i - 1))
    if (x(i) == 1) out[remove_ins(i, x)] += 1;
  return out;
}

SchubertExpansion pieri_t(int i, const Permutation& w) {
  if (i < 1) throw PreconditionError("index must be positive");
  if (!w.has_descent(i)) return {};
  return pieri_r(i, w * Permutation::simple(i));
}

Poly apply_t_sequence(const std::vector<int>& seq, const Poly& f) {
  Poly g = f;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) g = t_op(*it, g);
  return g;
}

namespace {

// The chain w = w_0 < w_1 < ... < w_{i-1} of the descent lemma: a_j runs through
// w(1..i-1) in decreasing order and b_j is the first value after position i-1 that
// exceeds a_j. Requires w^{-1}(1) < i <= w^{-1}(n).
Permutation lemma_chain_end(const Permutation& w, int i, int n) {
  std::vector<int> a;
  for (int j = 1; j < i; ++j) a.push_back(w(j));
  std::sort(a.rbegin(), a.rend());
  std::vector<int> x = w.one_line(n);
  int prev_label = std::numeric_limits<int>::max();
  for (int aj : a) {
    int pos_b = 0;
    for (int p = i; p <= n && !pos_b; ++p)
      if (x[p - 1] >= aj) pos_b = p;
    if (!pos_b) throw Error("descent lemma chain does not exist");
    int pos_a = static_cast<int>(std::find(x.begin(), x.end(), aj) - x.begin()) + 1;
    int bj = x[pos_b - 1];
    if (bj >= prev_label) throw Error("descent lemma chain is not decreasing");
    prev_label = bj;
    std::swap(x[pos_a - 1], x[pos_b - 1]);
  }
  return Permutation(std::move(x));
}

}  // namespace

std::vector<int> positivity_witness(const Permutation& w, int n) {
  if (w.size() > n || w.length() != n - 1) throw PreconditionError("need w in S_n with length n - 1");
  std::vector<int> seq(std::max(n - 1, 0));
  Permutation cur = w;
  for (int m = n; m >= 2; --m) {
    // Descent preference of the positivity argument, then every other descent.
    std::vector<int> order;
    int p1 = cur.position_of(1), pm = cur.position_of(m);
    if (p1 == pm - 1) order.push_back(p1);
    if (p1 != 1) order.push_back(p1 - 1);
    if (pm != m) order.push_back(pm);
    for (int d : cur.descents()) order.push_back(d);
    bool found = false;
    for (int i : order) {
      if (i < 1 || i >= m || !cur.has_descent(i)) continue;
      auto terms = pieri_t(i, cur);
      std::vector<Permutation> small;
      for (const auto& [v, c] : terms)
        if (v.size() <= m - 1) small.push_back(v);
      if (small.empty()) continue;
      Permutation ws = cur * Permutation::simple(i);
      Permutation next = small.front();
      if (ws.position_of(1) < i && i <= ws.position_of(m)) {
        next = remove_ins(i, lemma_chain_end(ws, i, m));
        if (!terms.count(next)) throw Error("descent lemma chain is not a Pieri term");
      }
      seq[m - 2] = i;
      cur = next;
      found = true;
      break;
    }
    if (!found) throw Error("no descent yields a term in the smaller symmetric group");
  }
  if (apply_t_sequence(seq, schubert(w)).constant_term() <= 0) throw Error("witness is not positive");
  return seq;
}

}  // namespace qsc
