#include "qsc/perm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "qsc/error.hpp"

namespace qsc {

Permutation::Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
  std::vector<bool> seen(p_.size() + 1, false);
  for (int v : p_) {
    if (v < 1 || v > static_cast<int>(p_.size()) || seen[v]) throw PreconditionError("not a permutation");
    seen[v] = true;
  }
  while (!p_.empty() && p_.back() == static_cast<int>(p_.size())) p_.pop_back();
}

Permutation Permutation::simple(int i) { return transposition(i, i + 1); }

Permutation Permutation::transposition(int i, int j) {
  std::vector<int> p(std::max(i, j));
  std::iota(p.begin(), p.end(), 1);
  std::swap(p[i - 1], p[j - 1]);
  return Permutation(std::move(p));
}

Permutation Permutation::longest(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - i;
  return Permutation(std::move(p));
}

Permutation Permutation::reverse_cycle(int n) {
  std::vector<int> p(n);
  p[0] = n;
  for (int i = 1; i < n; ++i) p[i] = i;
  return Permutation(std::move(p));
}

std::vector<int> Permutation::one_line(int n) const {
  std::vector<int> out(std::max(n, size()));
  for (int i = 1; i <= static_cast<int>(out.size()); ++i) out[i - 1] = (*this)(i);
  return out;
}

int Permutation::length() const {
  int l = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (p_[i] > p_[j]) ++l;
  return l;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (has_descent(i)) d.push_back(i);
  return d;
}

Permutation Permutation::inverse() const {
  std::vector<int> q(p_.size());
  for (int i = 0; i < size(); ++i) q[p_[i] - 1] = i + 1;
  return Permutation(std::move(q));
}

int Permutation::position_of(int a) const {
  if (a > size()) return a;
  return static_cast<int>(std::find(p_.begin(), p_.end(), a) - p_.begin()) + 1;
}

std::string Permutation::to_string(int n) const {
  std::vector<int> v = one_line(std::max(n, 1));
  bool commas = v.size() > 9;
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (commas && k) s += ",";
    s += std::to_string(v[k]);
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  int n = std::max(a.size(), b.size());
  std::vector<int> p(n);
  for (int i = 1; i <= n; ++i) p[i - 1] = a(b(i));
  return Permutation(std::move(p));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> v;
  bool commas = text.find(',') != std::string_view::npos;
  int cur = -1;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c >= '0' && c <= '9') {
      if (commas) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      } else {
        v.push_back(c - '0');
      }
    } else if (c == ',') {
      if (cur < 0) throw ParseError("empty permutation entry", k);
      v.push_back(cur);
      cur = -1;
    } else if (c != ' ') {
      throw ParseError("unexpected character in permutation", k);
    }
  }
  if (commas) {
    if (cur < 0) throw ParseError("empty permutation entry", text.size());
    v.push_back(cur);
  }
  try {
    return Permutation(std::move(v));
  } catch (const PreconditionError&) {
    throw ParseError("not a permutation", 0);
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation ins(int i, const Permutation& w) {
  if (i < 1) throw PreconditionError("ins index must be positive");
  int n = std::max(w.size(), i - 1) + 1;
  std::vector<int> p(n);
  for (int j = 1; j <= n; ++j) p[j - 1] = j < i ? w(j) + 1 : j == i ? 1 : w(j - 1) + 1;
  return Permutation(std::move(p));
}

int ell_a(const Permutation& w, int a) {
  int pos = w.position_of(a), l = 1;
  for (int j = 1; j < pos; ++j)
    if (w(j) > a) ++l;
  return l;
}

Permutation from_ell_sequence(const std::vector<int>& j) {
  Permutation w;
  for (auto it = j.rbegin(); it != j.rend(); ++it) w = ins(*it, w);
  return w;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  int n = std::max(u.size(), v.size());
  auto a = u.one_line(n), b = v.one_line(n);
  for (int k = 1; k < n; ++k) {
    std::vector<int> x(a.begin(), a.begin() + k), y(b.begin(), b.begin() + k);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (int m = 0; m < k; ++m)
      if (x[m] > y[m]) return false;
  }
  return true;
}

std::vector<Permutation> bruhat_covers(const Permutation& w, int n) {
  std::vector<Permutation> out;
  n = std::max({n, w.size() + 1, 2});
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) continue;
      bool ok = true;
      for (int m = i + 1; m < j && ok; ++m) ok = !(w(m) > w(i) && w(m) < w(j));
      if (ok) out.push_back(w * Permutation::transposition(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> interval_by_filter(const Permutation& u, const Permutation& v) {
  if (!bruhat_leq(u, v)) throw PreconditionError("u is not below v in Bruhat order");
  std::vector<Permutation> out;
  for (auto& w : all_permutations(std::max({u.size(), v.size(), 1})))
    if (bruhat_leq(u, w) && bruhat_leq(w, v)) out.push_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> interval_by_bfs(const Permutation& u, const Permutation& v) {
  if (!bruhat_leq(u, v)) throw PreconditionError("u is not below v in Bruhat order");
  const int n = std::max(u.size(), v.size());
  std::set<Permutation> seen{u};
  std::deque<Permutation> work{u};
  while (!work.empty()) {
    Permutation w = work.front();
    work.pop_front();
    for (auto& x : bruhat_covers(w, n))
      if (bruhat_leq(x, v) && seen.insert(x).second) work.push_back(std::move(x));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> interval(const Permutation& u, const Permutation& v) {
  return std::max(u.size(), v.size()) <= 6 ? interval_by_filter(u, v) : interval_by_bfs(u, v);
}

std::pair<Permutation, Permutation> uv_of(const Word& w) {
  Permutation u, v;
  for (const auto& x : w) {
    if (x.index < 1) throw PreconditionError("letter index must be positive");
    u = ins(x.index, u);
    v = ins(x.kind == LetterKind::R ? x.index : x.index + 1, v);
  }
  return {u, v};
}

std::vector<std::pair<Permutation, Permutation>> maximal_pairs(int n) {
  std::vector<std::pair<Permutation, Permutation>> out;
  if (n < 1) return out;
  Permutation c = Permutation::reverse_cycle(n);
  for (const auto& u : all_permutations(n - 1)) out.emplace_back(u, u * c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KCover> k_bruhat_covers(const Permutation& w, int k) {
  std::vector<KCover> out;
  int last = std::max(w.size(), k) + 1;
  for (int a = 1; a <= k; ++a) {
    for (int b = k + 1; b <= last; ++b) {
      if (w(a) > w(b)) continue;
      bool ok = true;
      for (int m = a + 1; m < b && ok; ++m) ok = !(w(m) > w(a) && w(m) < w(b));
      if (ok) out.push_back({w * Permutation::transposition(a, b), w(b)});
    }
  }
  return out;
}

namespace {

void chains(const Permutation& w, int k, int p, int bound, std::vector<KCover>& path,
            const std::function<void(const std::vector<KCover>&)>& visit) {
  if (static_cast<int>(path.size()) == p) {
    visit(path);
    return;
  }
  for (auto& c : k_bruhat_covers(w, k)) {
    if (c.label >= bound) continue;
    path.push_back(c);
    chains(c.target, k, p, c.label, path, visit);
    path.pop_back();
  }
}

}  // namespace

std::vector<Permutation> decreasing_chain_targets(const Permutation& w, int k, int p) {
  std::vector<Permutation> out;
  std::vector<KCover> path;
  chains(w, k, p, std::numeric_limits<int>::max(), path, [&](const std::vector<KCover>& c) {
    out.push_back(c.empty() ? w : c.back().target);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KCover> decreasing_chain(const Permutation& w, const Permutation& target, int k) {
  int p = target.length() - w.length();
  std::vector<KCover> found, path;
  if (p < 0) return found;
  chains(w, k, p, std::numeric_limits<int>::max(), path, [&](const std::vector<KCover>& c) {
    if ((c.empty() ? w : c.back().target) == target) found = c;
  });
  return found;
}

Permutation grassmannian_sort(const Permutation& w, int n) {
  auto v = w.one_line(n);
  std::sort(v.begin(), v.begin() + n);
  std::sort(v.begin() + n, v.end());
  return Permutation(std::move(v));
}

Code lehmer_code(const Permutation& w) {
  Code c(w.size(), 0);
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(j) < w(i)) ++c[i - 1];
  return trim_code(std::move(c));
}

Permutation from_lehmer_code(const Code& c) {
  int n = 0;
  for (int i = 1; i <= static_cast<int>(c.size()); ++i) n = std::max(n, i + c[i - 1]);
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> p;
  for (int i = 1; i <= n; ++i) {
    int ci = i <= static_cast<int>(c.size()) ? c[i - 1] : 0;
    if (ci < 0 || ci >= static_cast<int>(avail.size())) throw PreconditionError("invalid Lehmer code");
    p.push_back(avail[ci]);
    avail.erase(avail.begin() + ci);
  }
  return Permutation(std::move(p));
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> out;
  Permutation x = w;
  while (x.size() > 0) {
    int i = x.descents().front();
    out.push_back(i);
    x = x * Permutation::simple(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace qsc
