#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/forest.hpp"
#include "qsc/ops.hpp"

namespace qsc {

// Permutation of {1, 2, ...} fixing all but finitely many points. Stored as the
// one-line prefix up to the last non-fixed point.
class Permutation {
 public:
  Permutation() = default;
  // Trailing fixed points are dropped. Throws PreconditionError if not a bijection.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity() { return {}; }
  static Permutation simple(int i);                  // s_i
  static Permutation transposition(int i, int j);    // swaps positions i and j
  static Permutation longest(int n);                 // w_{0,n}
  static Permutation reverse_cycle(int n);           // c_n = n 1 2 ... n-1

  int operator()(int i) const { return i >= 1 && i <= size() ? p_[i - 1] : i; }
  // Length of the stored prefix; w lies in S_n iff size() <= n.
  int size() const { return static_cast<int>(p_.size()); }
  std::vector<int> one_line(int n) const;
  const std::vector<int>& prefix() const { return p_; }

  int length() const;
  std::vector<int> descents() const;
  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  Permutation inverse() const;
  // Position of value a.
  int position_of(int a) const;

  // One-line notation padded with the identity tail to at least n entries.
  std::string to_string(int n = 0) const;

  // (a * b)(i) = a(b(i)). Right multiplication by s_i swaps positions i, i+1.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

// Digits ("21435") or comma separated values ("2,1,10,...").
Permutation parse_permutation(std::string_view text);

std::vector<Permutation> all_permutations(int n);

// Inserts value 1 at position i and raises every other value by one.
Permutation ins(int i, const Permutation& w);

// 1 + number of values larger than a appearing before a.
int ell_a(const Permutation& w, int a);
// ins_{j_1} ... ins_{j_k}(identity).
Permutation from_ell_sequence(const std::vector<int>& j);

// Tableau criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);
// Covers inside S_n, where n is at least w.size() + 1.
std::vector<Permutation> bruhat_covers(const Permutation& w, int n = 0);
std::vector<Permutation> interval(const Permutation& u, const Permutation& v);
std::vector<Permutation> interval_by_filter(const Permutation& u, const Permutation& v);
std::vector<Permutation> interval_by_bfs(const Permutation& u, const Permutation& v);

// (u(w), v(w)): r_j applies ins_j to both, t_j applies ins_j to u and ins_{j+1} to v.
std::pair<Permutation, Permutation> uv_of(const Word& w);

// Pairs (u, u c_n) with u(n) = n, sorted.
std::vector<std::pair<Permutation, Permutation>> maximal_pairs(int n);

// Covers w < w t_{ab} in k-Bruhat order with a <= k < b, labelled by the larger
// of the two swapped values.
struct KCover {
  Permutation target;
  int label;
};
std::vector<KCover> k_bruhat_covers(const Permutation& w, int k);
// Ends of decreasing chains of length p in k-Bruhat order, sorted.
std::vector<Permutation> decreasing_chain_targets(const Permutation& w, int k, int p);
// The decreasing chain from w to target, if one exists (labels and permutations).
std::vector<KCover> decreasing_chain(const Permutation& w, const Permutation& target, int k);

// Sorts the first n entries and the remaining entries separately.
Permutation grassmannian_sort(const Permutation& w, int n);
Code lehmer_code(const Permutation& w);
Permutation from_lehmer_code(const Code& c);
// a_1 ... a_l with w = s_{a_1} ... s_{a_l}.
std::vector<int> reduced_word(const Permutation& w);

}  // namespace qsc
