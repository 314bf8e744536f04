#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsc/poly.hpp"

namespace qsc {

// Finitely supported sequence (c_1, c_2, ...) without trailing zeros.
using Code = std::vector<int>;
// Pairs (eps_i, c_i) without trailing (0, 0).
using AugCode = std::vector<std::pair<int, int>>;

Code trim_code(Code c);

// Plane binary tree in preorder ('^' internal, '.' leaf) over increasing leaf labels.
struct PlaneTree {
  std::string shape;
  std::vector<int> leaves;
  bool marked = false;

  int num_internal() const { return static_cast<int>(leaves.size()) - 1; }
  bool is_trivial() const { return leaves.size() == 1; }
  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// Flattened view of a plane tree. Node 0 is the root; leaf nodes carry their label.
struct TreeNode {
  int parent = -1;
  int left = -1;
  int right = -1;
  int label = 0;  // leaf label, 0 for internal nodes
  bool is_leaf() const { return left < 0; }
};
std::vector<TreeNode> expand_tree(const PlaneTree& t);

// All plane binary tree shapes with k leaves, in lexicographic order of shape strings.
std::vector<std::string> tree_shapes(int k);

class NestedForest;

// Marked nested forest. Trivial unmarked trees are implicit; every listed tree is
// nontrivial or marked. Trees are sorted by first leaf.
class MarkedForest {
 public:
  MarkedForest() = default;
  // Validates shapes, labels, the noncrossing condition and that nested trees are marked.
  static MarkedForest from_trees(std::vector<PlaneTree> trees);
  // The generator giving leaf i two children.
  static MarkedForest generator(int i);
  // The generator inserting a marked trivial tree before leaf i.
  static MarkedForest marked_generator(int i);
  static MarkedForest from_aug_code(const AugCode& code);

  const std::vector<PlaneTree>& trees() const { return trees_; }
  int num_internal() const;
  AugCode aug_code() const;
  NestedForest forget_marks() const;
  std::string to_string() const;

  friend MarkedForest operator*(const MarkedForest& f, const MarkedForest& g);
  friend bool operator==(const MarkedForest& a, const MarkedForest& b) { return a.aug_code() == b.aug_code(); }

 private:
  friend class NestedForest;
  std::vector<PlaneTree> trees_;
};

// Nested forest: a noncrossing partition of the leaves with a tree on each block.
// Singleton blocks are implicit.
class NestedForest {
 public:
  NestedForest() = default;
  static NestedForest from_trees(std::vector<PlaneTree> trees);

  const std::vector<PlaneTree>& trees() const { return trees_; }
  int num_internal() const;
  // Largest leaf of a nontrivial tree; 0 for the empty forest.
  int support_max() const;
  bool is_indexed() const;
  // c_i = number of internal nodes whose leftmost leaf is i.
  Code code() const;
  // Marks exactly the trees nested inside another block.
  MarkedForest minimal_marking() const;
  std::string to_string() const;

  // Product of minimal markings with the marks forgotten.
  friend NestedForest operator*(const NestedForest& f, const NestedForest& g);
  friend bool operator==(const NestedForest& a, const NestedForest& b) {
    return a.minimal_marking().aug_code() == b.minimal_marking().aug_code();
  }

 private:
  friend class MarkedForest;
  std::vector<PlaneTree> trees_;
};

// Indexed forest: every block is an interval. Determined by its code.
class IndexedForest {
 public:
  IndexedForest() = default;
  static IndexedForest generator(int i);
  static IndexedForest from_code(const Code& c);
  static IndexedForest from_nested(const NestedForest& f);

  const NestedForest& as_nested() const { return f_; }
  Code code() const { return f_.code(); }
  int num_internal() const { return f_.num_internal(); }
  int support_max() const { return f_.support_max(); }
  // Left leaves of the nodes whose children are both leaves.
  std::vector<int> qdes() const;
  // Removes the terminal node with left leaf i; requires i in qdes().
  IndexedForest trim_at(int i) const;
  std::string to_string() const;

  friend IndexedForest operator*(const IndexedForest& f, const IndexedForest& g);
  friend bool operator==(const IndexedForest& a, const IndexedForest& b) { return a.code() == b.code(); }
  friend bool operator<(const IndexedForest& a, const IndexedForest& b) { return a.code() < b.code(); }

 private:
  NestedForest f_;
};

// Indexed forests whose nontrivial trees lie in leaves 1..n, by code in lex order.
std::vector<IndexedForest> enumerate_suppfor(int n);
// Nested forests whose nontrivial blocks lie in 1..n, ordered by the augmented
// code of the minimal marking.
std::vector<NestedForest> enumerate_nsuppfor(int n);

// ct of the composite operator of F applied to x^c: (-1)^(right edges) if the leaf
// paths of lengths c_i partition the internal nodes, else 0.
int ct_monomial(const NestedForest& f, const Exponent& c);

// Text forms. Indexed: "c=(1,0,2)". Nested: space separated blocks
// "{1,3}:^.." with "*" after the brace for a marked tree; "empty" for no trees.
NestedForest parse_nested_forest(std::string_view text);
MarkedForest parse_marked_forest(std::string_view text);
IndexedForest parse_indexed_forest(std::string_view text);

struct AugCodeHash {
  std::size_t operator()(const AugCode& c) const;
};

}  // namespace qsc
