#include "qsc/forest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace qsc {

Code trim_code(Code c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// ---- plane trees -----------------------------------------------------------

namespace {

int build_nodes(const std::string& shape, std::size_t& pos, int parent, std::vector<TreeNode>& nodes,
                const std::vector<int>& labels, std::size_t& next_leaf) {
  if (pos >= shape.size()) throw PreconditionError("truncated tree shape");
  int id = static_cast<int>(nodes.size());
  nodes.push_back(TreeNode{parent, -1, -1, 0});
  char c = shape[pos++];
  if (c == '.') {
    if (next_leaf >= labels.size()) throw PreconditionError("tree has more leaves than labels");
    nodes[id].label = labels[next_leaf++];
    return id;
  }
  if (c != '^') throw PreconditionError("tree shape may only contain '^' and '.'");
  int l = build_nodes(shape, pos, id, nodes, labels, next_leaf);
  int r = build_nodes(shape, pos, id, nodes, labels, next_leaf);
  nodes[id].left = l;
  nodes[id].right = r;
  return id;
}

// Label of the leaf reached by repeatedly taking left children.
int leftmost_label(const std::vector<TreeNode>& nodes, int v) {
  while (!nodes[v].is_leaf()) v = nodes[v].left;
  return nodes[v].label;
}

void validate_tree(const PlaneTree& t) {
  if (t.leaves.empty()) throw PreconditionError("tree without leaves");
  for (std::size_t k = 0; k < t.leaves.size(); ++k) {
    if (t.leaves[k] < 1) throw PreconditionError("leaf labels must be positive");
    if (k && t.leaves[k] <= t.leaves[k - 1]) throw PreconditionError("leaf labels must increase");
  }
  auto nodes = expand_tree(t);
  (void)nodes;
}

bool nested_inside(const PlaneTree& inner, const PlaneTree& outer) {
  return outer.leaves.front() < inner.leaves.front() && inner.leaves.back() < outer.leaves.back();
}

// Gap index of x among sorted values: number of values below x.
std::size_t gap_of(const std::vector<int>& v, int x) {
  return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}

bool within_one_gap(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t g = gap_of(a, b.front());
  for (int x : b)
    if (gap_of(a, x) != g) return false;
  return true;
}

void validate_noncrossing(const std::vector<PlaneTree>& trees) {
  std::set<int> seen;
  for (const auto& t : trees)
    for (int l : t.leaves)
      if (!seen.insert(l).second) throw PreconditionError("leaf " + std::to_string(l) + " used twice");
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      if (!within_one_gap(trees[i].leaves, trees[j].leaves) && !within_one_gap(trees[j].leaves, trees[i].leaves))
        throw PreconditionError("blocks cross");
}

void sort_trees(std::vector<PlaneTree>& trees) {
  std::sort(trees.begin(), trees.end(),
            [](const PlaneTree& a, const PlaneTree& b) { return a.leaves.front() < b.leaves.front(); });
}

struct Rooted {
  std::string shape;
  std::vector<int> leaves;
  int listed = -1;  // index into the source forest, -1 for an implicit leaf
};

// The first `count` unmarked roots of g in left-to-right order.
std::vector<Rooted> unmarked_roots(const std::vector<PlaneTree>& g, int count) {
  int last = 0;
  std::map<int, int> first_leaf;
  std::set<int> covered;
  for (std::size_t k = 0; k < g.size(); ++k) {
    first_leaf[g[k].leaves.front()] = static_cast<int>(k);
    for (int l : g[k].leaves) covered.insert(l);
    last = std::max(last, g[k].leaves.back());
  }
  std::vector<Rooted> out;
  for (int l = 1; l <= last; ++l) {
    auto it = first_leaf.find(l);
    if (it != first_leaf.end()) {
      const auto& t = g[it->second];
      if (!t.marked) out.push_back({t.shape, t.leaves, it->second});
    } else if (!covered.count(l)) {
      out.push_back({".", {l}, -1});
    }
  }
  for (int l = last + 1; static_cast<int>(out.size()) < count; ++l) out.push_back({".", {l}, -1});
  return out;
}

std::string format_tree(const PlaneTree& t, bool with_mark) {
  std::string s = "{";
  for (std::size_t k = 0; k < t.leaves.size(); ++k) s += (k ? "," : "") + std::to_string(t.leaves[k]);
  s += "}";
  if (with_mark && t.marked) s += "*";
  return s + ":" + t.shape;
}

std::string format_trees(const std::vector<PlaneTree>& trees, bool with_mark) {
  if (trees.empty()) return "empty";
  std::string s;
  for (const auto& t : trees) s += (s.empty() ? "" : " ") + format_tree(t, with_mark);
  return s;
}

}  // namespace

std::vector<TreeNode> expand_tree(const PlaneTree& t) {
  std::vector<TreeNode> nodes;
  std::size_t pos = 0, next_leaf = 0;
  build_nodes(t.shape, pos, -1, nodes, t.leaves, next_leaf);
  if (pos != t.shape.size()) throw PreconditionError("trailing characters in tree shape");
  if (next_leaf != t.leaves.size()) throw PreconditionError("tree has fewer leaves than labels");
  return nodes;
}

std::vector<std::string> tree_shapes(int k) {
  if (k < 1) return {};
  if (k == 1) return {"."};
  std::vector<std::string> out;
  for (int left = 1; left < k; ++left)
    for (const auto& a : tree_shapes(left))
      for (const auto& b : tree_shapes(k - left)) out.push_back("^" + a + b);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- marked forests --------------------------------------------------------

MarkedForest MarkedForest::from_trees(std::vector<PlaneTree> trees) {
  for (const auto& t : trees) validate_tree(t);
  validate_noncrossing(trees);
  std::set<int> covered;
  for (const auto& t : trees) covered.insert(t.leaves.begin(), t.leaves.end());
  for (const auto& t : trees) {
    for (int l = t.leaves.front(); l < t.leaves.back(); ++l)
      if (!covered.count(l)) throw PreconditionError("a leaf nested inside a block must carry a marked tree");
    for (const auto& o : trees)
      if (&o != &t && nested_inside(t, o) && !t.marked)
        throw PreconditionError("nested trees must be marked");
  }
  std::erase_if(trees, [](const PlaneTree& t) { return t.is_trivial() && !t.marked; });
  sort_trees(trees);
  MarkedForest f;
  f.trees_ = std::move(trees);
  return f;
}

MarkedForest MarkedForest::generator(int i) {
  if (i < 1) throw PreconditionError("generator index must be positive");
  MarkedForest f;
  f.trees_.push_back({"^..", {i, i + 1}, false});
  return f;
}

MarkedForest MarkedForest::marked_generator(int i) {
  if (i < 1) throw PreconditionError("generator index must be positive");
  MarkedForest f;
  f.trees_.push_back({".", {i}, true});
  return f;
}

MarkedForest MarkedForest::from_aug_code(const AugCode& code) {
  MarkedForest f;
  for (std::size_t k = 0; k < code.size(); ++k) {
    auto [eps, c] = code[k];
    if (eps < 0 || eps > 1 || c < 0) throw PreconditionError("invalid augmented code entry");
    int i = static_cast<int>(k) + 1;
    if (eps) f = f * marked_generator(i);
    for (int r = 0; r < c; ++r) f = f * generator(i);
  }
  return f;
}

int MarkedForest::num_internal() const {
  int n = 0;
  for (const auto& t : trees_) n += t.num_internal();
  return n;
}

AugCode MarkedForest::aug_code() const {
  AugCode out;
  auto at = [&](int label) -> std::pair<int, int>& {
    if (static_cast<int>(out.size()) < label) out.resize(label, {0, 0});
    return out[label - 1];
  };
  for (const auto& t : trees_) {
    if (t.marked) at(t.leaves.front()).first = 1;
    auto nodes = expand_tree(t);
    for (std::size_t v = 0; v < nodes.size(); ++v)
      if (!nodes[v].is_leaf()) ++at(leftmost_label(nodes, static_cast<int>(v))).second;
  }
  while (!out.empty() && out.back() == std::make_pair(0, 0)) out.pop_back();
  return out;
}

NestedForest MarkedForest::forget_marks() const {
  NestedForest f;
  for (const auto& t : trees_) {
    if (t.is_trivial()) continue;
    PlaneTree u = t;
    u.marked = false;
    f.trees_.push_back(std::move(u));
  }
  return f;
}

std::string MarkedForest::to_string() const { return format_trees(trees_, true); }

MarkedForest operator*(const MarkedForest& f, const MarkedForest& g) {
  int need = 0;
  for (const auto& t : f.trees_) need = std::max(need, t.leaves.back());
  std::vector<Rooted> roots = unmarked_roots(g.trees_, need);
  std::vector<bool> consumed(roots.size(), false);

  std::vector<PlaneTree> out;
  for (const auto& t : f.trees_) {
    PlaneTree r;
    r.marked = t.marked;
    std::size_t leaf = 0;
    for (char c : t.shape) {
      if (c == '^') {
        r.shape += '^';
        continue;
      }
      std::size_t k = static_cast<std::size_t>(t.leaves[leaf++]) - 1;
      consumed[k] = true;
      r.shape += roots[k].shape;
      r.leaves.insert(r.leaves.end(), roots[k].leaves.begin(), roots[k].leaves.end());
    }
    out.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (!consumed[k] && roots[k].listed >= 0) out.push_back(g.trees_[roots[k].listed]);
  for (const auto& t : g.trees_)
    if (t.marked) out.push_back(t);
  sort_trees(out);
  MarkedForest h;
  h.trees_ = std::move(out);
  return h;
}

// ---- nested forests --------------------------------------------------------

NestedForest NestedForest::from_trees(std::vector<PlaneTree> trees) {
  for (const auto& t : trees) {
    validate_tree(t);
    if (t.marked) throw PreconditionError("nested forests carry no marks");
  }
  validate_noncrossing(trees);
  std::erase_if(trees, [](const PlaneTree& t) { return t.is_trivial(); });
  sort_trees(trees);
  NestedForest f;
  f.trees_ = std::move(trees);
  return f;
}

int NestedForest::num_internal() const {
  int n = 0;
  for (const auto& t : trees_) n += t.num_internal();
  return n;
}

int NestedForest::support_max() const {
  int m = 0;
  for (const auto& t : trees_) m = std::max(m, t.leaves.back());
  return m;
}

bool NestedForest::is_indexed() const {
  for (const auto& t : trees_)
    if (t.leaves.back() - t.leaves.front() + 1 != static_cast<int>(t.leaves.size())) return false;
  return true;
}

Code NestedForest::code() const {
  Code out;
  for (const auto& t : trees_) {
    auto nodes = expand_tree(t);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (nodes[v].is_leaf()) continue;
      int l = leftmost_label(nodes, static_cast<int>(v));
      if (static_cast<int>(out.size()) < l) out.resize(l, 0);
      ++out[l - 1];
    }
  }
  return trim_code(out);
}

MarkedForest NestedForest::minimal_marking() const {
  std::vector<PlaneTree> trees = trees_;
  std::set<int> covered;
  for (const auto& t : trees_) covered.insert(t.leaves.begin(), t.leaves.end());
  for (auto& t : trees)
    for (const auto& o : trees_)
      if (nested_inside(t, o)) t.marked = true;
  for (int l = 1; l <= support_max(); ++l) {
    if (covered.count(l)) continue;
    for (const auto& o : trees_)
      if (o.leaves.front() < l && l < o.leaves.back()) {
        trees.push_back({".", {l}, true});
        break;
      }
  }
  sort_trees(trees);
  MarkedForest f;
  f.trees_ = std::move(trees);
  return f;
}

std::string NestedForest::to_string() const { return format_trees(trees_, false); }

NestedForest operator*(const NestedForest& f, const NestedForest& g) {
  return (f.minimal_marking() * g.minimal_marking()).forget_marks();
}

// ---- indexed forests -------------------------------------------------------

IndexedForest IndexedForest::generator(int i) {
  IndexedForest f;
  f.f_ = MarkedForest::generator(i).forget_marks();
  return f;
}

IndexedForest IndexedForest::from_code(const Code& c) {
  MarkedForest m;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] < 0) throw PreconditionError("codes are nonnegative");
    for (int r = 0; r < c[k]; ++r) m = m * MarkedForest::generator(static_cast<int>(k) + 1);
  }
  IndexedForest f;
  f.f_ = m.forget_marks();
  return f;
}

IndexedForest IndexedForest::from_nested(const NestedForest& n) {
  if (!n.is_indexed()) throw PreconditionError("forest has a non-interval block");
  IndexedForest f;
  f.f_ = n;
  return f;
}

std::vector<int> IndexedForest::qdes() const {
  std::vector<int> out;
  for (const auto& t : f_.trees()) {
    auto nodes = expand_tree(t);
    for (const auto& v : nodes)
      if (!v.is_leaf() && nodes[v.left].is_leaf() && nodes[v.right].is_leaf()) out.push_back(nodes[v.left].label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexedForest IndexedForest::trim_at(int i) const {
  auto q = qdes();
  if (!std::binary_search(q.begin(), q.end(), i)) throw PreconditionError("trim_at needs i in QDes(F)");
  std::vector<PlaneTree> trees;
  for (const auto& t : f_.trees()) {
    PlaneTree r = t;
    auto it = std::find(r.leaves.begin(), r.leaves.end(), i);
    if (it != r.leaves.end()) {
      std::size_t idx = static_cast<std::size_t>(it - r.leaves.begin());
      // The idx-th '.' is preceded by the '^' of the terminal node.
      std::size_t seen = 0, pos = 0;
      for (; pos < r.shape.size(); ++pos)
        if (r.shape[pos] == '.' && seen++ == idx) break;
      r.shape.replace(pos - 1, 3, ".");
      r.leaves.erase(it + 1);
    }
    for (int& l : r.leaves)
      if (l > i + 1) --l;
    if (!r.is_trivial()) trees.push_back(std::move(r));
  }
  IndexedForest f;
  f.f_ = NestedForest::from_trees(std::move(trees));
  return f;
}

std::string IndexedForest::to_string() const {
  std::string s = "c=(";
  Code c = code();
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

IndexedForest operator*(const IndexedForest& f, const IndexedForest& g) {
  IndexedForest h;
  h.f_ = f.f_ * g.f_;
  return h;
}

// ---- enumeration -----------------------------------------------------------

std::vector<IndexedForest> enumerate_suppfor(int n) {
  std::vector<IndexedForest> out;
  if (n < 0) return out;
  Code c(std::max(n, 0), 0);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == n) {
      auto f = IndexedForest::from_code(trim_code(c));
      if (f.support_max() <= n) out.push_back(std::move(f));
      return;
    }
    for (int v = 0; v <= std::min(budget, n - 1 - pos); ++v) {
      c[pos] = v;
      rec(pos + 1, budget - v);
    }
    c[pos] = 0;
  };
  rec(0, n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Partition = std::vector<std::vector<int>>;

std::vector<Partition> nc_partitions(int a, int b) {
  if (a > b) return {Partition{}};
  std::vector<Partition> out;
  int span = b - a;
  for (unsigned mask = 0; mask < (1u << span); ++mask) {
    std::vector<int> block{a};
    for (int k = 0; k < span; ++k)
      if (mask & (1u << k)) block.push_back(a + 1 + k);
    std::vector<Partition> acc{Partition{block}};
    std::vector<std::pair<int, int>> gaps;
    for (std::size_t k = 0; k + 1 < block.size(); ++k) gaps.emplace_back(block[k] + 1, block[k + 1] - 1);
    gaps.emplace_back(block.back() + 1, b);
    for (auto [lo, hi] : gaps) {
      auto sub = nc_partitions(lo, hi);
      std::vector<Partition> next;
      for (const auto& p : acc)
        for (const auto& s : sub) {
          Partition q = p;
          q.insert(q.end(), s.begin(), s.end());
          next.push_back(std::move(q));
        }
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

}  // namespace

std::vector<NestedForest> enumerate_nsuppfor(int n) {
  std::vector<std::pair<AugCode, NestedForest>> keyed;
  for (const auto& part : nc_partitions(1, n)) {
    std::vector<std::vector<PlaneTree>> acc{{}};
    for (const auto& block : part) {
      if (block.size() < 2) continue;
      std::vector<std::vector<PlaneTree>> next;
      for (const auto& shape : tree_shapes(static_cast<int>(block.size())))
        for (const auto& a : acc) {
          auto b = a;
          b.push_back({shape, block, false});
          next.push_back(std::move(b));
        }
      acc = std::move(next);
    }
    for (auto& trees : acc) {
      auto f = NestedForest::from_trees(std::move(trees));
      keyed.emplace_back(f.minimal_marking().aug_code(), std::move(f));
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<NestedForest> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

// ---- constant term functional ----------------------------------------------

int ct_monomial(const NestedForest& f, const Exponent& c) {
  if (static_cast<int>(c.degree()) != f.num_internal()) return 0;
  std::map<int, std::pair<int, int>> where;  // leaf label -> (tree, node)
  std::vector<std::vector<TreeNode>> expanded;
  for (std::size_t k = 0; k < f.trees().size(); ++k) {
    expanded.push_back(expand_tree(f.trees()[k]));
    for (std::size_t v = 0; v < expanded.back().size(); ++v)
      if (expanded.back()[v].is_leaf()) where[expanded.back()[v].label] = {static_cast<int>(k), static_cast<int>(v)};
  }
  std::vector<std::vector<bool>> used(expanded.size());
  for (std::size_t k = 0; k < expanded.size(); ++k) used[k].assign(expanded[k].size(), false);
  int right_edges = 0;
  for (int i = 1; i <= c.size(); ++i) {
    int len = static_cast<int>(c[i]);
    if (len == 0) continue;
    auto it = where.find(i);
    if (it == where.end()) return 0;
    auto [k, v] = it->second;
    const auto& nodes = expanded[k];
    for (int step = 0; step < len; ++step) {
      int p = nodes[v].parent;
      if (p < 0) return 0;
      if (nodes[p].right == v) ++right_edges;
      if (used[k][p]) return 0;
      used[k][p] = true;
      v = p;
    }
  }
  // Degrees match, so disjoint paths cover every internal node.
  return right_edges % 2 ? -1 : 1;
}

// ---- text ------------------------------------------------------------------

namespace {

class ForestParser {
 public:
  explicit ForestParser(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool consume(std::string_view word) {
    skip_ws();
    if (s_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) throw ParseError("expected a small nonnegative integer", start);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Code code() {
    expect('(');
    Code c;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ')') {
      ++pos_;
      return c;
    }
    while (true) {
      c.push_back(number());
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return trim_code(c);
    }
  }

  std::vector<PlaneTree> blocks() {
    std::vector<PlaneTree> out;
    while (!at_end()) {
      std::size_t start = pos_;
      PlaneTree t;
      expect('{');
      while (true) {
        t.leaves.push_back(number());
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
      if (pos_ < s_.size() && s_[pos_] == '*') {
        t.marked = true;
        ++pos_;
      }
      expect(':');
      skip_ws();
      while (pos_ < s_.size() && (s_[pos_] == '^' || s_[pos_] == '.')) t.shape += s_[pos_++];
      if (t.shape.empty()) throw ParseError("expected a tree shape", pos_);
      try {
        validate_tree(t);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), start);
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class Build>
auto parse_with(Build build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

NestedForest parse_nested_forest(std::string_view text) {
  return parse_with([&] {
    ForestParser p(text);
    if (p.consume("empty")) {
      if (!p.at_end()) throw ParseError("unexpected text after 'empty'", p.pos());
      return NestedForest{};
    }
    if (p.consume("c=")) {
      Code c = p.code();
      if (!p.at_end()) throw ParseError("unexpected text after code", p.pos());
      return IndexedForest::from_code(c).as_nested();
    }
    auto trees = p.blocks();
    for (const auto& t : trees)
      if (t.marked) throw ParseError("marks are not allowed in a nested forest", 0);
    return NestedForest::from_trees(std::move(trees));
  });
}

MarkedForest parse_marked_forest(std::string_view text) {
  return parse_with([&] {
    ForestParser p(text);
    if (p.consume("empty")) {
      if (!p.at_end()) throw ParseError("unexpected text after 'empty'", p.pos());
      return MarkedForest{};
    }
    return MarkedForest::from_trees(p.blocks());
  });
}

IndexedForest parse_indexed_forest(std::string_view text) {
  return parse_with([&] { return IndexedForest::from_nested(parse_nested_forest(text)); });
}

std::size_t AugCodeHash::operator()(const AugCode& c) const {
  std::size_t h = 1469598103934665603ull;
  for (auto [e, v] : c) {
    h ^= static_cast<std::size_t>(e * 1000003 + v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qsc
