#include "qsc/rtword.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qsc {

bool validate_rtseq(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  for (int i = 1; i <= n; ++i) {
    const Letter& x = w[i - 1];
    int bound = x.kind == LetterKind::R ? i : i - 1;
    if (x.index < 1 || x.index > bound) return false;
  }
  return true;
}

void require_rtseq(const Word& w, int n) {
  if (!validate_rtseq(w, n)) throw PreconditionError("'" + format_word(w) + "' is not in RTSeq_" + std::to_string(n));
}

std::vector<Word> enumerate_rtseq(int n) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (int j = 1; j <= i; ++j) {
      cur.push_back(r_letter(j));
      rec(i + 1);
      cur.pop_back();
      if (j < i) {
        cur.push_back(t_letter(j));
        rec(i + 1);
        cur.pop_back();
      }
    }
  };
  rec(1);
  return out;
}

MarkedForest forest_of(const Word& w) {
  MarkedForest f;
  for (const auto& x : w)
    f = f * (x.kind == LetterKind::T ? MarkedForest::generator(x.index) : MarkedForest::marked_generator(x.index));
  return f;
}

NestedForest nested_forest_of(const Word& w) { return forest_of(w).forget_marks(); }

std::vector<Word> trim_set_by_filter(const NestedForest& f, int n) {
  if (f.support_max() > n) throw PreconditionError("forest is not supported in 1..n");
  std::vector<Word> out;
  for (auto& w : enumerate_rtseq(n))
    if (nested_forest_of(w) == f) out.push_back(std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void shift_leaves_above(std::vector<PlaneTree>& trees, int above, int by) {
  for (auto& t : trees)
    for (int& l : t.leaves)
      if (l > above) l += by;
}

void peel(const std::vector<PlaneTree>& trees, int m, Word& suffix, std::vector<Word>& out) {
  if (m == 0) {
    if (trees.empty()) out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const PlaneTree& t = trees[k];
    if (t.is_trivial()) {
      int j = t.leaves.front();
      if (!t.marked || j > m) continue;
      std::vector<PlaneTree> rest;
      for (std::size_t o = 0; o < trees.size(); ++o)
        if (o != k) rest.push_back(trees[o]);
      shift_leaves_above(rest, j, -1);
      suffix.push_back(r_letter(j));
      peel(rest, m - 1, suffix, out);
      suffix.pop_back();
      continue;
    }
    for (std::size_t pos = 0; pos + 3 <= t.shape.size(); ++pos) {
      if (t.shape.compare(pos, 3, "^..") != 0) continue;
      std::size_t idx = static_cast<std::size_t>(std::count(t.shape.begin(), t.shape.begin() + pos, '.'));
      int j = t.leaves[idx];
      if (j > m - 1 || t.leaves[idx + 1] != j + 1) continue;
      std::vector<PlaneTree> rest = trees;
      PlaneTree& u = rest[k];
      u.shape.replace(pos, 3, ".");
      u.leaves.erase(u.leaves.begin() + idx + 1);
      shift_leaves_above(rest, j + 1, -1);
      suffix.push_back(t_letter(j));
      peel(rest, m - 1, suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> trim_set_by_backtracking(const NestedForest& f, int n) {
  if (f.support_max() > n) throw PreconditionError("forest is not supported in 1..n");
  std::vector<PlaneTree> trees;
  std::set<int> covered;
  for (auto t : f.trees()) {
    covered.insert(t.leaves.begin(), t.leaves.end());
    t.marked = true;
    trees.push_back(std::move(t));
  }
  for (int l = 1; l <= n; ++l)
    if (!covered.count(l)) trees.push_back({".", {l}, true});
  std::vector<Word> out;
  Word suffix;
  peel(trees, n, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> trim_set(const NestedForest& f, int n) {
  return n <= 7 ? trim_set_by_filter(f, n) : trim_set_by_backtracking(f, n);
}

std::vector<Word> all_r_specializations(const Word& w) {
  std::vector<Word> out{Word{}};
  for (const auto& x : w) {
    std::vector<Word> next;
    for (const auto& p : out) {
      if (x.kind == LetterKind::R) {
        next.push_back(p);
        next.back().push_back(x);
      } else {
        next.push_back(p);
        next.back().push_back(r_letter(x.index));
        next.push_back(p);
        next.back().push_back(r_letter(x.index + 1));
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---- star matrices ---------------------------------------------------------

StarMatrix::StarMatrix(std::vector<std::string> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw PreconditionError("star matrix must be square");
    for (char c : r)
      if (c != '0' && c != '1' && c != '*') throw PreconditionError("star matrix cells are 0, 1 or *");
  }
}

std::string StarMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) s += (s.empty() ? "" : "/") + r;
  return s;
}

StarMatrix parse_star_matrix(std::string_view text) {
  std::vector<std::string> rows(1);
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/' || c == ';' || c == '\n') {
      rows.emplace_back();
    } else if (c == '0' || c == '1' || c == '*') {
      rows.back() += c;
    } else if (c != ' ' && c != '\t' && c != '\r' && c != ',') {
      throw ParseError("unexpected character in star matrix", k);
    }
  }
  std::erase_if(rows, [](const std::string& r) { return r.empty(); });
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw ParseError("star matrix must be square", 0);
  return StarMatrix(std::move(rows));
}

StarMatrix star_matrix(const Word& w) {
  require_rtseq(w, static_cast<int>(w.size()));
  std::vector<std::string> rows;
  for (const auto& x : w) {
    int m = static_cast<int>(rows.size()) + 1;
    std::string top(m, '0');
    int zero_col;
    if (x.kind == LetterKind::R) {
      top[x.index - 1] = '1';
      zero_col = x.index;
    } else {
      top[x.index - 1] = '*';
      top[x.index] = '1';
      zero_col = x.index + 1;
    }
    for (auto& r : rows) r.insert(r.begin() + (zero_col - 1), '0');
    rows.insert(rows.begin(), std::move(top));
  }
  return StarMatrix(std::move(rows));
}

bool validate_star_matrix(const StarMatrix& m) {
  int n = m.size();
  std::vector<int> one_col(n + 1, 0), one_row(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    int ones = 0, stars = 0;
    for (int c = 1; c <= n; ++c) {
      if (m.at(r, c) == '1') {
        ++ones;
        one_col[r] = c;
        if (one_row[c]) return false;
        one_row[c] = r;
      } else if (m.at(r, c) == '*') {
        ++stars;
      }
    }
    if (ones != 1 || stars > 1) return false;
  }
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (m.at(r, c) != '*') continue;
      if (one_row[c] <= r || one_col[r] <= c) return false;
      for (int between = c + 1; between < one_col[r]; ++between)
        for (int below = r + 1; below <= n; ++below)
          if (m.at(below, between) != '0') return false;
    }
  }
  return true;
}

NestedForest forest_from_matrix(const StarMatrix& m) {
  if (!validate_star_matrix(m)) throw PreconditionError("invalid star matrix");
  int n = m.size();
  // A child is a node row (> 0) or a leaf column (< 0).
  auto child_via = [&](int row, int col) {
    for (int above = row - 1; above >= 1; --above)
      if (m.at(above, col) == '*') return above;
    return -col;
  };
  std::map<int, std::pair<int, int>> children;
  std::set<int> is_child;
  for (int r = 1; r <= n; ++r) {
    int star = 0, one = 0;
    for (int c = 1; c <= n; ++c) {
      if (m.at(r, c) == '*') star = c;
      if (m.at(r, c) == '1') one = c;
    }
    if (!star) continue;
    auto kids = std::make_pair(child_via(r, star), child_via(r, one));
    children[r] = kids;
    if (kids.first > 0) is_child.insert(kids.first);
    if (kids.second > 0) is_child.insert(kids.second);
  }
  std::function<void(int, PlaneTree&)> build = [&](int ref, PlaneTree& t) {
    if (ref < 0) {
      t.shape += '.';
      t.leaves.push_back(-ref);
      return;
    }
    t.shape += '^';
    build(children.at(ref).first, t);
    build(children.at(ref).second, t);
  };
  std::vector<PlaneTree> trees;
  for (const auto& [row, kids] : children) {
    if (is_child.count(row)) continue;
    PlaneTree t;
    build(row, t);
    trees.push_back(std::move(t));
  }
  return NestedForest::from_trees(std::move(trees));
}

// ---- cube boxes ------------------------------------------------------------

CubeBox box_of(const Word& w) {
  require_rtseq(w, static_cast<int>(w.size()));
  CubeBox b;
  for (std::size_t i = 1; i < w.size(); ++i) {
    int j = w[i].index;
    b.push_back({j, w[i].kind == LetterKind::T ? j + 1 : j});
  }
  return b;
}

bool box_contains(const CubeBox& outer, const CubeBox& inner) {
  if (outer.size() != inner.size()) return false;
  for (std::size_t k = 0; k < outer.size(); ++k)
    if (inner[k].lo < outer[k].lo || inner[k].hi > outer[k].hi) return false;
  return true;
}

std::string format_box(const CubeBox& b) {
  std::string s = "[";
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) s += ",";
    s += "[" + std::to_string(b[k].lo);
    if (b[k].hi != b[k].lo) s += "," + std::to_string(b[k].hi);
    s += "]";
  }
  return s + "]";
}

// ---- rewriting -------------------------------------------------------------

// Measure: the number of pairs (p < q) with X_p a T letter and X_q an R letter.
// Each step turns one adjacent (t, r) pair into (r, t) pairs and lowers it by one.
std::map<Word, int> rewrite_to_nonnested(const Word& w) {
  require_rtseq(w, static_cast<int>(w.size()));
  std::map<Word, int> done;
  std::deque<std::pair<Word, int>> work{{w, 1}};
  while (!work.empty()) {
    auto [cur, mult] = std::move(work.front());
    work.pop_front();
    std::size_t p = 0;
    while (p + 1 < cur.size() && !(cur[p].kind == LetterKind::T && cur[p + 1].kind == LetterKind::R)) ++p;
    if (p + 1 >= cur.size()) {
      done[cur] += mult;
      continue;
    }
    int a = cur[p].index, b = cur[p + 1].index;
    if (b <= a) {
      cur[p] = r_letter(b);
      cur[p + 1] = t_letter(a + 1);
      work.emplace_back(std::move(cur), mult);
    } else if (b == a + 1) {
      Word other = cur;
      cur[p] = r_letter(a);
      cur[p + 1] = t_letter(a + 1);
      other[p] = r_letter(a + 1);
      other[p + 1] = t_letter(a);
      work.emplace_back(std::move(cur), mult);
      work.emplace_back(std::move(other), mult);
    } else {
      cur[p] = r_letter(b - 1);
      cur[p + 1] = t_letter(a);
      work.emplace_back(std::move(cur), mult);
    }
  }
  return done;
}

// ---- trimming diagrams -----------------------------------------------------

std::vector<EntryLink> entry_links(const Letter& x, int j) {
  std::vector<EntryLink> out;
  for (int m = 1; m < j; ++m) {
    if (m < x.index)
      out.push_back(EntryLink::Left);
    else if (m == x.index && x.kind == LetterKind::T)
      out.push_back(EntryLink::Free);
    else
      out.push_back(EntryLink::Right);
  }
  return out;
}

std::string render_trimming_diagram(const Word& w) {
  int n = static_cast<int>(w.size());
  require_rtseq(w, n);
  int width = 4 * n;
  std::string out;
  auto emit = [&](std::string line, const std::string& tag) {
    line.resize(width + 2, ' ');
    line += tag;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  for (int j = 1; j <= n; ++j) {
    if (j > 1) {
      std::string edges(width, ' ');
      auto links = entry_links(w[j - 1], j);
      for (int m = 1; m < j; ++m) {
        int x = 2 * (n - j + 1) + 4 * (m - 1);
        switch (links[m - 1]) {
          case EntryLink::Left: edges[x - 1] = '/'; break;
          case EntryLink::Right: edges[x + 1] = '\\'; break;
          case EntryLink::Free: edges[x - 1] = ':'; edges[x + 1] = ':'; break;
        }
      }
      emit(edges, "");
    }
    std::string nodes(width, ' ');
    for (int m = 1; m <= j; ++m) nodes[2 * (n - j) + 4 * (m - 1)] = 'o';
    std::string tag(1, w[j - 1].kind == LetterKind::R ? 'r' : 't');
    emit(nodes, tag + std::to_string(w[j - 1].index));
  }
  return out;
}

}  // namespace qsc
