#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/forest.hpp"
#include "qsc/ops.hpp"

namespace qsc {

// Length n and X_i in {r_1, t_1, ..., r_{i-1}, t_{i-1}, r_i}.
bool validate_rtseq(const Word& w, int n);
void require_rtseq(const Word& w, int n);

// All of RTSeq_n; position i runs through r_1, t_1, r_2, t_2, ..., r_i.
std::vector<Word> enumerate_rtseq(int n);

// Monoid image under t_j -> j, r_j -> j_o.
MarkedForest forest_of(const Word& w);
NestedForest nested_forest_of(const Word& w);

// Words of RTSeq_n whose nested forest is f. Filters the full enumeration for
// n <= 7 and peels letters off the end of the marked forest otherwise. Sorted.
std::vector<Word> trim_set(const NestedForest& f, int n);
std::vector<Word> trim_set_by_filter(const NestedForest& f, int n);
std::vector<Word> trim_set_by_backtracking(const NestedForest& f, int n);

// Replace each t_j by r_j or r_{j+1}, in every combination.
std::vector<Word> all_r_specializations(const Word& w);

// n x n array over '0', '1', '*'. Row 1 is the top row.
class StarMatrix {
 public:
  StarMatrix() = default;
  explicit StarMatrix(std::vector<std::string> rows);
  int size() const { return static_cast<int>(rows_.size()); }
  char at(int row, int col) const { return rows_[row - 1][col - 1]; }  // 1-based
  const std::vector<std::string>& rows() const { return rows_; }
  std::string to_string() const;  // rows separated by '/'
  friend bool operator==(const StarMatrix&, const StarMatrix&) = default;
  friend bool operator<(const StarMatrix& a, const StarMatrix& b) { return a.rows_ < b.rows_; }

 private:
  std::vector<std::string> rows_;
};

// Rows separated by '/', ';' or newlines; cells '0', '1', '*'.
StarMatrix parse_star_matrix(std::string_view text);
StarMatrix star_matrix(const Word& w);
bool validate_star_matrix(const StarMatrix& m);
NestedForest forest_from_matrix(const StarMatrix& m);

// Y_2 x ... x Y_n; a factor is {lo} when lo == hi, else [lo, hi].
struct CubeFactor {
  int lo;
  int hi;
  friend bool operator==(const CubeFactor&, const CubeFactor&) = default;
};
using CubeBox = std::vector<CubeFactor>;

CubeBox box_of(const Word& w);
bool box_contains(const CubeBox& outer, const CubeBox& inner);
std::string format_box(const CubeBox& b);

// Rewrites adjacent t_a r_b until every word lists its R letters before its T
// letters. Output maps each terminal word to its multiplicity.
std::map<Word, int> rewrite_to_nonnested(const Word& w);

// How each entry of GZ row (n - j + 2) sits over row (n - j + 1), for letter X_j.
enum class EntryLink { Left, Right, Free };
std::vector<EntryLink> entry_links(const Letter& x, int j);

// ASCII trimming diagram: one node row per letter, top to bottom. '/' and '\'
// are equality edges, ':' pairs mark a free entry.
std::string render_trimming_diagram(const Word& w);

}  // namespace qsc
