#include "common.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qsc/error.hpp"
#include "qsc/ops.hpp"
#include "qsc/perm.hpp"
#include "qsc/rtword.hpp"
#include "qsc/verify.hpp"

namespace qsc {
namespace {

Word W(std::string_view s) { return parse_word(s); }

long double_factorial(int n) {
  long out = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) out *= k;
  return out;
}

TEST(RtWord, Validation) {
  EXPECT_TRUE(validate_rtseq(W("r1 t1 t2 t1 r2"), 5));
  EXPECT_FALSE(validate_rtseq(W("t1 r1"), 2));
  EXPECT_FALSE(validate_rtseq(W("r1 r3"), 2));
  EXPECT_FALSE(validate_rtseq(W("r1 t2"), 2));
  EXPECT_FALSE(validate_rtseq(W("r1 r1"), 3));
  EXPECT_THROW(require_rtseq(W("r1 r3"), 2), PreconditionError);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(static_cast<long>(enumerate_rtseq(n).size()), double_factorial(n));
}

TEST(RtWord, Forests) {
  EXPECT_EQ(forest_of(W("r1 t1 t2 t1 r2")), forest_of(W("r1 t1 t1 r2 t4")));
  EXPECT_TRUE(forest_of({}).trees().empty());
  MarkedForest f = forest_of(W("r1 r1 r1"));
  ASSERT_EQ(f.trees().size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(f.trees()[i].marked);
    EXPECT_TRUE(f.trees()[i].is_trivial());
    EXPECT_EQ(f.trees()[i].leaves.front(), i + 1);
  }
}

TEST(RtWord, TrimSets) {
  NestedForest f = nested_forest_of(W("r1 t1 t2 t1 r2"));
  auto t = trim_set(f, 5);
  EXPECT_EQ(t, (std::vector<Word>{W("r1 t1 t1 r2 t4"), W("r1 t1 t1 t3 r2"), W("r1 t1 t2 t1 r2")}));
  EXPECT_EQ(trim_set(NestedForest(), 1), (std::vector<Word>{W("r1")}));
  EXPECT_THROW(trim_set(f, 3), PreconditionError);
  // Fibres of the forest map are the trim sets, and they cover RTSeq_n.
  for (int n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    for (const auto& h : enumerate_nsuppfor(n)) {
      auto words = trim_set(h, n);
      EXPECT_FALSE(words.empty());
      EXPECT_EQ(words, trim_set_by_backtracking(h, n));
      for (const auto& w : words) EXPECT_EQ(nested_forest_of(w), h);
      total += words.size();
    }
    EXPECT_EQ(total, enumerate_rtseq(n).size());
  }
  EXPECT_TRUE(check_trim_independence(4, 3).ok());
}

TEST(RtWord, BacktrackingBeyondFilterRange) {
  // n = 8 is past the filter cutoff; spot check against the definition.
  Word w0 = W("r1 t1 t2 t1 r2 t4 r3 t1");
  ASSERT_TRUE(validate_rtseq(w0, 8));
  NestedForest f = nested_forest_of(w0);
  for (const auto& w : trim_set(f, 8)) {
    EXPECT_TRUE(validate_rtseq(w, 8));
    EXPECT_EQ(nested_forest_of(w), f);
  }
  auto t = trim_set(f, 8);
  EXPECT_NE(std::find(t.begin(), t.end(), w0), t.end());
}

TEST(RtWord, StarMatrices) {
  EXPECT_EQ(star_matrix(W("r1 t1 t1 r2")).to_string(), "0100/*010/*001/1000");
  EXPECT_EQ(star_matrix(W("r1")).to_string(), "1");
  EXPECT_EQ(parse_star_matrix("0100;*010\n*001/1000"), star_matrix(W("r1 t1 t1 r2")));
  NestedForest fig = nested_forest_of(W("r1 t1 t2 t1 r2"));
  EXPECT_EQ(forest_from_matrix(star_matrix(W("r1 t1 t1 r2 t4"))), fig);
  EXPECT_TRUE(validate_star_matrix(parse_star_matrix("*1/10")));
  EXPECT_FALSE(validate_star_matrix(parse_star_matrix("1*/01")));  // star right of its row's 1
  EXPECT_THROW(parse_star_matrix("1x/01"), ParseError);
}

// Every 0/1/* matrix with a permutation of 1s and at most one star per row, placed
// left of its row's 1 and above its column's 1.
std::vector<StarMatrix> candidate_matrices(int n) {
  std::vector<StarMatrix> out;
  for (const auto& p : all_permutations(n)) {
    auto one = p.one_line(n);  // row r has its 1 in column one[r-1]
    std::vector<int> row_of(n + 1);
    for (int r = 1; r <= n; ++r) row_of[one[r - 1]] = r;
    std::vector<std::vector<int>> choices(n);
    for (int r = 1; r <= n; ++r) {
      choices[r - 1].push_back(0);
      for (int c = 1; c < one[r - 1]; ++c)
        if (row_of[c] > r) choices[r - 1].push_back(c);
    }
    std::vector<int> pick(n, 0);
    std::function<void(int)> rec = [&](int r) {
      if (r == n) {
        std::vector<std::string> rows(n, std::string(n, '0'));
        for (int i = 0; i < n; ++i) {
          rows[i][one[i] - 1] = '1';
          if (pick[i]) rows[i][pick[i] - 1] = '*';
        }
        out.emplace_back(rows);
        return;
      }
      for (int c : choices[r]) {
        pick[r] = c;
        rec(r + 1);
      }
    };
    rec(0);
  }
  return out;
}

TEST(RtWord, MatrixModelIsABijection) {
  for (int n = 1; n <= 5; ++n) {
    std::set<StarMatrix> images;
    for (const auto& w : enumerate_rtseq(n)) {
      auto m = star_matrix(w);
      EXPECT_TRUE(validate_star_matrix(m)) << format_word(w);
      EXPECT_EQ(forest_from_matrix(m), nested_forest_of(w)) << format_word(w);
      images.insert(m);
    }
    EXPECT_EQ(images.size(), enumerate_rtseq(n).size());
    std::set<StarMatrix> valid;
    for (const auto& m : candidate_matrices(n))
      if (validate_star_matrix(m)) valid.insert(m);
    EXPECT_EQ(valid, images) << "n=" << n;
  }
}

TEST(RtWord, Boxes) {
  EXPECT_EQ(format_box(box_of(W("r1 t1 t1"))), "[[1,2],[1,2]]");
  EXPECT_EQ(format_box(box_of(W("r1 r1 r2"))), "[[1],[2]]");
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate_rtseq(n)) {
      std::set<std::string> specs;
      for (const auto& s : all_r_specializations(w)) specs.insert(format_word(s));
      EXPECT_EQ(specs.size(), std::size_t{1} << t_count(w));
      // Containment of boxes is exactly specialization of T letters.
      for (const auto& v : enumerate_rtseq(n)) {
        bool is_face = true;
        for (std::size_t k = 0; k < w.size(); ++k) {
          const auto& a = w[k];
          const auto& b = v[k];
          if (a.kind == LetterKind::R)
            is_face = is_face && b == a;
          else
            is_face = is_face && (b == a || b == r_letter(a.index) || b == r_letter(a.index + 1));
        }
        EXPECT_EQ(box_contains(box_of(w), box_of(v)), is_face) << format_word(w) << " / " << format_word(v);
      }
    }
}

TEST(RtWord, RewriteToNonNested) {
  auto out = rewrite_to_nonnested(W("r1 t1 r2"));
  EXPECT_EQ(out, (std::map<Word, int>{{W("r1 r1 t2"), 1}, {W("r1 r2 t1"), 1}}));
  EXPECT_EQ(rewrite_to_nonnested(W("r1 r1 t2")), (std::map<Word, int>{{W("r1 r1 t2"), 1}}));
  for (int n = 1; n <= 4; ++n) {
    auto monos = monomials_up_to(n, 3);
    for (const auto& w : enumerate_rtseq(n)) {
      auto terms = rewrite_to_nonnested(w);
      for (const auto& [v, c] : terms) {
        EXPECT_GT(c, 0);
        EXPECT_TRUE(nested_forest_of(v).is_indexed()) << format_word(v);
        bool seen_t = false;
        for (const auto& x : v) {
          if (x.kind == LetterKind::T) seen_t = true;
          EXPECT_FALSE(seen_t && x.kind == LetterKind::R) << format_word(v);
        }
      }
      for (const auto& m : monos) {
        Poly f = Poly::monomial(m);
        Poly sum;
        for (const auto& [v, c] : terms) sum += apply_word(v, f) * Integer(c);
        EXPECT_EQ(sum, apply_word(w, f)) << format_word(w);
      }
    }
  }
}

TEST(RtWord, TrimmingDiagram) {
  std::string d = render_trimming_diagram(W("r1 t1 t2 t1 r2"));
  EXPECT_EQ(std::count(d.begin(), d.end(), 'o'), 15);
  EXPECT_NE(d.find("t2"), std::string::npos);
  EXPECT_EQ(entry_links(t_letter(2), 4), (std::vector<EntryLink>{EntryLink::Left, EntryLink::Free, EntryLink::Right}));
  EXPECT_EQ(entry_links(r_letter(2), 4), (std::vector<EntryLink>{EntryLink::Left, EntryLink::Right, EntryLink::Right}));
}

}  // namespace
}  // namespace qsc
