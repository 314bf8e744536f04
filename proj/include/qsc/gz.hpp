#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/forest.hpp"
#include "qsc/linalg.hpp"
#include "qsc/perm.hpp"
#include "qsc/rtword.hpp"

namespace qsc {

// Rows bottom to top; row r (0-based) holds p_{r+1,r+1}, ..., p_{n,r+1}, so row 0 is lambda.
using GZPattern = std::vector<RVector>;

bool is_gz_pattern(const GZPattern& p);
std::string format_pattern(const GZPattern& p);

// An entry of the symbolic pattern of a face: lambda_a, or the parameter of the
// t letter at word position a.
struct GZSymbol {
  bool free = false;
  int index = 0;
  friend bool operator==(const GZSymbol&, const GZSymbol&) = default;
};

// Face diagram of gz(lambda; w). links[r] says how row r + 1 sits over row r.
struct GZFace {
  Word word;
  std::vector<std::vector<EntryLink>> links;
  std::vector<std::vector<GZSymbol>> symbols;  // same shape as a pattern
  std::vector<int> free_positions;             // word positions of t letters, increasing

  int n() const { return static_cast<int>(word.size()); }
  int dimension() const { return static_cast<int>(free_positions.size()); }
};

GZFace gz_face(const Word& w);
// Pattern with the free entries set to phi (one value per t letter, in word order).
GZPattern face_pattern(const GZFace& f, const RVector& lambda, const RVector& phi);
// Patterns of the all-R specializations.
std::vector<GZPattern> face_vertices(const GZFace& f, const RVector& lambda);
// Red equalities, blue inequalities (strict when requested) and the bottom row.
bool face_contains(const GZFace& f, const RVector& lambda, const GZPattern& p, bool strict = false);

// mu(p) = (y_1 - y_2, ..., y_n), y_i the sum of row i.
RVector moment_mu(const GZPattern& p);

// w . lambda = (lambda_{w^{-1}(1)}, ..., lambda_{w^{-1}(n)}).
RVector act(const Permutation& w, const RVector& lambda);
std::vector<RVector> bruhat_interval_polytope(const Permutation& u, const Permutation& v, const RVector& lambda);

// mu on the face as an affine map phi -> A phi + b, with a left inverse.
struct FaceChart {
  GZFace face;
  RVector lambda;
  RMatrix a;         // n x dim
  RVector b;         // n
  RMatrix left_inv;  // dim x n
};
FaceChart face_chart(const GZFace& f, const RVector& lambda);
// Parameters phi with mu(p(phi)) = z, if z lies in the affine hull.
std::optional<RVector> chart_parameters(const FaceChart& c, const RVector& z);
// z in mu(face); strict asks for the relative interior.
bool chart_contains(const FaceChart& c, const RVector& z, bool strict);

// Strictly decreasing lambda is required by the geometry.
void require_strict_lambda(const RVector& lambda);
bool in_permutahedron(const RVector& z, const RVector& lambda);
// The word whose face has z in its relative interior. Throws when z is outside Perm(lambda).
Word hhmp_locate(const RVector& z, const RVector& lambda);

// Nested forest read off the face: free entries are internal nodes with children the
// classes of the two entries below them. node_of[pos] numbers the free entry of the
// t letter at word position pos by (tree, preorder).
struct GZForest {
  NestedForest forest;
  std::map<int, int> node_of;
};
GZForest gz_forest(const GZFace& f);

// phi(v_L) >= phi(v) >= phi(v_R) over internal nodes numbered by (tree, preorder).
struct NodeRef {
  bool leaf;
  int id;  // leaf label or internal node number
};
struct CubePolytope {
  std::vector<NodeRef> left;
  std::vector<NodeRef> right;
  RVector lambda;
  int dimension() const { return static_cast<int>(left.size()); }
};
CubePolytope cube_polytope(const NestedForest& f, const RVector& lambda);
bool cube_contains(const CubePolytope& c, const RVector& phi);
std::vector<RVector> cube_vertices(const CubePolytope& c);
std::string format_cube(const CubePolytope& c);
// The linear isomorphism gz(lambda; w) -> C(F(w); lambda).
RVector gz_to_cube(const GZFace& f, const GZPattern& p);

// Flag V_1 < V_2 < ... spanned by column prefixes; stars replaced by the given values
// (keyed by 1-based (row, col)).
RMatrix flag_from_star_matrix(const StarMatrix& m, const std::map<std::pair<int, int>, Rational>& values);
// Recursive membership test in HHMP_n. Throws PreconditionError on a singular matrix.
bool hhmp_membership(const RMatrix& flag);

RVector parse_rational_vector(std::string_view text);
std::string format_rational_vector(const RVector& v);

}  // namespace qsc
