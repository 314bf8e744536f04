#include "qsc/gz.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "qsc/error.hpp"

namespace qsc {

namespace {

int sz(const auto& v) { return static_cast<int>(v.size()); }

// Row index (0-based, bottom up) of the lower row of letter X_j in a word of length n.
int lower_row(int n, int j) { return n - j; }

// (A^T A)^{-1} A^T for A with independent columns.
RMatrix left_inverse(const RMatrix& a, int cols) {
  int rows = sz(a);
  RMatrix ata(cols, RVector(cols));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      for (int k = 0; k < rows; ++k) ata[i][j] += a[k][i] * a[k][j];
  RMatrix inv = inverse(ata);
  RMatrix out(cols, RVector(rows));
  for (int i = 0; i < cols; ++i)
    for (int k = 0; k < rows; ++k)
      for (int j = 0; j < cols; ++j) out[i][k] += inv[i][j] * a[k][j];
  return out;
}

}  // namespace

bool is_gz_pattern(const GZPattern& p) {
  int n = sz(p);
  for (int r = 0; r < n; ++r) {
    if (sz(p[r]) != n - r) return false;
    if (r == 0) continue;
    for (int m = 0; m < sz(p[r]); ++m)
      if (!(p[r - 1][m] >= p[r][m] && p[r][m] >= p[r - 1][m + 1])) return false;
  }
  return true;
}

std::string format_pattern(const GZPattern& p) {
  std::string out;
  for (int r = sz(p) - 1; r >= 0; --r) {
    out += std::string(2 * r, ' ');
    for (int m = 0; m < sz(p[r]); ++m) {
      if (m) out += "   ";
      out += p[r][m].get_str();
    }
    out += "\n";
  }
  return out;
}

GZFace gz_face(const Word& w) {
  int n = sz(w);
  require_rtseq(w, n);
  GZFace f;
  f.word = w;
  f.symbols.assign(n, {});
  for (int a = 1; a <= n; ++a) f.symbols[0].push_back(GZSymbol{false, a});
  f.links.assign(std::max(n - 1, 0), {});
  for (int j = n; j >= 2; --j) {
    int lo = lower_row(n, j);
    auto links = entry_links(w[j - 1], j);
    f.links[lo] = links;
    for (int m = 1; m < j; ++m) {
      switch (links[m - 1]) {
        case EntryLink::Left: f.symbols[lo + 1].push_back(f.symbols[lo][m - 1]); break;
        case EntryLink::Right: f.symbols[lo + 1].push_back(f.symbols[lo][m]); break;
        case EntryLink::Free: f.symbols[lo + 1].push_back(GZSymbol{true, j}); break;
      }
    }
  }
  for (int j = 1; j <= n; ++j)
    if (w[j - 1].kind == LetterKind::T) f.free_positions.push_back(j);
  return f;
}

GZPattern face_pattern(const GZFace& f, const RVector& lambda, const RVector& phi) {
  int n = f.n();
  if (sz(lambda) != n) throw PreconditionError("lambda has the wrong length");
  if (sz(phi) != f.dimension()) throw PreconditionError("wrong number of face parameters");
  std::map<int, Rational> param;
  for (int k = 0; k < f.dimension(); ++k) param[f.free_positions[k]] = phi[k];
  GZPattern p(n);
  for (int r = 0; r < n; ++r)
    for (const auto& s : f.symbols[r]) p[r].push_back(s.free ? param.at(s.index) : lambda[s.index - 1]);
  return p;
}

std::vector<GZPattern> face_vertices(const GZFace& f, const RVector& lambda) {
  std::set<GZPattern> out;
  for (const auto& w : all_r_specializations(f.word)) out.insert(face_pattern(gz_face(w), lambda, {}));
  return {out.begin(), out.end()};
}

bool face_contains(const GZFace& f, const RVector& lambda, const GZPattern& p, bool strict) {
  int n = f.n();
  if (sz(p) != n) return false;
  for (int r = 0; r < n; ++r)
    if (sz(p[r]) != n - r) return false;
  if (p[0] != lambda) return false;
  for (int r = 0; r + 1 < n; ++r) {
    for (int m = 0; m < sz(f.links[r]); ++m) {
      const auto& x = p[r + 1][m];
      const auto& left = p[r][m];
      const auto& right = p[r][m + 1];
      switch (f.links[r][m]) {
        case EntryLink::Left:
          if (x != left) return false;
          break;
        case EntryLink::Right:
          if (x != right) return false;
          break;
        case EntryLink::Free:
          if (strict ? !(left > x && x > right) : !(left >= x && x >= right)) return false;
          break;
      }
    }
  }
  return true;
}

RVector moment_mu(const GZPattern& p) {
  int n = sz(p);
  RVector y(n + 1);
  for (int r = 0; r < n; ++r)
    for (const auto& v : p[r]) y[r] += v;
  RVector z(n);
  for (int r = 0; r < n; ++r) z[r] = y[r] - y[r + 1];
  return z;
}

RVector act(const Permutation& w, const RVector& lambda) {
  int n = sz(lambda);
  if (w.size() > n) throw PreconditionError("permutation is longer than lambda");
  Permutation inv = w.inverse();
  RVector out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = lambda[inv(i) - 1];
  return out;
}

std::vector<RVector> bruhat_interval_polytope(const Permutation& u, const Permutation& v, const RVector& lambda) {
  if (!bruhat_leq(u, v)) throw PreconditionError("u is not below v in Bruhat order");
  std::set<RVector> out;
  for (const auto& w : interval(u, v)) out.insert(act(w, lambda));
  return {out.begin(), out.end()};
}

FaceChart face_chart(const GZFace& f, const RVector& lambda) {
  int n = f.n(), d = f.dimension();
  if (sz(lambda) != n) throw PreconditionError("lambda has the wrong length");
  FaceChart c{f, lambda, RMatrix(n, RVector(d)), RVector(n), {}};
  std::map<int, int> col;
  for (int k = 0; k < d; ++k) col[f.free_positions[k]] = k;
  // y_r enters z_r with sign +1 and z_{r-1} with sign -1.
  for (int r = 0; r < n; ++r) {
    for (const auto& s : f.symbols[r]) {
      for (int sign : {1, -1}) {
        int row = sign == 1 ? r : r - 1;
        if (row < 0) continue;
        if (s.free)
          c.a[row][col.at(s.index)] += sign;
        else
          c.b[row] += sign * lambda[s.index - 1];
      }
    }
  }
  c.left_inv = d ? left_inverse(c.a, d) : RMatrix{};
  return c;
}

std::optional<RVector> chart_parameters(const FaceChart& c, const RVector& z) {
  int n = c.face.n(), d = c.face.dimension();
  if (sz(z) != n) throw PreconditionError("point has the wrong length");
  RVector phi(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < n; ++i) phi[k] += c.left_inv[k][i] * (z[i] - c.b[i]);
  for (int i = 0; i < n; ++i) {
    Rational v = c.b[i];
    for (int k = 0; k < d; ++k) v += c.a[i][k] * phi[k];
    if (v != z[i]) return std::nullopt;
  }
  return phi;
}

bool chart_contains(const FaceChart& c, const RVector& z, bool strict) {
  auto phi = chart_parameters(c, z);
  if (!phi) return false;
  return face_contains(c.face, c.lambda, face_pattern(c.face, c.lambda, *phi), strict);
}

void require_strict_lambda(const RVector& lambda) {
  if (lambda.empty()) throw PreconditionError("lambda is empty");
  for (int i = 0; i + 1 < sz(lambda); ++i)
    if (!(lambda[i] > lambda[i + 1])) throw PreconditionError("lambda must be strictly decreasing");
}

bool in_permutahedron(const RVector& z, const RVector& lambda) {
  require_strict_lambda(lambda);
  if (sz(z) != sz(lambda)) throw PreconditionError("point and lambda differ in length");
  try {
    hhmp_locate(z, lambda);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

Word hhmp_locate(const RVector& z, const RVector& lambda) {
  require_strict_lambda(lambda);
  int n = sz(lambda);
  if (sz(z) != n) throw PreconditionError("point and lambda differ in length");
  if (n == 1) {
    if (z[0] != lambda[0]) throw PreconditionError("point is outside the permutahedron");
    return {r_letter(1)};
  }
  const Rational& z1 = z[0];
  RVector rest(z.begin() + 1, z.end());
  RVector upper;
  Letter x{};
  bool found = false;
  for (int i = 1; i <= n && !found; ++i) {
    if (z1 == lambda[i - 1]) {
      x = r_letter(i);
      upper = lambda;
      upper.erase(upper.begin() + (i - 1));
      found = true;
    } else if (i < n && lambda[i] < z1 && z1 < lambda[i - 1]) {
      x = t_letter(i);
      upper = lambda;
      upper.erase(upper.begin() + i);
      upper[i - 1] = lambda[i - 1] + lambda[i] - z1;
      found = true;
    }
  }
  if (!found) throw PreconditionError("point is outside the permutahedron");
  Word w = hhmp_locate(rest, upper);
  w.push_back(x);
  return w;
}

GZForest gz_forest(const GZFace& f) {
  int n = f.n();
  // Children of each free entry, keyed by word position.
  std::map<int, std::pair<GZSymbol, GZSymbol>> kids;
  std::set<int> is_child;
  for (int pos : f.free_positions) {
    int lo = lower_row(n, pos);
    int k = f.word[pos - 1].index;
    auto l = f.symbols[lo][k - 1], r = f.symbols[lo][k];
    kids[pos] = {l, r};
    for (const auto& s : {l, r})
      if (s.free) is_child.insert(s.index);
  }
  struct Built {
    PlaneTree tree;
    std::vector<int> preorder;
  };
  std::vector<Built> built;
  std::function<void(const GZSymbol&, Built&)> walk = [&](const GZSymbol& s, Built& b) {
    if (!s.free) {
      b.tree.shape += '.';
      b.tree.leaves.push_back(s.index);
      return;
    }
    b.tree.shape += '^';
    b.preorder.push_back(s.index);
    walk(kids.at(s.index).first, b);
    walk(kids.at(s.index).second, b);
  };
  for (int pos : f.free_positions) {
    if (is_child.count(pos)) continue;
    Built b;
    walk(GZSymbol{true, pos}, b);
    built.push_back(std::move(b));
  }
  std::sort(built.begin(), built.end(),
            [](const Built& a, const Built& b) { return a.tree.leaves.front() < b.tree.leaves.front(); });
  GZForest out;
  std::vector<PlaneTree> trees;
  int next = 0;
  for (const auto& b : built) {
    trees.push_back(b.tree);
    for (int pos : b.preorder) out.node_of[pos] = next++;
  }
  out.forest = NestedForest::from_trees(std::move(trees));
  return out;
}

CubePolytope cube_polytope(const NestedForest& f, const RVector& lambda) {
  CubePolytope c;
  c.lambda = lambda;
  int base = 0;
  for (const auto& t : f.trees()) {
    for (int l : t.leaves)
      if (l > sz(lambda)) throw PreconditionError("forest has a leaf beyond the length of lambda");
    auto nodes = expand_tree(t);
    std::map<int, int> number;
    for (int v = 0; v < sz(nodes); ++v)
      if (!nodes[v].is_leaf()) number[v] = base + sz(number);
    auto ref = [&](int v) { return nodes[v].is_leaf() ? NodeRef{true, nodes[v].label} : NodeRef{false, number.at(v)}; };
    for (int v = 0; v < sz(nodes); ++v) {
      if (nodes[v].is_leaf()) continue;
      c.left.push_back(ref(nodes[v].left));
      c.right.push_back(ref(nodes[v].right));
    }
    base += sz(number);
  }
  return c;
}

bool cube_contains(const CubePolytope& c, const RVector& phi) {
  if (sz(phi) != c.dimension()) return false;
  auto value = [&](const NodeRef& r) -> const Rational& { return r.leaf ? c.lambda[r.id - 1] : phi[r.id]; };
  for (int v = 0; v < c.dimension(); ++v)
    if (!(value(c.left[v]) >= phi[v] && phi[v] >= value(c.right[v]))) return false;
  return true;
}

std::vector<RVector> cube_vertices(const CubePolytope& c) {
  int d = c.dimension();
  if (d > 20) throw PreconditionError("too many internal nodes to list cube vertices");
  std::set<RVector> out;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    RVector phi(d);
    for (int v = 0; v < d; ++v) {
      int u = v;
      while (true) {
        const NodeRef& r = (mask >> u & 1UL) ? c.right[u] : c.left[u];
        if (r.leaf) {
          phi[v] = c.lambda[r.id - 1];
          break;
        }
        u = r.id;
      }
    }
    out.insert(phi);
  }
  return {out.begin(), out.end()};
}

std::string format_cube(const CubePolytope& c) {
  auto name = [](const NodeRef& r) {
    return r.leaf ? "lambda_" + std::to_string(r.id) : "phi_" + std::to_string(r.id + 1);
  };
  std::string out;
  for (int v = 0; v < c.dimension(); ++v)
    out += name(c.left[v]) + " >= phi_" + std::to_string(v + 1) + " >= " + name(c.right[v]) + "\n";
  return out;
}

RVector gz_to_cube(const GZFace& f, const GZPattern& p) {
  auto g = gz_forest(f);
  int n = f.n();
  RVector out(f.dimension());
  for (int pos : f.free_positions) {
    int k = f.word[pos - 1].index;
    out[g.node_of.at(pos)] = p.at(lower_row(n, pos) + 1).at(k - 1);
  }
  return out;
}

RMatrix flag_from_star_matrix(const StarMatrix& m, const std::map<std::pair<int, int>, Rational>& values) {
  int n = m.size();
  RMatrix out(n, RVector(n));
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      char ch = m.at(r, c);
      if (ch == '1') {
        out[r - 1][c - 1] = 1;
      } else if (ch == '*') {
        auto it = values.find({r, c});
        if (it == values.end()) throw PreconditionError("no value for star at row " + std::to_string(r));
        if (sgn(it->second) == 0) throw PreconditionError("star values must be nonzero");
        out[r - 1][c - 1] = it->second;
      }
    }
  }
  for (const auto& [key, v] : values) {
    (void)v;
    if (key.first < 1 || key.first > n || key.second < 1 || key.second > n || m.at(key.first, key.second) != '*')
      throw PreconditionError("value given for a cell that is not a star");
  }
  return out;
}

namespace {

RMatrix columns_prefix(const RMatrix& flag, int j, bool with_e1) {
  int n = sz(flag);
  RMatrix out(n, RVector(j + (with_e1 ? 1 : 0)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < j; ++c) out[r][c] = flag[r][c];
  if (with_e1) out[0][j] = 1;
  return out;
}

bool member(const RMatrix& v) {
  int n = sz(v);
  if (n <= 2) return true;
  for (int i = 1; i <= n - 1; ++i) {
    bool ok = true;
    for (int j = 1; j < i && ok; ++j)
      if (sgn(v[0][j - 1]) != 0) ok = false;
    for (int j = i + 1; j < n && ok; ++j)
      if (rank(columns_prefix(v, j, true)) != j) ok = false;
    if (!ok) continue;
    // Projected columns, keeping each one independent of those kept before it.
    RMatrix w(n - 1);
    int kept = 0;
    for (int c = 0; c < n; ++c) {
      RMatrix trial = w;
      for (int r = 1; r < n; ++r) trial[r - 1].push_back(v[r][c]);
      if (rank(trial) == kept + 1) {
        w = std::move(trial);
        ++kept;
      }
    }
    if (kept != n - 1) continue;
    if (member(w)) return true;
  }
  return false;
}

}  // namespace

bool hhmp_membership(const RMatrix& flag) {
  int n = sz(flag);
  for (const auto& row : flag)
    if (sz(row) != n) throw PreconditionError("flag matrix must be square");
  if (n == 0) throw PreconditionError("flag matrix is empty");
  if (rank(flag) != n) throw PreconditionError("flag matrix is singular");
  return member(flag);
}

RVector parse_rational_vector(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  if (a < b && (text[a] == '(' || text[a] == '[')) {
    char close = text[a] == '(' ? ')' : ']';
    if (text[b - 1] != close) throw ParseError("unbalanced bracket", b - 1);
    ++a;
    --b;
  }
  RVector out;
  std::size_t start = a;
  for (std::size_t i = a; i <= b; ++i) {
    if (i < b && text[i] != ',') continue;
    std::string tok(text.substr(start, i - start));
    std::size_t lead = 0;
    while (lead < tok.size() && std::isspace(static_cast<unsigned char>(tok[lead]))) ++lead;
    tok.erase(0, lead);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    std::size_t at = start + lead;
    if (tok.empty()) throw ParseError("empty entry", at);
    std::size_t digits = 0;
    for (char ch : tok) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        ++digits;
      } else if (ch != '-' && ch != '/' && ch != '+') {
        throw ParseError("unexpected character '" + std::string(1, ch) + "'", at);
      }
    }
    if (!digits) throw ParseError("entry has no digits", at);
    if (tok[0] == '+') tok.erase(0, 1);
    Rational q;
    if (q.set_str(tok, 10) != 0) throw ParseError("malformed rational '" + tok + "'", at);
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator", at);
    q.canonicalize();
    out.push_back(q);
    start = i + 1;
  }
  return out;
}

std::string format_rational_vector(const RVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace qsc
