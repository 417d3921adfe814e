#pragma once
// Modules over the preprojective algebra: grid bases of the indecomposable
// projectives, the modules J(w), homomorphism spaces and the socle of a
// module over its endomorphism ring.
//
// The ground field is Q. The radical of an endomorphism algebra is computed
// with the trace form, which is valid in characteristic zero only.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "canjoin.hpp"
#include "coxeter.hpp"
#include "linalg.hpp"
#include "quiver.hpp"

namespace preproj {

// One basis vector of a grid: value i in row j, living at a quiver vertex.
struct GridEntry {
  int i;
  int j;
  Vertex vertex;
};

// Arrow action between grid basis vectors: arrow sends src to coeff * dst.
struct GridEdge {
  int src;
  int dst;
  std::string arrow;
  int coeff;
};

struct GammaGrid {
  DynkinType dynkin;
  Vertex l = 1;
  int eps = 1;  // only meaningful in type D with l >= 2
  std::vector<GridEntry> entries;
  std::vector<GridEdge> edges;

  int find(int i, int j) const {
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k].i == i && entries[k].j == j) return static_cast<int>(k);
    return -1;
  }
};

namespace detail {

inline void link(GammaGrid& g, int i1, int j1, int i2, int j2, std::string arrow, int coeff = 1) {
  int s = g.find(i1, j1), t = g.find(i2, j2);
  if (s < 0 || t < 0) return;
  g.edges.push_back({s, t, std::move(arrow), coeff});
}

inline std::string alpha1(int sign) { return sign > 0 ? "alpha1+" : "alpha1-"; }
inline std::string beta2(int sign) { return sign > 0 ? "beta2+" : "beta2-"; }

inline GammaGrid grid_A(DynkinType t, Vertex l) {
  const int n = t.rank;
  GammaGrid g{t, l, 1, {}, {}};
  for (int j = l; j <= n; ++j)
    for (int i = j; i >= std::max(1, j - l + 1); --i) g.entries.push_back({i, j, i});
  for (const GridEntry& e : std::vector<GridEntry>(g.entries)) {
    link(g, e.i, e.j, e.i - 1, e.j, "alpha" + std::to_string(e.i - 1));
    link(g, e.i, e.j, e.i + 1, e.j + 1, "beta" + std::to_string(e.i + 1));
  }
  return g;
}

inline GammaGrid grid_D_pm1(DynkinType t, Vertex l) {
  const int n = t.rank;
  GammaGrid g{t, l, 1, {}, {}};
  auto sigma = [&](int j) { return (j % 2 == 0 ? -1 : 1) * l; };  // (-1)^{j+1} l
  g.entries.push_back({l, l, l});
  for (int j = 2; j <= n - 1; ++j) {
    for (int i = j; i >= 2; --i) g.entries.push_back({i, j, i});
    g.entries.push_back({sigma(j), j, sigma(j)});
  }
  link(g, l, l, 2, 2, beta2(l));
  for (int j = 2; j <= n - 1; ++j) {
    for (int i = j; i >= 3; --i) link(g, i, j, i - 1, j, "alpha" + std::to_string(i - 1));
    link(g, 2, j, sigma(j), j, alpha1(sigma(j)));
    for (int i = j; i >= 2; --i) link(g, i, j, i + 1, j + 1, "beta" + std::to_string(i + 1));
    link(g, sigma(j), j, 2, j + 1, beta2(sigma(j)));
  }
  return g;
}

inline GammaGrid grid_D_high(DynkinType t, Vertex l, int eps) {
  const int n = t.rank;
  GammaGrid g{t, l, eps, {}, {}};
  for (int j = l; j <= n - 1; ++j)
    for (int i = j; i >= j - (n - 1) - l; --i)
      if (i != 0) g.entries.push_back({i, j, i >= -1 ? i : -i});
  auto s = [&](int j) { return ((j - l) % 2 == 0 ? 1 : -1) * eps; };
  for (int j = l; j <= n - 1; ++j) {
    for (int i = j; i >= 3; --i) link(g, i, j, i - 1, j, "alpha" + std::to_string(i - 1));
    link(g, 2, j, 1, j, "alpha1+");
    link(g, 2, j, -1, j, "alpha1-");
    for (int sg : {1, -1}) link(g, sg, j, -2, j, beta2(sg), sg == s(j) ? -1 : 1);
    for (int k = 2; k <= n - 2; ++k) link(g, -k, j, -(k + 1), j, "beta" + std::to_string(k + 1));
    for (int i = j; i >= 2; --i) link(g, i, j, i + 1, j + 1, "beta" + std::to_string(i + 1));
    link(g, s(j), j, 2, j + 1, beta2(s(j)));
    link(g, -2, j, s(j), j + 1, alpha1(s(j)));
    for (int k = 3; k <= n - 1; ++k) link(g, -k, j, -(k - 1), j + 1, "alpha" + std::to_string(k - 1));
  }
  return g;
}

}  // namespace detail

// Grid basis of the projective module at vertex l. For type D with l >= 2
// the sign pattern depends on eps.
inline GammaGrid gamma_grid(DynkinType t, Vertex l, int eps = 1) {
  if (!t.has_vertex(l)) throw InputError("vertex " + std::to_string(l) + " not in " + t.name());
  if (t.family == Family::A) return detail::grid_A(t, l);
  if (t.rank < 3) throw UnsupportedError("grid bases need type D rank >= 3");
  if (l == 1 || l == -1) return detail::grid_D_pm1(t, l);
  return detail::grid_D_high(t, l, eps);
}

// A grid together with the kept entries and the resulting module.
struct GridModule {
  GammaGrid grid;
  std::vector<char> kept;
  std::vector<int> coord;  // entry -> coordinate within its vertex space, -1 if deleted
  Representation rep;
};

inline GridModule grid_module(const GammaGrid& g, std::vector<char> kept) {
  auto q = quiver_of(g.dynkin);
  std::vector<int> dims(q->vertices().size(), 0);
  std::vector<int> coord(g.entries.size(), -1);
  for (std::size_t k = 0; k < g.entries.size(); ++k)
    if (kept[k]) coord[k] = dims[q->vertex_pos(g.entries[k].vertex)]++;
  for (const GridEdge& e : g.edges)
    if (!kept[e.src] && kept[e.dst])
      throw ConsistencyError("deleted grid entries do not span a submodule");
  Representation rep(q, dims);
  for (const GridEdge& e : g.edges) {
    if (!kept[e.src] || !kept[e.dst]) continue;
    int a = q->arrow_index(e.arrow);
    const Arrow& arrow = q->arrows()[a];
    if (arrow.from != g.entries[e.src].vertex || arrow.to != g.entries[e.dst].vertex)
      throw ConsistencyError("grid edge " + e.arrow + " joins the wrong vertices");
    rep.mat_mut(a)(coord[e.dst], coord[e.src]) += e.coeff;
  }
  rep.check_relations("grid module for l=" + std::to_string(g.l));
  return {g, std::move(kept), std::move(coord), std::move(rep)};
}

inline Representation projective_rep(DynkinType t, Vertex l) {
  GammaGrid g = gamma_grid(t, l);
  std::vector<char> all(g.entries.size(), 1);
  return grid_module(g, std::move(all)).rep;
}

// The sign c attached to a join-irreducible of type D: the element of
// {1,-1} lying in R(w) when [1,r] lies in |R(w)| for some r >= 1, else 1.
struct RData {
  ValueSet R;
  int r = 0;
  int c = 1;
};

inline RData r_data(const CoxeterElement& w) {
  RData d;
  d.R = r_set(w);
  ValueSet abs = abs_values(d.R);
  while (abs.count(d.r + 1)) ++d.r;
  if (d.r >= 1) d.c = d.R.count(1) ? 1 : -1;
  return d;
}

// eps for J(w) in type D with l >= 2, following the case split on w(m).
inline int epsilon_D(const CoxeterElement& w, Vertex l) {
  const int n = w.size();
  if (w(l + 1) > 1) return 1;
  int m = l + 1;
  for (int k = l + 1; k <= n; ++k)
    if (w(k) <= 1) m = k;
  int sign = (m - (l + 1)) % 2 == 0 ? 1 : -1;
  int eps = w(m) <= -2 ? sign : sign * w(m);
  int via_c = sign * r_data(w).c;
  if (eps != via_c)
    throw ConsistencyError("two formulas for eps disagree at " + format_window(w));
  return eps;
}

inline GridModule j_module_grid(const CoxeterElement& w) {
  Vertex l = require_join_irreducible(w);
  const DynkinType& t = w.dynkin();
  if (t.family == Family::A) {
    GammaGrid g = gamma_grid(t, l);
    std::vector<char> kept(g.entries.size());
    for (std::size_t k = 0; k < g.entries.size(); ++k) kept[k] = g.entries[k].i >= w(g.entries[k].j + 1);
    return grid_module(g, std::move(kept));
  }
  if (l == 1 || l == -1) {
    GammaGrid g = gamma_grid(t, l);
    std::vector<char> kept(g.entries.size());
    for (std::size_t k = 0; k < g.entries.size(); ++k)
      kept[k] = g.entries[k].i >= w(std::abs(g.entries[k].j) + 1);
    return grid_module(g, std::move(kept));
  }
  GammaGrid g = gamma_grid(t, l, epsilon_D(w, l));
  std::vector<char> kept(g.entries.size());
  for (std::size_t k = 0; k < g.entries.size(); ++k) {
    int i = g.entries[k].i, x = w(g.entries[k].j + 1);
    if (x >= 2) kept[k] = i >= x;
    else if (x == 1 || x == -1) kept[k] = i >= 2 || i == x;
    else kept[k] = i >= x + 1;
  }
  return grid_module(g, std::move(kept));
}

inline Representation j_module(const CoxeterElement& w) { return j_module_grid(w).rep; }

// A morphism or endomorphism: one matrix per vertex, indexed like vertices().
using VertexMaps = std::vector<QMatrix>;

inline void require_same_quiver(const Representation& M, const Representation& N) {
  if (!(M.dynkin() == N.dynkin()))
    throw InputError("representations over different quivers " + M.dynkin().name() + " and " +
                     N.dynkin().name());
}

// Basis of Hom(M, N): families f with f_to * M(a) = N(a) * f_from for all arrows.
inline std::vector<VertexMaps> hom_basis(const Representation& M, const Representation& N) {
  require_same_quiver(M, N);
  const DoubleQuiver& q = M.quiver();
  const int V = static_cast<int>(q.vertices().size());
  std::vector<int> off(V + 1, 0);
  for (int p = 0; p < V; ++p) off[p + 1] = off[p] + N.dim_at(p) * M.dim_at(p);
  const int unknowns = off[V];
  if (unknowns == 0) return {};
  auto var = [&](int p, int r, int c) { return off[p] + r * M.dim_at(p) + c; };
  int rows = 0;
  for (const Arrow& a : q.arrows()) rows += N.dim(a.to) * M.dim(a.from);
  QMatrix A(rows, unknowns);
  int row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrows()[k];
    const int s = q.vertex_pos(a.from), t = q.vertex_pos(a.to);
    const QMatrix& Mk = M.mat(static_cast<int>(k));
    const QMatrix& Nk = N.mat(static_cast<int>(k));
    for (int i = 0; i < N.dim_at(t); ++i)
      for (int j = 0; j < M.dim_at(s); ++j, ++row) {
        for (int x = 0; x < M.dim_at(t); ++x)
          if (Mk(x, j) != 0) A(row, var(t, i, x)) += Mk(x, j);
        for (int x = 0; x < N.dim_at(s); ++x)
          if (Nk(i, x) != 0) A(row, var(s, x, j)) -= Nk(i, x);
      }
  }
  QMatrix K = nullspace(std::move(A));
  std::vector<VertexMaps> out;
  for (int c = 0; c < K.cols(); ++c) {
    VertexMaps f;
    for (int p = 0; p < V; ++p) {
      QMatrix m(N.dim_at(p), M.dim_at(p));
      for (int r = 0; r < m.rows(); ++r)
        for (int cc = 0; cc < m.cols(); ++cc) m(r, cc) = K(var(p, r, cc), c);
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline int hom_dim(const Representation& M, const Representation& N) {
  return static_cast<int>(hom_basis(M, N).size());
}

// f after g.
inline VertexMaps compose(const VertexMaps& f, const VertexMaps& g) {
  VertexMaps h;
  for (std::size_t p = 0; p < f.size(); ++p) h.push_back(f[p] * g[p]);
  return h;
}

inline VertexMaps linear_combination(const std::vector<VertexMaps>& basis, const QMatrix& coeffs, int col) {
  VertexMaps out;
  for (std::size_t p = 0; p < basis.front().size(); ++p) {
    QMatrix m(basis.front()[p].rows(), basis.front()[p].cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs(static_cast<int>(k), col) != 0) m = m + coeffs(static_cast<int>(k), col) * basis[k][p];
    out.push_back(std::move(m));
  }
  return out;
}

inline bool is_zero(const VertexMaps& f) {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

struct EndAlgebra {
  std::vector<VertexMaps> basis;
  std::vector<VertexMaps> radical;  // basis of the Jacobson radical
};

inline EndAlgebra end_algebra(const Representation& M) {
  EndAlgebra E;
  E.basis = hom_basis(M, M);
  const int m = static_cast<int>(E.basis.size());
  if (m == 0) return E;
  QMatrix G(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (std::size_t p = 0; p < E.basis[a].size(); ++p) G(a, b) += trace(E.basis[a][p] * E.basis[b][p]);
  QMatrix K = nullspace(std::move(G));
  for (int c = 0; c < K.cols(); ++c) E.radical.push_back(linear_combination(E.basis, K, c));
  return E;
}

inline std::vector<Rational> flatten(const VertexMaps& f) {
  std::vector<Rational> v;
  for (const auto& m : f)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Basis of the span of a family of vertex maps with common shapes.
inline std::vector<VertexMaps> span_basis(const std::vector<VertexMaps>& fs) {
  if (fs.empty()) return {};
  std::vector<std::vector<Rational>> cols;
  for (const auto& f : fs) cols.push_back(flatten(f));
  const int len = static_cast<int>(cols.front().size());
  QMatrix B(len, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int i = 0; i < len; ++i) B(i, static_cast<int>(c)) = cols[c][i];
  QMatrix E = column_echelon_basis(B);
  std::vector<VertexMaps> out;
  for (int c = 0; c < E.cols(); ++c) {
    VertexMaps f;
    int k = 0;
    for (const auto& m0 : fs.front()) {
      QMatrix m(m0.rows(), m0.cols());
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = E(k++, c);
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Smallest k with rad^k = 0. Throws if the powers do not vanish.
inline int radical_nilpotency_index(const EndAlgebra& E, int bound) {
  std::vector<VertexMaps> power = span_basis(E.radical);
  int k = 1;
  while (!power.empty()) {
    if (k > bound) throw ConsistencyError("radical is not nilpotent");
    std::vector<VertexMaps> next;
    for (const auto& p : power)
      for (const auto& r : E.radical) next.push_back(compose(p, r));
    power = span_basis(next);
    ++k;
  }
  return k - 1;
}

// Per-vertex bases (as columns in the ambient coordinates) of a subspace.
using SubspaceBasis = std::vector<QMatrix>;

inline Representation subrepresentation(const Representation& M, const SubspaceBasis& B) {
  const DoubleQuiver& q = M.quiver();
  std::vector<int> dims;
  for (const auto& b : B) dims.push_back(b.cols());
  Representation S(M.quiver_ptr(), dims);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrows()[k];
    const QMatrix& Bs = B[q.vertex_pos(a.from)];
    const QMatrix& Bt = B[q.vertex_pos(a.to)];
    S.set_mat(static_cast<int>(k), solve_left(Bt, M.mat(static_cast<int>(k)) * Bs));
  }
  return S;
}

// {m in M : f m = 0 for all f in rad End(M)}, in reduced column echelon form.
inline SubspaceBasis socle_subspace(const Representation& M) {
  EndAlgebra E = end_algebra(M);
  SubspaceBasis B;
  for (std::size_t p = 0; p < M.dims().size(); ++p) {
    const int d = M.dim_at(static_cast<int>(p));
    std::vector<QMatrix> blocks;
    for (const auto& r : E.radical) blocks.push_back(r[p]);
    B.push_back(column_echelon_basis(blocks.empty() ? QMatrix::identity(d) : nullspace(vstack(blocks, d))));
  }
  return B;
}

inline Representation socle_over_end(const Representation& M) {
  return subrepresentation(M, socle_subspace(M));
}

// Kernel of the shift endomorphism of J(w), available in type A and in
// type D for l = 1 or -1.
inline SubspaceBasis kernel_socle_subspace(const CoxeterElement& w) {
  Vertex l = require_join_irreducible(w);
  const DynkinType& t = w.dynkin();
  if (t.family == Family::D && l != 1 && l != -1)
    throw UnsupportedError("kernel socle is not implemented for type D with l = " + std::to_string(l));
  GridModule G = j_module_grid(w);
  const auto& q = G.rep.quiver();
  std::vector<QMatrix> f;
  for (std::size_t p = 0; p < q.vertices().size(); ++p) f.emplace_back(G.rep.dim_at(p), G.rep.dim_at(p));
  for (std::size_t k = 0; k < G.grid.entries.size(); ++k) {
    if (!G.kept[k]) continue;
    const GridEntry& e = G.grid.entries[k];
    int j2 = t.family == Family::A ? e.j + 1 : std::abs(e.j) + 2;
    int k2 = G.grid.find(e.i, j2);
    if (k2 < 0 || !G.kept[k2]) continue;
    f[q.vertex_pos(e.vertex)](G.coord[k2], G.coord[k]) = 1;
  }
  SubspaceBasis B;
  for (const auto& m : f) B.push_back(column_echelon_basis(nullspace(m)));
  return B;
}

inline Representation kernel_socle(const CoxeterElement& w) {
  return subrepresentation(j_module(w), kernel_socle_subspace(w));
}

inline bool same_subspace(const SubspaceBasis& x, const SubspaceBasis& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (!(column_echelon_basis(x[p]) == column_echelon_basis(y[p]))) return false;
  return true;
}

inline bool is_brick(const Representation& M) { return hom_dim(M, M) == 1; }

inline bool is_semibrick(const std::vector<Representation>& S) {
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (!is_brick(S[i])) return false;
    for (std::size_t j = 0; j < S.size(); ++j)
      if (i != j && hom_dim(S[i], S[j]) != 0) return false;
  }
  return true;
}

// Nonzero, nonnegative, and Tits form equal to 1. d is indexed like vertices().
inline bool is_positive_root(DynkinType t, const std::vector<int>& d) {
  auto vs = t.vertices();
  if (d.size() != vs.size()) throw InputError("dimension vector has wrong length");
  bool nonzero = false;
  long long q = 0;
  for (int x : d) {
    if (x < 0) return false;
    nonzero = nonzero || x > 0;
    q += static_cast<long long>(x) * x;
  }
  auto pos = [&](Vertex v) { return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin()); };
  for (auto [u, v] : t.edges()) q -= static_cast<long long>(d[pos(u)]) * d[pos(v)];
  return nonzero && q == 1;
}

inline bool iso_bricks(const Representation& M, const Representation& N) {
  if (!is_brick(M) || !is_brick(N)) throw DomainError("iso_bricks needs two bricks");
  require_same_quiver(M, N);
  if (M.dims() != N.dims()) return false;
  auto H = hom_basis(M, N);
  if (H.size() != 1) return false;
  for (const auto& m : H.front())
    if (rank(m) != m.rows()) return false;
  return true;
}

// The simple module at a vertex.
inline Representation simple_rep(DynkinType t, Vertex v) {
  auto q = quiver_of(t);
  std::vector<int> dims(q->vertices().size(), 0);
  dims[q->vertex_pos(v)] = 1;
  return Representation(q, dims);
}

}  // namespace preproj
