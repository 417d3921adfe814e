#pragma once
// The brick S(w) of a join-irreducible w, built combinatorially: the symbol
// sets V+ and V-, the coefficient tables for the arrow actions, the
// abbreviated arrow diagram, and a two-row text rendering of it.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "canjoin.hpp"
#include "preproj_rep.hpp"

namespace preproj {

// Data a brick is built from. For type A only a, b and R are used.
struct BrickParams {
  int a = 0;
  int b = 0;
  ValueSet R;
  int r = 0;
  int c = 1;

  friend bool operator==(const BrickParams&, const BrickParams&) = default;
};

// r and c from an R-set: r is the largest k with [1,k] inside |R|, and c is
// the element of {1,-1} lying in R when r >= 1, else 1.
inline BrickParams brick_params_from(int a, int b, ValueSet R) {
  BrickParams p;
  p.a = a;
  p.b = b;
  ValueSet abs = abs_values(R);
  while (abs.count(p.r + 1)) ++p.r;
  if (p.r >= 1) p.c = R.count(1) ? 1 : -1;
  p.R = std::move(R);
  return p;
}

inline BrickParams brick_params(const CoxeterElement& w) {
  Vertex l = require_join_irreducible(w);
  int k = std::abs(l);
  BrickParams p = brick_params_from(w(l), w(k + 1), r_set(w));
  if (w.dynkin().family == Family::A) {
    p.r = 0;
    p.c = 1;
  }
  return p;
}

// (V-, V+) for type D; V- descending, V+ ascending.
inline std::pair<std::vector<int>, std::vector<int>> v_sets_D(int a, int b, int c) {
  std::vector<int> vm, vp;
  if (b >= 2) {
    for (int i = b; i <= a - 1; ++i) vp.push_back(i);
    return {vm, vp};
  }
  vp.push_back(c);
  for (int i = 2; i <= a - 1; ++i) vp.push_back(i);
  if (b <= -2) {
    vm.push_back(-c);
    for (int i = -2; i >= b + 1; --i) vm.push_back(i);
  }
  return {vm, vp};
}

// Vertex carrying the basis vector <s>.
inline Vertex symbol_vertex(Family f, int s) {
  if (f == Family::A || s >= -1) return s;
  return -s;
}

struct BrickDiagram {
  DynkinType dynkin;
  std::optional<std::vector<int>> window;
  std::optional<Vertex> type_l;
  BrickParams params;
  std::vector<int> v_plus;   // ascending
  std::vector<int> v_minus;  // descending
  std::vector<std::pair<int, int>> arrows;  // sorted

  // V+ ascending then V- descending.
  std::vector<int> symbols() const {
    std::vector<int> s = v_plus;
    s.insert(s.end(), v_minus.begin(), v_minus.end());
    return s;
  }

  bool has_symbol(int s) const {
    return std::find(v_plus.begin(), v_plus.end(), s) != v_plus.end() ||
           std::find(v_minus.begin(), v_minus.end(), s) != v_minus.end();
  }

  Vertex vertex_of(int s) const { return symbol_vertex(dynkin.family, s); }

  // Indexed like dynkin.vertices().
  std::vector<int> dim_vector() const {
    auto vs = dynkin.vertices();
    std::vector<int> d(vs.size(), 0);
    for (int s : symbols()) d[std::find(vs.begin(), vs.end(), vertex_of(s)) - vs.begin()]++;
    return d;
  }

  friend bool operator==(const BrickDiagram&, const BrickDiagram&) = default;
};

// One nonzero entry of an arrow action: the arrow sends <from> to coeff <to>.
struct Coefficient {
  int from;
  int to;
  int coeff;
};

inline std::pair<std::vector<int>, std::vector<int>> brick_symbol_sets(DynkinType t, const BrickParams& p) {
  if (t.family == Family::A) {
    std::vector<int> vp;
    for (int i = p.b; i <= p.a - 1; ++i) vp.push_back(i);
    return {{}, vp};
  }
  return v_sets_D(p.a, p.b, p.c);
}

inline std::vector<Coefficient> brick_coefficients(DynkinType t, const BrickParams& p) {
  auto [vm, vp] = brick_symbol_sets(t, p);
  const ValueSet& R = p.R;
  auto in = [](const std::vector<int>& v, int s) { return std::find(v.begin(), v.end(), s) != v.end(); };
  auto has = [&](int s) { return in(vp, s) || in(vm, s); };
  auto inR = [&](int s) { return R.count(s) > 0; };
  std::vector<Coefficient> out;
  auto put = [&](int from, int to, int coeff) {
    if (coeff != 0 && has(from) && has(to)) out.push_back({from, to, coeff});
  };
  if (t.family == Family::A) {
    for (std::size_t k = 0; k + 1 < vp.size(); ++k) {
      int i = vp[k];
      if (inR(i + 1)) put(i, i + 1, 1);
      else put(i + 1, i, 1);
    }
    return out;
  }
  const int r = p.r;
  // The beta term into <-2> is also taken at i = max V+, which matters when
  // V+ = {c}; ranging only over V+ minus its maximum loses the arrow c -> -2.
  for (std::size_t x = 0; x < vp.size(); ++x) {
    int i = vp[x], k = std::abs(i);
    put(k + 1, i, inR(k + 1) ? 0 : 1);
    put(k + 1, -i, (k == 1 && r == 0 && !inR(2)) ? 1 : 0);
    put(i, k + 1, inR(k + 1) ? 1 : 0);
    put(i, -(k + 1), (k == 1 && r == 0 && !inR(-2)) ? -1 : 0);
  }
  for (std::size_t x = 0; x < vm.size(); ++x) {
    int i = vm[x], k = std::abs(i);
    if (x + 1 < vm.size()) {
      put(-(k + 1), -i, (k <= r && inR(k + 1)) ? 1 : 0);
      put(-(k + 1), i, inR(-(k + 1)) ? 1 : 0);
    }
    put(i, k + 1, (k <= r && !inR(k + 1)) ? 1 : 0);
    int eta = k == r ? -1 : (!inR(-(k + 1)) ? 1 : 0);
    put(i, -(k + 1), eta);
  }
  return out;
}

inline BrickDiagram brick_diagram_from(DynkinType t, const BrickParams& p) {
  BrickDiagram g;
  g.dynkin = t;
  g.params = p;
  std::tie(g.v_minus, g.v_plus) = brick_symbol_sets(t, p);
  if (g.v_plus.empty()) throw ConsistencyError("brick with empty V+");
  for (const Coefficient& c : brick_coefficients(t, p)) g.arrows.emplace_back(c.from, c.to);
  std::sort(g.arrows.begin(), g.arrows.end());
  return g;
}

// Arrows drawn by the abbreviation rules alone, without the coefficient
// tables. Tests compare this with brick_diagram_from.
inline std::vector<std::pair<int, int>> diagram_arrows_by_rules(DynkinType t, const BrickParams& p) {
  auto [vm, vp] = brick_symbol_sets(t, p);
  auto in = [](const std::vector<int>& v, int s) { return std::find(v.begin(), v.end(), s) != v.end(); };
  auto has = [&](int s) { return in(vp, s) || in(vm, s); };
  auto inR = [&](int s) { return p.R.count(s) > 0; };
  std::vector<std::pair<int, int>> out;
  auto draw = [&](int x, int y) {
    if (has(x) && has(y)) out.emplace_back(x, y);
  };
  for (std::size_t k = 0; k + 1 < vp.size(); ++k) {
    int i = vp[k], j = std::abs(i) + 1;
    if (inR(j)) draw(i, j);
    else draw(j, i);
  }
  if (t.family == Family::D) {
    for (std::size_t k = 0; k + 1 < vm.size(); ++k) {
      int i = vm[k], j = -(std::abs(i) + 1);
      if (inR(j)) draw(j, i);
      else draw(i, j);
    }
    if (p.r >= 1) {
      for (int i : vm) {
        int k = std::abs(i);
        if (k > p.r) continue;
        if (inR(k + 1)) draw(-(k + 1), -i);
        else draw(i, k + 1);
      }
    } else {
      if (!inR(2)) draw(2, -p.c);
      if (!inR(-2)) draw(p.c, -2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Representation brick_rep_from(DynkinType t, const BrickParams& p) {
  auto q = quiver_of(t);
  BrickDiagram g = brick_diagram_from(t, p);
  const auto& vs = q->vertices();
  std::vector<int> dims(vs.size(), 0);
  std::map<int, int> pos;  // symbol -> index inside its vertex space
  for (int s : g.symbols()) pos[s] = dims[q->vertex_pos(g.vertex_of(s))]++;
  Representation M(q, dims);
  for (const Coefficient& c : brick_coefficients(t, p)) {
    int arrow = q->arrow_between(g.vertex_of(c.from), g.vertex_of(c.to));
    if (arrow < 0) throw ConsistencyError("no arrow between the vertices of symbols " + std::to_string(c.from) +
                                          " and " + std::to_string(c.to));
    M.mat_mut(arrow)(pos[c.to], pos[c.from]) += c.coeff;
  }
  M.check_relations("brick");
  return M;
}

inline BrickDiagram brick_diagram(const CoxeterElement& w) {
  BrickDiagram g = brick_diagram_from(w.dynkin(), brick_params(w));
  g.window = w.window();
  g.type_l = *join_irreducible_type(w);
  return g;
}

inline BrickDiagram brick_diagram_A(const CoxeterElement& w) {
  if (w.dynkin().family != Family::A) throw InputError("brick_diagram_A needs a type A element");
  return brick_diagram(w);
}

inline BrickDiagram brick_diagram_D(const CoxeterElement& w) {
  if (w.dynkin().family != Family::D) throw InputError("brick_diagram_D needs a type D element");
  return brick_diagram(w);
}

inline Representation brick_rep(const CoxeterElement& w) { return brick_rep_from(w.dynkin(), brick_params(w)); }

inline Representation brick_rep_A(const CoxeterElement& w) {
  if (w.dynkin().family != Family::A) throw InputError("brick_rep_A needs a type A element");
  return brick_rep(w);
}

inline Representation brick_rep_D(const CoxeterElement& w) {
  if (w.dynkin().family != Family::D) throw InputError("brick_rep_D needs a type D element");
  return brick_rep(w);
}

// Text rendering. V- sits on the upper row and V+ on the lower row, each
// symbol in the column |s|. Arrows between neighbouring columns of one row
// are drawn inline; arrows between the rows are drawn on a middle line.
struct RenderFrame {
  int lo = 1;
  int hi = 1;
  int width = 1;
};

inline RenderFrame render_frame(const std::vector<const BrickDiagram*>& gs) {
  RenderFrame f{0, 0, 1};
  bool first = true;
  for (const BrickDiagram* g : gs)
    for (int s : g->symbols()) {
      int k = std::abs(s);
      f.lo = first ? k : std::min(f.lo, k);
      f.hi = first ? k : std::max(f.hi, k);
      f.width = std::max(f.width, static_cast<int>(std::to_string(s).size()));
      first = false;
    }
  return f;
}

inline std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

inline std::vector<std::string> render_lines(const BrickDiagram& g, const RenderFrame& f) {
  auto has_arrow = [&](int x, int y) {
    return std::find(g.arrows.begin(), g.arrows.end(), std::make_pair(x, y)) != g.arrows.end();
  };
  auto at = [&](const std::vector<int>& row, int k) -> std::optional<int> {
    for (int s : row)
      if (std::abs(s) == k) return s;
    return std::nullopt;
  };
  auto cell = [&](std::optional<int> s) {
    std::string t = s ? std::to_string(*s) : "";
    return std::string(f.width - t.size(), ' ') + t;
  };
  auto row_line = [&](const std::vector<int>& row) {
    std::string line;
    for (int k = f.lo; k <= f.hi; ++k) {
      line += cell(at(row, k));
      if (k == f.hi) break;
      auto x = at(row, k), y = at(row, k + 1);
      if (x && y && has_arrow(*x, *y)) line += " → ";
      else if (x && y && has_arrow(*y, *x)) line += " ← ";
      else line += "   ";
    }
    return rtrim(line);
  };
  std::vector<std::string> out;
  if (g.v_minus.empty()) {
    out.push_back(row_line(g.v_plus));
    return out;
  }
  std::string mid;
  for (int k = f.lo; k <= f.hi; ++k) {
    mid += std::string(f.width, ' ');
    if (k == f.hi) break;
    auto u0 = at(g.v_minus, k), u1 = at(g.v_minus, k + 1);
    auto l0 = at(g.v_plus, k), l1 = at(g.v_plus, k + 1);
    std::string left = " ", right = " ";
    if (u0 && l1 && has_arrow(*u0, *l1)) left = "↘";
    if (u0 && l1 && has_arrow(*l1, *u0)) left = "↖";
    if (l0 && u1 && has_arrow(*l0, *u1)) right = "↗";
    if (l0 && u1 && has_arrow(*u1, *l0)) right = "↙";
    mid += left + " " + right;
  }
  out.push_back(row_line(g.v_minus));
  out.push_back(rtrim(mid));
  out.push_back(row_line(g.v_plus));
  return out;
}

inline std::string render_text(const BrickDiagram& g) {
  std::string s;
  for (const auto& line : render_lines(g, render_frame({&g}))) s += line + "\n";
  return s;
}

}  // namespace preproj
