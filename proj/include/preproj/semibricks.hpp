#pragma once
// The semibrick S(w) of an arbitrary element: one brick per descent, either
// through the canonical joinands w_d or directly from the descent data.

#include <optional>
#include <string>
#include <vector>

#include "bricks.hpp"
#include "weak_lattice.hpp"

namespace preproj {

struct Summand {
  Vertex d = 0;
  BrickDiagram diagram;
  Representation rep;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct Semibrick {
  CoxeterElement w;
  std::vector<Summand> summands;  // ascending in d

  std::vector<Representation> reps() const {
    std::vector<Representation> out;
    for (const auto& s : summands) out.push_back(s.rep);
    return out;
  }

  friend bool operator==(const Semibrick&, const Semibrick&) = default;
};

// Through the canonical join representation: S(w) = sum of S(w_d).
inline Semibrick semibrick(const CoxeterElement& w) {
  Semibrick s{w, {}};
  for (const JoinPart& p : canonical_join_parts(w))
    s.summands.push_back({p.datum.d, brick_diagram(p.element), brick_rep(p.element)});
  return s;
}

// Brick parameters of S_d read off from (a_d, b_d, R_d). In type D case (A)
// the symbol sets come from (-b_d, -a_d).
inline BrickParams summand_params(DynkinType t, const DescentDatum& dd) {
  if (t.family == Family::D && dd.jcase == JoinCase::A) return brick_params_from(-dd.b, -dd.a, dd.R);
  BrickParams p = brick_params_from(dd.a, dd.b, dd.R);
  if (t.family == Family::A) {
    p.r = 0;
    p.c = 1;
  }
  return p;
}

// Directly from the descent data, without constructing w_d.
inline Semibrick semibrick_direct(const CoxeterElement& w) {
  Semibrick s{w, {}};
  const DynkinType& t = w.dynkin();
  for (const DescentDatum& dd : descent_data(w)) {
    BrickParams p = summand_params(t, dd);
    s.summands.push_back({dd.d, brick_diagram_from(t, p), brick_rep_from(t, p)});
  }
  return s;
}

struct SemibrickReport {
  std::vector<bool> is_brick;
  std::vector<std::vector<int>> hom;  // hom[i][j] = dim Hom(S_i, S_j)
  std::vector<bool> positive_root;
  std::optional<bool> join_matches;

  bool ok() const {
    for (bool b : is_brick)
      if (!b) return false;
    for (bool b : positive_root)
      if (!b) return false;
    for (std::size_t i = 0; i < hom.size(); ++i)
      for (std::size_t j = 0; j < hom.size(); ++j)
        if (i != j && hom[i][j] != 0) return false;
    return join_matches.value_or(true);
  }

  // Human-readable list of failed checks.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < is_brick.size(); ++i) {
      if (!is_brick[i]) out.push_back("summand " + std::to_string(i) + " is not a brick");
      if (!positive_root[i]) out.push_back("summand " + std::to_string(i) + " has no positive-root dimension vector");
      for (std::size_t j = 0; j < hom.size(); ++j)
        if (i != j && hom[i][j] != 0)
          out.push_back("Hom(" + std::to_string(i) + "," + std::to_string(j) + ") has dimension " +
                        std::to_string(hom[i][j]));
    }
    if (join_matches == false) out.push_back("join of the summands' elements differs from w");
    return out;
  }
};

inline SemibrickReport verify_summands(const std::vector<Representation>& reps) {
  SemibrickReport r;
  const std::size_t m = reps.size();
  r.hom.assign(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) r.hom[i][j] = hom_dim(reps[i], reps[j]);
    r.is_brick.push_back(r.hom[i][i] == 1);
    r.positive_root.push_back(is_positive_root(reps[i].dynkin(), reps[i].dims()));
  }
  return r;
}

// With a poset of the group, also recomputes the join of the summands'
// join-irreducibles and compares it with w.
inline SemibrickReport verify_semibrick(const Semibrick& s, const GroupPoset* poset = nullptr) {
  SemibrickReport r = verify_summands(s.reps());
  if (poset) {
    std::vector<CoxeterElement> parts;
    for (const auto& x : s.summands) {
      if (!x.diagram.window) {
        parts.push_back(jirr_from_R(s.w.dynkin(), x.diagram.params.R));
      } else {
        parts.emplace_back(s.w.dynkin(), *x.diagram.window);
      }
    }
    r.join_matches = poset->join_all(parts) == s.w;
  }
  return r;
}

// Stacked text rendering on a shared column range, one block per descent.
inline std::string render_text(const Semibrick& s) {
  std::vector<const BrickDiagram*> gs;
  for (const auto& x : s.summands) gs.push_back(&x.diagram);
  if (gs.empty()) return "(zero module)\n";
  RenderFrame f = render_frame(gs);
  std::string out;
  for (const auto& x : s.summands) {
    out += "S_" + std::to_string(x.d) + ":\n";
    for (const auto& line : render_lines(x.diagram, f)) out += rtrim("  " + line) + "\n";
  }
  return out;
}

}  // namespace preproj
