#pragma once
// Plain-text reports: element summaries, the w_d decomposition table, and
// DOT output for brick diagrams.

#include <sstream>
#include <string>
#include <vector>

#include "census.hpp"
#include "semibricks.hpp"

namespace preproj {

// Columns padded to their widest cell; numeric columns right-aligned.
inline std::string format_table(const std::vector<std::vector<std::string>>& rows, const std::vector<bool>& right) {
  std::vector<std::size_t> width(right.size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string pad(width[c] - r[c].size(), ' ');
      line += c ? "  " : "";
      line += right[c] ? pad + r[c] : r[c] + pad;
    }
    out += rtrim(line) + "\n";
  }
  return out;
}

inline std::string format_paren_window(const CoxeterElement& w) { return "(" + format_window(w) + ")"; }

// One row per descent: d, a_d, b_d, the case in type D, R(w_d), w_d.
inline std::string decompose_table(const CoxeterElement& w) {
  const bool D = w.dynkin().family == Family::D;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> right;
  if (D) {
    rows.push_back({"d", "a_d", "b_d", "case", "R(w_d)", "w_d"});
    right = {true, true, true, false, false, false};
  } else {
    rows.push_back({"d", "a_d", "b_d", "R(w_d)", "w_d"});
    right = {true, true, true, false, false};
  }
  for (const JoinPart& p : canonical_join_parts(w)) {
    const DescentDatum& dd = p.datum;
    std::vector<std::string> r{std::to_string(dd.d), std::to_string(dd.a), std::to_string(dd.b)};
    if (D) r.push_back(std::string(1, case_letter(dd.jcase)));
    r.push_back(format_set(dd.R));
    r.push_back(format_paren_window(p.element));
    rows.push_back(r);
  }
  return format_table(rows, right);
}

inline std::string element_summary(const CoxeterElement& w) {
  std::ostringstream os;
  os << w.dynkin().name() << " " << format_paren_window(w) << "\n";
  os << "length: " << length(w) << "\n";
  os << "inversions: " << inversions(w).size() << "\n";
  auto des = descents(w);
  os << "descents: ";
  if (des.empty()) os << "none";
  for (std::size_t i = 0; i < des.size(); ++i) os << (i ? ", " : "") << des[i];
  os << "\n";
  if (auto l = join_irreducible_type(w)) {
    os << "jirr of type " << *l << "\n";
    if (w.dynkin().family == Family::D) {
      os << "sigma: (" << format_sigma(sigma(w)) << ")\n";
      auto x = chi(w);
      os << "chi: (" << join_ints(x) << ")\n";
    }
  } else {
    os << "not join-irreducible\n";
  }
  return os.str();
}

inline std::string diagram_dot(const BrickDiagram& g) {
  std::ostringstream os;
  os << "digraph brick {\n";
  for (int s : g.symbols()) os << "  \"" << s << "\";\n";
  for (auto [x, y] : g.arrows) os << "  \"" << x << "\" -> \"" << y << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace preproj
