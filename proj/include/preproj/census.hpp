#pragma once
// Shapes and characters of type D join-irreducibles, per-shape counts, the
// global brick counts, and the census grouped by shape with its line format.

#include <compare>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bricks.hpp"

namespace preproj {

struct ShapeSigma {
  int a = 0;
  int b = 0;
  int rp = 0;

  friend auto operator<=>(const ShapeSigma&, const ShapeSigma&) = default;
};

inline std::string format_sigma(const ShapeSigma& s) {
  return std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.rp);
}

inline void require_type_D(const CoxeterElement& w, const char* what) {
  if (w.dynkin().family != Family::D) throw InputError(std::string(what) + " is defined for type D only");
}

inline ShapeSigma sigma(const CoxeterElement& w) {
  require_type_D(w, "sigma");
  BrickParams p = brick_params(w);
  int rp = p.b >= -1 ? 0 : std::min(p.r, -p.b - 1);
  return {p.a, p.b, rp};
}

// Entry i-1 is 0, 1 or 2 as {i,-i} meets R in nothing, -i, or i.
inline std::vector<int> chi(const CoxeterElement& w) {
  require_type_D(w, "chi");
  ValueSet R = r_set(w);
  std::vector<int> x(w.size(), 0);
  for (int i = 1; i <= w.size(); ++i) x[i - 1] = R.count(i) ? 2 : R.count(-i) ? 1 : 0;
  return x;
}

// 'a', 'b' or 'c' for the condition the shape satisfies at rank n, or 0.
inline char shape_condition(const ShapeSigma& s, int n) {
  const int a = s.a, b = s.b, rp = s.rp;
  if (a < 2 || a > n) return 0;
  if (b >= -1 && b < a && b != 0 && rp == 0) return 'a';
  if (b > -a && b <= -2 && rp >= 0 && rp <= -b - 1) return 'b';
  if (b >= -n && b < -a && rp >= 0 && rp <= a - 2) return 'c';
  return 0;
}

inline std::vector<ShapeSigma> feasible_shapes(int n) {
  std::vector<ShapeSigma> out;
  for (int a = 2; a <= n; ++a)
    for (int b = -n; b < a; ++b)
      for (int rp = 0; rp <= n; ++rp)
        if (shape_condition({a, b, rp}, n)) out.push_back({a, b, rp});
  return out;
}

inline void require_feasible(const ShapeSigma& s, int n) {
  if (!shape_condition(s, n))
    throw DomainError("shape (" + format_sigma(s) + ") is not feasible for rank " + std::to_string(n));
}

inline long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

inline long long shape_count(const ShapeSigma& s, int n) {
  require_feasible(s, n);
  int x = std::max(s.a, std::abs(s.b)), y = std::min(s.a, std::abs(s.b));
  long long tail = ipow(2, x - y - 1);
  if (s.b >= -1) return tail;
  return ipow(2, s.rp) * ipow(3, std::max(y - s.rp - 2, 0)) * tail;
}

// The sets X_i whose product is chi of the elements of a given shape.
inline std::vector<std::set<int>> chi_factors(const ShapeSigma& s, int n) {
  char cond = shape_condition(s, n);
  if (!cond) require_feasible(s, n);
  const int a = s.a, b = s.b, B = std::abs(b), rp = s.rp;
  std::vector<std::set<int>> X(n);
  for (int i = 1; i <= n; ++i) {
    std::set<int>& x = X[i - 1];
    if (cond == 'a') {
      if (i < B) x = {0};
      else if (i == B) x = b == -1 ? std::set<int>{1} : std::set<int>{2};
      else if (i < a) x = {0, 2};
      else if (i == a) x = {0};
      else x = {2};
    } else if (cond == 'b') {
      if (i <= rp) x = {1, 2};
      else if (i == rp + 1 && i != B) x = {0};
      else if (i < B) x = {0, 1, 2};
      else if (i == B) x = {1};
      else if (i < a) x = {0, 2};
      else if (i == a) x = {0};
      else x = {2};
    } else {
      if (i <= rp) x = {1, 2};
      else if (i == rp + 1) x = {0};
      else if (i < a) x = {0, 1, 2};
      else if (i == a) x = {0};
      else if (i < B) x = {1, 2};
      else if (i == B) x = {1};
      else x = {2};
    }
  }
  return X;
}

// Number of bricks over the preprojective algebra, by formula.
inline long long global_count(DynkinType t) {
  const int n = t.rank;
  if (t.family == Family::A) return ipow(2, n + 1) - n - 2;
  return ipow(3, n) - n * ipow(2, n - 1) - n - 1;
}

inline long long enumerated_jirr_count(DynkinType t, std::size_t cap = kDefaultEnumerationCap) {
  long long k = 0;
  for (const auto& w : enumerate_group(t, cap)) k += is_join_irreducible(w);
  return k;
}

struct CensusEntry {
  CoxeterElement w;
  BrickDiagram diagram;
};

using Census = std::map<ShapeSigma, std::vector<CensusEntry>>;

// Join-irreducibles grouped by shape, each group ordered by chi.
inline Census census(DynkinType t, std::size_t cap = kDefaultEnumerationCap) {
  if (t.family != Family::D) throw InputError("census is defined for type D only");
  std::map<ShapeSigma, std::vector<std::pair<std::vector<int>, CoxeterElement>>> groups;
  for (const auto& w : enumerate_group(t, cap))
    if (is_join_irreducible(w)) groups[sigma(w)].emplace_back(chi(w), w);
  Census out;
  for (auto& [s, ws] : groups) {
    std::sort(ws.begin(), ws.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [key, w] : ws) out[s].push_back({w, brick_diagram(w)});
  }
  return out;
}

// One line per element: "sigma=a,b,r' window=... symbols=... arrows=s>t;...".
struct FixtureEntry {
  ShapeSigma sigma;
  std::vector<int> window;
  std::vector<int> symbols;
  std::vector<std::pair<int, int>> arrows;  // sorted

  friend bool operator==(const FixtureEntry&, const FixtureEntry&) = default;
};

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string format_fixture_line(const FixtureEntry& e) {
  std::vector<std::string> arrows;
  for (auto [x, y] : e.arrows) arrows.push_back(std::to_string(x) + ">" + std::to_string(y));
  std::sort(arrows.begin(), arrows.end());
  std::string a;
  for (std::size_t i = 0; i < arrows.size(); ++i) a += (i ? ";" : "") + arrows[i];
  return "sigma=" + format_sigma(e.sigma) + " window=" + join_ints(e.window) + " symbols=" + join_ints(e.symbols) +
         " arrows=" + a;
}

inline FixtureEntry parse_fixture_line(const std::string& line) {
  FixtureEntry e;
  std::istringstream in(line);
  std::string field;
  std::set<std::string> seen;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw InputError("fixture field without '=': " + field);
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    seen.insert(key);
    if (key == "sigma") {
      auto v = parse_int_list(val);
      if (v.size() != 3) throw InputError("sigma needs three integers: " + val);
      e.sigma = {v[0], v[1], v[2]};
    } else if (key == "window") {
      e.window = parse_int_list(val);
    } else if (key == "symbols") {
      e.symbols = parse_int_list(val);
    } else if (key == "arrows") {
      std::istringstream as(val);
      std::string item;
      while (std::getline(as, item, ';')) {
        if (item.empty()) continue;
        auto gt = item.find('>');
        if (gt == std::string::npos) throw InputError("bad arrow '" + item + "'");
        auto s = parse_int_list(item.substr(0, gt)), t = parse_int_list(item.substr(gt + 1));
        if (s.size() != 1 || t.size() != 1) throw InputError("bad arrow '" + item + "'");
        e.arrows.emplace_back(s[0], t[0]);
      }
      std::sort(e.arrows.begin(), e.arrows.end());
    } else {
      throw InputError("unknown fixture field '" + key + "'");
    }
  }
  for (const char* k : {"sigma", "window", "symbols", "arrows"})
    if (!seen.count(k)) throw InputError(std::string("fixture line lacks '") + k + "'");
  return e;
}

inline std::vector<FixtureEntry> parse_fixture(std::istream& in) {
  std::vector<FixtureEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_fixture_line(line));
  }
  return out;
}

inline std::vector<FixtureEntry> census_entries(const Census& c) {
  std::vector<FixtureEntry> out;
  for (const auto& [s, es] : c)
    for (const auto& e : es) out.push_back({s, e.w.window(), e.diagram.symbols(), e.diagram.arrows});
  return out;
}

// Differences between an expected and a generated list, in order. Symbols
// and arrows are compared as sets.
inline std::vector<std::string> diff_fixture(const std::vector<FixtureEntry>& expected,
                                             const std::vector<FixtureEntry>& actual) {
  std::vector<std::string> out;
  const std::size_t m = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (i >= expected.size()) {
      out.push_back("extra entry: " + format_fixture_line(actual[i]));
      continue;
    }
    if (i >= actual.size()) {
      out.push_back("missing entry: " + format_fixture_line(expected[i]));
      continue;
    }
    const auto& x = expected[i];
    const auto& y = actual[i];
    std::set<int> sx(x.symbols.begin(), x.symbols.end()), sy(y.symbols.begin(), y.symbols.end());
    std::set<std::pair<int, int>> ax(x.arrows.begin(), x.arrows.end()), ay(y.arrows.begin(), y.arrows.end());
    if (x.sigma != y.sigma || x.window != y.window || sx != sy || ax != ay)
      out.push_back("line " + std::to_string(i + 1) + ": expected " + format_fixture_line(x) + ", got " +
                    format_fixture_line(y));
  }
  return out;
}

}  // namespace preproj
