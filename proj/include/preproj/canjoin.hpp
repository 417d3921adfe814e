#pragma once
// Canonical join representations computed from the window directly, and the
// reconstruction of a join-irreducible element from its R-set.

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "coxeter.hpp"

namespace preproj {

using ValueSet = std::set<int>;

// [x,y] without 0; empty when x > y.
inline ValueSet interval(int x, int y) {
  ValueSet s;
  for (int i = x; i <= y; ++i)
    if (i != 0) s.insert(i);
  return s;
}

inline ValueSet set_union(const ValueSet& x, const ValueSet& y) {
  ValueSet s = x;
  s.insert(y.begin(), y.end());
  return s;
}

inline ValueSet set_intersection(const ValueSet& x, const ValueSet& y) {
  ValueSet s;
  for (int v : x)
    if (y.count(v)) s.insert(v);
  return s;
}

inline ValueSet set_minus(const ValueSet& x, const ValueSet& y) {
  ValueSet s;
  for (int v : x)
    if (!y.count(v)) s.insert(v);
  return s;
}

inline ValueSet negated(const ValueSet& x) {
  ValueSet s;
  for (int v : x) s.insert(-v);
  return s;
}

inline ValueSet plus_minus(const ValueSet& x) { return set_union(x, negated(x)); }

inline ValueSet abs_values(const ValueSet& x) {
  ValueSet s;
  for (int v : x) s.insert(std::abs(v));
  return s;
}

inline std::string format_set(const ValueSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Values w([from, N]).
inline ValueSet values_from(const CoxeterElement& w, int from) {
  ValueSet s;
  for (int i = from; i <= w.size(); ++i) s.insert(w(i));
  return s;
}

inline Vertex require_join_irreducible(const CoxeterElement& w) {
  auto l = join_irreducible_type(w);
  if (!l) throw DomainError(format_window(w) + " is not join-irreducible");
  return *l;
}

// R(w) = w([|l|+1, N]) of a join-irreducible w of type l.
inline ValueSet r_set(const CoxeterElement& w) {
  return values_from(w, std::abs(require_join_irreducible(w)) + 1);
}

inline CoxeterElement jirr_from_R(DynkinType t, const ValueSet& R) {
  const int N = t.window_size();
  auto fail = [&]() -> CoxeterElement {
    throw DomainError(format_set(R) + " is not an R-set of any join-irreducible in " + t.name());
  };
  if (R.empty()) return fail();
  std::vector<char> used(N + 1, 0);
  int negatives = 0;
  for (int v : R) {
    int m = std::abs(v);
    if (m < 1 || m > N || used[m]) return fail();
    if (v < 0) {
      if (t.family == Family::A) return fail();
      ++negatives;
    }
    used[m] = 1;
  }
  std::vector<int> left;
  for (int m = 1; m <= N; ++m)
    if (!used[m]) left.push_back(m);
  if (left.empty()) return fail();
  if (t.family == Family::D && negatives % 2 != 0) left.front() = -left.front();
  std::vector<int> win = left;
  win.insert(win.end(), R.begin(), R.end());
  CoxeterElement w(t, std::move(win));
  if (descents(w).size() != 1) return fail();
  return w;
}

enum class JoinCase { None, A, B };

inline char case_letter(JoinCase c) {
  return c == JoinCase::A ? 'A' : c == JoinCase::B ? 'B' : '-';
}

struct DescentDatum {
  Vertex d = 0;
  int a = 0;
  int b = 0;
  ValueSet X;
  JoinCase jcase = JoinCase::None;
  ValueSet R;
};

inline DescentDatum descent_datum_A(const CoxeterElement& w, Vertex d) {
  const int N = w.size();
  DescentDatum dd;
  dd.d = d;
  dd.a = w(d);
  dd.b = w(d + 1);
  dd.X = values_from(w, d + 1);
  dd.R = set_union(set_intersection(interval(dd.b, dd.a - 1), dd.X), interval(dd.a + 1, N));
  return dd;
}

inline DescentDatum descent_datum_D(const CoxeterElement& w, Vertex d) {
  const int n = w.size();
  const int k = std::abs(d);
  DescentDatum dd;
  dd.d = d;
  dd.a = w(d);
  dd.b = w(k + 1);
  dd.X = values_from(w, k + 1);
  const int a = dd.a, b = dd.b;
  const ValueSet& X = dd.X;
  bool left_in_range = true;
  const ValueSet range = plus_minus(interval(a, n));
  for (int i = 1; i <= k; ++i) left_in_range = left_in_range && range.count(w(i));
  if (a + b < 0 && left_in_range) {
    dd.jcase = JoinCase::A;
    if (a > 0) {
      dd.R = set_union(ValueSet{-a}, set_intersection(plus_minus(interval(1, a - 1)), X));
      dd.R = set_union(dd.R, set_minus(interval(a + 1, -b - 1), negated(X)));
      dd.R = set_union(dd.R, interval(-b + 1, n));
    } else {
      dd.R = set_union(set_minus(interval(-a, -b - 1), negated(X)), interval(-b + 1, n));
    }
  } else {
    dd.jcase = JoinCase::B;
    dd.R = set_intersection(interval(b, a - 1), X);
    if (a + b > 0) {
      dd.R = set_union(dd.R, interval(a + 1, n));
    } else {
      dd.R = set_union(dd.R, set_minus(interval(a + 1, -b - 1), negated(X)));
      dd.R = set_union(dd.R, interval(-b + 1, n));
    }
  }
  return dd;
}

// Absolute values of the left window of w_d, read off from (a_d, b_d, X_d).
inline ValueSet left_abs_values_D(const DescentDatum& dd) {
  const int a = dd.a, b = dd.b;
  const ValueSet& X = dd.X;
  if (dd.jcase == JoinCase::A) {
    if (a > 0) return set_intersection(interval(a + 1, -b), negated(X));
    return set_union(interval(1, -a - 1), set_intersection(interval(-a + 1, -b), negated(X)));
  }
  if (b > 0) return set_union(interval(1, b - 1), set_minus(interval(b + 1, a), X));
  if (a + b > 0)
    return set_union(set_minus(interval(1, -b - 1), plus_minus(X)), set_minus(interval(-b + 1, a), X));
  return set_minus(interval(1, a), plus_minus(X));
}

inline ValueSet left_abs_values(const CoxeterElement& w) {
  ValueSet s;
  int l = std::abs(require_join_irreducible(w));
  for (int i = 1; i <= l; ++i) s.insert(std::abs(w(i)));
  return s;
}

// One datum per descent, ascending in d.
inline std::vector<DescentDatum> descent_data(const CoxeterElement& w) {
  std::vector<DescentDatum> out;
  for (Vertex d : descents(w))
    out.push_back(w.dynkin().family == Family::A ? descent_datum_A(w, d) : descent_datum_D(w, d));
  return out;
}

struct JoinPart {
  DescentDatum datum;
  CoxeterElement element;
};

// The canonical joinands w_d, ordered by descent. In type D the left window
// of each w_d is checked against the closed form for its absolute values.
inline std::vector<JoinPart> canonical_join_parts(const CoxeterElement& w) {
  std::vector<JoinPart> out;
  for (DescentDatum& dd : descent_data(w)) {
    CoxeterElement wd = jirr_from_R(w.dynkin(), dd.R);
    if (w.dynkin().family == Family::D && left_abs_values(wd) != left_abs_values_D(dd))
      throw ConsistencyError("left window of " + format_window(wd) + " disagrees with the closed form");
    out.push_back({std::move(dd), std::move(wd)});
  }
  return out;
}

inline std::vector<CoxeterElement> cjr_direct(const CoxeterElement& w) {
  std::vector<CoxeterElement> out;
  for (auto& p : canonical_join_parts(w)) out.push_back(std::move(p.element));
  return out;
}

inline std::vector<CoxeterElement> cjr_direct_A(const CoxeterElement& w) {
  if (w.dynkin().family != Family::A) throw InputError("cjr_direct_A needs a type A element");
  return cjr_direct(w);
}

inline std::vector<CoxeterElement> cjr_direct_D(const CoxeterElement& w) {
  if (w.dynkin().family != Family::D) throw InputError("cjr_direct_D needs a type D element");
  return cjr_direct(w);
}

}  // namespace preproj
