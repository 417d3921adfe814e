#pragma once
// Weyl groups of types A and D as (signed) permutation groups in window
// notation. Type A_n acts on [1,n+1]; type D_n acts on ±[1,n] with
// w(-i) = -w(i) and an even number of negative window entries.

#include <algorithm>
#include <bit>
#include <bitset>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace preproj {

enum class Family { A, D };

using Vertex = int;

inline constexpr std::size_t kDefaultEnumerationCap = 50000;
inline constexpr std::size_t kMaxReflections = 128;

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  static DynkinType make(Family f, int n) {
    if (f == Family::A && n < 1) throw InputError("type A needs rank >= 1");
    if (f == Family::D && n < 2) throw InputError("type D needs rank >= 2");
    if (n > 30) throw InputError("rank " + std::to_string(n) + " is too large");
    return DynkinType{f, n};
  }

  // Number of window entries.
  int window_size() const { return family == Family::A ? rank + 1 : rank; }

  // [1,n] for A_n; {-1} ∪ [1,n-1] for D_n, in ascending order.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> v;
    if (family == Family::D) v.push_back(-1);
    int hi = family == Family::A ? rank : rank - 1;
    for (int i = 1; i <= hi; ++i) v.push_back(i);
    return v;
  }

  bool has_vertex(Vertex i) const {
    if (family == Family::A) return i >= 1 && i <= rank;
    return i == -1 || (i >= 1 && i <= rank - 1);
  }

  // Edges of the Dynkin diagram, as unordered vertex pairs.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    if (family == Family::A) {
      for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
    } else if (rank >= 3) {
      e.emplace_back(-1, 2);
      e.emplace_back(1, 2);
      for (int i = 2; i + 1 <= rank - 1; ++i) e.emplace_back(i, i + 1);
    }
    return e;
  }

  std::size_t reflection_count() const {
    std::size_t n = static_cast<std::size_t>(rank);
    return family == Family::A ? n * (n + 1) / 2 : n * (n - 1);
  }

  std::string name() const {
    return (family == Family::A ? "A" : "D") + std::to_string(rank);
  }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

inline Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  throw InputError("unknown type '" + std::string(s) + "' (expected A or D)");
}

// Inversion datum (a,b): a > b >= 1 in type A, a > |b| in type D.
struct Reflection {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

inline std::string to_string(const Reflection& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

class CoxeterElement {
 public:
  CoxeterElement() = default;

  CoxeterElement(DynkinType t, std::vector<int> window)
      : type_(t), win_(std::move(window)) {
    validate();
  }

  static CoxeterElement identity(DynkinType t) {
    std::vector<int> w(t.window_size());
    for (int i = 0; i < t.window_size(); ++i) w[i] = i + 1;
    return CoxeterElement(t, std::move(w));
  }

  const DynkinType& dynkin() const { return type_; }
  const std::vector<int>& window() const { return win_; }
  int size() const { return static_cast<int>(win_.size()); }

  // w(i) for i in [1,N], and w(-i) = -w(i) in type D.
  int operator()(int i) const {
    int v = win_[std::abs(i) - 1];
    return i < 0 ? -v : v;
  }

  // w^{-1}(x), extended by w^{-1}(-x) = -w^{-1}(x).
  int inverse_at(int x) const {
    for (int i = 0; i < size(); ++i) {
      if (win_[i] == x) return i + 1;
      if (win_[i] == -x) return -(i + 1);
    }
    throw DomainError("value " + std::to_string(x) + " not in range");
  }

  CoxeterElement inverse() const {
    std::vector<int> w(win_.size());
    for (int i = 0; i < size(); ++i) {
      int v = win_[i];
      w[std::abs(v) - 1] = v < 0 ? -(i + 1) : i + 1;
    }
    return CoxeterElement(type_, std::move(w));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (win_[i] != i + 1) return false;
    return true;
  }

  friend bool operator==(const CoxeterElement& x, const CoxeterElement& y) {
    return x.type_ == y.type_ && x.win_ == y.win_;
  }
  friend bool operator<(const CoxeterElement& x, const CoxeterElement& y) {
    return x.win_ < y.win_;
  }

 private:
  void validate() const {
    const int n = type_.window_size();
    if (size() != n)
      throw InputError("window has " + std::to_string(size()) + " entries, " +
                       type_.name() + " needs " + std::to_string(n));
    std::vector<char> seen(n + 1, 0);
    int negatives = 0;
    for (int v : win_) {
      int m = std::abs(v);
      if (m < 1 || m > n || seen[m])
        throw InputError("window is not a " +
                         std::string(type_.family == Family::A ? "" : "signed ") +
                         "permutation of [1," + std::to_string(n) + "]");
      if (v < 0) {
        if (type_.family == Family::A)
          throw InputError("type A window entry " + std::to_string(v) + " is negative");
        ++negatives;
      }
      seen[m] = 1;
    }
    if (type_.family == Family::D && negatives % 2 != 0)
      throw InputError("type D window has an odd number of negative entries");
  }

  DynkinType type_{};
  std::vector<int> win_;
};

struct ElementHash {
  std::size_t operator()(const CoxeterElement& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.window()) h = (h ^ static_cast<std::size_t>(v + 64)) * 1099511628211ull;
    return h;
  }
};

inline std::string format_window(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

inline std::string format_window(const CoxeterElement& w) { return format_window(w.window()); }

// Comma-separated signed integers, whitespace around tokens allowed.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    std::string t = b == tok.npos ? std::string() : std::string(tok.substr(b, e - b + 1));
    std::size_t k = 0;
    if (k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
    bool ok = k < t.size() && t.size() - k <= 9;
    for (std::size_t q = k; ok && q < t.size(); ++q) ok = t[q] >= '0' && t[q] <= '9';
    if (!ok) throw InputError("bad token '" + t + "' in list '" + std::string(text) + "'");
    out.push_back(std::stoi(t));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline CoxeterElement parse_window(DynkinType t, std::string_view text) {
  return CoxeterElement(t, parse_int_list(text));
}

inline void require_same_type(const CoxeterElement& u, const CoxeterElement& v) {
  if (!(u.dynkin() == v.dynkin()))
    throw InputError("mismatched types " + u.dynkin().name() + " and " + v.dynkin().name());
}

// (uv)(i) = u(v(i)).
inline CoxeterElement multiply(const CoxeterElement& u, const CoxeterElement& v) {
  require_same_type(u, v);
  std::vector<int> w(v.size());
  for (int i = 1; i <= v.size(); ++i) w[i - 1] = u(v(i));
  return CoxeterElement(u.dynkin(), std::move(w));
}

inline CoxeterElement simple_reflection(DynkinType t, Vertex i) {
  if (!t.has_vertex(i))
    throw InputError("vertex " + std::to_string(i) + " is not in " + t.name());
  CoxeterElement e = CoxeterElement::identity(t);
  std::vector<int> w = e.window();
  if (i == -1) {
    w[0] = -2;
    w[1] = -1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return CoxeterElement(t, std::move(w));
}

// The element of a reflection: transposition (a b), or (-a -b)(a b) in type D.
inline CoxeterElement reflection_element(DynkinType t, const Reflection& r) {
  std::vector<int> w = CoxeterElement::identity(t).window();
  auto set = [&](int x, int y) {  // maps x to y, keeping w(-x) = -w(x)
    if (x > 0) w[x - 1] = y;
    else w[-x - 1] = -y;
  };
  set(r.a, r.b);
  set(r.b, r.a);
  return CoxeterElement(t, std::move(w));
}

inline std::vector<Reflection> inversions(const CoxeterElement& w) {
  std::vector<Reflection> out;
  const int N = w.size();
  if (w.dynkin().family == Family::A) {
    for (int a = 2; a <= N; ++a)
      for (int b = 1; b < a; ++b)
        if (w.inverse_at(a) < w.inverse_at(b)) out.push_back({a, b});
  } else {
    for (int a = 2; a <= N; ++a)
      for (int b = -(a - 1); b <= a - 1; ++b)
        if (b != 0 && w.inverse_at(a) < w.inverse_at(b)) out.push_back({a, b});
  }
  return out;
}

inline int length(const CoxeterElement& w) { return static_cast<int>(inversions(w).size()); }

using InversionSet = std::bitset<kMaxReflections>;

inline std::size_t reflection_index(DynkinType t, const Reflection& r) {
  std::size_t a = static_cast<std::size_t>(r.a);
  if (t.family == Family::A) return (a - 1) * (a - 2) / 2 + static_cast<std::size_t>(r.b - 1);
  std::size_t base = (a - 1) * (a - 2);
  return r.b < 0 ? base + static_cast<std::size_t>(r.b + r.a - 1)
                 : base + static_cast<std::size_t>(r.a - 2 + r.b);
}

inline InversionSet inversion_set(const CoxeterElement& w) {
  if (w.dynkin().reflection_count() > kMaxReflections)
    throw CapacityError(w.dynkin().name() + " has more than " + std::to_string(kMaxReflections) +
                        " reflections");
  InversionSet s;
  for (const Reflection& r : inversions(w)) s.set(reflection_index(w.dynkin(), r));
  return s;
}

// Ascending; in type D the vertex -1 comes first.
inline std::vector<Vertex> descents(const CoxeterElement& w) {
  std::vector<Vertex> d;
  if (w.dynkin().family == Family::D && w.size() >= 2 && -w(1) > w(2)) d.push_back(-1);
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

inline bool weak_leq(const CoxeterElement& u, const CoxeterElement& w) {
  require_same_type(u, w);
  auto iu = inversions(u);
  auto iw = inversions(w);
  return std::includes(iw.begin(), iw.end(), iu.begin(), iu.end());
}

inline std::optional<Vertex> join_irreducible_type(const CoxeterElement& w) {
  auto d = descents(w);
  if (d.size() != 1) return std::nullopt;
  return d.front();
}

inline bool is_join_irreducible(const CoxeterElement& w) { return descents(w).size() == 1; }

inline Reflection normalize_reflection(int x, int y) {
  int big = std::abs(x) > std::abs(y) ? x : y;
  int small = big == x ? y : x;
  if (big < 0) {
    big = -big;
    small = -small;
  }
  return {big, small};
}

// w s_d w^{-1} for a descent d.
inline Reflection cover_reflection(const CoxeterElement& w, Vertex d) {
  if (d == -1) return normalize_reflection(-w(1), w(2));
  return normalize_reflection(w(d), w(d + 1));
}

inline std::vector<Reflection> cover_reflections(const CoxeterElement& w) {
  std::vector<Reflection> out;
  for (Vertex d : descents(w)) out.push_back(cover_reflection(w, d));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t group_order(DynkinType t) {
  std::uint64_t f = 1;
  for (int k = 2; k <= t.window_size(); ++k) f *= static_cast<std::uint64_t>(k);
  if (t.family == Family::D) f <<= (t.rank - 1);
  return f;
}

inline CoxeterElement longest_element(DynkinType t) {
  std::vector<int> w(t.window_size());
  if (t.family == Family::A) {
    for (int i = 0; i < t.window_size(); ++i) w[i] = t.window_size() - i;
  } else {
    for (int i = 0; i < t.rank; ++i) w[i] = -(i + 1);
    if (t.rank % 2 != 0) w[0] = 1;
  }
  return CoxeterElement(t, std::move(w));
}

// All elements, sorted lexicographically by window.
inline std::vector<CoxeterElement> enumerate_group(DynkinType t,
                                                   std::size_t cap = kDefaultEnumerationCap) {
  std::uint64_t order = group_order(t);
  if (t.rank > 12 || order > cap)
    throw CapacityError(t.name() + " has " + std::to_string(order) +
                        " elements, above the enumeration cap " + std::to_string(cap));
  std::vector<CoxeterElement> out;
  out.reserve(order);
  std::vector<int> perm(t.window_size());
  for (int i = 0; i < t.window_size(); ++i) perm[i] = i + 1;
  do {
    if (t.family == Family::A) {
      out.emplace_back(t, perm);
      continue;
    }
    for (std::uint32_t mask = 0; mask < (1u << t.rank); ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      std::vector<int> w = perm;
      for (int i = 0; i < t.rank; ++i)
        if (mask >> i & 1u) w[i] = -w[i];
      out.emplace_back(t, std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace preproj
