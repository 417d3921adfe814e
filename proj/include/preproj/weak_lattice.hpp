#pragma once
// Right weak order on an enumerated group: join, meet, Hasse diagram and a
// brute-force canonical join representation.

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter.hpp"

namespace preproj {

class GroupPoset {
 public:
  explicit GroupPoset(DynkinType t, std::size_t cap = kDefaultEnumerationCap)
      : type_(t), elems_(enumerate_group(t, cap)) {
    inv_.reserve(elems_.size());
    len_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      inv_.push_back(inversion_set(elems_[i]));
      len_.push_back(static_cast<int>(inv_.back().count()));
      index_.emplace(elems_[i], i);
    }
  }

  const DynkinType& dynkin() const { return type_; }
  const std::vector<CoxeterElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const CoxeterElement& at(std::size_t i) const { return elems_[i]; }
  const InversionSet& inv(std::size_t i) const { return inv_[i]; }
  int length_of(std::size_t i) const { return len_[i]; }

  std::size_t index_of(const CoxeterElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end())
      throw InputError("element " + format_window(w) + " is not in " + type_.name());
    return it->second;
  }

  bool leq(std::size_t i, std::size_t j) const { return (inv_[i] & ~inv_[j]).none(); }
  bool leq(const CoxeterElement& u, const CoxeterElement& w) const {
    return leq(index_of(u), index_of(w));
  }

  // Least element whose inversion set contains s.
  std::size_t least_above(const InversionSet& s) const {
    return extremum([&](std::size_t z) { return (s & ~inv_[z]).none(); }, true);
  }

  // Greatest element whose inversion set lies in s.
  std::size_t greatest_below(const InversionSet& s) const {
    return extremum([&](std::size_t z) { return (inv_[z] & ~s).none(); }, false);
  }

  CoxeterElement join(const CoxeterElement& u, const CoxeterElement& v) const {
    return elems_[least_above(inv_[index_of(u)] | inv_[index_of(v)])];
  }

  CoxeterElement meet(const CoxeterElement& u, const CoxeterElement& v) const {
    return elems_[greatest_below(inv_[index_of(u)] & inv_[index_of(v)])];
  }

  // Join of a family; the empty join is the identity.
  CoxeterElement join_all(const std::vector<CoxeterElement>& us) const {
    InversionSet s;
    for (const auto& u : us) s |= inv_[index_of(u)];
    return elems_[least_above(s)];
  }

  // Covering pairs (upper, lower) as indices: w covers w s_d for d in des(w).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edge_indices() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (Vertex d : descents(elems_[i]))
        out.emplace_back(i, index_of(multiply(elems_[i], simple_reflection(type_, d))));
    return out;
  }

  std::vector<std::pair<CoxeterElement, CoxeterElement>> hasse_edges() const {
    std::vector<std::pair<CoxeterElement, CoxeterElement>> out;
    for (auto [i, j] : hasse_edge_indices()) out.emplace_back(elems_[i], elems_[j]);
    return out;
  }

  std::vector<std::size_t> join_irreducible_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (is_join_irreducible(elems_[i])) out.push_back(i);
    return out;
  }

  // For each cover reflection t of w, the unique minimal v <= w with t in
  // inv(v). Sorted by window.
  std::vector<CoxeterElement> cjr_oracle(const CoxeterElement& w) const {
    const std::size_t iw = index_of(w);
    std::vector<CoxeterElement> out;
    for (const Reflection& t : cover_reflections(w)) {
      const std::size_t bit = reflection_index(type_, t);
      std::size_t best = elems_.size();
      for (std::size_t z = 0; z < elems_.size(); ++z)
        if (inv_[z].test(bit) && leq(z, iw) && (best == elems_.size() || len_[z] < len_[best]))
          best = z;
      for (std::size_t z = 0; z < elems_.size(); ++z)
        if (inv_[z].test(bit) && leq(z, iw) && !leq(best, z))
          throw ConsistencyError("no unique minimal element below " + format_window(w) +
                                 " containing " + to_string(t));
      if (!is_join_irreducible(elems_[best]))
        throw ConsistencyError("oracle member " + format_window(elems_[best]) +
                               " is not join-irreducible");
      out.push_back(elems_[best]);
    }
    std::sort(out.begin(), out.end());
    if (!(join_all(out) == w))
      throw ConsistencyError("oracle members do not join to " + format_window(w));
    return out;
  }

  // Checks the definition of a canonical join representation by brute force
  // over sets of join-irreducibles below w.
  bool verify_cjr_definition(const CoxeterElement& w, const std::vector<CoxeterElement>& U,
                             std::size_t max_jirr = 20) const {
    const std::size_t iw = index_of(w);
    auto joins_to_w = [&](const std::vector<std::size_t>& ids) {
      InversionSet s;
      for (std::size_t i : ids) s |= inv_[i];
      return least_above(s) == iw;
    };
    std::vector<std::size_t> u;
    for (const auto& x : U) u.push_back(index_of(x));
    if (!joins_to_w(u)) return false;
    if (u.size() > 30) throw CapacityError("candidate set too large");
    for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << u.size()); ++m) {
      std::vector<std::size_t> sub;
      for (std::size_t k = 0; k < u.size(); ++k)
        if (m >> k & 1u) sub.push_back(u[k]);
      if (joins_to_w(sub)) return false;
    }
    std::vector<std::size_t> J;
    for (std::size_t z : join_irreducible_indices())
      if (leq(z, iw)) J.push_back(z);
    if (J.size() > max_jirr)
      throw CapacityError(std::to_string(J.size()) + " join-irreducibles below " +
                          format_window(w) + ", above the cap " + std::to_string(max_jirr));
    std::vector<std::size_t> V;
    bool ok = true;
    // Depth-first over antichains of J; an irredundant join is an antichain.
    auto irredundant = [&](const std::vector<std::size_t>& ids) {
      for (std::size_t k = 0; k < ids.size(); ++k) {
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < ids.size(); ++q)
          if (q != k) rest.push_back(ids[q]);
        if (joins_to_w(rest)) return false;
      }
      return true;
    };
    auto refines = [&](const std::vector<std::size_t>& ids) {
      for (std::size_t x : u) {
        bool found = false;
        for (std::size_t y : ids) found = found || leq(x, y);
        if (!found) return false;
      }
      return true;
    };
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      if (!ok) return;
      if (joins_to_w(V) && irredundant(V) && !refines(V)) ok = false;
      for (std::size_t k = from; k < J.size() && ok; ++k) {
        bool comparable = false;
        for (std::size_t y : V) comparable = comparable || leq(y, J[k]) || leq(J[k], y);
        if (comparable) continue;
        V.push_back(J[k]);
        self(self, k + 1);
        V.pop_back();
      }
    };
    dfs(dfs, 0);
    return ok;
  }

  // Graphviz digraph, one edge per cover w -> w s_d.
  std::string hasse_dot() const {
    std::ostringstream os;
    os << "digraph \"" << type_.name() << "\" {\n";
    for (const auto& e : elems_) os << "  \"" << format_window(e) << "\";\n";
    for (auto [i, j] : hasse_edge_indices())
      os << "  \"" << format_window(elems_[i]) << "\" -> \"" << format_window(elems_[j]) << "\";\n";
    os << "}\n";
    return os.str();
  }

 private:
  template <class Pred>
  std::size_t extremum(Pred in_set, bool minimal) const {
    std::size_t best = elems_.size();
    for (std::size_t z = 0; z < elems_.size(); ++z) {
      if (!in_set(z)) continue;
      if (best == elems_.size() || (minimal ? len_[z] < len_[best] : len_[z] > len_[best])) best = z;
    }
    if (best == elems_.size()) throw ConsistencyError("empty bound set");
    for (std::size_t z = 0; z < elems_.size(); ++z)
      if (in_set(z) && !(minimal ? leq(best, z) : leq(z, best)))
        throw ConsistencyError("bound is not unique in " + type_.name());
    return best;
  }

  DynkinType type_;
  std::vector<CoxeterElement> elems_;
  std::vector<InversionSet> inv_;
  std::vector<int> len_;
  std::unordered_map<CoxeterElement, std::size_t, ElementHash> index_;
};

}  // namespace preproj
