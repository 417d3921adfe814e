#include <gtest/gtest.h>

#include <map>

#include "preproj/weak_lattice.hpp"

using namespace preproj;

namespace {

const DynkinType A1 = DynkinType::make(Family::A, 1);
const DynkinType A3 = DynkinType::make(Family::A, 3);
const DynkinType D4 = DynkinType::make(Family::D, 4);

CoxeterElement el(DynkinType t, std::vector<int> w) { return CoxeterElement(t, std::move(w)); }

const GroupPoset& poset(DynkinType t) {
  static std::map<std::string, GroupPoset> cache;
  auto it = cache.find(t.name());
  if (it == cache.end()) it = cache.emplace(t.name(), GroupPoset(t)).first;
  return it->second;
}

// Minimal upper bounds by direct scan, without lengths.
std::vector<CoxeterElement> minimal_upper_bounds(const GroupPoset& p, std::size_t u, std::size_t v) {
  std::vector<std::size_t> ub;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(u, z) && p.leq(v, z)) ub.push_back(z);
  std::vector<CoxeterElement> out;
  for (std::size_t z : ub) {
    bool minimal = true;
    for (std::size_t y : ub) minimal = minimal && (y == z || !p.leq(y, z));
    if (minimal) out.push_back(p.at(z));
  }
  return out;
}

}  // namespace

TEST(WeakLattice, JoinMeetExamples) {
  const auto& p = poset(A3);
  auto s1 = el(A3, {2, 1, 3, 4}), s2 = el(A3, {1, 3, 2, 4});
  EXPECT_EQ(p.join(s1, s2), el(A3, {3, 2, 1, 4}));
  EXPECT_EQ(p.join(s1, s1), s1);
  EXPECT_EQ(p.join(el(A3, {1, 2, 4, 3}), el(A3, {3, 1, 2, 4})), el(A3, {4, 3, 1, 2}));
  auto id = CoxeterElement::identity(A3);
  EXPECT_EQ(p.meet(s1, id), id);
  EXPECT_EQ(p.meet(s1, s2), id);
  EXPECT_EQ(p.meet(s2, s2), s2);
  EXPECT_EQ(p.join_all({}), id);
}

TEST(WeakLattice, HasseEdges) {
  EXPECT_EQ(poset(A3).hasse_edges().size(), 36u);
  EXPECT_EQ(poset(A1).hasse_edges().size(), 1u);
  std::size_t sum = 0;
  for (const auto& w : poset(D4).elements()) sum += descents(w).size();
  EXPECT_EQ(poset(D4).hasse_edges().size(), sum);
  for (auto [u, l] : poset(D4).hasse_edges()) {
    EXPECT_TRUE(weak_leq(l, u));
    EXPECT_EQ(length(u), length(l) + 1);
  }
  auto dot = poset(A1).hasse_dot();
  EXPECT_NE(dot.find("\"2,1\" -> \"1,2\""), std::string::npos);
}

TEST(WeakLattice, CjrOracleExamples) {
  const auto& p = poset(A3);
  EXPECT_EQ(p.cjr_oracle(el(A3, {4, 3, 1, 2})),
            (std::vector<CoxeterElement>{el(A3, {1, 2, 4, 3}), el(A3, {3, 1, 2, 4})}));
  EXPECT_EQ(p.cjr_oracle(el(A3, {3, 2, 1, 4})),
            (std::vector<CoxeterElement>{el(A3, {1, 3, 2, 4}), el(A3, {2, 1, 3, 4})}));
  auto j = el(A3, {2, 4, 1, 3});
  ASSERT_TRUE(is_join_irreducible(j));
  EXPECT_EQ(p.cjr_oracle(j), std::vector<CoxeterElement>{j});
}

TEST(WeakLattice, VerifyCjrDefinition) {
  const auto& p = poset(A3);
  EXPECT_TRUE(p.verify_cjr_definition(el(A3, {4, 3, 1, 2}), {el(A3, {1, 2, 4, 3}), el(A3, {3, 1, 2, 4})}));
  EXPECT_TRUE(p.verify_cjr_definition(CoxeterElement::identity(A3), {}));
  EXPECT_FALSE(p.verify_cjr_definition(el(A3, {3, 2, 1, 4}), {el(A3, {3, 2, 1, 4})}));
  // joins to w but is redundant
  EXPECT_FALSE(p.verify_cjr_definition(el(A3, {3, 2, 1, 4}),
                                       {el(A3, {2, 1, 3, 4}), el(A3, {1, 3, 2, 4}), el(A3, {3, 1, 2, 4})}));
  EXPECT_THROW(p.verify_cjr_definition(longest_element(D4), p.cjr_oracle(el(A3, {4, 3, 1, 2}))), InputError);
  const auto& q = poset(D4);
  EXPECT_THROW(q.verify_cjr_definition(longest_element(D4), q.cjr_oracle(longest_element(D4)), 20),
               CapacityError);
}

TEST(WeakLatticeProperty, IsLattice) {
  for (auto t : {A3, D4}) {
    const auto& p = poset(t);
    for (std::size_t u = 0; u < p.size(); u += (t.family == Family::A ? 1 : 5))
      for (std::size_t v = 0; v < p.size(); v += (t.family == Family::A ? 1 : 3)) {
        auto mub = minimal_upper_bounds(p, u, v);
        ASSERT_EQ(mub.size(), 1u);
        EXPECT_EQ(mub[0], p.join(p.at(u), p.at(v)));
      }
  }
}

TEST(WeakLatticeProperty, JoinAlgebra) {
  const auto& p = poset(A3);
  auto id = CoxeterElement::identity(A3);
  for (const auto& u : p.elements()) {
    EXPECT_EQ(p.join(u, id), u);
    EXPECT_EQ(p.meet(u, id), id);
    for (const auto& v : p.elements()) {
      EXPECT_EQ(p.join(u, v), p.join(v, u));
      EXPECT_EQ(p.meet(u, p.join(u, v)), u);
    }
  }
  for (std::size_t i = 0; i < 24; i += 3)
    for (std::size_t j = 0; j < 24; j += 5)
      for (std::size_t k = 0; k < 24; k += 7) {
        auto &x = p.at(i), &y = p.at(j), &z = p.at(k);
        EXPECT_EQ(p.join(p.join(x, y), z), p.join(x, p.join(y, z)));
      }
}

TEST(WeakLatticeProperty, CjrOracleStructure) {
  for (auto t : {A3, D4, DynkinType::make(Family::A, 4)}) {
    const auto& p = poset(t);
    for (const auto& w : p.elements()) {
      auto U = p.cjr_oracle(w);  // throws on non-unique minimum or join mismatch
      EXPECT_EQ(U.size(), descents(w).size());
      EXPECT_EQ(p.join_all(U), w);
      for (std::size_t i = 0; i < U.size(); ++i) {
        EXPECT_TRUE(is_join_irreducible(U[i]));
        for (std::size_t j = 0; j < U.size(); ++j)
          if (i != j) {
            EXPECT_FALSE(p.leq(U[i], U[j]));
          }
      }
    }
  }
}

TEST(WeakLatticeProperty, SingletonCjrCountsJoinIrreducibles) {
  for (int n = 1; n <= 5; ++n) {
    GroupPoset p(DynkinType::make(Family::A, n));
    std::size_t count = 0;
    for (const auto& w : p.elements()) count += p.cjr_oracle(w).size() == 1;
    EXPECT_EQ(count, (std::size_t{1} << (n + 1)) - n - 2);
  }
  for (int n = 4; n <= 5; ++n) {
    GroupPoset p(DynkinType::make(Family::D, n));
    std::size_t count = 0;
    for (const auto& w : p.elements()) count += p.cjr_oracle(w).size() == 1;
    std::size_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    EXPECT_EQ(count, pow3 - n * (std::size_t{1} << (n - 1)) - n - 1);
  }
}

TEST(WeakLatticeProperty, DefinitionHoldsOnA3) {
  const auto& p = poset(A3);
  for (const auto& w : p.elements()) EXPECT_TRUE(p.verify_cjr_definition(w, p.cjr_oracle(w))) << format_window(w);
}
