#include <gtest/gtest.h>

#include <fstream>

#include "preproj/census.hpp"

using namespace preproj;

namespace {

const DynkinType D5 = DynkinType::make(Family::D, 5);

CoxeterElement el(DynkinType t, std::vector<int> w) { return CoxeterElement(t, std::move(w)); }

std::vector<FixtureEntry> load_fixture() {
  std::ifstream in(std::string(PREPROJ_DATA_DIR) + "/d5_bricks.txt");
  if (!in) throw std::runtime_error("cannot open fixture");
  return parse_fixture(in);
}

// All vectors in a product of sets.
std::set<std::vector<int>> product(const std::vector<std::set<int>>& X) {
  std::set<std::vector<int>> out{{}};
  for (const auto& x : X) {
    std::set<std::vector<int>> next;
    for (const auto& v : out)
      for (int e : x) {
        auto u = v;
        u.push_back(e);
        next.insert(u);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST(Census, SigmaAndChiExamples) {
  EXPECT_EQ(sigma(el(D5, {-1, 2, -5, -4, -3})), (ShapeSigma{2, -5, 0}));
  EXPECT_EQ(chi(el(D5, {-1, 2, -5, -4, -3})), (std::vector<int>{0, 0, 1, 1, 1}));
  EXPECT_EQ(chi(el(D5, {1, 3, -5, -2, 4})), (std::vector<int>{0, 1, 0, 2, 1}));
  EXPECT_THROW(el(D5, {1, 2, -5, 3, 4}), InputError);
  EXPECT_EQ(sigma(simple_reflection(D5, 1)), (ShapeSigma{2, 1, 0}));
  EXPECT_THROW(sigma(CoxeterElement::identity(D5)), DomainError);
  EXPECT_THROW(sigma(simple_reflection(DynkinType::make(Family::A, 3), 1)), InputError);
}

TEST(Census, ShapeCounts) {
  EXPECT_EQ(shape_count({5, -4, 3}, 5), 8);
  EXPECT_EQ(shape_count({2, 1, 0}, 5), 1);
  EXPECT_EQ(shape_count({4, -5, 1}, 5), 6);
  EXPECT_THROW(shape_count({2, 0, 0}, 5), DomainError);
  EXPECT_THROW(shape_count({6, 1, 0}, 5), DomainError);
  EXPECT_EQ(global_count(DynkinType::make(Family::A, 3)), 11);
  EXPECT_EQ(global_count(DynkinType::make(Family::A, 8)), 502);
  EXPECT_EQ(global_count(D5), 157);
  EXPECT_EQ(global_count(DynkinType::make(Family::D, 4)), 44);
  EXPECT_EQ(enumerated_jirr_count(DynkinType::make(Family::A, 4)), 26);
}

TEST(Census, FeasibleShapesSumToGlobalCount) {
  for (int n = 4; n <= 6; ++n) {
    long long total = 0;
    for (const auto& s : feasible_shapes(n)) total += shape_count(s, n);
    EXPECT_EQ(total, global_count(DynkinType::make(Family::D, n))) << n;
  }
  EXPECT_EQ(feasible_shapes(5).size(), 40u);
}

TEST(Census, ReproducesAppendixFixture) {
  auto expected = load_fixture();
  ASSERT_EQ(expected.size(), 157u);
  auto c = census(D5);
  auto actual = census_entries(c);
  auto diff = diff_fixture(expected, actual);
  EXPECT_TRUE(diff.empty()) << diff.front();
  std::vector<ShapeSigma> shapes;
  for (const auto& [s, es] : c) {
    shapes.push_back(s);
    EXPECT_EQ(static_cast<long long>(es.size()), shape_count(s, 5)) << format_sigma(s);
  }
  EXPECT_EQ(shapes, feasible_shapes(5));
  EXPECT_EQ(c.at({2, -5, 0}).size(), 4u);
  EXPECT_EQ(c.at({5, -4, 3}).size(), 8u);
  EXPECT_EQ(c.at({5, 1, 0}).size(), 8u);
}

TEST(Census, FixtureLineRoundTrip) {
  for (const auto& e : load_fixture()) EXPECT_EQ(parse_fixture_line(format_fixture_line(e)), e);
  EXPECT_THROW(parse_fixture_line("sigma=1,2 window=1 symbols=1 arrows="), InputError);
  EXPECT_THROW(parse_fixture_line("window=1 symbols=1 arrows="), InputError);
}

TEST(CensusProperty, ChiInjectiveAndProductSets) {
  for (int n = 4; n <= 5; ++n) {
    auto t = DynkinType::make(Family::D, n);
    std::set<std::vector<int>> seen;
    std::map<ShapeSigma, std::set<std::vector<int>>> by_shape;
    long long k = 0;
    for (const auto& w : enumerate_group(t)) {
      if (!is_join_irreducible(w)) continue;
      ++k;
      auto x = chi(w);
      EXPECT_TRUE(seen.insert(x).second) << format_window(w);
      auto s = sigma(w);
      EXPECT_NE(shape_condition(s, n), 0) << format_window(w);
      by_shape[s].insert(x);
    }
    EXPECT_EQ(k, global_count(t));
    for (const auto& s : feasible_shapes(n)) EXPECT_EQ(by_shape[s], product(chi_factors(s, n))) << format_sigma(s);
  }
}
