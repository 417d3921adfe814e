#include <gtest/gtest.h>

#include <random>

#include "preproj/io.hpp"

using namespace preproj;

namespace {

const DynkinType A8 = DynkinType::make(Family::A, 8);
const DynkinType D5 = DynkinType::make(Family::D, 5);
const DynkinType D9 = DynkinType::make(Family::D, 9);

CoxeterElement el(DynkinType t, std::vector<int> w) { return CoxeterElement(t, std::move(w)); }

// print, reparse the text, and parse back
Json through_text(const Json& j) { return parse_json_text(j.dump(2)); }

}  // namespace

TEST(Io, ElementRoundTrip) {
  for (const auto& w : {el(A8, {2, 5, 8, 1, 3, 4, 6, 7, 9}), el(D9, {5, 3, -7, 4, -6, -8, 9, -1, 2})})
    EXPECT_EQ(element_from_json(through_text(to_json(w))), w);
  EXPECT_THROW(element_from_json(parse_json_text(R"({"type":"D","rank":3,"window":[-1,2,3]})")), InputError);
  EXPECT_THROW(element_from_json(parse_json_text(R"({"type":"D","window":[1,2,3]})")), InputError);
  EXPECT_THROW(parse_json_text("{"), InputError);
}

TEST(Io, RepresentationSchema) {
  auto w = el(D9, {-6, 9, -7, -4, -1, 2, 3, 5, 8});
  auto M = brick_rep(w);
  Json j = to_json(M);
  EXPECT_EQ(j["dims"]["-1"], 1);
  EXPECT_EQ(j["mats"]["beta6"].size(), 2u);
  EXPECT_EQ(representation_from_json(through_text(j)), M);
  Representation H(quiver_of(A8), std::vector<int>(8, 1));
  QMatrix m(1, 1);
  m(0, 0) = Rational(-3, 4);
  H.set_mat(0, m);
  Json h = to_json(H);
  EXPECT_EQ(h["mats"]["alpha1"][0][0], "-3/4");
  EXPECT_EQ(representation_from_json(through_text(h)), H);
  h["mats"]["alpha1"] = Json::array({Json::array({"1", "2"})});
  EXPECT_THROW(representation_from_json(h), InputError);
}

TEST(Io, DiagramSchemaAndRoundTrip) {
  auto g = brick_diagram(el(D5, {-1, 2, -5, -4, -3}));
  Json j = to_json(g);
  EXPECT_EQ(j["symbols"], Json::parse("[1,-1,-2,-3,-4]"));
  EXPECT_EQ(j["params"]["R"], Json::parse("[-5,-4,-3]"));
  EXPECT_EQ(j["type_l"], 2);
  EXPECT_EQ(diagram_from_json(through_text(j)), g);
  auto a = brick_diagram(el(A8, {2, 5, 8, 1, 3, 4, 6, 7, 9}));
  EXPECT_TRUE(to_json(a)["params"]["r"].is_null());
  EXPECT_EQ(diagram_from_json(through_text(to_json(a))), a);
}

TEST(IoProperty, SemibrickRoundTrip) {
  std::mt19937 rng(0);
  for (auto t : {DynkinType::make(Family::A, 4), DynkinType::make(Family::D, 4), D5}) {
    auto all = enumerate_group(t);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 25; ++k) {
      const auto& w = all[pick(rng)];
      for (const auto& s : {semibrick(w), semibrick_direct(w)})
        EXPECT_EQ(semibrick_from_json(through_text(to_json(s))), s) << format_window(w);
    }
  }
  auto s = semibrick(el(D9, {5, 3, -7, 4, -6, -8, 9, -1, 2}));
  EXPECT_EQ(semibrick_from_json(through_text(to_json(s))), s);
}
