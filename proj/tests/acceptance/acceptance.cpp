// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "preproj/census.hpp"
#include "preproj/text.hpp"

using namespace preproj;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

DynkinType A(int n) { return DynkinType::make(Family::A, n); }
DynkinType D(int n) { return DynkinType::make(Family::D, n); }
CoxeterElement el(DynkinType t, std::vector<int> w) { return CoxeterElement(t, std::move(w)); }

std::string num(long long x) { return std::to_string(x); }

Outcome counting() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    const long long formula = (1LL << (n + 1)) - n - 2;
    const long long e = enumerated_jirr_count(A(n));
    o.check(e == formula, "A" + num(n) + ": enumerated " + num(e) + ", formula " + num(formula));
    o.check(e == global_count(A(n)), "A" + num(n) + ": library formula " + num(global_count(A(n))));
  }
  o.check(enumerate_group(A(7)).size() == 40320, "|A7| = 40320");
  o.check(enumerated_jirr_count(A(7)) == 247, "A7 has 247 join-irreducibles");
  const long long stated[] = {44, 157, 530};
  for (int n = 4; n <= 6; ++n) {
    const long long formula = ipow(3, n) - n * ipow(2, n - 1) - n - 1;
    const long long e = enumerated_jirr_count(D(n));
    o.check(e == formula, "D" + num(n) + ": enumerated " + num(e) + ", formula " + num(formula));
    o.check(e == stated[n - 4], "D" + num(n) + ": expected " + num(stated[n - 4]));
  }
  o.note("A2..A7 and D4..D6 agree with the closed forms");
  return o;
}

Outcome appendix_reproduction() {
  Outcome o;
  const std::string path = std::string(PREPROJ_DATA_DIR) + "/d5_bricks.txt";
  std::ifstream in(path);
  if (!in) {
    o.check(false, "cannot open " + path);
    return o;
  }
  auto expected = parse_fixture(in);
  auto c = census(D(5));
  auto actual = census_entries(c);

  std::map<ShapeSigma, std::size_t> fixture_groups;
  for (const auto& e : expected) ++fixture_groups[e.sigma];

  o.check(c.size() == 42, "shape groups: census has " + num(c.size()) + ", fixture has " +
                              num(fixture_groups.size()) + ", required 42");
  const std::pair<ShapeSigma, std::size_t> listed[] = {
      {{2, -5, 0}, 4}, {{5, -4, 3}, 8}, {{5, 1, 0}, 8}};
  for (const auto& [s, k] : listed) {
    const std::size_t got = c.count(s) ? c.at(s).size() : 0;
    o.check(got == k, "sigma=(" + format_sigma(s) + "): " + num(got) + " elements, expected " + num(k));
  }
  bool sizes_agree = fixture_groups.size() == c.size();
  for (const auto& [s, k] : fixture_groups) sizes_agree = sizes_agree && c.count(s) && c.at(s).size() == k;
  o.check(sizes_agree, "per-shape sizes equal the fixture");
  o.check(actual.size() == 157 && expected.size() == 157,
          "total: census " + num(actual.size()) + ", fixture " + num(expected.size()) + ", expected 157");

  auto diff = diff_fixture(expected, actual);
  const std::size_t matched = expected.size() - std::min(expected.size(), diff.size());
  o.check(diff.empty() && matched >= 20, num(diff.size()) + " fixture entries differ");
  o.note(num(c.size()) + " shape groups, " + num(actual.size()) + " entries, " + num(matched) + "/" +
         num(expected.size()) + " fixture entries match");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t total = 0, kernel = 0;
  std::vector<DynkinType> types{A(2), A(3), A(4), A(5), D(4), D(5)};
  for (auto t : types) {
    for (const auto& w : enumerate_group(t)) {
      auto l = join_irreducible_type(w);
      if (!l) continue;
      ++total;
      auto J = j_module(w);
      o.check(iso_bricks(brick_rep(w), socle_over_end(J)), "socle oracle at " + t.name() + " " + format_window(w));
      if (t.family == Family::A || *l == 1 || *l == -1) {
        ++kernel;
        o.check(same_subspace(socle_subspace(J), kernel_socle_subspace(w)),
                "kernel socle at " + t.name() + " " + format_window(w));
      }
    }
  }
  o.note(num(total) + " join-irreducibles, " + num(kernel) + " kernel comparisons");
  return o;
}

Outcome canonical_joins() {
  Outcome o;
  for (auto t : {A(4), D(4)}) {
    GroupPoset P(t);
    std::size_t agree = 0;
    for (const auto& w : P.elements()) {
      auto d = cjr_direct(w);
      std::sort(d.begin(), d.end());
      if (d == P.cjr_oracle(w)) ++agree;
    }
    o.check(agree == P.size(), t.name() + ": " + num(agree) + "/" + num(P.size()) + " agree");
    o.note(t.name() + " " + num(agree) + "/" + num(P.size()));
  }
  o.check(GroupPoset(A(4)).size() == 120 && GroupPoset(D(4)).size() == 192, "group orders 120 and 192");
  GroupPoset P3(A(3));
  std::size_t ok = 0;
  for (const auto& w : P3.elements())
    if (P3.verify_cjr_definition(w, cjr_direct(w))) ++ok;
  o.check(ok == P3.size(), "A3 definition check " + num(ok) + "/" + num(P3.size()));
  o.note("A3 definition " + num(ok) + "/" + num(P3.size()));
  return o;
}

Outcome worked_examples() {
  Outcome o;
  std::size_t displays = 0;
  auto same = [&](const std::string& got, const std::string& want, const std::string& what) {
    ++displays;
    o.check(got == want, what + ":\n" + got + "--- expected ---\n" + want);
  };
  same(render_text(brick_diagram(el(A(8), {2, 5, 8, 1, 3, 4, 6, 7, 9}))), "1 ← 2 → 3 → 4 ← 5 → 6 → 7\n",
       "A8 brick");
  same(render_text(brick_diagram(el(D(9), {9, -7, -6, -4, -1, 2, 3, 5, 8}))),
       " 1 → -2 → -3 ← -4 → -5 ← -6\n"
       "    ↙    ↙  ↘      ↙  ↘    ↘\n"
       "-1 →  2 →  3 ←  4 →  5 ←  6 ←  7 →  8\n",
       "D9 diagram (9,-7,-6,-4,-1,2,3,5,8)");
  same(render_text(brick_diagram(el(D(9), {-6, 9, -7, -4, -1, 2, 3, 5, 8}))),
       " 1 → -2 → -3 ← -4 → -5 → -6\n"
       "    ↙    ↙  ↘      ↙  ↘\n"
       "-1 →  2 →  3 ←  4 →  5 ←  6 ←  7 →  8\n",
       "D9 diagram (-6,9,-7,-4,-1,2,3,5,8)");

  auto wa = el(A(8), {4, 9, 3, 6, 2, 8, 5, 1, 7});
  same(decompose_table(wa),
       "d  a_d  b_d  R(w_d)       w_d\n"
       "2    9    3  {3,5,6,7,8}  (1,2,4,9,3,5,6,7,8)\n"
       "4    6    2  {2,5,7,8,9}  (1,3,4,6,2,5,7,8,9)\n"
       "6    8    5  {5,7,9}      (1,2,3,4,6,8,5,7,9)\n"
       "7    5    1  {1,6,7,8,9}  (2,3,4,5,1,6,7,8,9)\n",
       "A8 decomposition table");
  same(render_text(semibrick(wa)),
       "S_2:\n"
       "          3 ← 4 → 5 → 6 → 7 → 8\n"
       "S_4:\n"
       "      2 ← 3 ← 4 → 5\n"
       "S_6:\n"
       "                  5 ← 6 → 7\n"
       "S_7:\n"
       "  1 ← 2 ← 3 ← 4\n",
       "A8 semibrick");
  same(render_text(semibrick_direct(wa)), render_text(semibrick(wa)), "A8 semibrick, direct route");

  same(decompose_table(el(D(9), {5, 3, -7, 4, -6, -8, 9, -1, 2})),
       "d  a_d  b_d  case  R(w_d)             w_d\n"
       "1    5    3  B     {3,4,6,7,8,9}      (1,2,5,3,4,6,7,8,9)\n"
       "2    3   -7  A     {-3,-1,2,4,5,8,9}  (6,7,-3,-1,2,4,5,8,9)\n"
       "4    4   -6  B     {-6,-1,2,5,7,8,9}  (3,4,-6,-1,2,5,7,8,9)\n"
       "5   -6   -8  A     {6,7,9}            (1,2,3,4,5,8,6,7,9)\n"
       "7    9   -1  B     {-1,2}             (-3,4,5,6,7,8,9,-1,2)\n",
       "D9 decomposition table");

  auto w3 = el(A(3), {4, 3, 1, 2});
  auto parts = cjr_direct(w3);
  std::sort(parts.begin(), parts.end());
  std::string line = format_paren_window(w3) + " =";
  for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? " ∨ " : " ") + format_paren_window(parts[i]);
  same(line + "\n", "(4,3,1,2) = (1,2,4,3) ∨ (3,1,2,4)\n", "A3 canonical join representation");
  o.check(GroupPoset(A(3)).cjr_oracle(w3) == parts, "A3 (4,3,1,2) oracle agrees");
  o.note(num(displays) + " displays compared");
  return o;
}

Outcome structure() {
  Outcome o;
  std::size_t elems = 0, bricks = 0;
  for (auto t : {D(5), A(5)}) {
    auto all = enumerate_group(t);
    o.check(all.size() == (t.family == Family::D ? 1920u : 720u), t.name() + " order " + num(all.size()));
    for (const auto& w : all) {
      ++elems;
      auto s = semibrick(w);
      const std::string at = t.name() + " " + format_window(w);
      o.check(s.summands.size() == descents(w).size(), "summand count at " + at);
      for (const auto& x : s.summands) o.check(x.rep.satisfies_relations(), "relations at " + at);
      auto r = verify_summands(s.reps());
      bricks += r.is_brick.size();
      if (!r.ok())
        for (const auto& f : r.failures()) o.check(false, at + ": " + f);
      auto direct = semibrick_direct(w);
      o.check(direct.reps() == s.reps(), "direct route differs at " + at);
    }
  }
  o.note(num(elems) + " elements, " + num(bricks) + " summands");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "join-irreducible counts", counting},
      {2, "D5 appendix reproduction", appendix_reproduction},
      {3, "socle oracle equivalence", oracle_equivalence},
      {4, "canonical join representations", canonical_joins},
      {5, "worked examples", worked_examples},
      {6, "structural properties", structure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (r.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << time << ")\n";
    std::size_t shown = 0;
    for (const auto& n : r.notes)
      if (shown++ < 12) std::cout << "    " << n << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
