// Command-line front end for the brick and semibrick constructions.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>

#include "preproj/io.hpp"
#include "preproj/text.hpp"

using namespace preproj;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapacity = 3;

struct TypeOpts {
  std::string family;
  int rank = 0;
  std::size_t cap = kDefaultEnumerationCap;

  DynkinType dynkin() const {
    DynkinType t = DynkinType::make(parse_family(family), rank);
    if (t.family == Family::D && rank < 4) throw InputError("type D needs rank >= 4");
    return t;
  }
};

void add_type(CLI::App* cmd, TypeOpts& o) {
  cmd->add_option("--type", o.family, "Dynkin family: A or D")->required();
  cmd->add_option("--rank", o.rank, "rank n")->required();
}

void add_cap(CLI::App* cmd, TypeOpts& o) {
  cmd->add_option("--cap", o.cap, "maximum group order to enumerate")->capture_default_str();
}

CoxeterElement element_arg(const TypeOpts& o, const std::string& window) {
  return parse_window(o.dynkin(), window);
}

void print_failures(const std::vector<std::string>& bad) {
  const std::size_t shown = std::min<std::size_t>(bad.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "  FAIL " << bad[i] << "\n";
  if (bad.size() > shown) std::cout << "  ... " << bad.size() - shown << " more\n";
}

int verify_oracle(DynkinType t, std::size_t cap) {
  std::size_t total = 0;
  std::vector<std::string> bad;
  for (const auto& w : enumerate_group(t, cap)) {
    auto l = join_irreducible_type(w);
    if (!l) continue;
    ++total;
    auto J = j_module(w);
    auto B = brick_rep(w);
    bool ok = B.satisfies_relations() && is_brick(B) && iso_bricks(B, socle_over_end(J));
    if (ok && (t.family == Family::A || *l == 1 || *l == -1))
      ok = same_subspace(socle_subspace(J), kernel_socle_subspace(w));
    if (!ok) bad.push_back(format_window(w));
  }
  std::cout << total - bad.size() << "/" << total << " bricks match socle oracle\n";
  print_failures(bad);
  return bad.empty() ? kOk : kVerifyFailed;
}

int verify_cjr(DynkinType t, std::size_t cap) {
  GroupPoset P(t, cap);
  std::vector<std::string> bad;
  for (const auto& w : P.elements()) {
    auto d = cjr_direct(w);
    std::sort(d.begin(), d.end());
    if (d != P.cjr_oracle(w)) bad.push_back(format_window(w));
  }
  std::cout << P.size() - bad.size() << "/" << P.size() << " canonical join representations match oracle\n";
  print_failures(bad);
  return bad.empty() ? kOk : kVerifyFailed;
}

int verify_semibricks(DynkinType t, std::size_t cap, std::size_t samples, unsigned seed) {
  auto all = enumerate_group(t, cap);
  std::vector<CoxeterElement> chosen;
  if (samples == 0 || samples >= all.size()) {
    chosen = all;
  } else {
    std::mt19937 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), samples, rng);
  }
  std::unique_ptr<GroupPoset> P;
  if (all.size() <= 5000) P = std::make_unique<GroupPoset>(t, cap);
  std::vector<std::string> bad;
  for (const auto& w : chosen) {
    auto s = semibrick_direct(w);
    auto rep = verify_semibrick(s, P.get());
    bool ok = rep.ok() && s.summands.size() == descents(w).size();
    auto via = semibrick(w);
    for (std::size_t k = 0; ok && k < s.summands.size(); ++k)
      ok = iso_bricks(s.summands[k].rep, via.summands[k].rep);
    if (!ok) {
      std::string why = format_window(w);
      for (const auto& f : rep.failures()) why += "; " + f;
      bad.push_back(why);
    }
  }
  std::cout << chosen.size() - bad.size() << "/" << chosen.size() << " semibricks pass"
            << (P ? " (bricks, Hom-orthogonal, roots, join)" : " (bricks, Hom-orthogonal, roots)") << "\n";
  print_failures(bad);
  return bad.empty() ? kOk : kVerifyFailed;
}

int verify_census(DynkinType t, std::size_t cap) {
  if (t.family != Family::D) throw InputError("census suite needs type D");
  auto c = census(t, cap);
  std::vector<std::string> bad;
  long long total = 0;
  for (const auto& [s, es] : c) {
    total += static_cast<long long>(es.size());
    if (static_cast<long long>(es.size()) != shape_count(s, t.rank))
      bad.push_back("sigma=(" + format_sigma(s) + ") has " + std::to_string(es.size()) + " elements, formula " +
                    std::to_string(shape_count(s, t.rank)));
  }
  auto shapes = feasible_shapes(t.rank);
  if (c.size() != shapes.size()) bad.push_back("shape count " + std::to_string(c.size()) + " vs feasible " +
                                               std::to_string(shapes.size()));
  std::cout << c.size() << " shapes, " << total << " join-irreducibles, formula " << global_count(t) << "\n";
  if (total != global_count(t)) bad.push_back("total differs from formula");
  print_failures(bad);
  std::cout << (bad.empty() ? "OK" : "FAILED") << "\n";
  return bad.empty() ? kOk : kVerifyFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"Bricks and semibricks over preprojective algebras of types A and D"};
  app.require_subcommand(1);
  TypeOpts o;
  std::string window, format = "text", fixture, suite = "all";
  bool direct = false;
  std::size_t samples = 0;
  unsigned seed = 0;

  auto* element = app.add_subcommand("element", "length, descents and join-irreducible data of an element");
  add_type(element, o);
  element->add_option("--window", window, "comma-separated window")->required();
  element->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* brick = app.add_subcommand("brick", "brick diagram of a join-irreducible element");
  add_type(brick, o);
  brick->add_option("--window", window)->required();
  brick->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot", "rep"}));

  auto* semi = app.add_subcommand("semibrick", "semibrick of an element, one brick per descent");
  add_type(semi, o);
  semi->add_option("--window", window)->required();
  semi->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  semi->add_flag("--direct", direct, "build from descent data without the joinands");

  auto* dec = app.add_subcommand("decompose", "canonical join representation table");
  add_type(dec, o);
  dec->add_option("--window", window)->required();

  auto* cen = app.add_subcommand("census", "join-irreducibles of type D grouped by shape");
  add_type(cen, o);
  add_cap(cen, o);
  cen->add_option("--fixture", fixture, "compare with a fixture file instead of listing");

  auto* cnt = app.add_subcommand("count", "brick count: formula against enumeration");
  add_type(cnt, o);
  add_cap(cnt, o);

  auto* ver = app.add_subcommand("verify", "oracle sweeps");
  add_type(ver, o);
  add_cap(ver, o);
  ver->add_option("--suite", suite)->check(CLI::IsMember({"oracle", "cjr", "semibrick", "census", "all"}));
  ver->add_option("--samples", samples, "random sample size for the semibrick suite (0 = all)");
  ver->add_option("--seed", seed, "seed for sampling")->capture_default_str();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the weak order in DOT");
  add_type(hasse, o);
  add_cap(hasse, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (*element) {
    auto w = element_arg(o, window);
    if (format == "json") std::cout << to_json(w).dump(2) << "\n";
    else std::cout << element_summary(w);
  } else if (*brick) {
    auto w = element_arg(o, window);
    auto g = brick_diagram(w);
    if (format == "json") std::cout << to_json(g).dump(2) << "\n";
    else if (format == "dot") std::cout << diagram_dot(g);
    else if (format == "rep") std::cout << to_json(brick_rep(w)).dump(2) << "\n";
    else std::cout << render_text(g);
  } else if (*semi) {
    auto w = element_arg(o, window);
    auto s = direct ? semibrick_direct(w) : semibrick(w);
    if (format == "json") std::cout << to_json(s).dump(2) << "\n";
    else std::cout << render_text(s);
  } else if (*dec) {
    std::cout << decompose_table(element_arg(o, window));
  } else if (*cen) {
    auto c = census(o.dynkin(), o.cap);
    auto entries = census_entries(c);
    if (!fixture.empty()) {
      std::ifstream in(fixture);
      if (!in) throw InputError("cannot open fixture '" + fixture + "'");
      auto diff = diff_fixture(parse_fixture(in), entries);
      if (!diff.empty()) {
        print_failures(diff);
        std::cout << diff.size() << " differences\n";
        return kVerifyFailed;
      }
      std::cout << "fixture matches: " << entries.size() << " entries in " << c.size() << " shapes\n";
    } else {
      for (const auto& [s, es] : c) {
        std::cout << "sigma=(" << format_sigma(s) << ") (" << es.size() << (es.size() == 1 ? " element)\n" : " elements)\n");
        for (const auto& e : es)
          std::cout << "  " << format_fixture_line({s, e.w.window(), e.diagram.symbols(), e.diagram.arrows}) << "\n";
      }
    }
  } else if (*cnt) {
    auto t = o.dynkin();
    long long f = global_count(t), e = enumerated_jirr_count(t, o.cap);
    std::cout << "formula " << f << ", enumerated " << e << ", " << (f == e ? "OK" : "MISMATCH") << "\n";
    return f == e ? kOk : kVerifyFailed;
  } else if (*ver) {
    auto t = o.dynkin();
    int rc = kOk;
    if (suite == "oracle" || suite == "all") rc = std::max(rc, verify_oracle(t, o.cap));
    if (suite == "cjr" || suite == "all") rc = std::max(rc, verify_cjr(t, o.cap));
    if (suite == "semibrick" || suite == "all") rc = std::max(rc, verify_semibricks(t, o.cap, samples, seed));
    if (suite == "census" || (suite == "all" && t.family == Family::D)) rc = std::max(rc, verify_census(t, o.cap));
    return rc;
  } else if (*hasse) {
    std::cout << GroupPoset(o.dynkin(), o.cap).hasse_dot();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
