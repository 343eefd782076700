// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "knotgenus/code.hpp"
#include "knotgenus/dt.hpp"
#include "knotgenus/genus.hpp"
#include "knotgenus/moves.hpp"
#include "knotgenus/oracle.hpp"
#include "knotgenus/search.hpp"
#include "support.hpp"

#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace knotgenus;
using namespace knotgenus::testing;

namespace {

/// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok)
      failures.push_back(what);
  }
};

bool same_up_to_rotation(const GaussCode& a, const GaussCode& b) {
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  for (Position s = 0; s < a.size(); ++s)
    if (serialize(a, s) == serialize(b))
      return true;
  return false;
}

void trefoil_fixture(Check& c) {
  const auto code = parse_gauss(trefoil);
  const auto dec = cycles(code);
  c.expect(dec.count() == 2, "cycle count");
  std::vector<std::string> recorded;
  for (const auto& cy : dec.cycles)
    recorded.push_back(to_string(units_at(code, cy.recorded)));
  c.expect(recorded == std::vector<std::string>{"O1-U1-O2-U2-O3-U3-", "U1-O1-U2-O2-U3-O3-"}, "recorded cycles");
  c.expect(genus(code) == 1, "genus");
}

void fixture_8_20(Check& c) {
  const auto code = parse_gauss(knot_8_20);
  c.expect(genus(code) == 3, "genus");
  c.expect(genus_oracle(code) == 3, "oracle genus");
  std::set<std::set<Label>> found;
  for (const auto& b : enumerate_bridges(code, BridgeKind::over, 2))
    found.insert(std::set<Label>(b.labels.begin(), b.labels.end()));
  c.expect(found == std::set<std::set<Label>>{{8, 1}, {4, 5}, {2, 6}}, "over-bridges of length >= 2");
}

MoveOutcome move_8_20() {
  const auto code = parse_gauss(knot_8_20);
  const Label labels[] = {4, 5};
  return bridge_replace(code, find_maximal_bridge(code, labels));
}

void move_bytes(Check& c) {
  const auto mo = move_8_20();
  c.expect(same_up_to_rotation(mo.result, parse_gauss("O1+U12+U2-U3+U9-O9-O10+O11-O12+U1+U6-O7-U8-O2-U11-O6-U7-U10+O3+O8-")),
           "result code");
  c.expect(mo.anchor && to_string(*mo.anchor) == "U3+", "anchor");
  c.expect(mo.pattern_labels == std::vector<Label>{3, 2}, "pattern labels");
  c.expect(serialize(mo.reduced) == "O1+U2-U3+U1+U6-O7-U8-O2-O6-U7-O3+O8-", "intermediate code");
}

void move_genus(Check& c) {
  const auto code = parse_gauss(knot_8_20);
  const Label labels[] = {4, 5};
  c.expect(genus(move_8_20().result) == 2, "result genus");
  c.expect(strictly_decreases(code, find_maximal_bridge(code, labels)), "strict decrease");
}

void properties(Check& c) {
  std::mt19937 rng(20261016);
  std::size_t codes = 0, moves = 0;
  auto fail = [&](const GaussCode& code, const std::string& what) {
    if (c.failures.size() < 10)
      c.failures.push_back(what + " on " + serialize(code));
    else
      c.failures.emplace_back();
  };
  while (codes < 1500) {
    const std::size_t n = 1 + rng() % 12;
    const auto code = random_code(rng, n);
    ++codes;
    const auto dec = cycles(code);
    const std::size_t g = genus(code);
    if ((n + dec.count()) % 2 == 0)
      fail(code, "(a) n + s even");
    if (genus_oracle(code) != g || boundary_components(code) != dec.count() + 1 || brute_force_genus(code) != g)
      fail(code, "(b) oracle disagreement");
    for (Label l : code.labels()) {
      const Label one[] = {l};
      const std::size_t after = genus(remove_chords(code, one));
      const bool dropped = after + 1 == g;
      if (!(after == g || dropped) ||
          dropped != (chord_removal_effect(code, l) == RemovalEffect::drops_by_one))
        fail(code, "(c) chord removal of " + std::to_string(l));
    }
    for (const auto& b : enumerate_bridges(code, BridgeKind::both)) {
      ++moves;
      const auto mo = bridge_replace(code, b);
      const std::size_t gr = genus(mo.result);
      const std::size_t gk = genus(remove_chords(code, b.labels));
      if (gr != gk || gr > g)
        fail(code, "(d) move genus");
      if (strictly_decreases(code, b) != (gk < g))
        fail(code, "(e) strict decrease");
      try {
        GaussCode copy(std::vector<Unit>(mo.result.units().begin(), mo.result.units().end()));
        if (!copy.empty() && !copy.is_signed())
          fail(code, "(f) unsigned result");
      } catch (const std::exception& e) {
        fail(code, std::string("(f) ") + e.what());
      }
    }
    if (genus(rii_reduce(code)) > g)
      fail(code, "(g) reduction raised genus");
  }
  if (moves < 1000)
    c.failures.push_back("only " + std::to_string(moves) + " moves exercised");
  std::cout << "  " << codes << " codes, " << moves << " moves\n";
}

void dt_fixtures(Check& c) {
  const auto g3 = dt_to_gauss(parse_dt("-12 26 22 -14 28 -2 -20 30 -24 8 -32 -16 4 10 18 -6"));
  c.expect(g3.crossings() == 16 && genus(g3) == 3, "16-crossing genus 3 code");
  try {
    parse_dt("4 10 -26 -22 -18 2 20 -26 -32 -28 14 30 -6 -12 -8 24");
    c.expect(false, "code with a repeated entry accepted");
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    c.expect(msg.find("duplicate 26") != std::string::npos && msg.find("missing 16") != std::string::npos,
             "diagnostic: " + msg);
  }
  const auto g5 = dt_to_gauss(parse_dt("4 10 -26 -22 -18 2 20 -16 -32 -28 14 30 -6 -12 -8 24"));
  c.expect(genus(g5) == 5, "16-crossing genus 5 code");
}

void search_fixture(Check& c) {
  const auto code = parse_gauss(knot_8_20);
  SearchConfig cfg;
  cfg.max_depth = 1;
  const auto first = search(code, cfg);
  c.expect(first.best_genus == 2, "best genus");
  auto same = [&](const SearchResult& r) {
    return r.best_code == first.best_code && r.best_genus == first.best_genus &&
           r.nodes_expanded == first.nodes_expanded && r.duplicates_pruned == first.duplicates_pruned;
  };
  for (int i = 0; i < 3; ++i)
    c.expect(same(search(code, cfg)), "repeat run differs");
  SearchConfig threaded = cfg;
  threaded.threads = 4;
  c.expect(same(search(code, threaded)), "threaded run differs");
  std::vector<std::future<SearchResult>> runs;
  for (int i = 0; i < 4; ++i)
    runs.push_back(std::async(std::launch::async, [&] { return search(code, threaded); }));
  for (auto& r : runs)
    c.expect(same(r.get()), "concurrent run differs");
}

void rii_fixture(Check& c) {
  const auto code = parse_gauss("O1+U2-U1+O2-");
  c.expect(genus(code) == 1, "genus before");
  const auto reduced = rii_reduce(code);
  c.expect(reduced.empty() && genus(reduced) == 0, "reduces to the empty code");
  const auto t = parse_gauss(trefoil);
  c.expect(rii_reduce(t) == t && !find_rii_pair(t), "trefoil is a fixed point");
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"trefoil fixture", trefoil_fixture},
      {"8_20 fixture", fixture_8_20},
      {"move byte-exactness", move_bytes},
      {"genus around the move", move_genus},
      {"property suite", properties},
      {"DT fixtures", dt_fixtures},
      {"search", search_fixture},
      {"RII reduction", rii_fixture},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << '\n';
    for (const auto& f : c.failures)
      if (!f.empty())
        std::cout << "  " << f << '\n';
  }
  return failed == 0 ? 0 : 1;
}
