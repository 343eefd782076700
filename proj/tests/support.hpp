#pragma once

// Test-only generators and oracles. Nothing here calls into cycles() or the
// ribbon surface, so they can check both.

#include "knotgenus/code.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace knotgenus::testing {

inline constexpr const char* trefoil = "O1-U2-O3-U1-O2-U3-";
inline constexpr const char* knot_8_20 = "O1+U2-U3+O4+O5-U1+U6-O7-U8-U5-O2-O6-U7-O3+U4+O8-";

/// Uniformly shuffled chord diagram with random passes and signs.
inline GaussCode random_code(std::mt19937& rng, std::size_t n, bool with_signs = true) {
  std::vector<Unit> units;
  for (Label l = 1; l <= n; ++l) {
    const Sign s = !with_signs ? Sign::unknown : (rng() % 2 ? Sign::positive : Sign::negative);
    const bool over_first = rng() % 2;
    units.push_back({over_first ? Pass::over : Pass::under, l, s});
    units.push_back({over_first ? Pass::under : Pass::over, l, s});
  }
  std::shuffle(units.begin(), units.end(), rng);
  return GaussCode(std::move(units));
}

/// Brute-force number of Seifert circles, walking positions by hand.
inline std::size_t brute_force_circles(const GaussCode& code) {
  const std::size_t m = code.size();
  if (m == 0)
    return 1;
  std::vector<std::size_t> other(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && code[i].label == code[j].label)
        other[i] = j;
  std::vector<bool> done(m, false);
  std::size_t circles = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (done[i])
      continue;
    ++circles;
    std::size_t p = i;
    while (!done[p]) {
      done[p] = true;
      p = (other[p] + 1) % m;
    }
  }
  return circles;
}

inline std::size_t brute_force_genus(const GaussCode& code) {
  return (code.crossings() + 1 - brute_force_circles(code)) / 2;
}

/// Faces of the 4-valent diagram graph, with the cyclic order at each
/// crossing fixed by its sign. A signed code is realized by a planar diagram
/// iff this equals n + 2.
inline std::size_t diagram_faces(const GaussCode& code) {
  const std::size_t m = code.size();
  // Half-edge id: 2*pos for the strand arriving at pos, 2*pos+1 for leaving.
  auto in = [](std::size_t p) { return 2 * p; };
  auto out = [](std::size_t p) { return 2 * p + 1; };
  std::vector<std::size_t> turn(2 * m);
  std::map<Label, std::array<std::size_t, 2>> at; // over, under
  for (std::size_t p = 0; p < m; ++p)
    at[code[p].label][code[p].pass == Pass::over ? 0 : 1] = p;
  for (const auto& [label, pu] : at) {
    const auto [o, u] = pu;
    const bool positive = code[o].sign == Sign::positive;
    std::array<std::size_t, 4> ring = positive ? std::array{in(o), in(u), out(o), out(u)}
                                               : std::array{in(o), out(u), out(o), in(u)};
    for (std::size_t k = 0; k < 4; ++k)
      turn[ring[k]] = ring[(k + 1) % 4];
  }
  auto across_edge = [&](std::size_t h) { return h % 2 ? in((h / 2 + 1) % m) : out((h / 2 + m - 1) % m); };
  std::vector<bool> seen(2 * m, false);
  std::size_t faces = 0;
  for (std::size_t h0 = 0; h0 < 2 * m; ++h0) {
    if (seen[h0])
      continue;
    ++faces;
    for (std::size_t h = h0; !seen[h]; h = turn[across_edge(h)])
      seen[h] = true;
  }
  return faces;
}

inline bool is_planar(const GaussCode& code) { return code.empty() || diagram_faces(code) == code.crossings() + 2; }

/// All rotations relabelled by first appearance, least one taken, by string
/// building and tuple comparison only.
inline std::vector<Unit> brute_force_canonical(const GaussCode& code) {
  std::vector<Unit> best;
  for (std::size_t s = 0; s < code.size(); ++s) {
    std::map<Label, Label> renumber;
    std::vector<Unit> rot;
    for (std::size_t k = 0; k < code.size(); ++k) {
      Unit u = code[(s + k) % code.size()];
      if (!renumber.count(u.label)) {
        const Label fresh = static_cast<Label>(renumber.size() + 1);
        renumber[u.label] = fresh;
      }
      u.label = renumber[u.label];
      rot.push_back(u);
    }
    auto key = [](const std::vector<Unit>& v) {
      std::vector<std::tuple<int, Label, int>> t;
      for (const auto& u : v)
        t.emplace_back(u.pass == Pass::over ? 0 : 1, u.label, u.sign == Sign::positive ? 0 : u.sign == Sign::negative ? 1 : 2);
      return t;
    };
    if (best.empty() || key(rot) < key(best))
      best = rot;
  }
  return best;
}

} // namespace knotgenus::testing
