#include "knotgenus/genus.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace knotgenus {

namespace {

constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

Position sigma(const GaussCode& code, Position i) { return code.next(code.partner(i)); }

} // namespace

CycleDecomposition cycles(const GaussCode& code) {
  CycleDecomposition dec;
  const std::size_t m = code.size();
  dec.orbit_of.assign(m, unassigned);
  dec.arc_owner.assign(m, unassigned);

  for (Position seed = 0; seed < m; ++seed) {
    if (dec.orbit_of[seed] != unassigned)
      continue;
    const std::size_t id = dec.cycles.size();
    Cycle c;
    Position p = seed;
    do {
      dec.orbit_of[p] = id;
      // The step partner(p) -> next(partner(p)) walks the arc leaving partner(p).
      dec.arc_owner[code.partner(p)] = id;
      c.orbit.push_back(p);
      p = sigma(code, p);
    } while (p != seed);

    // Present the orbit from its smallest-labelled element.
    auto start = std::min_element(c.orbit.begin(), c.orbit.end(), [&](Position a, Position b) {
      return std::pair(code[a].label, a) < std::pair(code[b].label, b);
    });
    std::rotate(c.orbit.begin(), start, c.orbit.end());
    c.recorded.reserve(2 * c.orbit.size());
    for (Position y : c.orbit) {
      c.recorded.push_back(y);
      c.recorded.push_back(code.partner(y));
    }
    dec.cycles.push_back(std::move(c));
  }
  return dec;
}

std::vector<Position> cycle_through_arc(const GaussCode& code, Position from) {
  std::vector<Position> out{from};
  Position y = code.next(from);
  while (true) {
    const Position q = code.partner(y);
    if (q == from)
      break;
    out.push_back(y);
    out.push_back(q);
    y = code.next(q);
  }
  out.push_back(y);
  // `from` closes the walk through the final chord step (y, from).
  return out;
}

std::vector<Unit> units_at(const GaussCode& code, std::span<const Position> positions) {
  std::vector<Unit> out;
  out.reserve(positions.size());
  for (Position p : positions)
    out.push_back(code[p]);
  return out;
}

std::size_t genus(const GaussCode& code, const CycleDecomposition& dec) {
  const std::size_t n = code.crossings();
  const std::size_t s = dec.count();
  if ((n + s) % 2 == 0)
    throw InvariantViolation("n + s is even; cycle decomposition is inconsistent");
  return (n + 1 - s) / 2;
}

std::size_t genus(const GaussCode& code) { return genus(code, cycles(code)); }

GaussCode remove_chords(const GaussCode& code, std::span<const Label> labels) {
  std::set<Label> drop(labels.begin(), labels.end());
  for (Label l : drop)
    if (!code.has_label(l))
      throw InvalidInput("label " + std::to_string(l) + ": not present in code");
  std::vector<Unit> kept;
  kept.reserve(code.size());
  for (const auto& u : code.units())
    if (!drop.contains(u.label))
      kept.push_back(u);
  return GaussCode(std::move(kept));
}

RemovalEffect chord_removal_effect(const GaussCode& code, Label label) {
  auto [a, b] = code.positions_of(label);
  const auto dec = cycles(code);
  return dec.orbit_of[a] == dec.orbit_of[b] ? RemovalEffect::drops_by_one : RemovalEffect::unchanged;
}

} // namespace knotgenus
