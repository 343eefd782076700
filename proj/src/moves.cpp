#include "knotgenus/moves.hpp"

#include "knotgenus/genus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace knotgenus {

namespace {

std::string join(std::span<const Label> labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << (i ? "," : "") << labels[i];
  return os.str();
}

void check_bridge(const GaussCode& code, const Bridge& bridge) {
  auto fail = [&] { throw InvalidInput("bridge {" + join(bridge.labels) + "} is not contained in code"); };
  const std::size_t k = bridge.positions.size();
  if (k == 0 || k >= code.size() || bridge.labels.size() != k)
    fail();
  for (std::size_t j = 0; j < k; ++j) {
    const Position p = bridge.positions[j];
    if (p >= code.size())
      fail();
    if (j > 0 && p != code.next(bridge.positions[j - 1]))
      fail();
    if (code[p].pass != bridge.kind || code[p].label != bridge.labels[j])
      fail();
  }
}

void require_signed(const GaussCode& code, const char* op) {
  if (!code.is_signed())
    throw InvalidInput(std::string(op) + " requires a signed code");
}

} // namespace

Bridge bridge_at(const GaussCode& code, Position start, std::size_t length) {
  if (code.empty() || start >= code.size() || length == 0 || length >= code.size())
    throw InvalidInput("bridge position out of range");
  Bridge b;
  b.kind = code[start].pass;
  Position p = start;
  for (std::size_t j = 0; j < length; ++j, p = code.next(p)) {
    if (code[p].pass != b.kind)
      throw InvalidInput("units from position " + std::to_string(start) + " do not share one pass");
    b.positions.push_back(p);
    b.labels.push_back(code[p].label);
  }
  b.maximal = code[code.prev(start)].pass != b.kind && code[p].pass != b.kind;
  return b;
}

std::vector<Bridge> enumerate_bridges(const GaussCode& code, BridgeKind kind, std::size_t min_len) {
  std::vector<Bridge> out;
  if (code.empty())
    return out;
  const std::size_t m = code.size();

  // Any pass change marks a run start; a valid nonempty code has both passes.
  Position origin = 0;
  while (code[code.prev(origin)].pass == code[origin].pass)
    ++origin;

  std::vector<std::pair<Position, Bridge>> keyed;
  std::size_t walked = 0;
  while (walked < m) {
    const Position start = (origin + walked) % m;
    std::size_t len = 1;
    while (walked + len < m && code[(start + len) % m].pass == code[start].pass)
      ++len;
    walked += len;
    const Pass pass = code[start].pass;
    const bool wanted = kind == BridgeKind::both || (kind == BridgeKind::over) == (pass == Pass::over);
    if (!wanted || len < min_len)
      continue;
    Bridge b = bridge_at(code, start, len);
    const Position key = *std::min_element(b.positions.begin(), b.positions.end());
    keyed.emplace_back(key, std::move(b));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.reserve(keyed.size());
  for (auto& kv : keyed)
    out.push_back(std::move(kv.second));
  return out;
}

Bridge find_bridge(const GaussCode& code, std::span<const Label> labels) {
  const std::set<Label> wanted(labels.begin(), labels.end());
  if (!wanted.empty() && wanted.size() == labels.size()) {
    for (Pass kind : {Pass::over, Pass::under}) {
      std::vector<bool> in_run(code.size(), false);
      bool present = true;
      for (Label l : wanted) {
        if (!code.has_label(l)) {
          present = false;
          break;
        }
        auto [over, under] = code.positions_of(l);
        in_run[kind == Pass::over ? over : under] = true;
      }
      if (!present)
        break;
      std::vector<Position> starts;
      for (Position p = 0; p < code.size(); ++p)
        if (in_run[p] && !in_run[code.prev(p)])
          starts.push_back(p);
      if (starts.size() != 1)
        continue;
      Bridge b = bridge_at(code, starts.front(), wanted.size());
      if (b.kind == kind)
        return b;
    }
  }
  throw InvalidInput("labels {" + join(labels) + "} do not form a bridge");
}

Bridge find_maximal_bridge(const GaussCode& code, std::span<const Label> labels) {
  Bridge b;
  try {
    b = find_bridge(code, labels);
  } catch (const InvalidInput&) {
    b.maximal = false;
  }
  if (!b.maximal)
    throw InvalidInput("labels {" + join(labels) + "} do not form a maximal bridge");
  return b;
}

bool strictly_decreases(const GaussCode& code, const Bridge& bridge) {
  check_bridge(code, bridge);
  const auto dec = cycles(code);
  std::set<std::size_t> seen{dec.arc_owner[code.prev(bridge.positions.front())]};
  for (Position p : bridge.positions)
    if (!seen.insert(dec.arc_owner[p]).second)
      return true;
  return false;
}

std::size_t knotoid_genus(const GaussCode& code, const Bridge& bridge) {
  check_bridge(code, bridge);
  return genus(remove_chords(code, bridge.labels));
}

MoveOutcome bridge_replace(const GaussCode& code, const Bridge& bridge) {
  require_signed(code, "bridge-replacing move");
  check_bridge(code, bridge);

  const Pass along = bridge.kind;        // pass of the new bridge
  const Pass across = opposite(along);   // pass of the strands it crosses

  MoveOutcome out;
  out.removed_labels = bridge.labels;
  std::sort(out.removed_labels.begin(), out.removed_labels.end());
  out.reduced = remove_chords(code, out.removed_labels);
  out.strict_decrease_predicted = strictly_decreases(code, bridge);
  if (out.reduced.empty()) {
    out.result = out.reduced;
    return out;
  }

  const std::set<Label> removed(out.removed_labels.begin(), out.removed_labels.end());
  Position anchor = code.prev(bridge.positions.front());
  while (removed.contains(code[anchor].label))
    anchor = code.prev(anchor);
  out.anchor = code[anchor];

  // Position of the anchor once the bridge chords are gone.
  Position x = 0;
  for (Position p = 0; p < anchor; ++p)
    if (!removed.contains(code[p].label))
      ++x;

  const GaussCode& reduced = out.reduced;
  const auto guide = cycle_through_arc(reduced, x);
  out.guide_cycle = units_at(reduced, guide);

  // Chord steps (guide[o], guide[o+1]) at odd offsets o, scanned leftward
  // from the anchor, i.e. by decreasing offset.
  std::vector<std::pair<Position, Position>> patterns;
  for (std::size_t o = guide.size() - 1; o < guide.size(); o -= 2) {
    const Unit& first = reduced[guide[o]];
    const Unit& second = reduced[guide[(o + 1) % guide.size()]];
    const bool positive_pattern =
        first.pass == along && second.pass == across && first.sign == Sign::positive;
    const bool negative_pattern =
        first.pass == across && second.pass == along && first.sign == Sign::negative;
    if (positive_pattern || negative_pattern) {
      patterns.emplace_back(guide[o], guide[(o + 1) % guide.size()]);
      out.pattern_labels.push_back(first.label);
    }
  }

  const Label base = code.max_label();
  const std::size_t k = patterns.size();
  std::vector<std::optional<Unit>> before(reduced.size()), after(reduced.size());
  for (std::size_t j = 0; j < k; ++j) {
    const Label odd = base + static_cast<Label>(2 * j + 1);
    const auto [first, second] = patterns[j];
    if (after[second] || before[first])
      throw InvariantViolation("two crossings requested in one slot of the guide cycle");
    after[second] = Unit{across, odd, Sign::negative};
    before[first] = Unit{across, odd + 1, Sign::positive};
  }

  std::vector<Unit> units;
  units.reserve(reduced.size() + 4 * k);
  for (Position r = 0; r < reduced.size(); ++r) {
    if (before[r])
      units.push_back(*before[r]);
    units.push_back(reduced[r]);
    if (after[r])
      units.push_back(*after[r]);
    if (r == x) {
      for (std::size_t i = 1; i <= 2 * k; ++i) {
        const Label l = base + static_cast<Label>(i);
        units.push_back(Unit{along, l, i % 2 ? Sign::negative : Sign::positive});
        out.inserted_labels.push_back(l);
      }
    }
  }
  out.result = GaussCode(std::move(units));
  return out;
}

std::optional<RiiPair> find_rii_pair(const GaussCode& code) {
  require_signed(code, "Reidemeister II reduction");
  const std::size_t m = code.size();
  if (m < 4)
    return std::nullopt;
  for (Position i = 0; i < m; ++i) {
    const Position j = code.next(i);
    const Unit& a = code[i];
    const Unit& b = code[j];
    if (a.pass != Pass::over || b.pass != Pass::over || a.sign != negate(b.sign))
      continue;
    const Position ua = code.partner(i);
    const Position ub = code.partner(j);
    if (code.next(ua) == ub || code.next(ub) == ua)
      return RiiPair{a.label, b.label};
  }
  return std::nullopt;
}

RiiReduction rii_reduce_traced(const GaussCode& code) {
  RiiReduction out{code, {}};
  while (auto pair = find_rii_pair(out.result)) {
    const Label both[] = {pair->first, pair->second};
    out.result = remove_chords(out.result, both);
    out.cancelled.push_back(*pair);
  }
  return out;
}

GaussCode rii_reduce(const GaussCode& code) { return rii_reduce_traced(code).result; }

} // namespace knotgenus
