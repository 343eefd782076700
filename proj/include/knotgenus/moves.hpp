#pragma once

#include "knotgenus/code.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace knotgenus {

/// A cyclically contiguous run of units sharing one pass.
struct Bridge {
  Pass kind = Pass::over;
  std::vector<Position> positions;
  std::vector<Label> labels;
  bool maximal = false;

  std::size_t length() const noexcept { return positions.size(); }
};

enum class BridgeKind { over, under, both };

/// Maximal bridges of the requested kind with at least `min_len` units,
/// ordered by the smallest position each one covers.
std::vector<Bridge> enumerate_bridges(const GaussCode& code, BridgeKind kind, std::size_t min_len = 1);

/// Builds the bridge occupying `length` units from `start`. Throws if the
/// run is not single-pass.
Bridge bridge_at(const GaussCode& code, Position start, std::size_t length);

/// Finds the bridge (maximal or not) whose label set is exactly `labels`.
Bridge find_bridge(const GaussCode& code, std::span<const Label> labels);

/// As find_bridge, but the run must also be maximal.
Bridge find_maximal_bridge(const GaussCode& code, std::span<const Label> labels);

/// Whether replacing `bridge` must strictly lower the genus, decided from
/// the Seifert circles through the k+1 arcs touching the bridge.
bool strictly_decreases(const GaussCode& code, const Bridge& bridge);

/// Genus of the knotoid (equivalently the virtual knot) left after the
/// bridge chords are removed.
std::size_t knotoid_genus(const GaussCode& code, const Bridge& bridge);

struct MoveOutcome {
  GaussCode result;
  std::vector<Label> removed_labels;
  /// The code with the bridge chords deleted.
  GaussCode reduced;
  /// Unit the new bridge is attached after; absent when `reduced` is empty.
  std::optional<Unit> anchor;
  /// Recorded cycle of `reduced` through the arc after the anchor, from the anchor.
  std::vector<Unit> guide_cycle;
  std::vector<Label> pattern_labels;
  std::vector<Label> inserted_labels;
  bool strict_decrease_predicted = false;
};

/// The bridge-replacing move on a signed code. Over- and under-bridges are
/// handled symmetrically by exchanging O and U throughout.
MoveOutcome bridge_replace(const GaussCode& code, const Bridge& bridge);

/// A Reidemeister II cancellation: the labels of the two removed crossings,
/// the one met first on the over strand listed first.
using RiiPair = std::pair<Label, Label>;

struct RiiReduction {
  GaussCode result;
  std::vector<RiiPair> cancelled;
};

/// Labels (a, b) whose chords form a cancellable Reidemeister II pair, found
/// by scanning over-pass pairs from position 0. Requires a signed code.
std::optional<RiiPair> find_rii_pair(const GaussCode& code);

RiiReduction rii_reduce_traced(const GaussCode& code);
GaussCode rii_reduce(const GaussCode& code);

} // namespace knotgenus
