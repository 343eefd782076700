#pragma once

#include "knotgenus/code.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace knotgenus {

/// One Seifert circle of a code, i.e. an orbit of sigma = next o partner.
///
/// `recorded` is the alternating view: y0, partner(y0), y1, partner(y1), ...
/// where y_{k+1} = next(partner(y_k)). Pairs (2i, 2i+1) are chord steps and
/// pairs (2i+1, 2i+2) are arc steps, wrapping at the end.
struct Cycle {
  std::vector<Position> orbit;
  std::vector<Position> recorded;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;
  /// orbit_of[i]: index into `cycles` of the orbit containing position i.
  std::vector<std::size_t> orbit_of;
  /// arc_owner[i]: the cycle traversing the arc from i to next(i).
  std::vector<std::size_t> arc_owner;

  /// Number of Seifert circles, 1 for the empty code.
  std::size_t count() const noexcept { return cycles.empty() ? 1 : cycles.size(); }
};

CycleDecomposition cycles(const GaussCode& code);

/// The recorded cycle through the arc leaving `from`, presented starting at
/// `from`: from, next(from), partner(next(from)), ... Chord steps sit at
/// index pairs (2i+1, 2i+2), the last one wrapping back to `from`.
std::vector<Position> cycle_through_arc(const GaussCode& code, Position from);

std::vector<Unit> units_at(const GaussCode& code, std::span<const Position> positions);

/// Canonical genus (n - s + 1) / 2.
std::size_t genus(const GaussCode& code);
std::size_t genus(const GaussCode& code, const CycleDecomposition& dec);

/// Deletes both units of every listed label, keeping cyclic order.
GaussCode remove_chords(const GaussCode& code, std::span<const Label> labels);

enum class RemovalEffect { drops_by_one, unchanged };

/// Genus change caused by deleting one chord: it drops by one exactly when
/// both endpoints lie on the same Seifert circle.
RemovalEffect chord_removal_effect(const GaussCode& code, Label label);

} // namespace knotgenus
