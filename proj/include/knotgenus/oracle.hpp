#pragma once

#include "knotgenus/code.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace knotgenus {

/// Independent check on the cycle formula.
///
/// Builds the surface obtained from an annulus by gluing one untwisted band
/// per chord along its inner boundary circle, as a cell complex, and reads
/// off its boundary circles by walking boundary edges. Shares no traversal
/// code with cycles().
class RibbonSurface {
public:
  explicit RibbonSurface(const GaussCode& code);

  /// Boundary circles of annulus plus bands, the outer circle included.
  std::size_t boundary_components() const;
  /// V - E + F of the cell structure.
  long euler_characteristic() const noexcept;
  /// Genus after capping every boundary circle but the outer one with a disk.
  std::size_t capped_genus() const;

private:
  // Corner nodes on the inner circle: 2*i is the point just before
  // attachment point i, 2*i+1 the point just after it.
  struct BoundaryEdge {
    std::size_t a, b;
  };

  std::size_t attachments_ = 0;
  std::size_t bands_ = 0;
  std::vector<BoundaryEdge> inner_boundary_;
  long vertices_ = 0, edges_ = 0, faces_ = 0;
};

std::size_t boundary_components(const GaussCode& code);
std::size_t genus_oracle(const GaussCode& code);

} // namespace knotgenus
