#include "knotgenus/oracle.hpp"

namespace knotgenus {

namespace {

std::size_t before(std::size_t i) { return 2 * i; }
std::size_t after(std::size_t i) { return 2 * i + 1; }

} // namespace

RibbonSurface::RibbonSurface(const GaussCode& code) : attachments_(code.size()), bands_(code.crossings()) {
  const long m = static_cast<long>(attachments_);
  if (m == 0) {
    // Bare annulus: one vertex per circle, one radial edge, one square face.
    vertices_ = 2;
    edges_ = 3;
    faces_ = 1;
    return;
  }

  // Annulus cut into 2m quads between 2m inner and 2m outer vertices.
  vertices_ = 4 * m;
  edges_ = 2 * m + 2 * m + 2 * m;
  faces_ = 2 * m;
  // Each band: two new side edges and one face; its ends are existing edges.
  edges_ += 2 * static_cast<long>(bands_);
  faces_ += static_cast<long>(bands_);

  // Stretches of the inner circle left free between attachment intervals.
  for (std::size_t i = 0; i < attachments_; ++i)
    inner_boundary_.push_back({after(i), before((i + 1) % attachments_)});

  // Sides of the band for each label. An untwisted band attached on the same
  // side of the circle at both ends joins the near corner of one end to the
  // far corner of the other.
  std::vector<std::size_t> first_seen(code.max_label() + 1, attachments_);
  for (std::size_t i = 0; i < attachments_; ++i) {
    const Label l = code[i].label;
    if (first_seen[l] == attachments_) {
      first_seen[l] = i;
      continue;
    }
    const std::size_t a = first_seen[l];
    inner_boundary_.push_back({before(a), after(i)});
    inner_boundary_.push_back({after(a), before(i)});
  }
}

std::size_t RibbonSurface::boundary_components() const {
  if (attachments_ == 0)
    return 2;

  const std::size_t nodes = 2 * attachments_;
  std::vector<std::array<std::size_t, 2>> incident(nodes, {nodes * 4, nodes * 4});
  for (std::size_t e = 0; e < inner_boundary_.size(); ++e) {
    for (std::size_t end : {inner_boundary_[e].a, inner_boundary_[e].b}) {
      auto& slot = incident[end];
      (slot[0] == nodes * 4 ? slot[0] : slot[1]) = e;
    }
  }

  std::vector<bool> used(inner_boundary_.size(), false);
  std::size_t walks = 0;
  for (std::size_t start = 0; start < inner_boundary_.size(); ++start) {
    if (used[start])
      continue;
    ++walks;
    std::size_t edge = start;
    std::size_t node = inner_boundary_[start].b;
    while (!used[edge]) {
      used[edge] = true;
      const auto& slot = incident[node];
      edge = slot[0] == edge ? slot[1] : slot[0];
      node = inner_boundary_[edge].a == node ? inner_boundary_[edge].b : inner_boundary_[edge].a;
    }
  }
  return walks + 1; // outer circle
}

long RibbonSurface::euler_characteristic() const noexcept { return vertices_ - edges_ + faces_; }

std::size_t RibbonSurface::capped_genus() const {
  const long chi = euler_characteristic() + static_cast<long>(boundary_components()) - 1;
  if ((1 - chi) % 2 != 0 || chi > 1)
    throw InvariantViolation("capped ribbon surface has inconsistent Euler characteristic");
  return static_cast<std::size_t>((1 - chi) / 2);
}

std::size_t boundary_components(const GaussCode& code) { return RibbonSurface(code).boundary_components(); }

std::size_t genus_oracle(const GaussCode& code) { return RibbonSurface(code).capped_genus(); }

} // namespace knotgenus
