#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotgenus {

using Label = std::uint32_t;
using Position = std::size_t;

/// Raised for input that violates the Gauss-code (or DT-code) rules.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed result breaks one of its own postconditions.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class Pass : std::uint8_t { over, under };
enum class Sign : std::uint8_t { positive, negative, unknown };

constexpr Pass opposite(Pass p) noexcept { return p == Pass::over ? Pass::under : Pass::over; }

constexpr char pass_char(Pass p) noexcept { return p == Pass::over ? 'O' : 'U'; }

constexpr Sign negate(Sign s) noexcept {
  switch (s) {
  case Sign::positive: return Sign::negative;
  case Sign::negative: return Sign::positive;
  default: return Sign::unknown;
  }
}

/// One pass of the strand through a crossing, e.g. "O12-".
struct Unit {
  Pass pass = Pass::over;
  Label label = 1;
  Sign sign = Sign::unknown;

  // Order used by canonical forms: O < U, then label, then '+' < '-' < unknown.
  auto operator<=>(const Unit&) const = default;
};

std::string to_string(const Unit& u);
std::string to_string(std::span<const Unit> units);

/// A cyclic word of 2n units. The stored linearization is arbitrary; only the
/// cyclic order carries meaning. Instances are validated on construction and
/// immutable afterwards.
class GaussCode {
public:
  GaussCode() = default;

  /// Validates pairing, pass alternation, sign coherence and uniform signedness.
  explicit GaussCode(std::vector<Unit> units);

  std::span<const Unit> units() const noexcept { return units_; }
  const Unit& operator[](Position i) const noexcept { return units_[i]; }

  /// Number of units (2n).
  std::size_t size() const noexcept { return units_.size(); }
  /// Number of crossings (n).
  std::size_t crossings() const noexcept { return units_.size() / 2; }
  bool empty() const noexcept { return units_.empty(); }

  /// True when every unit carries + or -. The empty code counts as signed.
  bool is_signed() const noexcept;

  Position next(Position i) const noexcept { return i + 1 == units_.size() ? 0 : i + 1; }
  Position prev(Position i) const noexcept { return i == 0 ? units_.size() - 1 : i - 1; }
  Position partner(Position i) const noexcept { return partner_[i]; }

  /// Labels in increasing order.
  std::vector<Label> labels() const;
  Label max_label() const noexcept;
  bool has_label(Label l) const noexcept;
  /// Positions of the two units carrying `l`, the over-pass first.
  std::pair<Position, Position> positions_of(Label l) const;
  Sign sign_of(Label l) const;

  /// Same linearization, unit for unit.
  friend bool operator==(const GaussCode& a, const GaussCode& b) noexcept { return a.units_ == b.units_; }

private:
  std::vector<Unit> units_;
  std::vector<Position> partner_;
  std::map<Label, std::pair<Position, Position>> where_;
};

/// Parses the textual form, e.g. "O1-U2-O3-U1-O2-U3-". Whitespace between
/// units is ignored. Units written without a sign make an unsigned code.
GaussCode parse_gauss(std::string_view text);

/// Writes the units starting at `start` once around the cycle, no separators.
std::string serialize(const GaussCode& code, Position start = 0);

/// Renumbers labels by first appearance and picks the least rotation.
/// Two codes are cyclically equivalent iff their canonical forms are equal.
GaussCode canonical_form(const GaussCode& code);

/// Relabels by first appearance reading from `start`, rotated to begin there.
std::vector<Unit> relabeled_rotation(const GaussCode& code, Position start);

/// Returns `code` with its units rotated to begin at `start`.
GaussCode rotate(const GaussCode& code, Position start);

/// Flips O and U in every unit. Labels and signs are kept.
GaussCode mirror_passes(const GaussCode& code);

/// Strips every sign.
GaussCode strip_signs(const GaussCode& code);

/// Fills in signs of an all-unsigned code.
GaussCode attach_signs(const GaussCode& code, const std::map<Label, Sign>& signs);

struct BatchLine {
  std::size_t line_number = 0; // 1-based
  std::string text;
};

/// Reads a batch file: one entry per line, blank and '#' lines skipped.
std::vector<BatchLine> read_batch(std::istream& in);

} // namespace knotgenus
