#pragma once

#include "knotgenus/code.hpp"

#include <string_view>
#include <vector>

namespace knotgenus {

/// Dowker-Thistlethwaite code: entry i is the even visit paired with odd
/// visit 2i+1; its sign carries the over/under information.
struct DtCode {
  std::vector<int> entries;
};

/// Which visit of a crossing is the over-pass when its DT entry is negative.
enum class DtConvention {
  negative_over_at_even, // Knotscape
  negative_under_at_even,
};

/// Whitespace-separated signed even integers whose absolute values are
/// exactly 2, 4, ..., 2n.
DtCode parse_dt(std::string_view text);

/// Unsigned Gauss code of a DT code. Crossings are labelled 1..n in order of
/// their odd visit.
GaussCode dt_to_gauss(const DtCode& dt, DtConvention convention = DtConvention::negative_over_at_even);

} // namespace knotgenus
