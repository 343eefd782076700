#include "knotgenus/dt.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace knotgenus {

DtCode parse_dt(std::string_view text) {
  DtCode dt;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      ++i;
    if (i == text.size())
      break;
    std::size_t end = i;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' && text[end] != '\r')
      ++end;
    std::string_view token = text.substr(i, end - i);
    std::string_view digits = token.front() == '+' ? token.substr(1) : token;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw InvalidInput("DT entry '" + std::string(token) + "' is not an integer");
    if (value == 0 || value % 2 != 0)
      throw InvalidInput("DT entry " + std::string(token) + " is not a nonzero even integer");
    dt.entries.push_back(value);
    i = end;
  }

  const std::size_t n = dt.entries.size();
  std::vector<int> seen(n + 1, 0);
  std::vector<int> duplicates, out_of_range;
  for (int e : dt.entries) {
    const std::size_t half = static_cast<std::size_t>(std::abs(e) / 2);
    if (half > n) {
      out_of_range.push_back(std::abs(e));
      continue;
    }
    if (seen[half]++ == 1)
      duplicates.push_back(std::abs(e));
  }
  std::vector<int> missing;
  for (std::size_t h = 1; h <= n; ++h)
    if (seen[h] == 0)
      missing.push_back(static_cast<int>(2 * h));

  if (!duplicates.empty() || !out_of_range.empty() || !missing.empty()) {
    std::ostringstream os;
    const char* sep = "";
    auto list = [&](const char* what, const std::vector<int>& values) {
      for (int v : values) {
        os << sep << what << ' ' << v;
        sep = ", ";
      }
    };
    list("duplicate", duplicates);
    list("out of range", out_of_range);
    list("missing", missing);
    throw InvalidInput("invalid DT code: " + os.str());
  }
  return dt;
}

GaussCode dt_to_gauss(const DtCode& dt, DtConvention convention) {
  const std::size_t n = dt.entries.size();
  std::vector<Unit> units(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const int e = dt.entries[i];
    const Label label = static_cast<Label>(i + 1);
    const bool over_at_even = (e < 0) == (convention == DtConvention::negative_over_at_even);
    const std::size_t odd = 2 * i;                              // visit 2i+1, zero-based
    const std::size_t even = static_cast<std::size_t>(std::abs(e)) - 1;
    units[even] = Unit{over_at_even ? Pass::over : Pass::under, label, Sign::unknown};
    units[odd] = Unit{over_at_even ? Pass::under : Pass::over, label, Sign::unknown};
  }
  return GaussCode(std::move(units));
}

} // namespace knotgenus
