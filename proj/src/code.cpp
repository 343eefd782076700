#include "knotgenus/code.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace knotgenus {

namespace {

char sign_char(Sign s) {
  switch (s) {
  case Sign::positive: return '+';
  case Sign::negative: return '-';
  default: return '\0';
  }
}

std::string label_error(Label l, std::string_view what) {
  std::ostringstream os;
  os << "label " << l << ": " << what;
  return os.str();
}

} // namespace

std::string to_string(const Unit& u) {
  std::string s(1, pass_char(u.pass));
  s += std::to_string(u.label);
  if (char c = sign_char(u.sign))
    s += c;
  return s;
}

std::string to_string(std::span<const Unit> units) {
  std::string s;
  for (const auto& u : units)
    s += to_string(u);
  return s;
}

GaussCode::GaussCode(std::vector<Unit> units) : units_(std::move(units)) {
  std::size_t unsigned_count = 0;
  for (Position i = 0; i < units_.size(); ++i) {
    const Unit& u = units_[i];
    if (u.label == 0)
      throw InvalidInput("label 0 is not a natural number");
    if (u.sign == Sign::unknown)
      ++unsigned_count;
    auto [it, fresh] = where_.try_emplace(u.label, i, i);
    if (fresh)
      continue;
    auto& [first, second] = it->second;
    if (first != second)
      throw InvalidInput(label_error(u.label, "appears more than twice"));
    const Unit& other = units_[first];
    if (other.pass == u.pass)
      throw InvalidInput(label_error(u.label, std::string("both units are ") +
                                                  (u.pass == Pass::over ? "over" : "under") + " passes"));
    if (other.sign != u.sign)
      throw InvalidInput(label_error(u.label, "sign mismatch"));
    second = i;
  }
  for (const auto& [label, pos] : where_)
    if (pos.first == pos.second)
      throw InvalidInput(label_error(label, "appears only once"));
  if (unsigned_count != 0 && unsigned_count != units_.size())
    throw InvalidInput("mixed signed and unsigned units");

  partner_.resize(units_.size());
  for (auto& [label, pos] : where_) {
    partner_[pos.first] = pos.second;
    partner_[pos.second] = pos.first;
    if (units_[pos.first].pass != Pass::over)
      std::swap(pos.first, pos.second);
  }
}

bool GaussCode::is_signed() const noexcept {
  return units_.empty() || units_.front().sign != Sign::unknown;
}

std::vector<Label> GaussCode::labels() const {
  std::vector<Label> out;
  out.reserve(where_.size());
  for (const auto& kv : where_)
    out.push_back(kv.first);
  return out;
}

Label GaussCode::max_label() const noexcept { return where_.empty() ? 0 : where_.rbegin()->first; }

bool GaussCode::has_label(Label l) const noexcept { return where_.contains(l); }

std::pair<Position, Position> GaussCode::positions_of(Label l) const {
  auto it = where_.find(l);
  if (it == where_.end())
    throw InvalidInput(label_error(l, "not present in code"));
  return it->second;
}

Sign GaussCode::sign_of(Label l) const { return units_[positions_of(l).first].sign; }

GaussCode parse_gauss(std::string_view text) {
  std::vector<Unit> units;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](std::size_t at, std::string_view why) {
    std::size_t end = std::min(text.size(), at + 8);
    std::ostringstream os;
    os << "malformed unit at offset " << at << " ('" << text.substr(at, end - at) << "'): " << why;
    throw InvalidInput(os.str());
  };

  skip_ws();
  while (i < text.size()) {
    const std::size_t start = i;
    Unit u;
    if (text[i] == 'O')
      u.pass = Pass::over;
    else if (text[i] == 'U')
      u.pass = Pass::under;
    else
      fail(start, "expected 'O' or 'U'");
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail(start, "expected a label");
    std::uint64_t value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > 0xffffffffu)
        fail(start, "label out of range");
      ++i;
    }
    u.label = static_cast<Label>(value);
    if (i < text.size() && text[i] == '+') {
      u.sign = Sign::positive;
      ++i;
    } else if (i < text.size() && text[i] == '-') {
      u.sign = Sign::negative;
      ++i;
    } else {
      u.sign = Sign::unknown;
    }
    units.push_back(u);
    skip_ws();
  }
  return GaussCode(std::move(units));
}

std::string serialize(const GaussCode& code, Position start) {
  std::string s;
  const std::size_t m = code.size();
  for (std::size_t k = 0; k < m; ++k)
    s += to_string(code[(start + k) % m]);
  return s;
}

std::vector<Unit> relabeled_rotation(const GaussCode& code, Position start) {
  const std::size_t m = code.size();
  std::vector<Unit> out;
  out.reserve(m);
  std::unordered_map<Label, Label> renumber;
  for (std::size_t k = 0; k < m; ++k) {
    Unit u = code[(start + k) % m];
    auto [it, fresh] = renumber.try_emplace(u.label, static_cast<Label>(renumber.size() + 1));
    u.label = it->second;
    out.push_back(u);
  }
  return out;
}

GaussCode canonical_form(const GaussCode& code) {
  if (code.empty())
    return code;
  std::vector<Unit> best = relabeled_rotation(code, 0);
  for (Position s = 1; s < code.size(); ++s) {
    // Only rotations that can start with the least pass are candidates.
    if (code[s].pass != best.front().pass && best.front().pass == Pass::over)
      continue;
    auto candidate = relabeled_rotation(code, s);
    if (candidate < best)
      best = std::move(candidate);
  }
  return GaussCode(std::move(best));
}

GaussCode rotate(const GaussCode& code, Position start) {
  std::vector<Unit> out;
  out.reserve(code.size());
  for (std::size_t k = 0; k < code.size(); ++k)
    out.push_back(code[(start + k) % code.size()]);
  return GaussCode(std::move(out));
}

GaussCode mirror_passes(const GaussCode& code) {
  std::vector<Unit> out(code.units().begin(), code.units().end());
  for (auto& u : out)
    u.pass = opposite(u.pass);
  return GaussCode(std::move(out));
}

GaussCode strip_signs(const GaussCode& code) {
  std::vector<Unit> out(code.units().begin(), code.units().end());
  for (auto& u : out)
    u.sign = Sign::unknown;
  return GaussCode(std::move(out));
}

GaussCode attach_signs(const GaussCode& code, const std::map<Label, Sign>& signs) {
  if (!code.empty() && code.is_signed())
    throw InvalidInput("code is already signed");
  std::vector<Unit> out(code.units().begin(), code.units().end());
  for (auto& u : out) {
    auto it = signs.find(u.label);
    if (it == signs.end())
      throw InvalidInput(label_error(u.label, "unsigned"));
    if (it->second == Sign::unknown)
      throw InvalidInput(label_error(u.label, "sign map entry is unknown"));
    u.sign = it->second;
  }
  return GaussCode(std::move(out));
}

std::vector<BatchLine> read_batch(std::istream& in) {
  std::vector<BatchLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    auto last = line.find_last_not_of(" \t");
    out.push_back({number, line.substr(first, last - first + 1)});
  }
  return out;
}

} // namespace knotgenus
