#include "knotgenus/dt.hpp"
#include "knotgenus/genus.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace knotgenus;
using namespace knotgenus::testing;

namespace {

constexpr const char* dt_genus3 = "-12 26 22 -14 28 -2 -20 30 -24 8 -32 -16 4 10 18 -6";
constexpr const char* dt_duplicate = "4 10 -26 -22 -18 2 20 -26 -32 -28 14 30 -6 -12 -8 24";
constexpr const char* dt_genus5 = "4 10 -26 -22 -18 2 20 -16 -32 -28 14 30 -6 -12 -8 24";

std::string dt_error(const char* text) {
  try {
    parse_dt(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "accepted";
}

} // namespace

TEST_CASE("parse DT codes") {
  CHECK(parse_dt(dt_genus3).entries.size() == 16);
  CHECK(parse_dt("4 6 2").entries == std::vector<int>{4, 6, 2});
  CHECK(parse_dt("").entries.empty());
  CHECK(dt_error(dt_duplicate) == "invalid DT code: duplicate 26, missing 16");
  CHECK(dt_error("4 5 2").find("5") != std::string::npos);
  CHECK(dt_error("4 0 2").find("nonzero even") != std::string::npos);
  CHECK(dt_error("4 6 8") == "invalid DT code: out of range 8, missing 2");
  CHECK(dt_error("4 x 2").find("not an integer") != std::string::npos);
}

TEST_CASE("DT to Gauss") {
  const auto tre = dt_to_gauss(parse_dt("4 6 2"));
  CHECK_FALSE(tre.is_signed());
  CHECK(tre.crossings() == 3);
  for (Position p = 0; p < tre.size(); ++p)
    CHECK(tre[p].pass != tre[tre.next(p)].pass);
  CHECK(genus(tre) == 1);
  CHECK(serialize(tre) == "O1U3O2U1O3U2");

  const auto g3 = dt_to_gauss(parse_dt(dt_genus3));
  CHECK(g3.crossings() == 16);
  CHECK(genus(g3) == 3);
  CHECK(brute_force_genus(g3) == 3);

  const auto g5 = dt_to_gauss(parse_dt(dt_genus5));
  CHECK(g5.crossings() == 16);
  CHECK(genus(g5) == 5);
}

TEST_CASE("negative entries choose the over-pass visit") {
  // Entry -4 for odd visit 1: over at the even visit 4, under at visit 1.
  const auto c = dt_to_gauss(parse_dt("-4 -6 -2"));
  CHECK(c[0] == Unit{Pass::under, 1, Sign::unknown});
  CHECK(c[3] == Unit{Pass::over, 1, Sign::unknown});
  const auto flipped = dt_to_gauss(parse_dt("-4 -6 -2"), DtConvention::negative_under_at_even);
  CHECK(flipped == mirror_passes(c));
}

TEST_CASE("property: DT genus ignores the over/under convention") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    std::vector<int> evens;
    for (int i = 1; i <= n; ++i)
      evens.push_back(2 * i);
    std::shuffle(evens.begin(), evens.end(), rng);
    std::string text;
    bool all_positive = true;
    for (int e : evens) {
      const bool neg = rng() % 2;
      all_positive = all_positive && !neg;
      text += (neg ? "-" : "") + std::to_string(e) + " ";
    }
    const auto dt = parse_dt(text);
    const auto a = dt_to_gauss(dt, DtConvention::negative_over_at_even);
    const auto b = dt_to_gauss(dt, DtConvention::negative_under_at_even);
    CHECK(genus(a) == genus(b));
    CHECK(genus(a) == brute_force_genus(a));

    std::string positive;
    for (int e : evens)
      positive += std::to_string(e) + " ";
    const auto alt = dt_to_gauss(parse_dt(positive));
    for (Position p = 0; p < alt.size(); ++p)
      CHECK(alt[p].pass != alt[alt.next(p)].pass);
  }
}
