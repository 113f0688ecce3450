#include <algorithm>

#include "doctest.h"
#include "kapn/power_map.hpp"
#include "oracle.hpp"

using namespace kapn;
using namespace kapn::kasami;
using gf2n::make_field;

namespace {

// Full DDT maximum through the oracle field.
std::uint32_t oracle_delta(int n, std::uint64_t poly, std::uint64_t d) {
  const oracle::Gf ref{n, poly};
  std::vector<std::uint32_t> lut(ref.size());
  for (std::uint32_t x = 0; x < ref.size(); ++x) lut[x] = ref.pow(x, d);
  std::uint32_t best = 0;
  std::vector<std::uint32_t> row(ref.size());
  for (std::uint32_t a = 1; a < ref.size(); ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t x = 0; x < ref.size(); ++x) best = std::max(best, ++row[lut[x] ^ lut[x ^ a]]);
  }
  return best;
}

std::vector<std::uint32_t> sorted_row(std::vector<std::uint32_t> row) {
  std::sort(row.begin(), row.end());
  return row;
}

}  // namespace

TEST_CASE("exponents") {
  CHECK(gold_exponent(1) == 3);
  CHECK(kasami_exponent(1) == 3);
  CHECK(kasami_exponent(2) == 13);
  CHECK(kasami_exponent(3) == 57);
}

TEST_CASE("spectrum examples") {
  const PowerFunction cube(make_field(3), 3);
  const auto s = derivative_spectrum(cube, kOne);
  for (auto c : s.row) CHECK((c == 0 || c == 2));
  std::uint64_t total = 0;
  for (auto c : s.row) total += c;
  CHECK(total == 8);

  CHECK(derivative_spectrum(PowerFunction(make_field(4), 5), kOne).delta == 4);
  CHECK(differential_uniformity(PowerFunction(make_field(4), 3)) == 2);
  CHECK(differential_uniformity(PowerFunction(make_field(4), 5), Sweep::AllDirections) == 4);
  CHECK(is_apn(PowerFunction(make_field(5), 13)));
  CHECK_FALSE(is_apn(PowerFunction(make_field(4), 5)));
  for (int n = 2; n <= 8; ++n) CHECK(differential_uniformity(PowerFunction(make_field(n), 1)) == (1u << n));

  try {
    derivative_spectrum(cube, kZero);
    FAIL("expected ZeroDirection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroDirection);
  }
}

TEST_CASE("every direction is a relabeled a = 1 row") {
  for (int n = 2; n <= 10; ++n) {
    const auto f = make_field(n);
    for (std::int64_t d : {3, 5, 7, 13, 57, 11}) {
      const PowerFunction F(f, d);
      const auto base = sorted_row(derivative_spectrum(F, kOne).row);
      for (std::uint32_t a = 2; a < f.size(); ++a) {
        REQUIRE(sorted_row(derivative_spectrum(F, Elem(a)).row) == base);
      }
    }
  }
}

TEST_CASE("shortcut, full sweep and oracle agree") {
  for (int n = 2; n <= 8; ++n) {
    const auto f = make_field(n);
    for (std::int64_t d = 1; d < 40; ++d) {
      const PowerFunction F(f, d);
      const auto shortcut = differential_uniformity(F, Sweep::DirectionOne);
      REQUIRE(shortcut == differential_uniformity(F, Sweep::AllDirections));
      REQUIRE(shortcut == oracle_delta(n, f.poly(), d));
    }
  }
}

TEST_CASE("Kasami exponents are APN for n up to 12") {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      if (oracle::gcd(k, n) != 1) continue;
      CHECK(differential_uniformity(kasami_function(make_field(n), k)) == 2);
    }
  }
}

TEST_CASE("catalog contents") {
  const auto has = [](const std::vector<FamilyEntry>& es, const std::string& family, std::int64_t d) {
    return std::any_of(es.begin(), es.end(), [&](const auto& e) { return e.family == family && e.d == d; });
  };
  const auto five = catalog_table1(5);
  CHECK(has(five, "Welch", 7));
  CHECK(has(five, "Niho", 5));
  CHECK(has(five, "Inverse", 15));
  CHECK(has(five, "Dobbertin", 29));
  CHECK(has(five, "Kasami", 13));
  const auto four = catalog_table1(4);
  for (const auto& e : four) CHECK((e.family == "Gold" || e.family == "Kasami"));
  const auto ten = catalog_table1(10);
  CHECK(has(ten, "Dobbertin", 256 + 64 + 16 + 4 - 1));
  for (int n = 3; n <= 10; ++n) {
    for (const auto& e : catalog_table1(n)) {
      CHECK_MESSAGE(differential_uniformity(PowerFunction(make_field(n), e.d), Sweep::AllDirections) == 2,
                    e.family << " d=" << e.d << " n=" << n);
    }
  }
}
