#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kapn/gf2n.hpp"

namespace kapn::kasami {

using gf2n::Field;

// F(x) = x^d on GF(2^n), zero base handled by the gf2n convention.
class PowerFunction {
 public:
  PowerFunction(Field field, std::int64_t d);

  const Field& field() const noexcept { return field_; }
  std::int64_t exponent() const noexcept { return d_; }
  Elem operator()(Elem x) const { return field_.pow(x, d_); }

  // Values at every x, indexed by x.bits.
  std::vector<std::uint32_t> table() const;

 private:
  Field field_;
  std::int64_t d_;
};

std::int64_t gold_exponent(int i);
std::int64_t kasami_exponent(int k);
PowerFunction kasami_function(const Field& f, int k);

struct DifferentialSpectrum {
  Elem a;
  std::vector<std::uint32_t> row;  // row[b] = #{x : F(x) + F(x+a) = b}
  std::uint32_t delta = 0;
};

DifferentialSpectrum derivative_spectrum(const PowerFunction& F, Elem a);

enum class Sweep {
  DirectionOne,   // power maps: every direction is a relabeled a = 1 row
  AllDirections,  // full table, O(4^n)
};

std::uint64_t differential_uniformity(const PowerFunction& F, Sweep sweep = Sweep::DirectionOne);
bool is_apn(const PowerFunction& F, Sweep sweep = Sweep::DirectionOne);

struct FamilyEntry {
  std::string family;  // Gold | Kasami | Welch | Niho | Inverse | Dobbertin
  std::vector<std::pair<std::string, int>> params;
  std::string condition;
  std::int64_t d = 0;
};

// Known APN exponent families whose conditions hold at n (n >= 3). Gold and
// Kasami are listed for every i in [1, n-1] with gcd(i, n) = 1.
std::vector<FamilyEntry> catalog_table1(int n);

}  // namespace kapn::kasami
