#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kapn/gf2n.hpp"
#include "kapn/power_map.hpp"

// Numeric check of the substitution chain that turns
//   X + Y = 1, F(X) + F(Y) = b
// into (v + 1)^(q+1) + c v = 0 with c = b + 1, one b at a time.
//
// Odd n: X = x^(q+1), y = x + z, v = z^(q^2-1). One admissible v per pair.
// Even n: X = omega' x^(q+1), Y = omega' y^(q+1) for each omega' in GF(4)*,
// v = varpi^2 z^(q^2-1) with varpi = 1/omega'. The three (q+1)-th roots of X
// and of Y give nine (x, y); scaling both by a cube root of unity fixes v, so
// every pair {X, Y} yields exactly three admissible v.
namespace kapn::kasami {

using gf2n::Field;

enum class Parity { Odd, Even };

struct ReductionTuple {
  std::optional<Elem> omega;  // omega' on the even chain
  Elem x, y, z, v;
};

struct AdmissibleV {
  std::optional<Elem> omega;
  Elem v;
};

struct ReductionRecord {
  Elem b;
  Elem c;  // b + 1
  Parity parity = Parity::Odd;
  std::vector<ReductionTuple> pairs;  // one per distinct v reached from the original side
  std::vector<AdmissibleV> admissible;
  std::uint64_t original_pair_count = 0;  // unordered {X, Y}
  std::uint64_t admissible_v_count = 0;
  std::uint64_t v_per_pair = 1;
  // admissible_v_count = v_per_pair * original_pair_count and the v reached
  // from the original pairs are exactly the admissible v (per omega').
  bool consistent = false;
};

class ReductionChain {
 public:
  ReductionChain(const Field& f, int k, Parity parity);

  ReductionRecord at(Elem b) const;

 private:
  ReductionRecord odd_at(Elem b) const;
  ReductionRecord even_at(Elem b) const;
  bool admissible(Elem v, bool even) const;
  std::vector<Elem> qp1_roots(Elem y) const;
  static std::vector<Elem> bucket(const std::vector<std::uint32_t>& offsets,
                                  const std::vector<std::uint32_t>& items, Elem key);

  Field f_;
  int k_;
  Parity parity_;
  PowerFunction F_;
  // X (bit 0 clear) bucketed by F(X) + F(X+1)
  std::vector<std::uint32_t> d_offsets_, d_items_;
  // nonzero v bucketed by c = (v+1)^(q+1) / v
  std::vector<std::uint32_t> c_offsets_, c_items_;
  // nonzero x bucketed by x^(q+1) (even chain)
  std::vector<std::uint32_t> r_offsets_, r_items_;
};

ReductionRecord reduction_equivalence(const Field& f, int k, Elem b, Parity parity);

}  // namespace kapn::kasami
