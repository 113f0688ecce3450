#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kapn/gf2n.hpp"
#include "kapn/power_map.hpp"
#include "kapn/verdict.hpp"

// Even n: the GF(4) subfield, the coset decomposition X = omega * x^(q+1),
// and the omega = omega' discussion of the Kasami system.
namespace kapn::kasami {

using gf2n::Field;

// ----------------------------------------------------------------------------
// GF(4) inside GF(2^n)
// ----------------------------------------------------------------------------

struct Gf4Embedding {
  Elem epsilon;                  // eps^2 + eps + 1 = 0, smaller of the two roots
  std::array<Elem, 3> omegas{};  // 1, eps, eps^2
  Elem omega_prime;
  Elem varpi;                    // 1 / omega'
};

// eps = g^((2^n - 1)/3) or its square, whichever has the smaller mask.
Elem gf4_epsilon(const Field& f);
Gf4Embedding make_gf4(const Field& f, Elem omega_prime = kOne);
bool in_gf4_star(const Field& f, Elem w);

struct EvenFacts {
  bool fact1_applies = false;  // 4 | n: Tr(w) = 0 on GF(4)*
  bool fact1 = true;
  bool fact2_applies = false;  // n = 2 mod 4: Tr(eps) = Tr(eps^2) = 1, Tr(1) = 0
  bool fact2 = true;
  // For every odd k < n: w^(q-1) = w, w^q = w^2, w^(q+1) = 1, w^(q^2) = w on
  // GF(4)*, and w^(1/(q-1)) = w whenever gcd(k, n) = 1.
  bool fact3 = true;
  std::vector<int> fact3_ks;

  bool pass() const { return fact1 && fact2 && fact3; }
};

EvenFacts verify_even_facts(const Field& f);

struct CubingResult {
  bool three_to_one = false;      // x -> x^(q+1) on GF(2^n)*
  bool image_is_cubes = false;
  std::uint64_t image_size = 0;
  bool exponent_divisible_by_3 = false;  // 3 | 2^(2k) - 2^k + 1

  bool pass() const { return three_to_one && image_is_cubes && exponent_divisible_by_3; }
};

CubingResult verify_three_to_one_cubing(const Field& f, int k);

// ----------------------------------------------------------------------------
// Solutions of X + Y = 1, F(X) + F(Y) = b split by GF(4)* coset
// ----------------------------------------------------------------------------

// With 6 not dividing n every nonzero X is uniquely omega * C, omega in
// GF(4)*, C a cube (= some x^(q+1)). Pairs are unordered {X, Y}.
struct EvenPairCounts {
  std::uint64_t degenerate = 0;      // X = 0 or Y = 0
  std::uint64_t same_coset = 0;      // omega = omega'
  std::uint64_t cross_distinct = 0;  // omega != omega', x^(q+1) != y^(q+1)
  std::uint64_t cross_equal = 0;     // omega != omega', x^(q+1) = y^(q+1)

  std::uint64_t total() const { return degenerate + same_coset + cross_distinct + cross_equal; }
};

// Index over the Kasami derivative D(X) = F(X) + F(X+1) for one (n, k).
class EvenSystem {
 public:
  EvenSystem(const Field& f, int k);

  const Field& field() const noexcept { return f_; }
  int k() const noexcept { return k_; }
  const PowerFunction& F() const noexcept { return F_; }

  // X with bit 0 clear (the smaller element of {X, X+1}) and D(X) = b.
  std::vector<Elem> pairs_at(Elem b) const;
  EvenPairCounts counts_at(Elem b) const;

  bool is_cube(Elem x) const;
  // omega with x / omega a cube; needs x != 0 and 6 not dividing n.
  Elem coset_of(Elem x) const;

 private:
  Field f_;
  int k_;
  PowerFunction F_;
  std::uint64_t third_;  // (2^n - 1)/3
  Elem eps_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> xs_;
};

EvenPairCounts even_system_pairs(const Field& f, int k, Elem b);

// ----------------------------------------------------------------------------
// The omega = omega' discussion
// ----------------------------------------------------------------------------

struct DiscussionReport {
  Elem u;
  Gf4Embedding gf4;
  std::array<Elem, 2> S{};  // varpi/(u+u^q) (u+eps)^(q+1), varpi/(u+u^q) (u+1+eps)^(q+1)
  // Branch i takes 1/v^(1/(q-1)) = u+u^q, 1/u+1/u^q, 1/(u+1)+1/(u+1)^q,
  // solves (x/z)^q + (x/z) = 1/v^(1/(q-1)) + 1 and compares the x^(q+1) it
  // yields with S.
  std::array<bool, 3> branch_results{};
  // Both elements of S are (q+1)-th powers, i.e. some z, x realize them.
  bool s_are_powers = false;
  // The three branch values of v are roots of one (v+1)^(q+1) + c v = 0.
  bool common_c = false;
  Elem c_common;

  Elem b_value;    // (u+u^(q^3)) / (u+u^q)^(q^2-q+1) at the given u
  Elem b_literal;  // the same formula at u = eps
  Elem b_observed; // F(X) + F(Y) for X, Y = omega' * S
  bool s_sums_to_one = false;  // omega' (S0 + S1) = 1

  bool pair_found = false;          // at b_value
  bool pair_found_literal = false;  // at b_literal
  bool pair_found_observed = false; // at b_observed

  // Pairs with omega != omega' at b_value; unset when 6 | n.
  std::optional<EvenPairCounts> at_b_value;

  bool branches_pass() const { return branch_results[0] && branch_results[1] && branch_results[2]; }
};

class EvenDiscussion {
 public:
  EvenDiscussion(const Field& f, int k, Elem omega_prime);

  DiscussionReport check(Elem u) const;

 private:
  bool pair_with_s(Elem b, const std::array<Elem, 2>& s) const;

  EvenSystem system_;
  Gf4Embedding gf4_;
};

DiscussionReport even_discussion_check(const Field& f, int k, Elem u, Elem omega_prime);

}  // namespace kapn::kasami
