#pragma once

#include <cstdint>

#include "kapn/gf2n.hpp"
#include "kapn/verdict.hpp"

// Müller-Cohen-Matthews polynomials and the even-dimension argument built on
// them: F(X) + F(X+1) + 1 = f_{k,2^k+1}(X + X^2) for the Kasami map F.
namespace kapn::kasami {

using gf2n::Field;

// T_k(X) = X + X^2 + ... + X^(2^(k-1))
Elem tk_eval(const Field& f, int k, Elem x);

// f_{k,2^k+1}(X) = T_k(X)^(2^k+1) / X^(2^k), extended by f(0) = 0.
Elem mcm_eval(const Field& f, int k, Elem x);

struct McmPermutation {
  bool permutation = false;
  // gcd(n, k) = 1 and k odd. Outside it the image is still computed.
  bool within_hypothesis = false;
  std::uint64_t image_size = 0;
};

McmPermutation verify_mcm_permutation(const Field& f, int k);

// Counterexamples are the X where the identity fails.
Verdict verify_kasami_gold_identity(const Field& f, int k);

// x -> F(x) + F(x+1) takes every value 0 or 2 times. Counterexamples are the
// values with another preimage count.
Verdict verify_derivative_two_to_one(const Field& f, int k);

}  // namespace kapn::kasami
