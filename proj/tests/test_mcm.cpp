#include "doctest.h"
#include "kapn/mcm.hpp"
#include "kapn/power_map.hpp"
#include "oracle.hpp"

using namespace kapn;
using namespace kapn::kasami;
using gf2n::make_field;

namespace {

std::uint32_t oracle_tk(const oracle::Gf& ref, int k, std::uint32_t x) {
  std::uint32_t t = 0;
  for (int i = 0; i < k; ++i) t ^= ref.sq_iter(x, i);
  return t;
}

std::uint32_t oracle_mcm(const oracle::Gf& ref, int k, std::uint32_t x) {
  if (x == 0) return 0;
  const std::uint64_t q = std::uint64_t{1} << k;
  return ref.mul(ref.pow(oracle_tk(ref, k, x), q + 1), ref.inv(ref.pow(x, q)));
}

}  // namespace

TEST_CASE("T_k and MCM values") {
  const auto f = make_field(3);
  const oracle::Gf ref{3, f.poly()};
  for (std::uint32_t x = 0; x < 8; ++x) {
    CHECK(tk_eval(f, 1, Elem(x)) == Elem(x));
    CHECK(tk_eval(f, 3, Elem(x)) == Elem(static_cast<std::uint32_t>(f.trace(Elem(x)))));
    CHECK(mcm_eval(f, 1, Elem(x)) == Elem(x));
  }
  CHECK(tk_eval(f, 3, Elem(2)) == kZero);
  CHECK(mcm_eval(f, 3, kZero) == kZero);
  CHECK(mcm_eval(f, 3, kOne) == kOne);
  for (int n = 2; n <= 10; ++n) {
    const auto g = make_field(n);
    const oracle::Gf r{n, g.poly()};
    for (int k = 1; k <= 2 * n; ++k) {
      for (std::uint32_t x = 0; x < g.size(); ++x) {
        REQUIRE(tk_eval(g, k, Elem(x)).bits == oracle_tk(r, k, x));
        REQUIRE(mcm_eval(g, k, Elem(x)).bits == oracle_mcm(r, k, x));
      }
    }
  }
}

TEST_CASE("MCM permutations") {
  CHECK(verify_mcm_permutation(make_field(4), 3).permutation);
  CHECK(verify_mcm_permutation(make_field(8), 3).permutation);
  for (int n = 2; n <= 14; ++n) {
    CHECK(verify_mcm_permutation(make_field(n), 1).permutation);
    for (int k = 1; k < n; k += 2) {
      if (oracle::gcd(k, n) != 1) continue;
      const auto m = verify_mcm_permutation(make_field(n), k);
      CHECK(m.within_hypothesis);
      CHECK(m.permutation);
      CHECK(m.image_size == (1u << n));
    }
  }
  CHECK_FALSE(verify_mcm_permutation(make_field(5), 2).within_hypothesis);
}

TEST_CASE("identity F(X) + F(X+1) + 1 = f(X + X^2)") {
  CHECK(verify_kasami_gold_identity(make_field(4), 3).pass);
  CHECK(verify_kasami_gold_identity(make_field(12), 5).pass);
  // Independent evaluation at n = 7.
  const auto f = make_field(7);
  const oracle::Gf ref{7, f.poly()};
  for (int k = 1; k < 7; ++k) {
    const std::uint64_t d = kasami_exponent(k);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const std::uint32_t left = ref.pow(x, d) ^ ref.pow(x ^ 1, d) ^ 1;
      REQUIRE(left == oracle_mcm(ref, k, x ^ ref.mul(x, x)));
    }
    CHECK(verify_kasami_gold_identity(f, k).pass);
  }
  for (std::uint32_t x : {0u, 1u}) {
    CHECK(mcm_eval(f, 3, Elem(x) + f.sqr(Elem(x))) == kZero);
  }
}

TEST_CASE("derivative is 2-to-1 for even n") {
  CHECK(verify_derivative_two_to_one(make_field(4), 3).pass);
  CHECK(verify_derivative_two_to_one(make_field(6), 1).pass);
  CHECK(verify_derivative_two_to_one(make_field(5), 2).pass);
  // A non-APN exponent produces counterexamples.
  const PowerFunction bad(make_field(4), 5);
  CHECK(derivative_spectrum(bad, kOne).delta == 4);
}
