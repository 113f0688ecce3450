#include <algorithm>
#include <set>

#include "doctest.h"
#include "kapn/gf2n.hpp"
#include "oracle.hpp"

using namespace kapn;
using gf2n::make_field;

namespace {

oracle::Gf ref_of(const gf2n::Field& f) { return {f.degree(), f.poly()}; }

bool throws_code(auto&& fn, Errc code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("default polynomial is the smallest irreducible") {
  CHECK(make_field(3).poly() == 0xb);
  CHECK(make_field(2).poly() == 0x7);
  for (int n = 2; n <= 16; ++n) {
    std::uint64_t expect = 0;
    for (std::uint64_t p = std::uint64_t{1} << n;; ++p) {
      if (oracle::irreducible(p)) {
        expect = p;
        break;
      }
    }
    CHECK(make_field(n).poly() == expect);
  }
}

TEST_CASE("irreducibility agrees with trial division") {
  for (std::uint64_t p = 2; p < (1u << 13); ++p) {
    CHECK(gf2n::is_irreducible(p) == oracle::irreducible(p));
  }
}

TEST_CASE("bad fields are rejected") {
  CHECK(throws_code([] { make_field(3, 0xf); }, Errc::InvalidField));
  CHECK(throws_code([] { make_field(3, 0x13); }, Errc::InvalidField));
  CHECK(throws_code([] { make_field(1); }, Errc::InvalidField));
  CHECK(throws_code([] { make_field(29); }, Errc::InvalidField));
  CHECK(make_field(3, 0xd).poly() == 0xd);
}

TEST_CASE("generator has full order") {
  for (int n = 2; n <= 20; ++n) {
    const auto f = make_field(n);
    const std::uint64_t order = f.group_order();
    CHECK(f.pow(f.generator(), static_cast<std::int64_t>(order)) == kOne);
    for (std::uint64_t p : gf2n::prime_factors(order)) {
      CHECK(f.pow(f.generator(), static_cast<std::int64_t>(order / p)) != kOne);
    }
    // smallest primitive
    for (std::uint32_t g = 2; g < f.generator().bits; ++g) {
      bool primitive = true;
      for (std::uint64_t p : gf2n::prime_factors(order)) {
        if (f.pow(Elem(g), static_cast<std::int64_t>(order / p)) == kOne) primitive = false;
      }
      CHECK_FALSE(primitive);
    }
  }
}

TEST_CASE("GF(8) worked values") {
  const auto f = make_field(3);
  const Elem alpha(0x2);
  CHECK(f.mul(alpha, Elem(0x4)) == Elem(0x3));
  CHECK(f.inv(alpha) == Elem(0x5));
  CHECK(f.pow(alpha, 7) == kOne);
  CHECK(f.trace(kOne) == 1);
  CHECK(f.trace(alpha) == 0);
  CHECK(f.trace(Elem(0x3)) == 1);
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(f.mul(Elem(a), kOne) == Elem(a));
    CHECK(f.mul(Elem(a), kZero) == kZero);
    CHECK(f.frobenius(Elem(a), 3) == Elem(a));
  }
}

TEST_CASE("pow conventions") {
  const auto f = make_field(5);
  CHECK(f.pow(kZero, 0) == kOne);
  CHECK(f.pow(kZero, 31) == kZero);
  CHECK(throws_code([&] { f.pow(kZero, -1); }, Errc::DivisionByZero));
  CHECK(throws_code([&] { f.inv(kZero); }, Errc::DivisionByZero));
  const Elem a(0x13);
  CHECK(f.pow(a, -1) == f.inv(a));
  CHECK(f.pow(a, 31 + 4) == f.pow(a, 4));
  CHECK(f.pow(a, f.exp(-3)) == f.inv(f.pow(a, 3)));
}

TEST_CASE("exponent inverses") {
  CHECK(make_field(3).exp_inv(3).e == 5);
  CHECK(make_field(3).exp_inv(1).e == 1);
  CHECK(throws_code([] { make_field(4).exp_inv(3); }, Errc::NotInvertibleExponent));
  for (int n = 2; n <= 12; ++n) {
    const auto f = make_field(n);
    for (std::int64_t e = 1; e < 200; ++e) {
      if (oracle::gcd(e, f.group_order()) != 1) continue;
      const ExpClass inv = f.exp_inv(e);
      CHECK((inv * f.exp(e)).e == 1);
      CHECK(f.exp_inv(inv) == f.exp(e));
    }
  }
}

TEST_CASE("table and shift-reduce products match the schoolbook oracle") {
  for (int n : {2, 3, 7, 8, 12, 16, 17, 24, 28}) {
    const auto f = make_field(n);
    const auto ref = ref_of(f);
    for (int i = 0; i < 20000; ++i) {
      const std::uint32_t a = oracle::random_elem(ref.size()), b = oracle::random_elem(ref.size());
      const std::uint32_t want = ref.mul(a, b);
      REQUIRE(f.mul(Elem(a), Elem(b)).bits == want);
      REQUIRE(f.mul_shift_reduce(Elem(a), Elem(b)).bits == want);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  for (int n : {8, 16, 24}) {
    const auto f = make_field(n);
    int failures = 0;
    for (int i = 0; i < 100000; ++i) {
      const Elem a(oracle::random_elem(f.size())), b(oracle::random_elem(f.size())), c(oracle::random_elem(f.size()));
      failures += f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c));
      failures += f.mul(a, b) != f.mul(b, a);
      failures += f.mul(a, b + c) != f.mul(a, b) + f.mul(a, c);
      if (!a.is_zero()) failures += f.mul(a, f.inv(a)) != kOne;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("Fermat, Frobenius, trace against the oracle") {
  for (int n = 2; n <= 12; ++n) {
    const auto f = make_field(n);
    const auto ref = ref_of(f);
    std::uint64_t zeros = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const Elem a(x);
      if (x) CHECK(f.pow(a, static_cast<std::int64_t>(f.group_order())) == kOne);
      REQUIRE(f.trace(a) == ref.trace(x));
      zeros += f.trace(a) == 0;
      CHECK(f.trace(f.sqr(a)) == f.trace(a));
      for (int i = -1; i <= n + 1; ++i) {
        const int r = ((i % n) + n) % n;
        REQUIRE(f.frobenius(a, i).bits == ref.sq_iter(x, r));
      }
      if (x) CHECK(f.inv(a).bits == ref.inv(x));
    }
    CHECK(zeros == f.size() / 2);
    for (int i = 0; i < 2000; ++i) {
      const Elem a(oracle::random_elem(f.size())), b(oracle::random_elem(f.size()));
      CHECK(f.trace(a + b) == (f.trace(a) ^ f.trace(b)));
      CHECK(f.frobenius(a + b, 1) == f.frobenius(a, 1) + f.frobenius(b, 1));
    }
  }
}

TEST_CASE("pow matches repeated multiplication") {
  for (int n : {5, 9, 16, 20, 28}) {
    const auto f = make_field(n);
    const auto ref = ref_of(f);
    for (int i = 0; i < 500; ++i) {
      const std::uint32_t a = oracle::random_elem(ref.size());
      const std::uint64_t e = oracle::rng()() % (std::uint64_t{1} << 40);
      CHECK(f.pow(Elem(a), static_cast<std::int64_t>(e)).bits == ref.pow(a, e));
    }
  }
}

TEST_CASE("solve_frobenius_affine matches enumeration") {
  const auto f8 = make_field(3);
  CHECK(gf2n::solve_frobenius_affine(f8, 1, kZero) == std::vector<Elem>{kZero, kOne});
  CHECK(gf2n::solve_frobenius_affine(f8, 1, Elem(0x2)) == std::vector<Elem>{Elem(0x4), Elem(0x5)});
  CHECK(gf2n::solve_frobenius_affine(f8, 1, kOne).empty());
  CHECK(throws_code([] { gf2n::solve_frobenius_affine(make_field(4), 2, kOne); }, Errc::NotCoprime));

  for (int n = 2; n <= 12; ++n) {
    const auto f = make_field(n);
    for (int k = 1; k < n || (n == 2 && k == 1); ++k) {
      if (oracle::gcd(k, n) != 1) continue;
      std::vector<std::vector<Elem>> expect(f.size());
      for (std::uint32_t u = 0; u < f.size(); ++u) {
        expect[(f.frobenius(Elem(u), k) + Elem(u)).bits].emplace_back(u);
      }
      for (std::uint32_t w = 0; w < f.size(); ++w) {
        REQUIRE(gf2n::solve_frobenius_affine(f, k, Elem(w)) == expect[w]);
      }
    }
  }
}

TEST_CASE("hex round trip") {
  CHECK(to_hex(Elem(0x1f)) == "0x1f");
  CHECK(parse_hex("0x1F") == 0x1f);
  CHECK(parse_hex("ab") == 0xab);
  CHECK(throws_code([] { parse_hex("0xzz"); }, Errc::InvalidArgument));
  CHECK(throws_code([] { make_field(3).parse("0x8"); }, Errc::InvalidArgument));
}
