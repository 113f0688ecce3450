#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kapn/error.hpp"

namespace kapn {

// Element of GF(2^n) in polynomial basis: bit i is the coordinate of x^i.
// Addition in characteristic 2 is XOR, so + is provided here; everything
// multiplicative needs a Field.
struct Elem {
  std::uint32_t bits = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t b) : bits(b) {}

  constexpr bool is_zero() const noexcept { return bits == 0; }
  constexpr bool is_one() const noexcept { return bits == 1; }

  friend constexpr Elem operator+(Elem a, Elem b) noexcept { return Elem(a.bits ^ b.bits); }
  constexpr Elem& operator+=(Elem o) noexcept {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

// Residue class of an exponent modulo 2^n - 1, the order of the
// multiplicative group. Carries its modulus so that arithmetic on classes
// from the same field is closed.
struct ExpClass {
  std::uint64_t e = 0;
  std::uint64_t modulus = 1;

  friend ExpClass operator+(ExpClass a, ExpClass b);
  friend ExpClass operator-(ExpClass a, ExpClass b);
  friend ExpClass operator*(ExpClass a, ExpClass b);
  ExpClass operator-() const;
  friend bool operator==(ExpClass, ExpClass) = default;
};

std::string to_hex(Elem a);
std::string to_hex(std::uint64_t mask);
std::uint64_t parse_hex(std::string_view text);

namespace gf2n {

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 28;
// Log/antilog tables are built up to this degree; larger fields multiply by
// shift-and-reduce.
inline constexpr int kTableDegree = 16;

// GF(2)[x] helpers on bit masks, shared by field construction and tests.
int poly_degree(std::uint64_t p) noexcept;
bool is_irreducible(std::uint64_t p);
std::uint64_t smallest_irreducible(int n);
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

// An immutable instance of GF(2^n). Cheap to copy; the lookup tables are
// shared between copies and across threads.
class Field {
 public:
  int degree() const noexcept { return n_; }
  std::uint64_t poly() const noexcept { return poly_; }
  Elem generator() const noexcept { return generator_; }
  // 2^n
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  // 2^n - 1
  std::uint64_t group_order() const noexcept { return size() - 1; }
  std::uint32_t mask() const noexcept { return static_cast<std::uint32_t>(group_order()); }
  bool contains(Elem a) const noexcept { return (a.bits & ~mask()) == 0; }
  bool has_tables() const noexcept { return static_cast<bool>(tables_); }

  Elem mul(Elem a, Elem b) const noexcept;
  Elem sqr(Elem a) const noexcept { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // pow(0, 0) = 1 and pow(0, e) = 0 for e > 0; a negative exponent on zero
  // throws DivisionByZero. Nonzero bases reduce e mod 2^n - 1.
  Elem pow(Elem a, std::int64_t e) const;
  // Zero base: 0^[0] = 1, otherwise 0.
  Elem pow(Elem a, ExpClass e) const;

  // a^(2^i), i reduced mod n (negative i allowed).
  Elem frobenius(Elem a, std::int64_t i) const noexcept;
  int trace(Elem a) const noexcept;

  ExpClass exp(std::int64_t e) const noexcept;
  // Class of 2^i.
  ExpClass exp_pow2(std::int64_t i) const noexcept;
  ExpClass exp_inv(std::int64_t e) const;
  ExpClass exp_inv(ExpClass e) const;

  // Table-free product; the reference path the tables are tested against.
  Elem mul_shift_reduce(Elem a, Elem b) const noexcept;

  // Parses "0x.." or bare hex and checks the value is in the field.
  Elem parse(std::string_view text) const;

  friend Field make_field(int n, std::optional<std::uint64_t> poly_override);

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // length 2*(2^n - 1)
    std::vector<std::uint32_t> log;  // length 2^n, log[0] unused
  };

  Field() = default;
  Elem pow_reduced(Elem a, std::uint64_t e) const noexcept;

  int n_ = 0;
  std::uint64_t poly_ = 0;
  Elem generator_{};
  std::uint32_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

// Deterministic field: the smallest irreducible of degree n unless
// overridden, and the smallest primitive element as generator.
Field make_field(int n, std::optional<std::uint64_t> poly_override = std::nullopt);

// All u with u^(2^k) + u = w, by Gaussian elimination over GF(2). Sorted.
// Requires gcd(k, n) = 1, so the result has 0 or 2 elements.
std::vector<Elem> solve_frobenius_affine(const Field& f, int k, Elem w);

int gcd(std::int64_t a, std::int64_t b) noexcept;
void require_coprime(const Field& f, int k);

}  // namespace gf2n
}  // namespace kapn
