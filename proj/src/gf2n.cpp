#include "kapn/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <numeric>

namespace kapn {

// -----------------------------------------------------------------------------
// Exponent classes and hex formatting
// -----------------------------------------------------------------------------

namespace {

void check_same_modulus(ExpClass a, ExpClass b) {
  if (a.modulus != b.modulus) {
    throw Error(Errc::InvalidArgument, "exponent classes from different fields");
  }
}

}  // namespace

ExpClass operator+(ExpClass a, ExpClass b) {
  check_same_modulus(a, b);
  return {(a.e + b.e) % a.modulus, a.modulus};
}

ExpClass operator-(ExpClass a, ExpClass b) {
  check_same_modulus(a, b);
  return {(a.e + a.modulus - b.e) % a.modulus, a.modulus};
}

ExpClass operator*(ExpClass a, ExpClass b) {
  check_same_modulus(a, b);
  const unsigned __int128 p = static_cast<unsigned __int128>(a.e) * b.e;
  return {static_cast<std::uint64_t>(p % a.modulus), a.modulus};
}

ExpClass ExpClass::operator-() const { return {(modulus - e) % modulus, modulus}; }

std::string to_hex(std::uint64_t mask) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(mask));
  return buf;
}

std::string to_hex(Elem a) { return to_hex(std::uint64_t{a.bits}); }

std::uint64_t parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value, 16);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw Error(Errc::InvalidArgument, "not a hex value: '" + std::string(text) + "'");
  }
  return value;
}

namespace gf2n {

// -----------------------------------------------------------------------------
// GF(2)[x] on bit masks
// -----------------------------------------------------------------------------

int poly_degree(std::uint64_t p) noexcept {
  return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1;
}

namespace {

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) noexcept {
  const int dp = poly_degree(p);
  for (int da = poly_degree(a); da >= dp; da = poly_degree(a)) {
    a ^= p << (da - dp);
  }
  return a;
}

// Operands have degree < deg(p) <= 31, so the product fits in 64 bits.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return poly_mod(r, p);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^m) mod p
std::uint64_t x_pow_2m(int m, std::uint64_t p) noexcept {
  std::uint64_t h = poly_mod(0b10, p);
  for (int i = 0; i < m; ++i) h = poly_mulmod(h, h, p);
  return h;
}

}  // namespace

bool is_irreducible(std::uint64_t p) {
  const int d = poly_degree(p);
  if (d < 1 || d > 31) return false;
  if (d == 1) return true;
  if ((p & 1) == 0) return false;
  // Rabin: x^(2^d) = x mod p and gcd(x^(2^(d/r)) - x, p) = 1 for primes r | d.
  if (x_pow_2m(d, p) != poly_mod(0b10, p)) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(d))) {
    const std::uint64_t h = x_pow_2m(d / static_cast<int>(r), p) ^ 0b10;
    if (poly_gcd(p, h) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(int n) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(Errc::InvalidField, "degree " + std::to_string(n) + " outside [2, 28]");
  }
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t p = top | 1; p < 2 * top; p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw Error(Errc::InvalidField, "no irreducible polynomial found");  // unreachable
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

int gcd(std::int64_t a, std::int64_t b) noexcept {
  return static_cast<int>(std::gcd(a, b));
}

void require_coprime(const Field& f, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be positive, got " + std::to_string(k));
  if (gcd(k, f.degree()) != 1) {
    throw Error(Errc::NotCoprime, "gcd(k=" + std::to_string(k) + ", n=" + std::to_string(f.degree()) +
                                      ") = " + std::to_string(gcd(k, f.degree())));
  }
}

// -----------------------------------------------------------------------------
// Field
// -----------------------------------------------------------------------------

Elem Field::mul_shift_reduce(Elem a, Elem b) const noexcept {
  std::uint64_t aa = a.bits;
  std::uint32_t bb = b.bits;
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << n_;
  while (bb != 0) {
    if (bb & 1) r ^= aa;
    bb >>= 1;
    aa <<= 1;
    if (aa & top) aa ^= poly_;
  }
  return Elem(static_cast<std::uint32_t>(r));
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (!tables_) return mul_shift_reduce(a, b);
  if (a.is_zero() || b.is_zero()) return kZero;
  return Elem(tables_->exp[tables_->log[a.bits] + tables_->log[b.bits]]);
}

Elem Field::pow_reduced(Elem a, std::uint64_t e) const noexcept {
  if (tables_) {
    const std::uint64_t l = tables_->log[a.bits];
    return Elem(tables_->exp[(l * e) % group_order()]);
  }
  Elem result = kOne;
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul_shift_reduce(result, base);
    base = mul_shift_reduce(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
  if (tables_) {
    const std::uint32_t l = tables_->log[a.bits];
    return Elem(tables_->exp[l == 0 ? 0 : group_order() - l]);
  }
  return pow_reduced(a, group_order() - 1);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(Errc::DivisionByZero, "0 raised to a negative power");
    return e == 0 ? kOne : kZero;
  }
  return pow_reduced(a, exp(e).e);
}

Elem Field::pow(Elem a, ExpClass e) const {
  if (e.modulus != group_order()) {
    throw Error(Errc::InvalidArgument, "exponent class from a different field");
  }
  if (a.is_zero()) return e.e == 0 ? kOne : kZero;
  return pow_reduced(a, e.e);
}

Elem Field::frobenius(Elem a, std::int64_t i) const noexcept {
  const std::int64_t r = ((i % n_) + n_) % n_;
  if (a.is_zero() || r == 0) return a;
  if (tables_) {
    const std::uint64_t l = tables_->log[a.bits];
    return Elem(tables_->exp[(l << r) % group_order()]);
  }
  for (std::int64_t s = 0; s < r; ++s) a = mul_shift_reduce(a, a);
  return a;
}

int Field::trace(Elem a) const noexcept { return std::popcount(a.bits & trace_mask_) & 1; }

ExpClass Field::exp(std::int64_t e) const noexcept {
  const auto m = static_cast<std::int64_t>(group_order());
  return {static_cast<std::uint64_t>(((e % m) + m) % m), group_order()};
}

ExpClass Field::exp_pow2(std::int64_t i) const noexcept {
  const std::int64_t r = ((i % n_) + n_) % n_;
  return {(std::uint64_t{1} << r) % group_order(), group_order()};
}

ExpClass Field::exp_inv(ExpClass e) const {
  // Extended Euclid on (e, m).
  const auto m = static_cast<std::int64_t>(group_order());
  std::int64_t r0 = m, r1 = static_cast<std::int64_t>(e.e);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) {
    throw Error(Errc::NotInvertibleExponent, "gcd(" + std::to_string(e.e) + ", " + std::to_string(m) +
                                                 ") = " + std::to_string(r0));
  }
  return exp(s0);
}

ExpClass Field::exp_inv(std::int64_t e) const { return exp_inv(exp(e)); }

Elem Field::parse(std::string_view text) const {
  const std::uint64_t v = parse_hex(text);
  if (v >= size()) {
    throw Error(Errc::InvalidArgument,
                "element " + std::string(text) + " does not fit in GF(2^" + std::to_string(n_) + ")");
  }
  return Elem(static_cast<std::uint32_t>(v));
}

Field make_field(int n, std::optional<std::uint64_t> poly_override) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(Errc::InvalidField, "degree " + std::to_string(n) + " outside [2, 28]");
  }
  Field f;
  f.n_ = n;
  if (poly_override) {
    const std::uint64_t p = *poly_override;
    if (poly_degree(p) != n) {
      throw Error(Errc::InvalidField, "polynomial " + to_hex(p) + " does not have degree " + std::to_string(n));
    }
    if (!is_irreducible(p)) {
      throw Error(Errc::InvalidField, "polynomial " + to_hex(p) + " is reducible");
    }
    f.poly_ = p;
  } else {
    f.poly_ = smallest_irreducible(n);
  }

  // Smallest element of full multiplicative order.
  const std::uint64_t m = f.group_order();
  const auto factors = prime_factors(m);
  for (std::uint32_t g = 2; g < f.size(); ++g) {
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (f.pow_reduced(Elem(g), m / p).is_one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.generator_ = Elem(g);
      break;
    }
  }

  if (n <= kTableDegree) {
    auto t = std::make_shared<Field::Tables>();
    t->exp.resize(2 * m);
    t->log.assign(f.size(), 0);
    Elem x = kOne;
    for (std::uint64_t i = 0; i < m; ++i) {
      t->exp[i] = t->exp[i + m] = x.bits;
      t->log[x.bits] = static_cast<std::uint32_t>(i);
      x = f.mul_shift_reduce(x, f.generator_);
    }
    f.tables_ = std::move(t);
  }

  for (int j = 0; j < n; ++j) {
    Elem basis(std::uint32_t{1} << j);
    Elem sum = kZero;
    Elem y = basis;
    for (int i = 0; i < n; ++i) {
      sum += y;
      y = f.mul_shift_reduce(y, y);
    }
    if (sum.is_one()) f.trace_mask_ |= basis.bits;
  }
  return f;
}

// -----------------------------------------------------------------------------
// Linearized equation u^(2^k) + u = w
// -----------------------------------------------------------------------------

std::vector<Elem> solve_frobenius_affine(const Field& f, int k, Elem w) {
  require_coprime(f, k);
  const int n = f.degree();

  // rows[i]: coefficients of output bit i over input bits, rhs at bit n.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const Elem basis(std::uint32_t{1} << j);
    const Elem image = f.frobenius(basis, k) + basis;
    for (int i = 0; i < n; ++i) {
      if ((image.bits >> i) & 1) rows[i] |= std::uint64_t{1} << j;
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((w.bits >> i) & 1) rows[i] |= std::uint64_t{1} << n;
  }

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int sel = -1;
    for (int i = r; i < n; ++i) {
      if ((rows[i] >> c) & 1) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    for (int i = 0; i < n; ++i) {
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i) {
    if ((rows[i] >> n) & 1) return {};
  }

  std::uint64_t pivots = 0;
  for (int c : pivot_col) pivots |= std::uint64_t{1} << c;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c) {
    if (!((pivots >> c) & 1)) free_cols.push_back(c);
  }

  // Back-substitute for every assignment of the free variables.
  std::vector<Elem> out;
  const std::uint64_t combos = std::uint64_t{1} << free_cols.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    std::uint64_t x = 0;
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
      if ((mask >> t) & 1) x |= std::uint64_t{1} << free_cols[t];
    }
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      const std::uint64_t row = rows[i];
      int bit = static_cast<int>((row >> n) & 1);
      bit ^= std::popcount(row & x & ~(std::uint64_t{1} << pivot_col[i]) & ((std::uint64_t{1} << n) - 1)) & 1;
      if (bit) x |= std::uint64_t{1} << pivot_col[i];
    }
    out.emplace_back(static_cast<std::uint32_t>(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gf2n
}  // namespace kapn
