#include "kapn/power_map.hpp"

#include <algorithm>
#include <limits>

namespace kapn::kasami {

PowerFunction::PowerFunction(Field field, std::int64_t d) : field_(std::move(field)), d_(d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "power exponent must be >= 1, got " + std::to_string(d));
}

std::vector<std::uint32_t> PowerFunction::table() const {
  std::vector<std::uint32_t> out(field_.size());
  for (std::uint32_t x = 0; x < field_.size(); ++x) out[x] = (*this)(Elem(x)).bits;
  return out;
}

std::int64_t gold_exponent(int i) {
  if (i < 1 || i > 61) throw Error(Errc::InvalidArgument, "Gold parameter out of range");
  return (std::int64_t{1} << i) + 1;
}

std::int64_t kasami_exponent(int k) {
  if (k < 1 || k > 30) throw Error(Errc::InvalidArgument, "Kasami parameter out of range");
  return (std::int64_t{1} << (2 * k)) - (std::int64_t{1} << k) + 1;
}

PowerFunction kasami_function(const Field& f, int k) { return PowerFunction(f, kasami_exponent(k)); }

// -----------------------------------------------------------------------------
// Differential spectra
// -----------------------------------------------------------------------------

DifferentialSpectrum derivative_spectrum(const PowerFunction& F, Elem a) {
  const Field& f = F.field();
  if (a.is_zero()) throw Error(Errc::ZeroDirection, "derivative direction must be nonzero");
  if (!f.contains(a)) throw Error(Errc::InvalidArgument, "direction " + to_hex(a) + " outside the field");
  DifferentialSpectrum s;
  s.a = a;
  s.row.assign(f.size(), 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    ++s.row[(F(Elem(x)) + F(Elem(x) + a)).bits];
  }
  s.delta = *std::max_element(s.row.begin(), s.row.end());
  return s;
}

namespace {

// Max count of the a = 1 row. Counters saturate at 255 to keep the row at one
// byte per entry; on saturation the exact value is recomputed.
std::uint64_t direction_one_delta(const PowerFunction& F) {
  const Field& f = F.field();
  std::vector<std::uint8_t> counts(f.size(), 0);
  std::uint8_t best = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    // Each unordered pair {x, x+1} contributes twice to its b.
    if (x & 1) continue;
    const std::uint32_t b = (F(Elem(x)) + F(Elem(x ^ 1))).bits;
    std::uint8_t& c = counts[b];
    if (c >= 254) return derivative_spectrum(F, kOne).delta;
    c = static_cast<std::uint8_t>(c + 2);
    best = std::max(best, c);
  }
  return best;
}

std::uint64_t all_directions_delta(const PowerFunction& F) {
  const Field& f = F.field();
  const std::vector<std::uint32_t> lut = F.table();
  std::vector<std::uint32_t> counts(f.size());
  std::uint32_t best = 0;
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const std::uint32_t y = x ^ a;
      if (y < x) continue;
      const std::uint32_t c = (counts[lut[x] ^ lut[y]] += 2);
      best = std::max(best, c);
    }
  }
  return best;
}

}  // namespace

std::uint64_t differential_uniformity(const PowerFunction& F, Sweep sweep) {
  return sweep == Sweep::DirectionOne ? direction_one_delta(F) : all_directions_delta(F);
}

bool is_apn(const PowerFunction& F, Sweep sweep) { return differential_uniformity(F, sweep) == 2; }

// -----------------------------------------------------------------------------
// Known APN exponent families
// -----------------------------------------------------------------------------

std::vector<FamilyEntry> catalog_table1(int n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "catalog needs n >= 3");
  std::vector<FamilyEntry> out;
  const auto gcd_cond = [n](int i) {
    return "gcd(" + std::to_string(i) + "," + std::to_string(n) + ")=1";
  };
  for (int i = 1; i < n; ++i) {
    if (gf2n::gcd(i, n) == 1) out.push_back({"Gold", {{"i", i}}, gcd_cond(i), gold_exponent(i)});
  }
  for (int i = 1; i < n; ++i) {
    if (gf2n::gcd(i, n) == 1) out.push_back({"Kasami", {{"i", i}}, gcd_cond(i), kasami_exponent(i)});
  }
  if (n % 2 == 1) {
    const int t = (n - 1) / 2;
    const std::string cond = "n=2t+1, t=" + std::to_string(t);
    const auto p2 = [](int e) { return std::int64_t{1} << e; };
    out.push_back({"Welch", {{"t", t}}, cond, p2(t) + 3});
    if (t % 2 == 0) {
      out.push_back({"Niho", {{"t", t}}, cond + " even", p2(t) + p2(t / 2) - 1});
    } else {
      out.push_back({"Niho", {{"t", t}}, cond + " odd", p2(t) + p2((3 * t + 1) / 2) - 1});
    }
    out.push_back({"Inverse", {{"t", t}}, cond, p2(2 * t) - 1});
  }
  if (n % 5 == 0) {
    const int t = n / 5;
    const auto p2 = [](int e) { return std::int64_t{1} << e; };
    out.push_back({"Dobbertin", {{"t", t}}, "n=5t, t=" + std::to_string(t),
                   p2(4 * t) + p2(3 * t) + p2(2 * t) + p2(t) - 1});
  }
  return out;
}

}  // namespace kapn::kasami
