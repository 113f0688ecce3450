#include <algorithm>
#include <map>

#include "doctest.h"
#include "kapn/equations.hpp"
#include "kapn/serialize.hpp"
#include "oracle.hpp"

using namespace kapn;
using namespace kapn::equations;
using gf2n::make_field;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

// Root sets by direct evaluation in the oracle field, indexed by a.
std::vector<std::vector<Elem>> oracle_roots(const gf2n::Field& f, int k) {
  const oracle::Gf ref{f.degree(), f.poly()};
  std::vector<std::vector<Elem>> out(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    out[ref.mul(ref.sq_iter(x, k), x) ^ x].emplace_back(x);
  }
  return out;
}

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("GF(8) roots") {
  const auto f = make_field(3);
  CHECK(roots_bruteforce(f, 1, kOne).roots == std::vector<Elem>{Elem(2), Elem(4), Elem(6)});
  CHECK(roots_bruteforce(f, 1, kZero).roots == std::vector<Elem>{kZero, kOne});
  CHECK(roots_bruteforce(f, 1, Elem(2)).roots.empty());
  CHECK(code_of([] { roots_bruteforce(make_field(4), 2, kOne); }) == Errc::NotCoprime);
}

TEST_CASE("histograms") {
  const auto h = count_histogram(make_field(3), 1);
  CHECK(h.n0 == 3);
  CHECK(h.n1 == 3);
  CHECK(h.n3 == 1);
  for (int n = 2; n <= 12; ++n) {
    const auto f = make_field(n);
    for (int k = 1; k < std::max(n, 2); ++k) {
      if (oracle::gcd(k, n) != 1) continue;
      const auto hist = count_histogram(f, k);
      CHECK(hist.consistent(f.size()));
      CHECK(hist.irregular.empty());
      CHECK(hist.n1 + 3 * hist.n3 == f.size() - 2);
      // Counts against the oracle.
      const auto roots = oracle_roots(f, k);
      std::uint64_t n0 = 0, n1 = 0, n3 = 0;
      for (std::uint32_t a = 1; a < f.size(); ++a) {
        n0 += roots[a].empty();
        n1 += roots[a].size() == 1;
        n3 += roots[a].size() == 3;
      }
      CHECK(hist.n0 == n0);
      CHECK(hist.n1 == n1);
      CHECK(hist.n3 == n3);
    }
  }
}

TEST_CASE("witness at u = alpha in GF(8)") {
  const auto f = make_field(3);
  const Witness w = witness_from_u(f, 1, Elem(2));
  CHECK(w.a == kOne);
  CHECK(w.x1 == Elem(0x4));
  CHECK(w.x2 == Elem(0x6));
  CHECK(w.x3 == Elem(0x2));
  CHECK(w.substitution_ok);
  CHECK(code_of([&] { witness_from_u(f, 1, kOne); }) == Errc::InvalidU);
  CHECK(code_of([&] { witness_from_u(f, 1, kZero); }) == Errc::InvalidU);
}

TEST_CASE("u in GF(4) is excluded for even n") {
  const auto f = make_field(4);
  int rejected = 0;
  for (std::uint32_t u = 0; u < 16; ++u) {
    if (f.frobenius(Elem(u), 2) == Elem(u)) {
      CHECK(excluded_subfield(f, Elem(u)).has_value());
      CHECK(code_of([&] { witness_from_u(f, 1, Elem(u)); }) == Errc::InvalidU);
      ++rejected;
    }
  }
  CHECK(rejected == 4);
  CHECK(*excluded_subfield(f, kOne) == "GF(2)");
  CHECK(*excluded_subfield(f, f.pow(f.generator(), 5)) == "GF(4)");
}

TEST_CASE("every admissible u: triple equals the brute-force root set and recover_u round-trips") {
  for (int n = 3; n <= 10; ++n) {
    const auto f = make_field(n);
    for (int k = 1; k < n; ++k) {
      if (oracle::gcd(k, n) != 1) continue;
      const auto roots = oracle_roots(f, k);
      std::map<std::uint32_t, int> u_per_a;
      for (std::uint32_t i = 2; i < f.size(); ++i) {
        const Elem u(i);
        if (excluded_subfield(f, u) || (u + f.frobenius(u, 2 * k)).is_zero()) continue;
        const Witness w = witness_from_u(f, k, u);
        REQUIRE(w.substitution_ok);
        REQUIRE(sorted({w.x1, w.x2, w.x3}) == roots[w.a.bits]);
        ++u_per_a[w.a.bits];
      }
      for (const auto& [a, count] : u_per_a) {
        const Elem back = recover_u(f, k, Elem(a));
        const Witness wb = witness_from_u(f, k, back);
        REQUIRE(wb.a == Elem(a));
        REQUIRE(sorted({wb.x1, wb.x2, wb.x3}) == roots[a]);
        if (n <= 7) REQUIRE(back == recover_u_exhaustive(f, k, Elem(a)));
        CHECK(all_u_for(f, k, Elem(a)).size() == static_cast<std::size_t>(count));
      }
      // Every three-root a is reached by some u.
      std::size_t three = 0;
      for (std::uint32_t a = 1; a < f.size(); ++a) three += roots[a].size() == 3;
      CHECK(u_per_a.size() == three);
    }
  }
}

TEST_CASE("recover_u errors") {
  const auto f = make_field(3);
  CHECK(witness_from_u(f, 1, recover_u(f, 1, kOne)).a == kOne);
  CHECK(code_of([&] { recover_u(f, 1, Elem(7)); }) == Errc::NoThreeSolutions);
  CHECK(code_of([&] { recover_u(f, 1, kZero); }) == Errc::OutsideLemmaScope);
}

TEST_CASE("affine form in GF(8)") {
  const auto f = make_field(3);
  CHECK(solve_affine_form(f, 1, kZero).v_roots == std::vector<Elem>{kOne});
  const AffineSolution s = solve_affine_form(f, 1, kOne);
  CHECK(s.V_roots == std::vector<Elem>{Elem(2), Elem(4), Elem(6)});
  CHECK(s.v_roots == std::vector<Elem>{Elem(3), Elem(5), Elem(7)});
  REQUIRE(s.closed_form_match.has_value());
  CHECK(*s.closed_form_match);
  const auto cf = closed_form_v(f, 1, Elem(2));
  CHECK(cf[0] == Elem(5));
  CHECK(cf[1] == Elem(7));
  CHECK(cf[2] == Elem(3));
}

TEST_CASE("affine solver matches brute force for every c") {
  for (int n = 2; n <= 12; ++n) {
    const auto f = make_field(n);
    const oracle::Gf ref{n, f.poly()};
    for (int k = 1; k < std::max(n, 2); ++k) {
      if (oracle::gcd(k, n) != 1) continue;
      std::vector<std::vector<Elem>> by_c(f.size());
      for (std::uint32_t v = 0; v < f.size(); ++v) {
        const std::uint32_t w = v ^ 1;
        const std::uint32_t lhs = ref.mul(ref.sq_iter(w, k), w);
        if (v == 0) continue;  // (0+1)^(q+1) = 1, no c works
        by_c[ref.mul(lhs, ref.inv(v))].emplace_back(v);
      }
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        const AffineSolution s = solve_affine_form(f, k, Elem(c));
        REQUIRE(s.v_roots == by_c[c]);
        if (s.closed_form_match) REQUIRE(*s.closed_form_match);
      }
    }
  }
}

TEST_CASE("json shapes") {
  const auto f = make_field(3);
  const Json r = to_json(roots_bruteforce(f, 1, kOne));
  CHECK(r.dump() == R"({"k":1,"a":"0x1","roots":["0x2","0x4","0x6"]})");
  const Json h = to_json(count_histogram(f, 1));
  CHECK(h.dump() == R"({"n":3,"k":1,"N0":3,"N1":3,"N3":1,"irregular":[]})");
  const Json w = to_json(witness_from_u(f, 1, Elem(2)));
  CHECK(w["x1"] == "0x4");
  CHECK(w["substitution_ok"] == true);
}
