#include "kapn/even_case.hpp"

#include <algorithm>

#include "kapn/equations.hpp"

namespace kapn::kasami {

namespace {

void require_even(const Field& f) {
  if (f.degree() % 2 == 1) {
    throw Error(Errc::ParityError, "n = " + std::to_string(f.degree()) + " is odd; GF(4) is not a subfield");
  }
}

void require_not_div6(const Field& f) {
  if (f.degree() % 6 == 0) {
    throw Error(Errc::HypothesisViolated,
                "6 | n = " + std::to_string(f.degree()) + ": the GF(4)* coset decomposition is not unique");
  }
}

std::array<Elem, 2> sorted_pair(Elem a, Elem b) { return a < b ? std::array{a, b} : std::array{b, a}; }

}  // namespace

// -----------------------------------------------------------------------------
// GF(4) and the facts about it
// -----------------------------------------------------------------------------

Elem gf4_epsilon(const Field& f) {
  require_even(f);
  const Elem e = f.pow(f.generator(), static_cast<std::int64_t>(f.group_order() / 3));
  return std::min(e, f.sqr(e));
}

bool in_gf4_star(const Field& f, Elem w) {
  return !w.is_zero() && f.degree() % 2 == 0 && f.frobenius(w, 2) == w;
}

Gf4Embedding make_gf4(const Field& f, Elem omega_prime) {
  Gf4Embedding g;
  g.epsilon = gf4_epsilon(f);
  g.omegas = {kOne, g.epsilon, f.sqr(g.epsilon)};
  if (!in_gf4_star(f, omega_prime)) {
    throw Error(Errc::InvalidArgument, "omega' = " + to_hex(omega_prime) + " is not in GF(4)*");
  }
  g.omega_prime = omega_prime;
  g.varpi = f.inv(omega_prime);
  return g;
}

EvenFacts verify_even_facts(const Field& f) {
  require_even(f);
  const int n = f.degree();
  const Elem eps = gf4_epsilon(f);
  const std::array<Elem, 3> omegas{kOne, eps, f.sqr(eps)};

  EvenFacts r;
  r.fact1_applies = n % 4 == 0;
  r.fact2_applies = n % 4 == 2;
  if (r.fact1_applies) {
    for (Elem w : omegas) r.fact1 = r.fact1 && f.trace(w) == 0;
  }
  if (r.fact2_applies) {
    r.fact2 = f.trace(omegas[1]) == 1 && f.trace(omegas[2]) == 1 && f.trace(kOne) == 0;
  }
  for (int k = 1; k < n; k += 2) {
    r.fact3_ks.push_back(k);
    const ExpClass q = f.exp_pow2(k);
    for (Elem w : omegas) {
      bool ok = f.pow(w, q - f.exp(1)) == w && f.frobenius(w, k) == f.sqr(w) &&
                f.mul(f.frobenius(w, k), w).is_one() && f.frobenius(w, 2 * k) == w;
      if (gf2n::gcd(k, n) == 1) ok = ok && f.pow(w, f.exp_inv(q - f.exp(1))) == w;
      r.fact3 = r.fact3 && ok;
    }
  }
  return r;
}

CubingResult verify_three_to_one_cubing(const Field& f, int k) {
  require_even(f);
  gf2n::require_coprime(f, k);
  std::vector<std::uint8_t> count(f.size(), 0);
  std::vector<bool> cube(f.size(), false);
  for (std::uint32_t i = 1; i < f.size(); ++i) {
    const Elem x(i);
    const Elem y = f.mul(f.frobenius(x, k), x);
    if (count[y.bits] < 255) ++count[y.bits];
    cube[f.mul(f.sqr(x), x).bits] = true;
  }
  CubingResult r;
  r.three_to_one = true;
  r.image_is_cubes = true;
  for (std::uint32_t y = 0; y < f.size(); ++y) {
    if (count[y] != 0) ++r.image_size;
    r.three_to_one = r.three_to_one && (count[y] == 0 || count[y] == 3);
    r.image_is_cubes = r.image_is_cubes && ((count[y] != 0) == cube[y]);
  }
  // 2^(2k) - 2^k + 1 mod 3, with 2 = -1.
  const int two_k = (k % 2 == 0) ? 1 : 2;
  r.exponent_divisible_by_3 = (two_k * two_k - two_k + 1) % 3 == 0;
  return r;
}

// -----------------------------------------------------------------------------
// EvenSystem
// -----------------------------------------------------------------------------

EvenSystem::EvenSystem(const Field& f, int k)
    : f_(f), k_(k), F_(kasami_function(f, k)), third_(f.group_order() / 3) {
  require_even(f);
  gf2n::require_coprime(f, k);
  eps_ = gf4_epsilon(f);
  const std::size_t size = f.size();
  std::vector<std::uint32_t> d(size / 2);
  offsets_.assign(size + 1, 0);
  for (std::uint32_t x = 0; x < size; x += 2) {
    d[x / 2] = (F_(Elem(x)) + F_(Elem(x | 1))).bits;
    ++offsets_[d[x / 2] + 1];
  }
  for (std::size_t b = 0; b < size; ++b) offsets_[b + 1] += offsets_[b];
  xs_.resize(size / 2);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t x = 0; x < size; x += 2) xs_[fill[d[x / 2]]++] = x;
}

std::vector<Elem> EvenSystem::pairs_at(Elem b) const {
  std::vector<Elem> out;
  for (std::uint32_t i = offsets_[b.bits]; i < offsets_[b.bits + 1]; ++i) out.emplace_back(xs_[i]);
  return out;
}

bool EvenSystem::is_cube(Elem x) const { return !x.is_zero() && f_.pow(x, static_cast<std::int64_t>(third_)).is_one(); }

Elem EvenSystem::coset_of(Elem x) const {
  require_not_div6(f_);
  if (x.is_zero()) throw Error(Errc::InvalidArgument, "0 has no GF(4)* coset");
  for (Elem w : {kOne, eps_, f_.sqr(eps_)}) {
    if (is_cube(f_.div(x, w))) return w;
  }
  throw Error(Errc::InvalidArgument, "no GF(4)* coset found");  // unreachable when 6 does not divide n
}

EvenPairCounts EvenSystem::counts_at(Elem b) const {
  require_not_div6(f_);
  EvenPairCounts c;
  for (Elem x : pairs_at(b)) {
    const Elem y = x + kOne;
    if (x.is_zero() || y.is_zero()) {
      ++c.degenerate;
      continue;
    }
    const Elem wx = coset_of(x);
    const Elem wy = coset_of(y);
    if (wx == wy) {
      ++c.same_coset;
    } else if (f_.div(x, wx) == f_.div(y, wy)) {
      ++c.cross_equal;
    } else {
      ++c.cross_distinct;
    }
  }
  return c;
}

EvenPairCounts even_system_pairs(const Field& f, int k, Elem b) { return EvenSystem(f, k).counts_at(b); }

// -----------------------------------------------------------------------------
// Discussion
// -----------------------------------------------------------------------------

EvenDiscussion::EvenDiscussion(const Field& f, int k, Elem omega_prime)
    : system_(f, k), gf4_(make_gf4(f, omega_prime)) {}

bool EvenDiscussion::pair_with_s(Elem b, const std::array<Elem, 2>& s) const {
  const Field& f = system_.field();
  const auto target = sorted_pair(s[0], s[1]);
  for (Elem x : system_.pairs_at(b)) {
    const Elem y = x + kOne;
    if (x.is_zero() || y.is_zero()) continue;
    const Elem px = f.mul(x, gf4_.varpi);
    const Elem py = f.mul(y, gf4_.varpi);
    if (!system_.is_cube(px) || !system_.is_cube(py)) continue;
    if (sorted_pair(px, py) == target) return true;
  }
  return false;
}

DiscussionReport EvenDiscussion::check(Elem u) const {
  const Field& f = system_.field();
  const int k = system_.k();
  if (!f.contains(u)) throw Error(Errc::InvalidArgument, "u = " + to_hex(u) + " is not a field element");
  if (auto sub = equations::excluded_subfield(f, u)) {
    throw Error(Errc::InvalidU, "u = " + to_hex(u) + " lies in " + *sub);
  }
  const Elem eps = gf4_.epsilon;
  const Elem varpi = gf4_.varpi;
  const auto pow_q1 = [&](Elem y) { return f.mul(f.frobenius(y, k), y); };
  const auto frob = [&](Elem y, int j) { return f.frobenius(y, static_cast<std::int64_t>(j) * k); };

  DiscussionReport r;
  r.u = u;
  r.gf4 = gf4_;
  const Elem s = u + frob(u, 1);
  const Elem scale = f.div(varpi, s);
  r.S = {f.mul(scale, pow_q1(u + eps)), f.mul(scale, pow_q1(u + kOne + eps))};
  const auto target = sorted_pair(r.S[0], r.S[1]);
  r.s_are_powers = system_.is_cube(r.S[0]) && system_.is_cube(r.S[1]);

  const Elem up1 = u + kOne;
  const std::array<Elem, 3> ws{s, f.inv(u) + f.inv(frob(u, 1)), f.inv(up1) + f.inv(frob(up1, 1))};
  std::array<Elem, 3> cs{};
  for (int i = 0; i < 3; ++i) {
    const Elem w = ws[i];
    const Elem zq1 = f.div(varpi, w);
    const auto ts = gf2n::solve_frobenius_affine(f, k, w + kOne);
    r.branch_results[i] = ts.size() == 2 && sorted_pair(f.mul(zq1, pow_q1(ts[0])), f.mul(zq1, pow_q1(ts[1]))) == target;
    // v = 1 / w^(q-1)
    const Elem v = f.div(w, frob(w, 1));
    const Elem vp1 = v + kOne;
    cs[i] = f.div(pow_q1(vp1), v);
  }
  r.common_c = cs[0] == cs[1] && cs[1] == cs[2];
  r.c_common = cs[0];

  const auto b_formula = [&](Elem y) {
    const Elem sy = y + frob(y, 1);
    // sy^(q^2-q+1) = sy^(q^2) * sy / sy^q
    const Elem den = f.div(f.mul(frob(sy, 2), sy), frob(sy, 1));
    return f.div(y + frob(y, 3), den);
  };
  r.b_value = b_formula(u);
  r.b_literal = b_formula(eps);

  const Elem X = f.mul(gf4_.omega_prime, r.S[0]);
  const Elem Y = f.mul(gf4_.omega_prime, r.S[1]);
  r.s_sums_to_one = (X + Y).is_one();
  r.b_observed = system_.F()(X) + system_.F()(Y);

  r.pair_found = pair_with_s(r.b_value, r.S);
  r.pair_found_literal = pair_with_s(r.b_literal, r.S);
  r.pair_found_observed = pair_with_s(r.b_observed, r.S);
  if (f.degree() % 6 != 0) r.at_b_value = system_.counts_at(r.b_value);
  return r;
}

DiscussionReport even_discussion_check(const Field& f, int k, Elem u, Elem omega_prime) {
  return EvenDiscussion(f, k, omega_prime).check(u);
}

}  // namespace kapn::kasami
