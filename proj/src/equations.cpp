#include "kapn/equations.hpp"

#include <algorithm>

namespace kapn::equations {

namespace {

Elem x_pow_q_plus_1(const Field& f, int k, Elem x) noexcept { return f.mul(f.frobenius(x, k), x); }

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// a(u) = (u+u^q)^(q^2+1) / (u+u^(q^2))^(q+1)
Elem a_of_u(const Field& f, int k, Elem u) {
  const Elem s = u + f.frobenius(u, k);
  const Elem t = u + f.frobenius(u, 2 * k);
  const Elem num = f.mul(f.frobenius(s, 2 * k), s);
  const Elem den = x_pow_q_plus_1(f, k, t);
  return f.div(num, den);
}

void validate_u(const Field& f, Elem u) {
  if (!f.contains(u)) throw Error(Errc::InvalidArgument, "u = " + to_hex(u) + " is not a field element");
  if (auto sub = excluded_subfield(f, u)) {
    throw Error(Errc::InvalidU, "u = " + to_hex(u) + " lies in " + *sub);
  }
}

}  // namespace

Elem lhs(const Field& f, int k, Elem x) noexcept { return x_pow_q_plus_1(f, k, x) + x; }

RootSet roots_bruteforce(const Field& f, int k, Elem a) {
  gf2n::require_coprime(f, k);
  RootSet out{k, a, {}};
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (lhs(f, k, Elem(x)) == a) out.roots.emplace_back(x);
  }
  return out;
}

SolutionHistogram count_histogram(const Field& f, int k) {
  gf2n::require_coprime(f, k);
  std::vector<std::uint32_t> count(f.size(), 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) ++count[lhs(f, k, Elem(x)).bits];

  SolutionHistogram h;
  h.n = f.degree();
  h.k = k;
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    switch (count[a]) {
      case 0: ++h.n0; break;
      case 1: ++h.n1; break;
      case 3: ++h.n3; break;
      default: h.irregular.emplace_back(a); break;
    }
  }
  return h;
}

std::optional<std::string> excluded_subfield(const Field& f, Elem u) {
  if (u.bits <= 1) return "GF(2)";
  if (f.degree() % 2 == 0 && f.frobenius(u, 2) == u) return "GF(4)";
  return std::nullopt;
}

Witness witness_from_u(const Field& f, int k, Elem u) {
  gf2n::require_coprime(f, k);
  validate_u(f, u);
  const Elem s = u + f.frobenius(u, k);
  if ((u + f.frobenius(u, 2 * k)).is_zero()) {
    throw Error(Errc::DegenerateU, "u + u^(q^2) = 0 for u = " + to_hex(u));
  }

  Witness w;
  w.u = u;
  w.a = a_of_u(f, k, u);
  // s^(q-1) = s^q / s
  const Elem x1 = f.inv(kOne + f.div(f.frobenius(s, k), s));
  // u^(q^2-q) = u^(q^2) / u^q
  const auto ratio = [&](Elem y) { return f.div(f.frobenius(y, 2 * k), f.frobenius(y, k)); };
  w.x1 = x1;
  w.x2 = f.mul(ratio(u), x1);
  w.x3 = f.mul(ratio(u + kOne), x1);
  w.substitution_ok = check_witness(f, k, w);
  return w;
}

bool check_witness(const Field& f, int k, const Witness& w) {
  const std::array<Elem, 3> xs{w.x1, w.x2, w.x3};
  for (Elem x : xs) {
    if (lhs(f, k, x) != w.a) return false;
  }
  return xs[0] != xs[1] && xs[0] != xs[2] && xs[1] != xs[2];
}

namespace {

bool reproduces(const Field& f, int k, Elem u, Elem a, const std::vector<Elem>& roots) {
  if (excluded_subfield(f, u)) return false;
  if ((u + f.frobenius(u, 2 * k)).is_zero()) return false;
  const Witness w = witness_from_u(f, k, u);
  if (w.a != a || !w.substitution_ok) return false;
  return sorted_unique({w.x1, w.x2, w.x3}) == roots;
}

std::vector<Elem> three_roots_or_throw(const Field& f, int k, Elem a) {
  gf2n::require_coprime(f, k);
  if (a.is_zero()) {
    throw Error(Errc::OutsideLemmaScope, "a = 0 has the degenerate root pair {0, 1}");
  }
  RootSet rs = roots_bruteforce(f, k, a);
  if (rs.roots.size() != 3) {
    throw Error(Errc::NoThreeSolutions,
                "a = " + to_hex(a) + " has " + std::to_string(rs.roots.size()) + " root(s)");
  }
  return rs.roots;
}

}  // namespace

Elem recover_u(const Field& f, int k, Elem a) {
  const std::vector<Elem> roots = three_roots_or_throw(f, k, a);
  // x = 1/(1 + s^(q-1)) with s = u + u^q, so s = (1/x + 1)^(1/(q-1)).
  const ExpClass inv_qm1 = f.exp_inv(f.exp_pow2(k) - f.exp(1));
  std::vector<Elem> candidates;
  for (Elem x : roots) {
    if (x.is_zero()) continue;
    const Elem s = f.pow(f.inv(x) + kOne, inv_qm1);
    for (Elem u : gf2n::solve_frobenius_affine(f, k, s)) {
      if (reproduces(f, k, u, a, roots)) candidates.push_back(u);
    }
  }
  if (candidates.empty()) {
    // Not expected when the three-root parameterization holds.
    return recover_u_exhaustive(f, k, a);
  }
  return *std::min_element(candidates.begin(), candidates.end());
}

Elem recover_u_exhaustive(const Field& f, int k, Elem a) {
  const std::vector<Elem> roots = three_roots_or_throw(f, k, a);
  for (std::uint32_t u = 2; u < f.size(); ++u) {
    if (reproduces(f, k, Elem(u), a, roots)) return Elem(u);
  }
  throw Error(Errc::NoThreeSolutions, "no admissible u reproduces a = " + to_hex(a));
}

std::vector<Elem> all_u_for(const Field& f, int k, Elem a) {
  gf2n::require_coprime(f, k);
  std::vector<Elem> out;
  for (std::uint32_t u = 2; u < f.size(); ++u) {
    const Elem e(u);
    if (excluded_subfield(f, e) || (e + f.frobenius(e, 2 * k)).is_zero()) continue;
    if (a_of_u(f, k, e) == a) out.push_back(e);
  }
  return out;
}

std::array<Elem, 3> closed_form_v(const Field& f, int k, Elem u) {
  const Elem s = u + f.frobenius(u, k);
  // 1 / s^(q^2-q) = s^q / s^(q^2)
  const Elem base = f.div(f.frobenius(s, k), f.frobenius(s, 2 * k));
  const auto q3_minus_q = [&](Elem y) { return f.div(f.frobenius(y, 3 * k), f.frobenius(y, k)); };
  return {base, f.mul(q3_minus_q(u), base), f.mul(q3_minus_q(u + kOne), base)};
}

Elem affine_lhs(const Field& f, int k, Elem c, Elem v) noexcept {
  return x_pow_q_plus_1(f, k, v + kOne) + f.mul(c, v);
}

AffineSolution solve_affine_form(const Field& f, int k, Elem c) {
  gf2n::require_coprime(f, k);
  AffineSolution out;
  out.c = c;
  if (c.is_zero()) {
    out.v_roots = {kOne};
    return out;
  }
  const ExpClass inv_q = f.exp_inv(f.exp_pow2(k));
  const Elem c_root = f.pow(c, inv_q);  // c^(1/q)
  out.reduced_a = f.inv(c_root);
  out.V_roots = roots_bruteforce(f, k, out.reduced_a).roots;
  for (Elem V : out.V_roots) out.v_roots.push_back(f.mul(c_root, V) + kOne);
  std::sort(out.v_roots.begin(), out.v_roots.end());

  if (out.v_roots.size() == 3 && f.degree() % 2 == 1) {
    const Elem u = recover_u(f, k, out.reduced_a);
    const auto cf = closed_form_v(f, k, u);
    out.u = u;
    out.closed_form_match = sorted_unique({cf[0], cf[1], cf[2]}) == out.v_roots;
  }
  return out;
}

}  // namespace kapn::equations
