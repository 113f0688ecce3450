#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kapn/gf2n.hpp"

// Solving X^(q+1) + X + a = 0 over GF(2^n) with q = 2^k, gcd(k, n) = 1, and
// the three-root parameterization by u.
namespace kapn::equations {

using gf2n::Field;

struct RootSet {
  int k = 0;
  Elem a;
  std::vector<Elem> roots;  // ascending
};

struct Witness {
  Elem u;
  Elem a;
  Elem x1, x2, x3;
  // Each x_i is a root and the three are pairwise distinct.
  bool substitution_ok = false;
};

struct SolutionHistogram {
  int n = 0;
  int k = 0;
  std::uint64_t n0 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n3 = 0;
  // Nonzero a with a root count outside {0, 1, 3}; empty when the count
  // claim holds.
  std::vector<Elem> irregular;

  bool consistent(std::uint64_t field_size) const {
    return irregular.empty() && n0 + n1 + n3 == field_size - 1 && n1 + 3 * n3 == field_size - 2;
  }
};

// (v + 1)^(q+1) + c v = 0 solved through V^(q+1) + V + c^(-1/q) = 0.
struct AffineSolution {
  Elem c;
  Elem reduced_a;              // c^(-1/q); zero when c = 0
  std::vector<Elem> V_roots;   // empty when c = 0
  std::vector<Elem> v_roots;   // ascending
  // Set only for n odd with three roots: whether v_roots equal the closed
  // forms evaluated at the recovered u.
  std::optional<Elem> u;
  std::optional<bool> closed_form_match;
};

// X^(q+1) + X
Elem lhs(const Field& f, int k, Elem x) noexcept;

RootSet roots_bruteforce(const Field& f, int k, Elem a);
SolutionHistogram count_histogram(const Field& f, int k);

// Which exclusion rejects u, if any: "GF(2)", "GF(4)" or nullopt.
std::optional<std::string> excluded_subfield(const Field& f, Elem u);

Witness witness_from_u(const Field& f, int k, Elem u);
bool check_witness(const Field& f, int k, const Witness& w);

// Smallest u reproducing a and its root set. Candidates come from solving
// u^q + u = (1/x + 1)^(1/(q-1)) for each root x.
Elem recover_u(const Field& f, int k, Elem a);
// Same contract by sweeping every u; the audit path for recover_u.
Elem recover_u_exhaustive(const Field& f, int k, Elem a);
// Every admissible u whose witness has the given a. Ascending.
std::vector<Elem> all_u_for(const Field& f, int k, Elem a);

// Closed forms of the three roots of (v+1)^(q+1) + c v = 0 in terms of u,
// with c = a(u)^(-q): 1/(u+u^q)^(q^2-q), u^(q^3-q)/(u+u^q)^(q^2-q),
// (u+1)^(q^3-q)/(u+u^q)^(q^2-q).
std::array<Elem, 3> closed_form_v(const Field& f, int k, Elem u);

// (v + 1)^(q+1) + c v
Elem affine_lhs(const Field& f, int k, Elem c, Elem v) noexcept;

AffineSolution solve_affine_form(const Field& f, int k, Elem c);

}  // namespace kapn::equations
