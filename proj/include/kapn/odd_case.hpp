#pragma once

#include <array>
#include <cstdint>

#include "kapn/gf2n.hpp"
#include "kapn/verdict.hpp"

// Odd n: for every c, (v+1)^(q+1) + c v = 0 has at most one root v with
// Tr(1/v^(1/(q-1))) = 1, and in the three-root case none at all.
namespace kapn::kasami {

using gf2n::Field;

// 1 / v^(1/(q-1))
Elem inverse_qm1_root(const Field& f, int k, Elem v);

struct ClosedFormReport {
  Elem u;
  Elem a;  // lemma parameter a(u)
  Elem c;  // c with c^(-1/q) = a, i.e. c = a^(-q)
  std::array<Elem, 3> v{};
  std::array<Elem, 3> inv_root{};  // 1 / v_i^(1/(q-1))
  // u^q + u^(q^2), u^-q + u^-(q^2), (u+1)^-q + (u+1)^-(q^2)
  std::array<Elem, 3> expected{};
  std::array<int, 3> traces{};
  bool identities_hold = false;
  bool traces_zero = false;
  // Each v_i solves (v+1)^(q+1) + c v = 0 and the three are distinct.
  bool roots_solve = false;

  bool pass() const { return identities_hold && traces_zero && roots_solve; }
};

ClosedFormReport closed_form_v_and_trace_check(const Field& f, int k, Elem u);

struct OddSystemResult {
  // Counterexamples are values of c.
  Verdict verdict;
  std::uint64_t three_root_cases = 0;
  std::uint64_t max_admissible = 0;
};

// check_closed_forms additionally runs solve_affine_form on every three-root
// c and requires the closed forms to reproduce its roots.
OddSystemResult verify_odd_system(const Field& f, int k, bool check_closed_forms = false);

}  // namespace kapn::kasami
