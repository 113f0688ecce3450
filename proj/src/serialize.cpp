#include "kapn/serialize.hpp"

#include <algorithm>

namespace kapn {

Json hex_list(std::vector<Elem> elems, bool sort) {
  if (sort) std::sort(elems.begin(), elems.end());
  Json out = Json::array();
  for (Elem e : elems) out.push_back(to_hex(e));
  return out;
}

Json to_json(const gf2n::Field& f) {
  Json j;
  j["n"] = f.degree();
  j["poly"] = to_hex(f.poly());
  j["generator"] = to_hex(f.generator());
  j["size"] = f.size();
  if (f.degree() % 2 == 0) j["epsilon"] = to_hex(kasami::gf4_epsilon(f));
  return j;
}

Json to_json(const equations::RootSet& r) {
  return Json{{"k", r.k}, {"a", to_hex(r.a)}, {"roots", hex_list(r.roots)}};
}

Json to_json(const equations::Witness& w) {
  return Json{{"u", to_hex(w.u)},   {"a", to_hex(w.a)},   {"x1", to_hex(w.x1)},
              {"x2", to_hex(w.x2)}, {"x3", to_hex(w.x3)}, {"substitution_ok", w.substitution_ok}};
}

Json to_json(const equations::SolutionHistogram& h) {
  return Json{{"n", h.n},   {"k", h.k},   {"N0", h.n0},
              {"N1", h.n1}, {"N3", h.n3}, {"irregular", hex_list(h.irregular)}};
}

Json to_json(const equations::AffineSolution& s) {
  Json j{{"c", to_hex(s.c)},
         {"reduced_a", to_hex(s.reduced_a)},
         {"V_roots", hex_list(s.V_roots)},
         {"v_roots", hex_list(s.v_roots)}};
  if (s.u) j["u"] = to_hex(*s.u);
  if (s.closed_form_match) j["closed_form_match"] = *s.closed_form_match;
  return j;
}

Json to_json(const kasami::FamilyEntry& e) {
  Json params = Json::object();
  for (const auto& [name, value] : e.params) params[name] = value;
  return Json{{"family", e.family}, {"params", params}, {"condition", e.condition}, {"d", e.d}};
}

Json to_json(const kasami::McmPermutation& m) {
  return Json{{"permutation", m.permutation}, {"within_hypothesis", m.within_hypothesis}, {"image_size", m.image_size}};
}

Json to_json(const kasami::ClosedFormReport& r) {
  std::vector<Elem> v(r.v.begin(), r.v.end());
  std::vector<Elem> inv(r.inv_root.begin(), r.inv_root.end());
  std::vector<Elem> exp(r.expected.begin(), r.expected.end());
  return Json{{"u", to_hex(r.u)},
              {"a", to_hex(r.a)},
              {"c", to_hex(r.c)},
              {"v", hex_list(v, false)},
              {"inv_root", hex_list(inv, false)},
              {"expected", hex_list(exp, false)},
              {"traces", r.traces},
              {"identities_hold", r.identities_hold},
              {"traces_zero", r.traces_zero},
              {"roots_solve", r.roots_solve},
              {"pass", r.pass()}};
}

Json to_json(const kasami::EvenFacts& r) {
  return Json{{"fact1_applies", r.fact1_applies}, {"fact1", r.fact1}, {"fact2_applies", r.fact2_applies},
              {"fact2", r.fact2},                 {"fact3", r.fact3}, {"fact3_ks", r.fact3_ks}};
}

Json to_json(const kasami::CubingResult& r) {
  return Json{{"three_to_one", r.three_to_one},
              {"image_is_cubes", r.image_is_cubes},
              {"image_size", r.image_size},
              {"exponent_divisible_by_3", r.exponent_divisible_by_3}};
}

Json to_json(const kasami::EvenPairCounts& c) {
  return Json{{"degenerate", c.degenerate},
              {"same_coset", c.same_coset},
              {"cross_distinct", c.cross_distinct},
              {"cross_equal", c.cross_equal}};
}

Json to_json(const kasami::DiscussionReport& r) {
  Json j{{"u", to_hex(r.u)},
         {"epsilon", to_hex(r.gf4.epsilon)},
         {"omega_prime", to_hex(r.gf4.omega_prime)},
         {"varpi", to_hex(r.gf4.varpi)},
         {"S", hex_list({r.S[0], r.S[1]}, false)},
         {"branch_results", r.branch_results},
         {"s_are_powers", r.s_are_powers},
         {"common_c", r.common_c},
         {"c", to_hex(r.c_common)},
         {"b_value", to_hex(r.b_value)},
         {"b_literal", to_hex(r.b_literal)},
         {"b_observed", to_hex(r.b_observed)},
         {"s_sums_to_one", r.s_sums_to_one},
         {"pair_found", r.pair_found},
         {"pair_found_literal", r.pair_found_literal},
         {"pair_found_observed", r.pair_found_observed}};
  j["pairs_at_b_value"] = r.at_b_value ? to_json(*r.at_b_value) : Json(nullptr);
  return j;
}

Json to_json(const kasami::ReductionRecord& r) {
  Json pairs = Json::array();
  for (const auto& t : r.pairs) {
    Json p{{"x", to_hex(t.x)}, {"y", to_hex(t.y)}, {"z", to_hex(t.z)}, {"v", to_hex(t.v)}};
    if (t.omega) p["omega"] = to_hex(*t.omega);
    pairs.push_back(std::move(p));
  }
  Json adm = Json::array();
  for (const auto& a : r.admissible) {
    Json e{{"v", to_hex(a.v)}};
    if (a.omega) e["omega"] = to_hex(*a.omega);
    adm.push_back(std::move(e));
  }
  return Json{{"b", to_hex(r.b)},
              {"c", to_hex(r.c)},
              {"parity", r.parity == kasami::Parity::Odd ? "odd" : "even"},
              {"original_pair_count", r.original_pair_count},
              {"admissible_v_count", r.admissible_v_count},
              {"v_per_pair", r.v_per_pair},
              {"consistent", r.consistent},
              {"pairs", pairs},
              {"admissible", adm}};
}

void write_spectrum_csv(std::ostream& out, const kasami::DifferentialSpectrum& s) {
  out << "b_hex,count\n";
  for (std::size_t b = 0; b < s.row.size(); ++b) {
    out << to_hex(std::uint64_t{b}) << ',' << s.row[b] << '\n';
  }
}

}  // namespace kapn
