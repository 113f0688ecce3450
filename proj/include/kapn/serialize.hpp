#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"
#include "kapn/equations.hpp"
#include "kapn/even_case.hpp"
#include "kapn/mcm.hpp"
#include "kapn/odd_case.hpp"
#include "kapn/power_map.hpp"
#include "kapn/reduction.hpp"
#include "kapn/verdict.hpp"

// JSON shapes of the domain records. Elements are lowercase hex strings,
// element sets are sorted ascending by mask.
namespace kapn {

using Json = nlohmann::ordered_json;

Json hex_list(std::vector<Elem> elems, bool sort = true);

Json to_json(const gf2n::Field& f);
Json to_json(const equations::RootSet& r);
Json to_json(const equations::Witness& w);
Json to_json(const equations::SolutionHistogram& h);
Json to_json(const equations::AffineSolution& s);
Json to_json(const kasami::FamilyEntry& e);
Json to_json(const kasami::McmPermutation& m);
Json to_json(const kasami::ClosedFormReport& r);
Json to_json(const kasami::EvenFacts& r);
Json to_json(const kasami::CubingResult& r);
Json to_json(const kasami::EvenPairCounts& c);
Json to_json(const kasami::DiscussionReport& r);
Json to_json(const kasami::ReductionRecord& r);

// b_hex,count for every b, with a header line.
void write_spectrum_csv(std::ostream& out, const kasami::DifferentialSpectrum& s);

}  // namespace kapn
