#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kapn/gf2n.hpp"
#include "kapn/serialize.hpp"

// Verification ops behind `kapn verify`. Each op is one exhaustive check at
// one (n, k) and yields a report; the run aggregates them.
namespace kapn::cli {

using gf2n::Field;

struct OpReport {
  std::string op;
  int n = 0;
  std::optional<int> k;
  bool pass = true;
  std::vector<Elem> counterexamples;
  std::int64_t elapsed_ms = 0;
  Json details = Json::object();
};

struct RunReport {
  std::vector<OpReport> reports;
  bool pass = true;
  std::int64_t elapsed_ms = 0;
};

// stable drops elapsed_ms.
Json to_json(const OpReport& r, bool stable);
Json to_json(const RunReport& r, bool stable);

struct VerifyOptions {
  std::optional<Elem> u;
  std::optional<Elem> omega_prime;
  bool full_sweep = false;
  unsigned jobs = 1;
};

const std::vector<std::string>& verify_targets();

// k in [1, n-1] with gcd(k, n) = 1.
std::vector<int> coprime_ks(int n);

// Runs a target for the given k, or for every coprime k when k is unset.
// Throws kapn::Error on domain errors (wrong parity, k not coprime, ...).
RunReport verify(const std::string& target, const Field& f, std::optional<int> k, const VerifyOptions& opt);

}  // namespace kapn::cli
