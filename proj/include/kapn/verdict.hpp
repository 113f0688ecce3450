#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kapn/gf2n.hpp"

namespace kapn {

// Outcome of an exhaustive check: pass flag, how many inputs were examined
// and the first few inputs that broke the claim.
struct Verdict {
  static constexpr std::size_t kMaxCounterexamples = 16;

  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<Elem> counterexamples;

  void fail(Elem witness) {
    pass = false;
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(witness);
  }
};

}  // namespace kapn
