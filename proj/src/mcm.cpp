#include "kapn/mcm.hpp"

#include <vector>

#include "kapn/power_map.hpp"

namespace kapn::kasami {

Elem tk_eval(const Field& f, int k, Elem x) {
  if (k < 1) throw Error(Errc::InvalidArgument, "T_k needs k >= 1");
  Elem sum = kZero;
  Elem y = x;
  for (int i = 0; i < k; ++i) {
    sum += y;
    y = f.sqr(y);
  }
  return sum;
}

Elem mcm_eval(const Field& f, int k, Elem x) {
  if (x.is_zero()) return kZero;
  const Elem t = tk_eval(f, k, x);
  return f.div(f.mul(f.frobenius(t, k), t), f.frobenius(x, k));
}

McmPermutation verify_mcm_permutation(const Field& f, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "MCM polynomial needs k >= 1");
  McmPermutation out;
  out.within_hypothesis = (k % 2 == 1) && gf2n::gcd(k, f.degree()) == 1;
  std::vector<bool> seen(f.size(), false);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const Elem y = mcm_eval(f, k, Elem(x));
    if (!seen[y.bits]) {
      seen[y.bits] = true;
      ++out.image_size;
    }
  }
  out.permutation = out.image_size == f.size();
  return out;
}

Verdict verify_kasami_gold_identity(const Field& f, int k) {
  gf2n::require_coprime(f, k);
  const PowerFunction F = kasami_function(f, k);
  Verdict v;
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const Elem x(i);
    const Elem left = F(x) + F(x + kOne) + kOne;
    const Elem right = mcm_eval(f, k, x + f.sqr(x));
    ++v.checked;
    if (left != right) v.fail(x);
  }
  return v;
}

Verdict verify_derivative_two_to_one(const Field& f, int k) {
  gf2n::require_coprime(f, k);
  const PowerFunction F = kasami_function(f, k);
  std::vector<std::uint32_t> count(f.size(), 0);
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const Elem x(i);
    ++count[(F(x) + F(x + kOne)).bits];
  }
  Verdict v;
  for (std::uint32_t b = 0; b < f.size(); ++b) {
    ++v.checked;
    if (count[b] != 0 && count[b] != 2) v.fail(Elem(b));
  }
  return v;
}

}  // namespace kapn::kasami
