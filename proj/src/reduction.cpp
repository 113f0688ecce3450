#include "kapn/reduction.hpp"

#include <algorithm>
#include <functional>

#include "kapn/even_case.hpp"
#include "kapn/odd_case.hpp"

namespace kapn::kasami {

namespace {

// Counting sort of the ids begin, begin+step, ... < end into buckets by key(id).
void build_buckets(std::size_t size, std::uint32_t begin, std::uint32_t end, std::uint32_t step,
                   const std::function<std::uint32_t(std::uint32_t)>& key,
                   std::vector<std::uint32_t>& offsets, std::vector<std::uint32_t>& items) {
  std::vector<std::uint32_t> keys;
  std::vector<std::uint32_t> ids;
  for (std::uint32_t i = begin; i < end; i += step) {
    ids.push_back(i);
    keys.push_back(key(i));
  }
  offsets.assign(size + 1, 0);
  for (std::uint32_t kv : keys) ++offsets[kv + 1];
  for (std::size_t j = 0; j < size; ++j) offsets[j + 1] += offsets[j];
  items.resize(ids.size());
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t j = 0; j < ids.size(); ++j) items[fill[keys[j]]++] = ids[j];
}

}  // namespace

ReductionChain::ReductionChain(const Field& f, int k, Parity parity)
    : f_(f), k_(k), parity_(parity), F_(kasami_function(f, k)) {
  gf2n::require_coprime(f, k);
  const bool n_even = f.degree() % 2 == 0;
  if (n_even != (parity == Parity::Even)) {
    throw Error(Errc::ParityMismatch, "requested chain parity does not match n = " + std::to_string(f.degree()));
  }
  const auto size = static_cast<std::uint32_t>(f.size());
  build_buckets(size, 0, size, 2,
                [&](std::uint32_t x) { return (F_(Elem(x)) + F_(Elem(x | 1))).bits; }, d_offsets_, d_items_);
  build_buckets(size, 1, size, 1,
                [&](std::uint32_t i) {
                  const Elem vp1 = Elem(i) + kOne;
                  return f_.div(f_.mul(f_.frobenius(vp1, k_), vp1), Elem(i)).bits;
                },
                c_offsets_, c_items_);
  if (n_even) {
    build_buckets(size, 1, size, 1,
                  [&](std::uint32_t i) { return f_.mul(f_.frobenius(Elem(i), k_), Elem(i)).bits; }, r_offsets_,
                  r_items_);
  }
}

std::vector<Elem> ReductionChain::bucket(const std::vector<std::uint32_t>& offsets,
                                         const std::vector<std::uint32_t>& items, Elem key) {
  std::vector<Elem> out;
  for (std::uint32_t i = offsets[key.bits]; i < offsets[key.bits + 1]; ++i) out.emplace_back(items[i]);
  return out;
}

std::vector<Elem> ReductionChain::qp1_roots(Elem y) const { return bucket(r_offsets_, r_items_, y); }

// The first equation (x/z)^q + (x/z) = w + 1, w = 1/v^(1/(q-1)), is solvable
// iff Tr(w + 1) = 0. On the even chain x, y are nonzero, which rules out the
// solutions x/z in {0, 1}, i.e. w = 1.
bool ReductionChain::admissible(Elem v, bool even) const {
  const Elem w = inverse_qm1_root(f_, k_, v);
  if (f_.trace(w + kOne) != 0) return false;
  return !(even && w.is_one());
}

ReductionRecord ReductionChain::at(Elem b) const {
  if (!f_.contains(b)) throw Error(Errc::InvalidArgument, "b = " + to_hex(b) + " is not a field element");
  return parity_ == Parity::Odd ? odd_at(b) : even_at(b);
}

ReductionRecord ReductionChain::odd_at(Elem b) const {
  ReductionRecord r;
  r.b = b;
  r.c = b + kOne;
  r.parity = Parity::Odd;
  r.v_per_pair = 1;

  const ExpClass qp1_inv = f_.exp_inv(f_.exp_pow2(k_) + f_.exp(1));
  std::vector<Elem> reached;
  for (Elem X : bucket(d_offsets_, d_items_, b)) {
    ++r.original_pair_count;
    const Elem x = f_.pow(X, qp1_inv);
    const Elem y = f_.pow(X + kOne, qp1_inv);
    const Elem z = x + y;
    const Elem v = f_.div(f_.frobenius(z, 2 * k_), z);
    r.pairs.push_back({std::nullopt, x, y, z, v});
    reached.push_back(v);
  }
  std::vector<Elem> adm;
  for (Elem v : bucket(c_offsets_, c_items_, r.c)) {
    if (admissible(v, false)) {
      adm.push_back(v);
      r.admissible.push_back({std::nullopt, v});
    }
  }
  r.admissible_v_count = adm.size();
  std::sort(reached.begin(), reached.end());
  std::sort(adm.begin(), adm.end());
  r.consistent = r.admissible_v_count == r.original_pair_count && reached == adm;
  return r;
}

ReductionRecord ReductionChain::even_at(Elem b) const {
  ReductionRecord r;
  r.b = b;
  r.c = b + kOne;
  r.parity = Parity::Even;
  r.v_per_pair = 3;
  r.consistent = true;

  const Gf4Embedding gf4 = make_gf4(f_);
  const auto roots_of_v = bucket(c_offsets_, c_items_, r.c);
  const std::uint64_t third = f_.group_order() / 3;
  const auto is_cube = [&](Elem e) { return !e.is_zero() && f_.pow(e, static_cast<std::int64_t>(third)).is_one(); };

  for (Elem omega : gf4.omegas) {
    const Elem varpi = f_.inv(omega);
    const Elem varpi2 = f_.sqr(varpi);
    std::uint64_t pairs = 0;
    std::vector<Elem> reached;
    for (Elem X : bucket(d_offsets_, d_items_, b)) {
      const Elem Y = X + kOne;
      if (X.is_zero() || Y.is_zero()) continue;
      const Elem px = f_.mul(X, varpi);
      const Elem py = f_.mul(Y, varpi);
      if (!is_cube(px) || !is_cube(py)) continue;
      ++pairs;
      for (Elem x : qp1_roots(px)) {
        for (Elem y : qp1_roots(py)) {
          const Elem z = x + y;
          const Elem v = f_.mul(varpi2, f_.div(f_.frobenius(z, 2 * k_), z));
          if (std::find(reached.begin(), reached.end(), v) == reached.end()) {
            reached.push_back(v);
            r.pairs.push_back({omega, x, y, z, v});
          }
        }
      }
    }
    std::vector<Elem> adm;
    for (Elem v : roots_of_v) {
      if (is_cube(f_.mul(v, f_.sqr(omega))) && admissible(v, true)) {
        adm.push_back(v);
        r.admissible.push_back({omega, v});
      }
    }
    r.original_pair_count += pairs;
    r.admissible_v_count += adm.size();
    std::sort(reached.begin(), reached.end());
    std::sort(adm.begin(), adm.end());
    r.consistent = r.consistent && adm.size() == r.v_per_pair * pairs && reached == adm;
  }
  return r;
}

ReductionRecord reduction_equivalence(const Field& f, int k, Elem b, Parity parity) {
  return ReductionChain(f, k, parity).at(b);
}

}  // namespace kapn::kasami
