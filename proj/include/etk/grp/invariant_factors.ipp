// Template body for invariant_factors_from_counts; included from algorithms.hpp.
#pragma once

#include <algorithm>

namespace etk::grp {

template <class CountFn>
std::vector<std::uint32_t> invariant_factors_from_counts(std::uint64_t group_order, CountFn count_fn) {
  // For each prime l, the number of cyclic factors whose l-part is at least l^k
  // is log_l(|A[l^k]| / |A[l^(k-1)]|).
  std::vector<std::uint32_t> factors;  // descending once assembled
  std::uint64_t n = group_order;
  for (std::uint64_t l = 2; n > 1; ++l) {
    if (n % l) continue;
    std::uint64_t lpart = 1;
    while (n % l == 0) {
      n /= l;
      lpart *= l;
    }
    std::vector<std::size_t> at_least;  // at_least[k-1] = #factors with l-part >= l^k
    std::uint64_t prev = 1, lk = 1;
    while (lk < lpart) {
      lk *= l;
      const std::uint64_t c = count_fn(lk);
      std::uint64_t ratio = c / prev, r = 0;
      while (ratio > 1) {
        ratio /= l;
        ++r;
      }
      if (r == 0) break;
      at_least.push_back(r);
      prev = c;
    }
    const std::size_t rank = at_least.empty() ? 0 : at_least.front();
    if (factors.size() < rank) factors.resize(rank, 1);
    for (std::size_t k = 0; k < at_least.size(); ++k)
      for (std::size_t i = 0; i < at_least[k]; ++i) factors[i] *= static_cast<std::uint32_t>(l);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace etk::grp
