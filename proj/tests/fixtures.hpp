#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "ordconv/harness.hpp"
#include "ordconv/qoset.hpp"

namespace tfx {

using namespace ordconv;

inline int idx(const Qoset& q, const std::string& label) {
  for (int i = 0; i < q.size(); ++i)
    if (q.label(i) == label) return i;
  throw std::runtime_error("no element labeled " + label);
}

inline Subset by_labels(const Qoset& q, const std::vector<std::string>& labels) {
  Subset out;
  for (const auto& l : labels) out |= Subset::single(idx(q, l));
  return out;
}

// divisor-lattice oracle helpers, independent of the Qoset relation
inline long long divisor_value(const Qoset& q, int i) { return std::stoll(q.label(i)); }

inline Subset divisors_dividing(const Qoset& q, long long v) {
  Subset out;
  for (int i = 0; i < q.size(); ++i)
    if (v % divisor_value(q, i) == 0) out |= Subset::single(i);
  return out;
}

inline long long lcm_of(const Qoset& q, Subset a) {
  long long l = 1;
  for (int i : a.members()) l = std::lcm(l, divisor_value(q, i));
  return l;
}

template <typename F>
inline void for_all_subsets(int n, F&& f) {
  std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < size; ++m) f(Subset{m});
}

}  // namespace tfx
