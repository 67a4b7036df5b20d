#include "ordconv/qoset.hpp"

#include <algorithm>

namespace ordconv {

Qoset::Qoset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& le_pairs)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (n_ > 64) throw CapExceeded("carrier size exceeds 64");
  up_.assign(n_, Subset::none());
  for (int i = 0; i < n_; ++i) up_[i] = Subset::single(i);
  for (auto [i, j] : le_pairs) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InputError("leq pair index out of range");
    up_[i] |= Subset::single(j);
  }
  // reflexive-transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n_; ++i) {
      Subset acc = up_[i];
      for (int j : up_[i].members()) acc |= up_[j];
      if (acc != up_[i]) {
        up_[i] = acc;
        changed = true;
      }
    }
  }
  down_.assign(n_, Subset::none());
  for (int i = 0; i < n_; ++i)
    for (int j : up_[i].members()) down_[j] |= Subset::single(i);
  for (int i = 0; i < n_ && poset_; ++i)
    if ((up_[i] & down_[i]) != Subset::single(i)) poset_ = false;
}

Subset Qoset::cone(Subset a, Dir d) const {
  Subset r;
  for (int i : a.members()) r |= (d == Dir::down) ? down_[i] : up_[i];
  return r;
}

Subset Qoset::bounds(Subset a, Bound b) const {
  Subset r = all();
  for (int i : a.members()) r &= (b == Bound::upper) ? up_[i] : down_[i];
  return r;
}

Subset Qoset::extremum_set(Subset a, Extremum e) const {
  if (e == Extremum::sup) {
    Subset ub = bounds(a, Bound::upper);
    return bounds(ub, Bound::lower) & ub;
  }
  Subset lb = bounds(a, Bound::lower);
  return bounds(lb, Bound::upper) & lb;
}

Subset Qoset::maximal_elements(Subset a, Pole p) const {
  Subset r;
  for (int i : a.members()) {
    Subset beyond = (p == Pole::max) ? (up_[i] & a) - down_[i] : (down_[i] & a) - up_[i];
    if (beyond.empty()) r |= Subset::single(i);
  }
  return r;
}

Subset Qoset::saturate(Subset a) const {
  Subset r;
  for (int i : a.members()) r |= cls(i);
  return r;
}

bool Qoset::is_structure(Subset a, StructureKind k) const {
  switch (k) {
    case StructureKind::chain:
      for (int i : a.members())
        for (int j : a.members())
          if (!leq(i, j) && !leq(j, i)) return false;
      return true;
    case StructureKind::antichain:
      for (int i : a.members())
        for (int j : a.members())
          if (i != j && leq(i, j)) return false;
      return true;
    case StructureKind::directed:
      if (a.empty()) return false;
      for (int i : a.members())
        for (int j : a.members())
          if ((up_[i] & up_[j] & a).empty()) return false;
      return true;
    case StructureKind::filtered:
      if (a.empty()) return false;
      for (int i : a.members())
        for (int j : a.members())
          if ((down_[i] & down_[j] & a).empty()) return false;
      return true;
    case StructureKind::filter:
      return is_structure(a, StructureKind::filtered) && cone(a, Dir::up) == a;
    case StructureKind::order_ideal:
      return is_structure(a, StructureKind::directed) && cone(a, Dir::down) == a;
  }
  return false;
}

std::vector<Subset> Qoset::filters() const {
  if (n_ > kEnumerationCap) throw CapExceeded("filter enumeration cap exceeded");
  std::vector<Subset> out;
  std::uint64_t end = Subset::full(n_).bits();
  for (std::uint64_t m = 0; m <= end; ++m) {
    Subset a{m};
    if (is_structure(a, StructureKind::filter)) out.push_back(a);
    if (m == end) break;
  }
  return out;
}

bool Qoset::is_riesz() const {
  // F <= F' reduces to the single worst pair (F, F↑): Riesz holds iff every
  // set of upper bounds has a least member. Cross-checked against the
  // two-subset definition in the tests.
  if (n_ > kEnumerationCap) throw CapExceeded("riesz check cap exceeded");
  std::uint64_t end = Subset::full(n_).bits();
  for (std::uint64_t m = 0;; ++m) {
    Subset f{m};
    Subset ub = bounds(f, Bound::upper);
    if ((ub & bounds(ub, Bound::lower)).empty()) return false;
    if (m == end) break;
  }
  return true;
}

Qoset Qoset::dual() const {
  Qoset d = *this;
  std::swap(d.up_, d.down_);
  return d;
}

bool Qoset::has_all_pairwise_sups() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      if (extremum_set(Subset::single(i) | Subset::single(j), Extremum::sup).empty()) return false;
  return true;
}

bool Qoset::has_all_pairwise_infs() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      if (extremum_set(Subset::single(i) | Subset::single(j), Extremum::inf).empty()) return false;
  return true;
}

std::vector<long long> divisors_of(long long m) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d != m / d) out.push_back(m / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Qoset divisor_qoset(long long m) {
  if (m < 1) throw InputError("divisor lattice needs m >= 1");
  auto divs = divisors_of(m);
  if (divs.size() > 64) throw CapExceeded("more than 64 divisors");
  std::vector<std::string> labels;
  labels.reserve(divs.size());
  for (long long d : divs) labels.push_back(std::to_string(d));
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = 0; j < divs.size(); ++j)
      if (divs[j] % divs[i] == 0) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Qoset(std::move(labels), pairs);
}

}  // namespace ordconv
