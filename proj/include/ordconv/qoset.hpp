#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordconv/subset.hpp"

namespace ordconv {

enum class Dir { down, up };
enum class Bound { lower, upper };
enum class Extremum { inf, sup };
enum class Pole { min, max };
enum class StructureKind { chain, antichain, directed, filtered, filter, order_ideal };

inline constexpr int kEnumerationCap = 16;

/// Finite quasi-ordered set: a carrier {0..n-1} with a reflexive-transitive
/// relation. Construction closes the supplied pairs transitively, so the
/// invariants hold regardless of input.
class Qoset {
 public:
  Qoset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& le_pairs);

  int size() const { return n_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_poset() const { return poset_; }
  Subset all() const { return Subset::full(n_); }

  bool leq(int i, int j) const { return up_[i].test(j); }
  bool lt(int i, int j) const { return leq(i, j) && !leq(j, i); }
  bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }

  Subset up(int i) const { return up_[i]; }
  Subset down(int i) const { return down_[i]; }
  /// Order-equivalence class [x].
  Subset cls(int i) const { return up_[i] & down_[i]; }
  /// Strictly-above set: {y : x < y}.
  Subset strictly_up(int i) const { return up_[i] - down_[i]; }
  Subset strictly_down(int i) const { return down_[i] - up_[i]; }

  Subset cone(Subset a, Dir d) const;
  Subset bounds(Subset a, Bound b) const;
  /// A-sup set A∨ = (A↑)↓ ∩ A↑ (dually A∧); handles the empty set by the
  /// fixed conventions: ∅∨ = bottoms, ∅∧ = tops.
  Subset extremum_set(Subset a, Extremum e) const;
  Subset maximal_elements(Subset a, Pole p) const;
  Subset saturate(Subset a) const;

  bool is_structure(Subset a, StructureKind k) const;
  /// All filters (filtered upper subsets), sorted ascending by bitmask.
  std::vector<Subset> filters() const;
  bool is_riesz() const;

  Qoset dual() const;

  bool has_all_pairwise_sups() const;
  bool has_all_pairwise_infs() const;

  /// Relation-only equality; labels are ignored.
  friend bool operator==(const Qoset& a, const Qoset& b) { return a.up_ == b.up_; }

 private:
  int n_ = 0;
  bool poset_ = true;
  std::vector<std::string> labels_;
  std::vector<Subset> up_;    // up_[i] = {j : i <= j}
  std::vector<Subset> down_;  // down_[i] = {j : j <= i}
};

/// Divisors of m, ascending.
std::vector<long long> divisors_of(long long m);

/// Div(m) under divisibility; labels are the divisor values, sorted ascending.
Qoset divisor_qoset(long long m);

}  // namespace ordconv
