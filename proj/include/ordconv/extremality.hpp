#pragma once

#include "ordconv/qoset.hpp"

namespace ordconv {

/// x with x ∈ F∧ ⇒ x ∈ [F] for every finite subset F, the empty set
/// included; consequently no top is ever irreducible.
Subset irreducible(const Qoset& q);
/// Same quantifier over all subsets; coincides with irreducible() on a
/// finite carrier.
Subset completely_irreducible(const Qoset& q);

/// x maximal in the complement of some filter.
Subset relatively_maximal(const Qoset& q);
/// x maximal in the complement of some principal filter.
Subset completely_relatively_maximal(const Qoset& q);

/// x whose strictly-above set is a filter.
Subset strongly_irreducible(const Qoset& q);
/// x whose strictly-above set is a principal filter.
Subset strongly_completely_irreducible(const Qoset& q);

struct ExtremalityReport {
  Subset irr, rmax, str_irr;
  Subset c_irr, c_rmax, str_c_irr;
  bool hierarchy_ok = false;  // strIrr ⊆ rMax = Irr, collapsing fully when Riesz
  bool riesz = false;
};

ExtremalityReport hierarchy_report(const Qoset& q);

struct ClosureChainReport {
  Subset inf_closed_hull;  // <A> over inf-closed subsets
  Subset filter_down;      // <A> over filters, convolved with the Alexandrov down
  Subset max_lower_walk;   // the Max(B↓)-union preclosure applied to A
  bool inclusions_ok = false;
  bool finite_equality_ok = false;  // first two agree on every finite carrier
  bool riesz_equality_ok = false;   // all three agree when the qoset is Riesz
  bool riesz = false;
};

/// The three hull evaluations at A and the inclusion chain between them.
ClosureChainReport closure_chain_check(const Qoset& q, Subset a);

}  // namespace ordconv
