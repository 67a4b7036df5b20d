#pragma once

#include "ordconv/preclosure.hpp"
#include "ordconv/qoset.hpp"

namespace ordconv {

/// Largest |A| the 2^|A| convolution loops will accept.
inline constexpr int kConvEvalCap = 26;

/// Convolution product: (c*s)(A) = ∩_{B ⊆ A} c(B) ∪ s(A∖B).
/// (Intersecting over B ⊆ E gives the same value; B and A∩B are interchangeable.)
PreclosureOp convolve(const PreclosureOp& c, const PreclosureOp& s);

/// c↑ (dir=up) or c↓ (dir=down): the convolution of c with the Alexandrov
/// operator of q in the opposite direction. Uses the inner union formula when
/// the matching absorption holds, a sup-closure walk on pairwise-sup-complete
/// carriers when c is the Dedekind-MacNeille operator of q, and the defining
/// intersection otherwise. The result is enriched over (E, ~).
PreclosureOp conv_order(const PreclosureOp& c, const Qoset& q, Dir dir);

/// c_V(A) = ∩_{V ∈ family} V ∪ c(A∖V); pointwise equal to
/// convolve(c, generated(family)).
PreclosureOp conv_family(const PreclosureOp& c, const std::vector<Subset>& family);

/// ∪ { B∨ : B ⊆ a, B has a c-sup }. Requires c to separate points.
Subset sup_inner(const PreclosureOp& c, const Qoset& q, Subset a);

}  // namespace ordconv
