#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ordconv/convolution.hpp"
#include "ordconv/preclosure.hpp"
#include "ordconv/qoset.hpp"

namespace ordconv {

inline constexpr int kLowerSetEnumCap = 1 << 20;

enum class ContextOrder { primary, equivalence };

/// A qoset, a preclosure operator on its carrier, and the order the point
/// notions are computed against. Order convolutions are enriched over (E, ~),
/// so their results may only be analyzed in an equivalence context.
class EnrichedContext {
 public:
  EnrichedContext(Qoset q, PreclosureOp op, ContextOrder order);

  const Qoset& qoset() const { return q_; }
  const PreclosureOp& op() const { return op_; }
  ContextOrder order() const { return order_; }
  int size() const { return q_.size(); }
  Subset all() const { return q_.all(); }

  /// ↑x under the primary order, [x] under ~.
  Subset up_of(int x) const;
  Subset cls(int x) const { return q_.cls(x); }
  Subset max_of(Subset a) const;

  /// Closed sets of the operator, cached; sorted lectically.
  const std::vector<Subset>& closed() const;
  /// Enrichment of the operator over the primary order, cached; uses the
  /// structural traits on carriers too large for the exhaustive scan.
  const EnrichmentFlags& enrichment() const;

 private:
  Qoset q_;
  PreclosureOp op_;
  ContextOrder order_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

struct ClassFlags {
  bool continuous = false;
  bool algebraic = false;
  bool distributive = false;
  bool kitted = false;
  bool local = true;  // finite carriers are always local
  int max_copoints = 0;
};

struct PointReport {
  std::vector<std::vector<Subset>> copoints;  // per element
  Subset compact;
  Subset extreme;
  Subset kit;
  int caratheodory = 0;
  ClassFlags flags;
};

/// Maximal closed sets avoiding x, sorted by descending bitmask.
std::vector<Subset> copoints(const EnrichedContext& ctx, int x);

/// Elements for which the closed set v is a copoint.
Subset attaching_points(const EnrichedContext& ctx, Subset v);

/// {x ∈ a : x ∉ c(a ∖ ↑x)}, ↑ taken in the context order.
Subset compact_points(const EnrichedContext& ctx, Subset a);

/// {x ∈ a : x ∉ c(a ∖ [x])}.
Subset extreme_points(const EnrichedContext& ctx, Subset a);

/// Elements all of whose copoints have a compact attaching point.
Subset kit_points(const EnrichedContext& ctx);

bool way_below(const EnrichedContext& ctx, int x, int y);
/// ⇓x = {y : y is way below x}.
Subset way_below_set(const EnrichedContext& ctx, int x);

ClassFlags classify_op(const EnrichedContext& ctx);

/// Least d such that membership in c(A) is always witnessed by at most d
/// elements of A; exact scan over irredundant witness sets.
int caratheodory(const EnrichedContext& ctx);

PointReport point_report(const EnrichedContext& ctx);

/// Visits every lower set of q; throws past the cap.
void for_each_lower_set(const Qoset& q, const std::function<void(Subset)>& f,
                        int cap = kLowerSetEnumCap);

}  // namespace ordconv
