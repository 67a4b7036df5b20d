#include "ordconv/points.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace ordconv {

struct EnrichedContext::Cache {
  std::once_flag closed_once;
  std::vector<Subset> closed;
  std::once_flag enrich_once;
  EnrichmentFlags enrich;
};

EnrichedContext::EnrichedContext(Qoset q, PreclosureOp op, ContextOrder order)
    : q_(std::move(q)), op_(std::move(op)), order_(order), cache_(std::make_shared<Cache>()) {
  if (q_.size() != op_.carrier_size()) throw InputError("carrier mismatch in context");
  if (op_.equiv_enriched() && order_ == ContextOrder::primary)
    throw InputError("order-convolution results are enriched over ~; use the equivalence order");
}

Subset EnrichedContext::up_of(int x) const {
  return order_ == ContextOrder::primary ? q_.up(x) : q_.cls(x);
}

Subset EnrichedContext::max_of(Subset a) const {
  return order_ == ContextOrder::primary ? q_.maximal_elements(a, Pole::max) : a;
}

const std::vector<Subset>& EnrichedContext::closed() const {
  std::call_once(cache_->closed_once, [&] { cache_->closed = closed_sets(op_); });
  return cache_->closed;
}

const EnrichmentFlags& EnrichedContext::enrichment() const {
  std::call_once(cache_->enrich_once, [&] {
    if (q_.size() <= kTableCap) {
      cache_->enrich = enrichment_check(q_, op_);
    } else if (op_.lower_valued() && op_.base_qoset() && *op_.base_qoset() == q_) {
      cache_->enrich.compatible = cache_->enrich.right_absorbing = true;
      // absorbing not claimed structurally
    }
  });
  return cache_->enrich;
}

std::vector<Subset> copoints(const EnrichedContext& ctx, int x) {
  const auto& closed = ctx.closed();
  std::vector<Subset> avoid;
  for (Subset v : closed)
    if (!v.test(x)) avoid.push_back(v);
  std::vector<Subset> out;
  for (Subset v : avoid) {
    bool maximal = true;
    for (Subset w : avoid)
      if (w != v && v.subset_of(w)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return b < a; });
  return out;
}

Subset attaching_points(const EnrichedContext& ctx, Subset v) {
  if (ctx.op()(v) != v) throw InputError("attaching_points: set is not closed");
  Subset meet = ctx.all();
  for (Subset w : ctx.closed())
    if (v.subset_of(w) && w != v) meet &= w;
  return meet - v;
}

Subset compact_points(const EnrichedContext& ctx, Subset a) {
  Subset out;
  for (int x : a.members())
    if (!ctx.op()(a - ctx.up_of(x)).test(x)) out |= Subset::single(x);
  return out;
}

Subset extreme_points(const EnrichedContext& ctx, Subset a) {
  Subset out;
  for (int x : a.members())
    if (!ctx.op()(a - ctx.cls(x)).test(x)) out |= Subset::single(x);
  return out;
}

Subset kit_points(const EnrichedContext& ctx) {
  Subset cp = compact_points(ctx, ctx.all());
  Subset out;
  for (int x = 0; x < ctx.size(); ++x) {
    bool kit = true;
    for (Subset v : copoints(ctx, x)) {
      if (!(attaching_points(ctx, v) & cp).empty()) continue;
      kit = false;
      break;
    }
    if (kit) out |= Subset::single(x);
  }
  return out;
}

bool way_below(const EnrichedContext& ctx, int x, int y) {
  // x ≪ y iff y ∉ c(E ∖ ↑x): the largest A avoiding ↑x decides all of them.
  if (ctx.order() != ContextOrder::primary)
    throw InputError("way-below is defined for primary-order contexts");
  return !ctx.op()(ctx.all() - ctx.qoset().up(x)).test(y);
}

Subset way_below_set(const EnrichedContext& ctx, int x) {
  Subset out;
  for (int y = 0; y < ctx.size(); ++y)
    if (way_below(ctx, y, x)) out |= Subset::single(y);
  return out;
}

void for_each_lower_set(const Qoset& q, const std::function<void(Subset)>& f, int cap) {
  // lower sets are in bijection with down-sets of the condensation; walk the
  // ~-classes in a linear extension, branching on include/exclude
  int n = q.size();
  std::vector<int> reps;
  Subset seen;
  for (int i = 0; i < n; ++i) {
    if (seen.test(i)) continue;
    reps.push_back(i);
    seen |= q.cls(i);
  }
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    int da = q.down(a).count(), db = q.down(b).count();
    return da != db ? da < db : a < b;
  });
  int count = 0;
  // iterative DFS over class decisions
  struct Frame {
    std::size_t idx;
    Subset set;
  };
  std::vector<Frame> frames{{0, Subset::none()}};
  while (!frames.empty()) {
    Frame fr = frames.back();
    frames.pop_back();
    if (fr.idx == reps.size()) {
      if (++count > cap) throw CapExceeded("lower-set enumeration cap exceeded");
      f(fr.set);
      continue;
    }
    int r = reps[fr.idx];
    frames.push_back({fr.idx + 1, fr.set});
    if ((q.down(r) - q.cls(r)).subset_of(fr.set))
      frames.push_back({fr.idx + 1, fr.set | q.cls(r)});
  }
}

ClassFlags classify_op(const EnrichedContext& ctx) {
  if (ctx.order() != ContextOrder::primary)
    throw InputError("classification is defined for primary-order contexts");
  const Qoset& q = ctx.qoset();
  const PreclosureOp& c = ctx.op();
  int n = q.size();
  ClassFlags out;
  Subset cp = compact_points(ctx, ctx.all());

  out.continuous = out.algebraic = true;
  for (int x = 0; x < n; ++x) {
    Subset wb = way_below_set(ctx, x);
    if (!c(wb).test(x)) out.continuous = false;
    if (!c(q.cone(wb & cp, Dir::down)).test(x)) out.algebraic = false;
  }

  // x ∈ c(A) ⇒ x ∈ c(↓x ∩ ↓A): only ↓A matters, so quantify over lower sets
  out.distributive = true;
  for_each_lower_set(q, [&](Subset l) {
    Subset img = c(l);
    for (int x : img.members())
      if (!c(q.down(x) & l).test(x)) out.distributive = false;
  });

  out.kitted = kit_points(ctx) == ctx.all();
  out.local = true;
  for (int x = 0; x < n; ++x)
    out.max_copoints = std::max(out.max_copoints, static_cast<int>(copoints(ctx, x).size()));
  return out;
}

namespace {

// Carathéodory number as the largest irredundant witness set: A counts when
// c(A) keeps a point that every one-element deletion loses.
int caratheodory_table(const PreclosureOp& op) {
  PreclosureOp c = materialize(op);
  int n = c.carrier_size();
  std::uint64_t size = std::uint64_t{1} << n;
  int best = 0;
  for (std::uint64_t a = 1; a < size; ++a) {
    Subset sa{a};
    if (sa.count() <= best) continue;
    Subset witness = c(sa);
    for (int i : sa.members()) {
      witness -= c(sa.without(i));
      if (witness.empty()) break;
    }
    if (!witness.empty()) best = sa.count();
  }
  return best;
}

// Same scan on a sup-complete poset where c(A) = ↓sup(A): irredundancy is a
// strict drop of the running join after any deletion.
std::optional<int> caratheodory_join_walk(const EnrichedContext& ctx) {
  const Qoset& q = ctx.qoset();
  const PreclosureOp& c = ctx.op();
  int n = q.size();
  if (n > kConvEvalCap) return std::nullopt;
  if (!(c.builtin() == "dm" && c.base_qoset() && *c.base_qoset() == q)) return std::nullopt;
  if (!q.is_poset() || !q.has_all_pairwise_sups()) return std::nullopt;
  Subset bottoms = q.extremum_set(Subset::none(), Extremum::sup);
  if (bottoms.count() != 1) return std::nullopt;
  int bottom = bottoms.min_element();

  std::vector<std::vector<int>> join(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      join[i][j] =
          q.extremum_set(Subset::single(i) | Subset::single(j), Extremum::sup).min_element();

  int best = 0;
  std::vector<int> mem, pre, suf;
  std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < size; ++a) {
    Subset sa{a};
    int k = sa.count();
    if (k <= best) continue;
    mem.clear();
    for (int i : sa.members()) mem.push_back(i);
    pre.assign(k + 1, bottom);
    suf.assign(k + 1, bottom);
    for (int i = 0; i < k; ++i) pre[i + 1] = join[pre[i]][mem[i]];
    for (int i = k - 1; i >= 0; --i) suf[i] = join[suf[i + 1]][mem[i]];
    int total = pre[k];
    bool critical = true;
    for (int i = 0; i < k && critical; ++i)
      if (join[pre[i]][suf[i + 1]] == total) critical = false;
    if (critical) best = k;
  }
  return best;
}

}  // namespace

int caratheodory(const EnrichedContext& ctx) {
  if (auto fast = caratheodory_join_walk(ctx)) return *fast;
  if (ctx.size() > kTableCap) throw CapExceeded("caratheodory scan cap exceeded");
  return caratheodory_table(ctx.op());
}

PointReport point_report(const EnrichedContext& ctx) {
  PointReport r;
  r.copoints.reserve(ctx.size());
  for (int x = 0; x < ctx.size(); ++x) r.copoints.push_back(copoints(ctx, x));
  r.compact = compact_points(ctx, ctx.all());
  r.extreme = extreme_points(ctx, ctx.all());
  r.kit = kit_points(ctx);
  r.caratheodory = caratheodory(ctx);
  if (ctx.order() == ContextOrder::primary) r.flags = classify_op(ctx);
  r.flags.kitted = r.kit == ctx.all();
  return r;
}

}  // namespace ordconv
