#include "ordconv/representation.hpp"

#include <algorithm>

namespace ordconv {

bool has_kmp(const EnrichedContext& ctx, Subset k) {
  return ctx.op()(k) == ctx.op()(extreme_points(ctx, k));
}

bool generates(const Qoset& q, Subset a, Subset k, GenDir dir) {
  if (!a.subset_of(k)) throw InputError("generators must lie inside the generated set");
  for (int x : k.members()) {
    Subset picked = dir == GenDir::sup ? q.down(x) & a : q.up(x) & a;
    Subset ext = q.extremum_set(picked, dir == GenDir::sup ? Extremum::sup : Extremum::inf);
    if (!ext.test(x)) return false;
  }
  return true;
}

namespace {

RepWitness rep_inf_generation(const Qoset& q, Subset s, const std::vector<Subset>& filters) {
  RepWitness r;
  Subset rmax;
  for (Subset t : filters) rmax |= q.maximal_elements(s - t, Pole::max);
  r.base = rmax;
  r.ok = true;
  r.witness.assign(q.size(), Subset::none());
  for (int x : s.members()) {
    Subset w = q.up(x) & rmax;
    r.witness[x] = w;
    if (!q.extremum_set(w, Extremum::inf).test(x)) r.ok = false;
  }
  return r;
}

}  // namespace

RepWitness rep1(const Qoset& q, Subset s) { return rep_inf_generation(q, s, q.filters()); }

RepWitness rep2(const Qoset& q, Subset s) {
  std::vector<Subset> principal;
  principal.reserve(q.size());
  for (int y = 0; y < q.size(); ++y) principal.push_back(q.up(y));
  return rep_inf_generation(q, s, principal);
}

RepresentationResult rep3(const EnrichedContext& ctx) {
  if (ctx.order() != ContextOrder::primary)
    throw InputError("rep3 expects a primary-order context");
  const Qoset& q = ctx.qoset();
  const PreclosureOp& c = ctx.op();
  bool idem = c.known_idempotent() ||
              (q.size() <= kTableCap && validate(c).is_idempotent);
  if (!idem) throw InputError("rep3 requires an idempotent operator");
  if (!ctx.enrichment().right_absorbing)
    throw InputError("rep3 requires a right-absorbing operator");

  RepresentationResult r;
  PreclosureOp cup = conv_order(c, q, Dir::up);
  EnrichedContext up_ctx(q, cup, ContextOrder::equivalence);

  r.kit_set = kit_points(ctx);
  r.kit_closed_ok = cup(r.kit_set) == r.kit_set;
  r.extreme_set = extreme_points(up_ctx, r.kit_set);
  r.kmp_holds = cup(r.extreme_set) == r.kit_set;

  Subset cp = compact_points(ctx, ctx.all());
  r.antichain_ok = r.membership_ok = r.uniqueness_ok = true;
  r.separating = separates_points(q, c, SepDir::forward);
  r.sup_ok = true;

  for (int x : r.kit_set.members()) {
    std::vector<int> ys;
    Subset yset;
    for (Subset v : copoints(ctx, x)) {
      Subset att = attaching_points(ctx, v) & cp;
      if (att.empty()) {
        r.membership_ok = false;  // cannot happen for a kit point
        continue;
      }
      int y = att.min_element();
      if (!yset.test(y)) {
        ys.push_back(y);
        yset |= Subset::single(y);
      }
    }
    r.antichains[x] = ys;
    if (!q.is_structure(yset, StructureKind::antichain)) r.antichain_ok = false;
    if (!c(yset).test(x) || !q.bounds(yset, Bound::upper).test(x)) r.membership_ok = false;

    Subset candidates = cp & q.down(x);
    if (candidates.count() > 20 || (std::uint64_t{1} << candidates.count()) > kAntichainSearchCap)
      throw CapExceeded("antichain uniqueness search cap exceeded");
    Subset canonical = q.saturate(yset);
    for_each_submask(candidates, [&](Subset z) {
      if (!q.is_structure(z, StructureKind::antichain)) return;
      if (!c(z).test(x) || !q.bounds(z, Bound::upper).test(x)) return;
      if (q.saturate(z) != canonical) r.uniqueness_ok = false;
    });
    if (r.separating && !q.extremum_set(yset, Extremum::sup).test(x)) r.sup_ok = false;
  }
  return r;
}

FactorResult factor_divisor_lattice(long long m) {
  if (m < 1 || m > kFactorCap) throw InputError("factor argument out of range");
  FactorResult out;
  out.m = m;
  out.divisors = divisors_of(m);
  if (static_cast<int>(out.divisors.size()) > kDivisorCountCap)
    throw CapExceeded("too many divisors");
  Qoset q = divisor_qoset(m);
  EnrichedContext ctx(q, PreclosureOp::builtin_op(BuiltinKind::dm, q), ContextOrder::primary);
  out.rep = rep3(ctx);

  int top = q.size() - 1;
  auto it = out.rep.antichains.find(top);
  if (it != out.rep.antichains.end())
    for (int i : it->second) out.top_antichain.push_back(out.divisors[i]);

  // trial-division oracle: maximal prime-power divisors of m
  std::vector<long long> prime_powers;
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    long long pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    prime_powers.push_back(pk);
  }
  if (rest > 1) prime_powers.push_back(rest);

  std::vector<long long> got = out.top_antichain;
  std::sort(got.begin(), got.end());
  std::sort(prime_powers.begin(), prime_powers.end());
  out.top_matches_trial_division = got == prime_powers;
  return out;
}

TransferReport transfer_check(const EnrichedContext& ctx, const std::vector<Subset>& family,
                              const std::vector<Subset>& kcoll) {
  const Qoset& q = ctx.qoset();
  for (Subset v : family)
    if (q.saturate(v) != v) throw InputError("transfer family must be order-saturated");
  TransferReport r;
  r.hypothesis = true;
  for (Subset k : kcoll)
    for (Subset v : family) {
      ++r.pairs_checked;
      if (!has_kmp(ctx, k - v)) r.hypothesis = false;
    }
  PreclosureOp conv = conv_family(ctx.op(), family);
  EnrichedContext conv_ctx(q, conv, ctx.order());
  r.conclusion = true;
  for (Subset k : kcoll)
    if (!has_kmp(conv_ctx, k)) r.conclusion = false;
  r.implication_ok = !r.hypothesis || r.conclusion;
  return r;
}

}  // namespace ordconv
