#include "doctest.h"
#include "fixtures.hpp"
#include "ordconv/harness.hpp"
#include "ordconv/points.hpp"

using namespace ordconv;
using namespace tfx;

namespace {

EnrichedContext dm_ctx(const Qoset& q) {
  return EnrichedContext(q, PreclosureOp::builtin_op(BuiltinKind::dm, q), ContextOrder::primary);
}

// independent compactness oracle on a divisor lattice:
// x is compact iff x | lcm(B) forces x | b for some b, over every B
Subset compact_oracle(const Qoset& q) {
  Subset out;
  for (int x = 0; x < q.size(); ++x) {
    long long xv = divisor_value(q, x);
    bool compact = true;
    for_all_subsets(q.size(), [&](Subset b) {
      if (lcm_of(q, b) % xv != 0) return;
      bool witnessed = false;
      for (int i : b.members())
        if (divisor_value(q, i) % xv == 0) witnessed = true;
      if (!witnessed) compact = false;
    });
    if (compact) out |= Subset::single(x);
  }
  return out;
}

}  // namespace

TEST_CASE("copoints") {
  Qoset d12 = divisor_qoset(12);
  EnrichedContext ctx = dm_ctx(d12);
  auto cop12 = copoints(ctx, idx(d12, "12"));
  CHECK(cop12 == std::vector<Subset>{d12.down(idx(d12, "6")), d12.down(idx(d12, "4"))});
  CHECK(copoints(ctx, idx(d12, "1")).empty());

  Qoset d360 = divisor_qoset(360);
  EnrichedContext big = dm_ctx(d360);
  auto top = copoints(big, idx(d360, "360"));
  CHECK(top == std::vector<Subset>{d360.down(idx(d360, "180")), d360.down(idx(d360, "120")),
                                   d360.down(idx(d360, "72"))});
}

TEST_CASE("attaching points") {
  Qoset d12 = divisor_qoset(12);
  EnrichedContext ctx = dm_ctx(d12);
  CHECK(attaching_points(ctx, d12.down(idx(d12, "4"))) == by_labels(d12, {"3", "6", "12"}));
  CHECK(attaching_points(ctx, d12.down(idx(d12, "6"))).test(idx(d12, "4")));

  Qoset c3 = chain(3);
  EnrichedContext down_ctx(c3, PreclosureOp::builtin_op(BuiltinKind::down, c3),
                           ContextOrder::primary);
  CHECK(attaching_points(down_ctx, Subset{0b011}) == Subset{0b100});

  CHECK_THROWS_AS(attaching_points(ctx, by_labels(d12, {"2", "3"})), InputError);
}

TEST_CASE("compact points") {
  Qoset d12 = divisor_qoset(12);
  EnrichedContext ctx = dm_ctx(d12);
  Subset cp = compact_points(ctx, d12.all());
  CHECK(cp == by_labels(d12, {"2", "3", "4"}));  // the prime-power divisors
  CHECK(cp == compact_oracle(d12));

  Qoset d360 = divisor_qoset(360);
  CHECK(compact_points(dm_ctx(d360), d360.all()) ==
        by_labels(d360, {"2", "4", "8", "3", "9", "5"}));

  Qoset c3 = chain(3);
  EnrichedContext down_ctx(c3, PreclosureOp::builtin_op(BuiltinKind::down, c3),
                           ContextOrder::primary);
  CHECK(compact_points(down_ctx, c3.all()) == c3.all());
}

TEST_CASE("extreme points") {
  Qoset d12 = divisor_qoset(12);
  EnrichedContext primary = dm_ctx(d12);
  CHECK(extreme_points(primary, d12.all()).empty());
  CHECK(extreme_points(primary, d12.all()) ==
        (compact_points(primary, d12.all()) & d12.maximal_elements(d12.all(), Pole::max)));

  PreclosureOp dmu =
      conv_order(PreclosureOp::builtin_op(BuiltinKind::dm, d12), d12, Dir::up);
  EnrichedContext equiv(d12, dmu, ContextOrder::equivalence);
  CHECK(extreme_points(equiv, d12.all()) == by_labels(d12, {"2", "3", "4"}));

  Qoset c3 = chain(3);
  PreclosureOp tdown =
      conv_family(PreclosureOp::builtin_op(BuiltinKind::down, c3), c3.filters());
  EnrichedContext tctx(c3, tdown, ContextOrder::equivalence);
  CHECK(extreme_points(tctx, c3.all()) == Subset{0b011});
}

TEST_CASE("kit points") {
  Qoset d12 = divisor_qoset(12);
  CHECK(kit_points(dm_ctx(d12)) == d12.all());
  Qoset d360 = divisor_qoset(360);
  CHECK(kit_points(dm_ctx(d360)) == d360.all());

  // pentagon: the copoint {bot, b} of c has no compact attaching point
  Qoset n5 = pentagon();
  EnrichedContext ctx = dm_ctx(n5);
  CHECK(kit_points(ctx) == by_labels(n5, {"bot", "a", "b", "top"}));
  CHECK(compact_points(ctx, n5.all()) == by_labels(n5, {"a", "b"}));
  CHECK(compact_points(ctx, n5.all()).subset_of(kit_points(ctx)));
}

TEST_CASE("way-below") {
  Qoset d12 = divisor_qoset(12);
  EnrichedContext ctx = dm_ctx(d12);
  CHECK(way_below(ctx, idx(d12, "2"), idx(d12, "12")));
  CHECK(!way_below(ctx, idx(d12, "6"), idx(d12, "12")));
  CHECK(way_below_set(ctx, idx(d12, "12")) == by_labels(d12, {"1", "2", "3", "4"}));

  // reduction versus the quantifier over all subsets
  for (const Qoset& q : {chain(3), p4(), diamond(), pentagon()}) {
    for (const auto& op : builtin_catalog(q)) {
      if (!enrichment_check(q, op).right_absorbing) continue;
      EnrichedContext c(q, op, ContextOrder::primary);
      for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y) {
          bool def = true;
          for_all_subsets(q.size(), [&](Subset a) {
            if (op(a).test(y) && !q.cone(a, Dir::down).test(x)) def = false;
          });
          CHECK(way_below(c, x, y) == def);
        }
    }
  }
}

TEST_CASE("classification") {
  Qoset d12 = divisor_qoset(12);
  ClassFlags f = classify_op(dm_ctx(d12));
  CHECK(f.continuous);
  CHECK(f.algebraic);
  CHECK(f.distributive);
  CHECK(f.kitted);
  CHECK(f.local);
  CHECK(f.max_copoints == 2);

  // the pentagon fails distributivity and kitness
  ClassFlags g = classify_op(dm_ctx(pentagon()));
  CHECK(!g.distributive);
  CHECK(!g.kitted);

  // flags match a plain definitional scan (the dual qoset carries the
  // inf-closed hull of the other orientation)
  for (const Qoset& q : {chain(3), diamond(), pentagon(), p4(), p4().dual()}) {
    for (const auto& op : builtin_catalog(q)) {
      if (!enrichment_check(q, op).right_absorbing) continue;
      EnrichedContext ctx(q, op, ContextOrder::primary);
      ClassFlags got = classify_op(ctx);
      bool cont = true, distr = true;
      for (int x = 0; x < q.size(); ++x)
        if (!op(way_below_set(ctx, x)).test(x)) cont = false;
      for_all_subsets(q.size(), [&](Subset a) {
        for (int x : op(a).members())
          if (!op(q.down(x) & q.cone(a, Dir::down)).test(x)) distr = false;
      });
      CHECK(got.continuous == cont);
      CHECK(got.distributive == distr);
    }
  }
}

TEST_CASE("caratheodory") {
  Qoset d12 = divisor_qoset(12);
  CHECK(caratheodory(dm_ctx(d12)) == 2);
  Qoset d60 = divisor_qoset(60);
  CHECK(caratheodory(dm_ctx(d60)) == 3);
  Qoset c3 = chain(3);
  EnrichedContext down_ctx(c3, PreclosureOp::builtin_op(BuiltinKind::down, c3),
                           ContextOrder::primary);
  CHECK(caratheodory(down_ctx) == 1);

  // the join-walk shortcut agrees with the table scan
  for (long long m : {12LL, 24LL, 60LL, 90LL}) {
    Qoset q = divisor_qoset(m);
    PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, q);
    PreclosureOp untagged = PreclosureOp::from_function(q.size(), "dm-copy",
                                                        [dm](Subset a) { return dm(a); });
    CHECK(caratheodory(dm_ctx(q)) ==
          caratheodory(EnrichedContext(q, untagged, ContextOrder::primary)));
  }
}

TEST_CASE("lower-set enumeration") {
  // counts: down-sets of a chain, an antichain, and a qoset with a ~-class
  int count = 0;
  for_each_lower_set(chain(4), [&](Subset) { ++count; });
  CHECK(count == 5);
  count = 0;
  for_each_lower_set(antichain_qoset(3), [&](Subset) { ++count; });
  CHECK(count == 8);
  count = 0;
  for_each_lower_set(equiv_pair(), [&](Subset s) {
    ++count;
    CHECK(equiv_pair().saturate(s) == s);
  });
  CHECK(count == 2);  // classes stay together
}
