#include "doctest.h"
#include <random>

#include "fixtures.hpp"
#include "ordconv/convolution.hpp"
#include "ordconv/harness.hpp"

using namespace ordconv;
using namespace tfx;

TEST_CASE("convolution evaluation") {
  Qoset c3 = chain(3);
  PreclosureOp down = PreclosureOp::builtin_op(BuiltinKind::down, c3);
  PreclosureOp up = PreclosureOp::builtin_op(BuiltinKind::up, c3);
  PreclosureOp du = convolve(down, up);
  CHECK(du(Subset{0b101}) == Subset{0b101});
  CHECK(du(Subset{0b010}) == Subset{0b010});

  PreclosureOp top = PreclosureOp::top(3);
  PreclosureOp dt = convolve(down, top);
  for_all_subsets(3, [&](Subset a) { CHECK(dt(a) == Subset::full(3)); });

  CHECK_THROWS_AS(convolve(down, PreclosureOp::top(4)), InputError);
}

TEST_CASE("order convolution values") {
  Qoset d12 = divisor_qoset(12);
  PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, d12);
  PreclosureOp dmu = conv_order(dm, d12, Dir::up);
  CHECK(dmu(by_labels(d12, {"4", "6"})) == by_labels(d12, {"1", "4", "6", "12"}));
  CHECK(dmu(by_labels(d12, {"2", "3"})) == by_labels(d12, {"1", "2", "3", "6"}));
  CHECK(dmu.equiv_enriched());

  Qoset c3 = chain(3);
  PreclosureOp t = PreclosureOp::builtin_op(BuiltinKind::filter_generated, c3);
  PreclosureOp td = conv_order(t, c3, Dir::down);
  CHECK(td(Subset{0b011}) == Subset{0b111});  // the empty-set term contributes the top
}

TEST_CASE("sup-walk, inner formula, and defining intersection agree") {
  for (long long m : {12LL, 24LL, 36LL, 60LL}) {
    Qoset q = divisor_qoset(m);
    PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, q);
    PreclosureOp fast = conv_order(dm, q, Dir::up);
    PreclosureOp outer = convolve(dm, PreclosureOp::builtin_op(BuiltinKind::up, q));
    for_all_subsets(q.size(), [&](Subset a) { CHECK(fast(a) == outer(a)); });
  }
  // spot subsets on the 24-element divisor lattice
  Qoset d360 = divisor_qoset(360);
  PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, d360);
  PreclosureOp fast = conv_order(dm, d360, Dir::up);
  PreclosureOp outer = convolve(dm, PreclosureOp::builtin_op(BuiltinKind::up, d360));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Subset a{rng() & d360.all().bits() & 0xf0f3u};
    CHECK(fast(a) == outer(a));
  }
}

TEST_CASE("family convolution") {
  Qoset four = p4();
  PreclosureOp down = PreclosureOp::builtin_op(BuiltinKind::down, four);
  PreclosureOp tdown = conv_family(down, four.filters());
  Subset a = by_labels(four, {"y1", "x1", "x2"});
  CHECK(tdown(a).test(idx(four, "y1")));

  PreclosureOp empty_family = conv_family(down, {});
  for_all_subsets(4, [&](Subset s) { CHECK(empty_family(s) == Subset::full(4)); });

  Qoset c3 = chain(3);
  PreclosureOp d3 = PreclosureOp::builtin_op(BuiltinKind::down, c3);
  PreclosureOp single = conv_family(d3, {Subset{0b100}});
  CHECK(single(Subset{0b101}) == Subset{0b101});

  // pointwise equal to convolving with the generated closure
  for (const Qoset& q : {four, c3, diamond()}) {
    PreclosureOp c = PreclosureOp::builtin_op(BuiltinKind::down, q);
    PreclosureOp via_family = conv_family(c, q.filters());
    PreclosureOp via_generated = convolve(c, PreclosureOp::generated(q.size(), q.filters()));
    for_all_subsets(q.size(), [&](Subset s) { CHECK(via_family(s) == via_generated(s)); });
  }
}

TEST_CASE("sup_inner") {
  Qoset d12 = divisor_qoset(12);
  PreclosureOp dm12 = PreclosureOp::builtin_op(BuiltinKind::dm, d12);
  CHECK(sup_inner(dm12, d12, by_labels(d12, {"2", "3"})) == by_labels(d12, {"1", "2", "3", "6"}));
  CHECK(sup_inner(dm12, d12, Subset::none()) == by_labels(d12, {"1"}));

  Qoset d360 = divisor_qoset(360);
  PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, d360);
  CHECK(sup_inner(dm, d360, by_labels(d360, {"8", "9", "5"})) ==
        by_labels(d360, {"1", "8", "9", "5", "72", "40", "45", "360"}));

  Qoset four = p4();
  CHECK(sup_inner(PreclosureOp::builtin_op(BuiltinKind::dm, four), four, Subset::none()).empty());

  // precondition: the operator must separate points
  Qoset c3 = chain(3);
  CHECK_THROWS_AS(sup_inner(PreclosureOp::builtin_op(BuiltinKind::filter_generated, c3), c3, Subset::none()),
                  InputError);

  // matches the up-convolution wherever defined
  for (const Qoset& q : {d12, four, diamond(), pentagon()}) {
    PreclosureOp c = PreclosureOp::builtin_op(BuiltinKind::dm, q);
    PreclosureOp cup = conv_order(c, q, Dir::up);
    for_all_subsets(q.size(), [&](Subset a) { CHECK(sup_inner(c, q, a) == cup(a)); });
  }
}

TEST_CASE("order-convolution results are pinned to the equivalence order") {
  Qoset c3 = chain(3);
  PreclosureOp dmu = conv_order(PreclosureOp::builtin_op(BuiltinKind::dm, c3), c3, Dir::up);
  CHECK_THROWS_AS(EnrichedContext(c3, dmu, ContextOrder::primary), InputError);
  EnrichedContext ok(c3, dmu, ContextOrder::equivalence);
  CHECK(ok.order() == ContextOrder::equivalence);
}
