#include "doctest.h"
#include "fixtures.hpp"
#include "ordconv/harness.hpp"
#include "ordconv/qoset.hpp"

using namespace ordconv;
using namespace tfx;

TEST_CASE("construction closes the relation") {
  Qoset c3 = chain(3);
  CHECK(c3.leq(0, 2));  // transitivity supplied by the builder
  CHECK(c3.leq(2, 2));
  CHECK(c3.is_poset());

  Qoset q2 = equiv_pair();
  CHECK(!q2.is_poset());
  CHECK(q2.equiv(0, 1));

  Qoset four = p4();
  CHECK(four.lt(idx(four, "y1"), idx(four, "x2")));
  CHECK(!four.leq(idx(four, "y1"), idx(four, "y2")));

  CHECK_THROWS_AS(Qoset({"a"}, {{0, 1}}), InputError);
}

TEST_CASE("cones") {
  Qoset c3 = chain(3);
  CHECK(c3.cone(Subset::single(1), Dir::down) == Subset{0b011});

  Qoset four = p4();
  CHECK(four.cone(by_labels(four, {"y1"}), Dir::up) == by_labels(four, {"y1", "x1", "x2"}));

  Qoset d12 = divisor_qoset(12);
  // oracle: down-cone of {6} is the divisors of 6
  CHECK(d12.cone(by_labels(d12, {"6"}), Dir::down) == divisors_dividing(d12, 6));
  CHECK(divisors_dividing(d12, 6) == by_labels(d12, {"1", "2", "3", "6"}));

  // idempotent, distributes over unions
  for (const Qoset& q : {c3, four, d12, pentagon(), equiv_pair()}) {
    for_all_subsets(q.size(), [&](Subset a) {
      for (Dir d : {Dir::down, Dir::up}) {
        CHECK(q.cone(q.cone(a, d), d) == q.cone(a, d));
        Subset b{(a.bits() * 0x9e377u) & q.all().bits()};
        CHECK(q.cone(a | b, d) == (q.cone(a, d) | q.cone(b, d)));
      }
    });
  }
}

TEST_CASE("bounds") {
  Qoset four = p4();
  CHECK(four.bounds(by_labels(four, {"y1", "y2"}), Bound::upper) ==
        by_labels(four, {"x1", "x2"}));
  Qoset c3 = chain(3);
  CHECK(c3.bounds(Subset::none(), Bound::upper) == c3.all());
  Qoset d12 = divisor_qoset(12);
  // oracle: lower bounds of {4, 6} are the common divisors, i.e. divisors of gcd
  CHECK(d12.bounds(by_labels(d12, {"4", "6"}), Bound::lower) ==
        divisors_dividing(d12, std::gcd(4, 6)));
  CHECK(divisors_dividing(d12, 2) == by_labels(d12, {"1", "2"}));
}

TEST_CASE("extremum sets") {
  Qoset d12 = divisor_qoset(12);
  // oracle: the sup of a divisor set is its lcm
  for_all_subsets(d12.size(), [&](Subset a) {
    if (a.empty()) return;
    long long l = lcm_of(d12, a);
    Subset expect = l > 12 || 12 % l != 0 ? Subset::none() : by_labels(d12, {std::to_string(l)});
    CHECK(d12.extremum_set(a, Extremum::sup) == expect);
  });
  CHECK(d12.extremum_set(by_labels(d12, {"2", "3"}), Extremum::sup) == by_labels(d12, {"6"}));

  Qoset four = p4();
  CHECK(four.extremum_set(by_labels(four, {"x1", "x2"}), Extremum::inf).empty());

  Qoset m4 = diamond();
  CHECK(m4.extremum_set(Subset::none(), Extremum::inf) == by_labels(m4, {"top"}));
  CHECK(m4.extremum_set(Subset::none(), Extremum::sup) == by_labels(m4, {"bot"}));

  // extremum members lie among the bounds and are pairwise order-equivalent
  for (const Qoset& q : {four, m4, equiv_pair(), pentagon()}) {
    for_all_subsets(q.size(), [&](Subset a) {
      Subset sup = q.extremum_set(a, Extremum::sup);
      CHECK(sup.subset_of(q.bounds(a, Bound::upper)));
      for (int i : sup.members())
        for (int j : sup.members()) CHECK(q.equiv(i, j));
    });
  }
}

TEST_CASE("maximal elements and saturation") {
  Qoset four = p4();
  CHECK(four.maximal_elements(four.all(), Pole::max) == by_labels(four, {"x1", "x2"}));
  Qoset c3 = chain(3);
  CHECK(c3.maximal_elements(Subset{0b011}, Pole::max) == Subset::single(1));
  Qoset q2 = equiv_pair();
  CHECK(q2.maximal_elements(q2.all(), Pole::max) == q2.all());
  CHECK(q2.saturate(Subset::single(0)) == q2.all());
  CHECK(c3.saturate(Subset::single(1)) == Subset::single(1));
  CHECK(four.saturate(by_labels(four, {"y1", "x1"})) == by_labels(four, {"y1", "x1"}));
}

TEST_CASE("structure predicates") {
  Qoset four = p4();
  CHECK(!four.is_structure(by_labels(four, {"x1", "x2"}), StructureKind::filtered));
  Qoset c3 = chain(3);
  CHECK(c3.is_structure(Subset{0b110}, StructureKind::filter));
  Qoset d12 = divisor_qoset(12);
  CHECK(d12.is_structure(by_labels(d12, {"2", "3"}), StructureKind::antichain));
  CHECK(!d12.is_structure(by_labels(d12, {"2", "4"}), StructureKind::antichain));
  // directedness needs nonemptiness
  CHECK(!c3.is_structure(Subset::none(), StructureKind::directed));
  CHECK(!c3.is_structure(Subset::none(), StructureKind::filtered));
  CHECK(c3.is_structure(Subset::single(0), StructureKind::order_ideal));
}

TEST_CASE("filter enumeration") {
  Qoset four = p4();
  std::vector<Subset> expect = {by_labels(four, {"x1"}), by_labels(four, {"x2"}),
                                by_labels(four, {"y1", "x1", "x2"}),
                                by_labels(four, {"y2", "x1", "x2"})};
  std::sort(expect.begin(), expect.end());
  CHECK(four.filters() == expect);

  Qoset c3 = chain(3);
  CHECK(c3.filters() == std::vector<Subset>{Subset{0b100}, Subset{0b110}, Subset{0b111}});

  Qoset a2 = antichain_qoset(2);
  CHECK(a2.filters() == std::vector<Subset>{Subset{0b01}, Subset{0b10}});

  // every filter passes the predicate; every principal filter appears
  for (const Qoset& q : {four, c3, diamond(), pentagon()}) {
    auto fs = q.filters();
    for (Subset f : fs) CHECK(q.is_structure(f, StructureKind::filter));
    for (int x = 0; x < q.size(); ++x)
      CHECK(std::find(fs.begin(), fs.end(), q.up(x)) != fs.end());
  }
}

TEST_CASE("riesz") {
  CHECK(!p4().is_riesz());
  CHECK(chain(3).is_riesz());
  CHECK(diamond().is_riesz());  // a semilattice with a top
  CHECK(!antichain_qoset(2).is_riesz());
}

TEST_CASE("dual") {
  Qoset c3 = chain(3);
  CHECK(c3.dual().leq(2, 0));
  CHECK(c3.dual().dual() == c3);
  Qoset four = p4();
  CHECK(four.dual().lt(idx(four, "x1"), idx(four, "y1")));
  CHECK(equiv_pair().dual() == equiv_pair());
}

TEST_CASE("divisor qoset matches divisibility") {
  Qoset d = divisor_qoset(360);
  CHECK(d.size() == 24);
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      CHECK(d.leq(i, j) == (divisor_value(d, j) % divisor_value(d, i) == 0));
  CHECK(divisor_qoset(1).size() == 1);
  CHECK_THROWS_AS(divisor_qoset(720720), CapExceeded);  // 240 divisors
}
