#include "doctest.h"
#include "fixtures.hpp"
#include "ordconv/harness.hpp"
#include "ordconv/preclosure.hpp"

using namespace ordconv;
using namespace tfx;

namespace {

// brute-force closed-set oracle, independent of the lectic enumeration
std::vector<Subset> closed_brute(const PreclosureOp& op) {
  std::vector<Subset> out;
  for_all_subsets(op.carrier_size(), [&](Subset a) {
    if (op(a) == a) out.push_back(a);
  });
  return out;
}

}  // namespace

TEST_CASE("builtin evaluation") {
  Qoset c3 = chain(3);
  PreclosureOp down = PreclosureOp::builtin_op(BuiltinKind::down, c3);
  CHECK(down(Subset::single(1)) == Subset{0b011});

  Qoset d12 = divisor_qoset(12);
  PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, d12);
  // oracle: the Dedekind-MacNeille closure of a divisor set is ↓lcm
  for_all_subsets(d12.size(), [&](Subset a) {
    long long l = lcm_of(d12, a);
    Subset expect = 12 % l == 0 ? divisors_dividing(d12, l) : d12.all();
    CHECK(dm(a) == expect);
  });
  CHECK(dm(by_labels(d12, {"2", "3"})) == by_labels(d12, {"1", "2", "3", "6"}));
  CHECK(dm(by_labels(d12, {"4", "6"})) == d12.all());

  PreclosureOp t = PreclosureOp::builtin_op(BuiltinKind::filter_generated, c3);
  CHECK(t(Subset::none()) == Subset{0b100});  // every filter of a chain holds the top

  Qoset four = p4();
  PreclosureOp h = PreclosureOp::builtin_op(BuiltinKind::inf_closed, four);
  CHECK(h(by_labels(four, {"x1", "x2"})) == by_labels(four, {"x1", "x2"}));

  CHECK_THROWS_AS(builtin_kind("nope"), InputError);
}

TEST_CASE("generated closures") {
  Qoset d12 = divisor_qoset(12);
  std::vector<Subset> ideals;
  for (int x = 0; x < d12.size(); ++x) ideals.push_back(d12.down(x));
  PreclosureOp gen = PreclosureOp::generated(d12.size(), ideals);
  CHECK(gen(by_labels(d12, {"2", "3"})) == by_labels(d12, {"1", "2", "3", "6"}));

  Qoset four = p4();
  PreclosureOp genf = PreclosureOp::generated(4, four.filters());
  CHECK(genf(Subset::none()).empty());  // {x1} ∩ {x2}

  PreclosureOp none = PreclosureOp::generated(3, {});
  CHECK(none(Subset::single(0)) == Subset::full(3));  // empty intersection is E
}

TEST_CASE("validation flags") {
  Qoset c3 = chain(3);
  ValidationFlags down = validate(PreclosureOp::builtin_op(BuiltinKind::down, c3));
  CHECK(down.is_preclosure);
  CHECK(down.is_untied);
  CHECK(down.is_idempotent);
  CHECK(down.is_cech);
  CHECK(down.is_topological);
  CHECK(down.is_finitary);

  Qoset d12 = divisor_qoset(12);
  ValidationFlags dm = validate(PreclosureOp::builtin_op(BuiltinKind::dm, d12));
  CHECK(dm.is_preclosure);
  CHECK(dm.is_idempotent);
  CHECK(!dm.is_cech);  // d({2}) ∪ d({3}) misses 6
  CHECK(!dm.is_topological);
  CHECK(dm.is_finitary);

  // extensivity violation: c({0}) = ∅
  PreclosureOp broken = PreclosureOp::table({Subset::none(), Subset::none()});
  CHECK(!validate(broken).is_preclosure);

  PreclosureOp tab = PreclosureOp::table({Subset{0}, Subset{1}});
  CHECK(validate(tab).is_preclosure);
  CHECK_THROWS_AS(PreclosureOp::table(std::vector<Subset>(3)), InputError);
}

TEST_CASE("closed sets") {
  Qoset d12 = divisor_qoset(12);
  PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, d12);
  std::vector<Subset> expect;
  for (int y = 0; y < d12.size(); ++y) expect.push_back(d12.down(y));
  std::sort(expect.begin(), expect.end());
  CHECK(closed_sets(dm) == expect);  // exactly the six principal ideals

  Qoset c3 = chain(3);
  PreclosureOp up = PreclosureOp::builtin_op(BuiltinKind::up, c3);
  CHECK(closed_sets(up) ==
        std::vector<Subset>{Subset{0}, Subset{0b100}, Subset{0b110}, Subset{0b111}});

  PreclosureOp gen = PreclosureOp::generated(2, {Subset{0b01}, Subset{0b10}});
  CHECK(closed_sets(gen) ==
        std::vector<Subset>{Subset{0}, Subset{0b01}, Subset{0b10}, Subset{0b11}});

  // the lectic enumeration agrees with the power-set scan
  for (const Qoset& q : {c3, p4(), diamond()}) {
    for (const auto& op : builtin_catalog(q)) CHECK(closed_sets(op) == closed_brute(op));
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (int n : {3, 4, 5, 6}) {
      PreclosureOp op = random_preclosure(n, seed);
      CHECK(closed_sets(op) == closed_brute(op));
      CHECK(closed_sets(idempotent_hull(op)) == closed_brute(op));
    }
  }
}

TEST_CASE("finitary part is the identity on finite carriers") {
  Qoset d12 = divisor_qoset(12);
  PreclosureOp dm = PreclosureOp::builtin_op(BuiltinKind::dm, d12);
  PreclosureOp fin = finitary_part(dm);
  for_all_subsets(d12.size(), [&](Subset a) { CHECK(fin(a) == dm(a)); });
  CHECK(fin(Subset::none()) == dm(Subset::none()));
}

TEST_CASE("idempotent hull") {
  // s(A) = A ∪ {a-1 : a ∈ A, a >= 1} on the three-chain
  PreclosureOp s = PreclosureOp::from_function(3, "step-down", [](Subset a) {
    Subset out = a;
    for (int i : a.members())
      if (i >= 1) out |= Subset::single(i - 1);
    return out;
  });
  PreclosureOp hull = idempotent_hull(s);
  CHECK(hull(Subset{0b100}) == Subset{0b111});
  CHECK(hull(Subset::none()).empty());
  CHECK(validate(hull).is_idempotent);

  Qoset c3 = chain(3);
  PreclosureOp down = PreclosureOp::builtin_op(BuiltinKind::down, c3);
  for_all_subsets(3, [&](Subset a) { CHECK(idempotent_hull(down)(a) == down(a)); });
}

TEST_CASE("enrichment flags") {
  Qoset d12 = divisor_qoset(12);
  EnrichmentFlags f = enrichment_check(d12, PreclosureOp::builtin_op(BuiltinKind::dm, d12));
  CHECK(f.compatible);
  CHECK(f.right_absorbing);
  CHECK(f.absorbing);

  Qoset c3 = chain(3);
  EnrichmentFlags g = enrichment_check(c3, PreclosureOp::builtin_op(BuiltinKind::up, c3));
  CHECK(!g.compatible);
  CHECK(!g.right_absorbing);
  CHECK(!g.absorbing);

  Qoset four = p4();
  EnrichmentFlags h = enrichment_check(four, PreclosureOp::builtin_op(BuiltinKind::filter_generated, four));
  CHECK(!h.right_absorbing);
}

TEST_CASE("point separation") {
  Qoset d12 = divisor_qoset(12);
  CHECK(separates_points(d12, PreclosureOp::builtin_op(BuiltinKind::dm, d12), SepDir::forward));
  Qoset c3 = chain(3);
  CHECK(separates_points(c3, PreclosureOp::builtin_op(BuiltinKind::filter_generated, c3), SepDir::dual));
  PreclosureOp bad = PreclosureOp::from_function(3, "blur", [](Subset a) {
    return a.test(0) ? a | Subset::single(1) : a;
  });
  CHECK(!separates_points(c3, bad, SepDir::forward));
}

TEST_CASE("ranzato operators") {
  Qoset four = p4();
  PreclosureOp p = PreclosureOp::builtin_op(BuiltinKind::ranzato_p, four);
  PreclosureOp q = PreclosureOp::builtin_op(BuiltinKind::ranzato_q, four);
  // p(B) ∩ B↓ = Max(B↓) and q(B) ∩ B↑ = Min(B↑), on every subset
  for_all_subsets(four.size(), [&](Subset b) {
    CHECK((p(b) & four.bounds(b, Bound::lower)) ==
          four.maximal_elements(four.bounds(b, Bound::lower), Pole::max));
    CHECK((q(b) & four.bounds(b, Bound::upper)) ==
          four.maximal_elements(four.bounds(b, Bound::upper), Pole::min));
  });
  CHECK(validate(p).is_preclosure);
  CHECK(validate(q).is_preclosure);
}

TEST_CASE("every catalog operator is a preclosure operator") {
  for (const Qoset& q : {chain(3), equiv_pair(), p4(), diamond(), pentagon(),
                         divisor_qoset(12), hd_truncation(3)}) {
    for (const auto& op : builtin_catalog(q)) {
      ValidationFlags f = validate(op);
      CHECK(f.is_preclosure);
      CHECK(f.is_finitary);
    }
  }
}
