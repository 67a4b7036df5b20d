#include "ordconv/extremality.hpp"

#include "ordconv/convolution.hpp"
#include "ordconv/preclosure.hpp"

namespace ordconv {

namespace {

Subset irreducible_scan(const Qoset& q) {
  if (q.size() > kEnumerationCap) throw CapExceeded("irreducibility scan cap exceeded");
  Subset out = q.all();
  for_each_submask(q.all(), [&](Subset f) {
    out -= q.extremum_set(f, Extremum::inf) - q.saturate(f);
  });
  return out;
}

}  // namespace

Subset irreducible(const Qoset& q) { return irreducible_scan(q); }

Subset completely_irreducible(const Qoset& q) {
  // every subset of a finite carrier is finite
  return irreducible_scan(q);
}

Subset relatively_maximal(const Qoset& q) {
  Subset out;
  for (Subset t : q.filters()) out |= q.maximal_elements(q.all() - t, Pole::max);
  return out;
}

Subset completely_relatively_maximal(const Qoset& q) {
  Subset out;
  for (int y = 0; y < q.size(); ++y) out |= q.maximal_elements(q.all() - q.up(y), Pole::max);
  return out;
}

Subset strongly_irreducible(const Qoset& q) {
  Subset out;
  for (int x = 0; x < q.size(); ++x)
    if (q.is_structure(q.strictly_up(x), StructureKind::filter)) out |= Subset::single(x);
  return out;
}

Subset strongly_completely_irreducible(const Qoset& q) {
  Subset out;
  for (int x = 0; x < q.size(); ++x) {
    Subset su = q.strictly_up(x);
    for (int y = 0; y < q.size(); ++y)
      if (su == q.up(y)) {
        out |= Subset::single(x);
        break;
      }
  }
  return out;
}

ExtremalityReport hierarchy_report(const Qoset& q) {
  ExtremalityReport r;
  r.irr = irreducible(q);
  r.rmax = relatively_maximal(q);
  r.str_irr = strongly_irreducible(q);
  r.c_irr = completely_irreducible(q);
  r.c_rmax = completely_relatively_maximal(q);
  r.str_c_irr = strongly_completely_irreducible(q);
  r.riesz = q.is_riesz();
  r.hierarchy_ok = r.str_irr.subset_of(r.rmax) && r.rmax.subset_of(r.irr) && r.rmax == r.irr &&
                   r.str_c_irr.subset_of(r.c_rmax) && r.c_rmax.subset_of(r.c_irr);
  if (r.riesz) r.hierarchy_ok = r.hierarchy_ok && r.str_irr == r.irr;
  return r;
}

ClosureChainReport closure_chain_check(const Qoset& q, Subset a) {
  ClosureChainReport r;
  PreclosureOp h = PreclosureOp::builtin_op(BuiltinKind::inf_closed, q);
  PreclosureOp t = PreclosureOp::builtin_op(BuiltinKind::filter_generated, q);
  PreclosureOp p = PreclosureOp::builtin_op(BuiltinKind::ranzato_p, q);
  r.inf_closed_hull = h(a);
  r.filter_down = conv_order(t, q, Dir::down)(a);
  r.max_lower_walk = conv_order(p, q, Dir::down)(a);
  r.inclusions_ok =
      r.inf_closed_hull.subset_of(r.filter_down) && r.filter_down.subset_of(r.max_lower_walk);
  r.finite_equality_ok = r.inf_closed_hull == r.filter_down;
  r.riesz = q.is_riesz();
  r.riesz_equality_ok = !r.riesz || r.inf_closed_hull == r.max_lower_walk;
  return r;
}

}  // namespace ordconv
