#include "ordconv/convolution.hpp"

#include <memory>
#include <utility>

namespace ordconv {

namespace {

using Model = PreclosureOp::Model;

PreclosureOp wrap(Model&& m) {
  return PreclosureOp(std::make_shared<const Model>(std::move(m)));
}

void require_small(Subset a, const char* what) {
  if (a.count() > kConvEvalCap) throw CapExceeded(std::string(what) + ": argument set too large");
}

Subset convolve_eval(const PreclosureOp& c, const PreclosureOp& s, int n, Subset a) {
  require_small(a, "convolution");
  Subset acc = Subset::full(n);
  for_each_submask(a, [&](Subset b) { acc &= c(b) | s(a - b); });
  return acc;
}

Subset inner_eval(const PreclosureOp& c, const Qoset& q, Dir dir, Subset a) {
  require_small(a, "order convolution");
  Bound side = dir == Dir::up ? Bound::upper : Bound::lower;
  Subset acc;
  for_each_submask(a, [&](Subset b) { acc |= c(b) & q.bounds(b, side); });
  return acc;
}

// All sups of subsets of a, on a carrier where every pair has a sup; valid
// for the Dedekind-MacNeille operator, where having a sup and having a c-sup
// agree. Worklist over pairwise sup classes.
struct SupClosure {
  Qoset q;
  std::vector<std::vector<Subset>> pair_sup;  // pair_sup[i][j] = {i,j}∨
  Subset empty_sup;                           // ∅∨ = bottoms

  explicit SupClosure(const Qoset& qq) : q(qq) {
    int n = q.size();
    pair_sup.assign(n, std::vector<Subset>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        pair_sup[i][j] = q.extremum_set(Subset::single(i) | Subset::single(j), Extremum::sup);
    empty_sup = q.extremum_set(Subset::none(), Extremum::sup);
  }

  Subset eval(Subset a) const {
    Subset result = empty_sup;
    std::vector<int> work;
    for (int i : a.members()) {
      Subset cls = q.cls(i);
      if (!cls.intersects(result)) work.push_back(i);
      result |= cls;
    }
    while (!work.empty()) {
      int u = work.back();
      work.pop_back();
      for (int x : a.members()) {
        Subset s = pair_sup[u][x];
        if (!s.empty() && !s.subset_of(result)) {
          result |= s;
          work.push_back(s.min_element());
        }
      }
    }
    return result;
  }
};

bool absorbs_in_direction(const PreclosureOp& c, const Qoset& q, Dir dir) {
  if (dir == Dir::up && c.lower_valued() && c.base_qoset() && *c.base_qoset() == q) return true;
  if (dir == Dir::down && c.upper_valued() && c.base_qoset() && *c.base_qoset() == q) return true;
  if (q.size() <= kTableCap) {
    EnrichmentFlags f = enrichment_check(dir == Dir::up ? q : q.dual(), c);
    return f.right_absorbing;
  }
  return false;
}

}  // namespace

PreclosureOp convolve(const PreclosureOp& c, const PreclosureOp& s) {
  if (c.carrier_size() != s.carrier_size()) throw InputError("carrier mismatch in convolution");
  Model m;
  int n = c.carrier_size();
  m.n = n;
  m.desc = {{"kind", "convolve"}, {"left", c.descriptor()}, {"right", s.descriptor()}};
  m.known_idempotent = c.known_idempotent() && s.known_idempotent();
  PreclosureOp cc = c, ss = s;
  m.eval = [cc, ss, n](Subset a) { return convolve_eval(cc, ss, n, a); };
  return wrap(std::move(m));
}

PreclosureOp conv_order(const PreclosureOp& c, const Qoset& q, Dir dir) {
  if (c.carrier_size() != q.size()) throw InputError("carrier mismatch in order convolution");
  Model m;
  int n = q.size();
  m.n = n;
  m.desc = {{"kind", "convolve"},
            {"left", c.descriptor()},
            {"right", {{"kind", "builtin"}, {"name", dir == Dir::up ? "up" : "down"}}}};
  m.known_idempotent = c.known_idempotent();
  m.equiv_enriched = true;
  auto base = std::make_shared<const Qoset>(q);
  m.base = base;
  PreclosureOp cc = c;

  bool sup_walk = dir == Dir::up && c.builtin() == "dm" && c.base_qoset() &&
                  *c.base_qoset() == q && q.has_all_pairwise_sups();
  if (sup_walk) {
    auto clo = std::make_shared<const SupClosure>(q);
    m.eval = [clo](Subset a) { return clo->eval(a); };
  } else if (absorbs_in_direction(c, q, dir)) {
    m.eval = [cc, base, dir](Subset a) { return inner_eval(cc, *base, dir, a); };
  } else {
    PreclosureOp alex =
        PreclosureOp::builtin_op(dir == Dir::up ? BuiltinKind::up : BuiltinKind::down, q);
    m.eval = [cc, alex, n](Subset a) { return convolve_eval(cc, alex, n, a); };
  }
  return wrap(std::move(m));
}

PreclosureOp conv_family(const PreclosureOp& c, const std::vector<Subset>& family) {
  Model m;
  int n = c.carrier_size();
  m.n = n;
  nlohmann::json fam = nlohmann::json::array();
  for (Subset v : family) {
    nlohmann::json mem = nlohmann::json::array();
    for (int i : v.members()) mem.push_back(i);
    fam.push_back(mem);
  }
  m.desc = {{"kind", "convolve"},
            {"left", c.descriptor()},
            {"right", {{"kind", "generated"}, {"n", n}, {"family", fam}}}};
  m.known_idempotent = c.known_idempotent();
  PreclosureOp cc = c;
  auto fs = std::make_shared<const std::vector<Subset>>(family);
  m.eval = [cc, fs, n](Subset a) {
    Subset acc = Subset::full(n);
    for (Subset v : *fs) acc &= v | cc(a - v);
    return acc;
  };
  return wrap(std::move(m));
}

Subset sup_inner(const PreclosureOp& c, const Qoset& q, Subset a) {
  if (c.carrier_size() != q.size()) throw InputError("carrier mismatch");
  if (!separates_points(q, c, SepDir::forward))
    throw InputError("sup_inner requires an operator that separates points");
  require_small(a, "sup_inner");
  Subset acc;
  for_each_submask(a, [&](Subset b) {
    Subset sups = q.extremum_set(b, Extremum::sup);
    if (!sups.empty() && sups.intersects(c(b))) acc |= sups;
  });
  return acc;
}

}  // namespace ordconv
