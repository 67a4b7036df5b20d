#include "ordconv/preclosure.hpp"

#include <algorithm>
#include <utility>

namespace ordconv {

namespace {

using Model = PreclosureOp::Model;

PreclosureOp wrap(Model&& m) {
  return PreclosureOp(std::make_shared<const Model>(std::move(m)));
}

Subset iterate_to_fixpoint(const std::function<Subset(Subset)>& f, Subset a, int n) {
  Subset cur = a;
  for (int round = 0; round <= n + 1; ++round) {
    Subset next = f(cur);
    if (next == cur) return cur;
    cur = next;
  }
  return cur;
}

Subset inf_closed_hull_eval(const Qoset& q, Subset a) {
  Subset s = a;
  while (true) {
    Subset grown = s;
    for_each_submask(s, [&](Subset f) { grown |= q.extremum_set(f, Extremum::inf); });
    if (grown == s) return s;
    s = grown;
  }
}

Subset upper_inf_closed_hull_eval(const Qoset& q, Subset a) {
  Subset s = a;
  while (true) {
    Subset grown = q.cone(s, Dir::up);
    for_each_submask(grown, [&](Subset f) { grown |= q.extremum_set(f, Extremum::inf); });
    if (grown == s) return s;
    s = grown;
  }
}

Subset generated_eval(const std::vector<Subset>& family, int n, Subset a) {
  Subset acc = Subset::full(n);
  for (Subset v : family)
    if (a.subset_of(v)) acc &= v;
  return acc;
}

}  // namespace

const char* builtin_name(BuiltinKind k) {
  switch (k) {
    case BuiltinKind::down: return "down";
    case BuiltinKind::up: return "up";
    case BuiltinKind::dm: return "dm";
    case BuiltinKind::inf_closed: return "H";
    case BuiltinKind::upper_inf_closed: return "U";
    case BuiltinKind::filter_generated: return "T";
    case BuiltinKind::ranzato_p: return "ranzato_p";
    case BuiltinKind::ranzato_q: return "ranzato_q";
  }
  return "?";
}

BuiltinKind builtin_kind(const std::string& name) {
  if (name == "down") return BuiltinKind::down;
  if (name == "up") return BuiltinKind::up;
  if (name == "dm") return BuiltinKind::dm;
  if (name == "H") return BuiltinKind::inf_closed;
  if (name == "U") return BuiltinKind::upper_inf_closed;
  if (name == "T") return BuiltinKind::filter_generated;
  if (name == "ranzato_p") return BuiltinKind::ranzato_p;
  if (name == "ranzato_q") return BuiltinKind::ranzato_q;
  throw InputError("unknown builtin operator kind: " + name);
}

PreclosureOp PreclosureOp::table(std::vector<Subset> images) {
  int n = 0;
  while ((std::size_t{1} << n) < images.size()) ++n;
  if ((std::size_t{1} << n) != images.size()) throw InputError("table size must be a power of two");
  if (n > kTableCap) throw CapExceeded("table operator cap exceeded");
  Model m;
  m.n = n;
  nlohmann::json imgs = nlohmann::json::object();
  for (std::size_t a = 0; a < images.size(); ++a)
    imgs[std::to_string(a)] = images[a].bits();
  m.desc = {{"kind", "table"}, {"n", n}, {"images", imgs}};
  auto tab = std::make_shared<std::vector<Subset>>(std::move(images));
  m.eval = [tab](Subset a) { return (*tab)[a.bits()]; };
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::generated(int n, std::vector<Subset> family) {
  Model m;
  m.n = n;
  nlohmann::json fam = nlohmann::json::array();
  for (Subset v : family) {
    nlohmann::json mem = nlohmann::json::array();
    for (int i : v.members()) mem.push_back(i);
    fam.push_back(mem);
  }
  m.desc = {{"kind", "generated"}, {"n", n}, {"family", fam}};
  m.known_idempotent = true;
  auto fs = std::make_shared<std::vector<Subset>>(std::move(family));
  m.eval = [fs, n](Subset a) { return generated_eval(*fs, n, a); };
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::builtin_op(BuiltinKind k, const Qoset& q) {
  Model m;
  m.n = q.size();
  m.desc = {{"kind", "builtin"}, {"name", builtin_name(k)}};
  m.builtin = builtin_name(k);
  auto base = std::make_shared<const Qoset>(q);
  m.base = base;
  switch (k) {
    case BuiltinKind::down:
      m.lower_valued = true;
      m.known_idempotent = true;
      m.eval = [base](Subset a) { return base->cone(a, Dir::down); };
      break;
    case BuiltinKind::up:
      m.upper_valued = true;
      m.known_idempotent = true;
      m.eval = [base](Subset a) { return base->cone(a, Dir::up); };
      break;
    case BuiltinKind::dm:
      m.lower_valued = true;
      m.known_idempotent = true;
      m.eval = [base](Subset a) {
        return base->bounds(base->bounds(a, Bound::upper), Bound::lower);
      };
      break;
    case BuiltinKind::inf_closed:
      if (q.size() > kEnumerationCap) throw CapExceeded("inf-closed hull cap exceeded");
      m.known_idempotent = true;
      m.eval = [base](Subset a) { return inf_closed_hull_eval(*base, a); };
      break;
    case BuiltinKind::upper_inf_closed:
      if (q.size() > kEnumerationCap) throw CapExceeded("upper inf-closed hull cap exceeded");
      m.upper_valued = true;
      m.known_idempotent = true;
      m.eval = [base](Subset a) { return upper_inf_closed_hull_eval(*base, a); };
      break;
    case BuiltinKind::filter_generated: {
      auto filters = std::make_shared<std::vector<Subset>>(base->filters());
      m.upper_valued = true;
      m.known_idempotent = true;
      int n = m.n;
      m.eval = [base, filters, n](Subset a) { return generated_eval(*filters, n, a); };
      break;
    }
    case BuiltinKind::ranzato_p:
      m.upper_valued = true;
      m.eval = [base](Subset a) {
        Subset acc = base->all();
        for (int y : base->bounds(a, Bound::lower).members()) acc -= base->strictly_down(y);
        return acc;
      };
      break;
    case BuiltinKind::ranzato_q:
      m.lower_valued = true;
      m.eval = [base](Subset a) {
        Subset acc = base->all();
        for (int y : base->bounds(a, Bound::upper).members()) acc -= base->strictly_up(y);
        return acc;
      };
      break;
  }
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::top(int n) {
  Model m;
  m.n = n;
  m.desc = {{"kind", "top"}};
  m.known_idempotent = true;
  m.eval = [n](Subset) { return Subset::full(n); };
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::neutral(int n) {
  Model m;
  m.n = n;
  m.desc = {{"kind", "neutral"}};
  m.known_idempotent = true;
  m.eval = [n](Subset a) { return a.empty() ? Subset::none() : Subset::full(n); };
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::neutral_over(int n, Subset b) {
  Model m;
  m.n = n;
  m.desc = {{"kind", "neutral_over"}, {"set", b.bits()}};
  m.eval = [n, b](Subset a) { return a.empty() ? b : Subset::full(n); };
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::adjoin(int n, Subset b) {
  Model m;
  m.n = n;
  m.desc = {{"kind", "adjoin"}, {"set", b.bits()}};
  m.known_idempotent = true;
  m.eval = [b](Subset a) { return a | b; };
  return wrap(std::move(m));
}

PreclosureOp PreclosureOp::from_function(int n, std::string name, std::function<Subset(Subset)> f) {
  Model m;
  m.n = n;
  m.desc = {{"kind", "custom"}, {"name", std::move(name)}};
  m.eval = std::move(f);
  return wrap(std::move(m));
}

PreclosureOp materialize(const PreclosureOp& op) {
  int n = op.carrier_size();
  if (n > kTableCap) throw CapExceeded("materialization cap exceeded");
  std::uint64_t size = std::uint64_t{1} << n;
  auto tab = std::make_shared<std::vector<Subset>>();
  tab->reserve(size);
  for (std::uint64_t a = 0; a < size; ++a) tab->push_back(op(Subset(a)));
  Model m;
  m.n = n;
  m.desc = op.descriptor();
  m.lower_valued = op.lower_valued();
  m.upper_valued = op.upper_valued();
  m.known_idempotent = op.known_idempotent();
  m.equiv_enriched = op.equiv_enriched();
  m.builtin = op.builtin();
  if (op.base_qoset()) m.base = std::make_shared<const Qoset>(*op.base_qoset());
  m.eval = [tab](Subset a) { return (*tab)[a.bits()]; };
  return wrap(std::move(m));
}

ValidationFlags validate(const PreclosureOp& op) {
  PreclosureOp c = materialize(op);
  int n = c.carrier_size();
  std::uint64_t size = std::uint64_t{1} << n;
  ValidationFlags f;
  bool extensive = true, monotone = true, idem = true, pointwise_union = true, finitary = true;
  for (std::uint64_t a = 0; a < size; ++a) {
    Subset sa{a};
    Subset img = c(sa);
    if (!sa.subset_of(img)) extensive = false;
    for (int i = 0; i < n; ++i)
      if (!sa.test(i) && !img.subset_of(c(sa.with(i)))) monotone = false;
    if (c(img) != img) idem = false;
    Subset singles;
    for (int i : sa.members()) singles |= c(Subset::single(i));
    if (!sa.empty() && img != singles) pointwise_union = false;
  }
  // finitary per its defining union, folded over one-element removals
  std::vector<Subset> u(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    Subset acc = c(Subset{a});
    for (int i : Subset{a}.members()) acc |= u[a & ~(std::uint64_t{1} << i)];
    u[a] = acc;
    if (acc != c(Subset{a})) finitary = false;
  }
  f.is_preclosure = extensive && monotone;
  f.is_untied = c(Subset::none()).empty();
  f.is_idempotent = idem;
  f.is_cech = f.is_untied && pointwise_union;
  f.is_topological = f.is_cech && idem;
  f.is_finitary = finitary;
  return f;
}

std::vector<Subset> closed_sets(const PreclosureOp& op, int max_count) {
  int n = op.carrier_size();
  auto hull = [&](Subset a) {
    return iterate_to_fixpoint([&](Subset x) { return op(x); }, a, n);
  };
  // lectic-order closure enumeration; cost is per closed set, not per subset
  std::vector<Subset> out;
  Subset a = hull(Subset::none());
  Subset full = Subset::full(n);
  while (true) {
    out.push_back(a);
    if (static_cast<int>(out.size()) > max_count) throw CapExceeded("closed-set family cap exceeded");
    if (a == full) break;
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (a.test(i)) continue;
      Subset prefix = a & Subset(Subset::single(i).bits() - 1);
      Subset b = hull(prefix.with(i));
      if ((b & Subset(Subset::single(i).bits() - 1)) == prefix) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // non-monotone tables may not reach E
  }
  std::sort(out.begin(), out.end());
  return out;
}

PreclosureOp finitary_part(const PreclosureOp& op) {
  // every subset of a finite carrier is finite, so c° and c agree pointwise
  Model m;
  m.n = op.carrier_size();
  m.desc = {{"kind", "finitary_part"}, {"of", op.descriptor()}};
  m.lower_valued = op.lower_valued();
  m.upper_valued = op.upper_valued();
  m.known_idempotent = op.known_idempotent();
  m.builtin = op.builtin();
  if (op.base_qoset()) m.base = std::make_shared<const Qoset>(*op.base_qoset());
  PreclosureOp inner = op;
  m.eval = [inner](Subset a) { return inner(a); };
  return wrap(std::move(m));
}

PreclosureOp idempotent_hull(const PreclosureOp& op) {
  Model m;
  int n = op.carrier_size();
  m.n = n;
  m.desc = {{"kind", "hull"}, {"of", op.descriptor()}};
  m.lower_valued = op.lower_valued();
  m.upper_valued = op.upper_valued();
  m.known_idempotent = true;
  if (op.base_qoset()) m.base = std::make_shared<const Qoset>(*op.base_qoset());
  PreclosureOp inner = op;
  m.eval = [inner, n](Subset a) {
    return iterate_to_fixpoint([&](Subset x) { return inner(x); }, a, n);
  };
  return wrap(std::move(m));
}

EnrichmentFlags enrichment_check(const Qoset& q, const PreclosureOp& op) {
  if (q.size() != op.carrier_size()) throw InputError("carrier mismatch");
  PreclosureOp c = materialize(op);
  int n = q.size();
  std::uint64_t size = std::uint64_t{1} << n;
  EnrichmentFlags f;
  f.compatible = f.right_absorbing = f.absorbing = true;
  for (std::uint64_t a = 0; a < size; ++a) {
    Subset sa{a};
    Subset img = c(sa);
    Subset down = q.cone(sa, Dir::down);
    if (!down.subset_of(img)) f.compatible = false;
    if (q.cone(img, Dir::down) != img) f.right_absorbing = false;
    if (c(down) != img) f.absorbing = false;
  }
  f.absorbing = f.absorbing && f.right_absorbing;
  return f;
}

bool separates_points(const Qoset& q, const PreclosureOp& op, SepDir dir) {
  if (q.size() != op.carrier_size()) throw InputError("carrier mismatch");
  for (int x = 0; x < q.size(); ++x) {
    Subset cone = dir == SepDir::forward ? q.down(x) : q.up(x);
    if (op(cone) != cone) return false;
  }
  return true;
}

std::vector<Subset> moore_completion(int n, std::vector<Subset> family) {
  std::vector<Subset> out;
  auto add = [&](Subset s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(s);
      return true;
    }
    return false;
  };
  add(Subset::full(n));
  for (Subset v : family) add(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (add(out[i] & out[j])) grew = true;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ordconv
