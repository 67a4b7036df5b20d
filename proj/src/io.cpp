#include "ordconv/io.hpp"

#include <algorithm>
#include <sstream>

#include "ordconv/convolution.hpp"

namespace ordconv {

using nlohmann::json;

std::string subset_to_string(const Qoset& q, Subset a) {
  std::string out = "{";
  bool first = true;
  for (int i : a.members()) {
    if (!first) out += ", ";
    out += q.label(i);
    first = false;
  }
  return out + "}";
}

json qoset_to_json(const Qoset& q) {
  json pairs = json::array();
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (i != j && q.leq(i, j)) pairs.push_back({i, j});
  return {{"labels", q.labels()}, {"leq_pairs", pairs}};
}

Qoset qoset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
    throw InputError("poset json needs a labels array");
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) labels.push_back(l.is_string() ? l.get<std::string>()
                                                                   : l.dump());
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq_pairs")) {
    for (const auto& p : j["leq_pairs"]) {
      if (!p.is_array() || p.size() != 2) throw InputError("leq_pairs entries must be [i, j]");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  }
  return Qoset(std::move(labels), pairs);
}

json op_to_json(const PreclosureOp& op) { return op.descriptor(); }

PreclosureOp op_from_json(const json& j, const std::optional<Qoset>& base) {
  if (j.is_string()) return op_from_json(json{{"kind", "builtin"}, {"name", j.get<std::string>()}}, base);
  if (!j.is_object() || !j.contains("kind")) throw InputError("operator json needs a kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "builtin") {
    if (!base) throw InputError("builtin operator needs a poset");
    return PreclosureOp::builtin_op(builtin_kind(j["name"].get<std::string>()), *base);
  }
  if (kind == "table") {
    int n = j.contains("n") ? j["n"].get<int>() : (base ? base->size() : -1);
    if (n < 0) throw InputError("table operator needs n or a poset");
    if (n > kTableCap) throw CapExceeded("table operator cap exceeded");
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<Subset> images(size);
    const json& imgs = j.at("images");
    for (std::uint64_t a = 0; a < size; ++a) {
      const json& v = imgs.at(std::to_string(a));
      images[a] = Subset(v.is_string() ? std::stoull(v.get<std::string>())
                                       : v.get<std::uint64_t>());
    }
    return PreclosureOp::table(std::move(images));
  }
  if (kind == "generated") {
    int n = j.contains("n") ? j["n"].get<int>() : (base ? base->size() : -1);
    if (n < 0) throw InputError("generated operator needs n or a poset");
    std::vector<Subset> family;
    for (const auto& mem : j.at("family")) {
      Subset s;
      for (const auto& i : mem) s |= Subset::single(i.get<int>());
      family.push_back(s);
    }
    return PreclosureOp::generated(n, family);
  }
  if (kind == "convolve") {
    // an Alexandrov factor routes through the order convolution so the
    // enrichment tag and fast paths survive a round trip
    const json& left = j.at("left");
    const json& right = j.at("right");
    auto alex_dir = [](const json& side) -> std::optional<Dir> {
      if (side.is_object() && side.value("kind", "") == "builtin") {
        std::string name = side.value("name", "");
        if (name == "up") return Dir::up;
        if (name == "down") return Dir::down;
      }
      return std::nullopt;
    };
    if (base) {
      if (auto d = alex_dir(right)) return conv_order(op_from_json(left, base), *base, *d);
      if (auto d = alex_dir(left)) return conv_order(op_from_json(right, base), *base, *d);
    }
    return convolve(op_from_json(left, base), op_from_json(right, base));
  }
  if (kind == "hull") return idempotent_hull(op_from_json(j.at("of"), base));
  if (kind == "finitary_part") return finitary_part(op_from_json(j.at("of"), base));
  if (kind == "top" || kind == "neutral" || kind == "neutral_over" || kind == "adjoin") {
    int n = j.contains("n") ? j["n"].get<int>() : (base ? base->size() : -1);
    if (n < 0) throw InputError(kind + " operator needs n or a poset");
    if (kind == "top") return PreclosureOp::top(n);
    if (kind == "neutral") return PreclosureOp::neutral(n);
    Subset b{j.value("set", std::uint64_t{0})};
    return kind == "neutral_over" ? PreclosureOp::neutral_over(n, b)
                                  : PreclosureOp::adjoin(n, b);
  }
  throw InputError("unknown operator kind: " + kind);
}

std::string to_dot(const Qoset& q) {
  // condensation: one node per ~-class, named by its least member
  std::vector<int> reps;
  Subset seen;
  for (int i = 0; i < q.size(); ++i) {
    if (seen.test(i)) continue;
    reps.push_back(i);
    seen |= q.cls(i);
  }
  auto class_label = [&](int rep) {
    std::string out;
    for (int i : q.cls(rep).members()) {
      if (!out.empty()) out += " ~ ";
      out += q.label(i);
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int r : reps)
    os << "  n" << r << " [label=\"" << class_label(r) << "\"];\n";
  for (int a : reps)
    for (int b : reps) {
      if (a == b || !q.lt(a, b)) continue;
      bool cover = true;
      for (int m : reps)
        if (m != a && m != b && q.lt(a, m) && q.lt(m, b)) cover = false;
      if (cover) os << "  n" << a << " -> n" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

namespace {

json subset_json(const Qoset& q, Subset a) {
  json out = json::array();
  for (int i : a.members()) out.push_back(q.label(i));
  return out;
}

}  // namespace

json point_report_to_json(const Qoset& q, const PointReport& r) {
  json cop = json::array();
  for (int x = 0; x < q.size(); ++x) {
    json per = json::array();
    for (Subset v : r.copoints[x]) per.push_back(subset_json(q, v));
    cop.push_back({{"element", q.label(x)}, {"copoints", per}});
  }
  return {{"copoints", cop},
          {"compact", subset_json(q, r.compact)},
          {"extreme", subset_json(q, r.extreme)},
          {"kit", subset_json(q, r.kit)},
          {"caratheodory", r.caratheodory},
          {"flags",
           {{"continuous", r.flags.continuous},
            {"algebraic", r.flags.algebraic},
            {"distributive", r.flags.distributive},
            {"kitted", r.flags.kitted},
            {"local", r.flags.local},
            {"max_copoints", r.flags.max_copoints}}}};
}

json extremality_to_json(const Qoset& q, const ExtremalityReport& r) {
  return {{"irreducible", subset_json(q, r.irr)},
          {"relatively_maximal", subset_json(q, r.rmax)},
          {"strongly_irreducible", subset_json(q, r.str_irr)},
          {"completely_irreducible", subset_json(q, r.c_irr)},
          {"completely_relatively_maximal", subset_json(q, r.c_rmax)},
          {"strongly_completely_irreducible", subset_json(q, r.str_c_irr)},
          {"hierarchy_ok", r.hierarchy_ok},
          {"riesz", r.riesz}};
}

json rep_witness_to_json(const Qoset& q, const RepWitness& r) {
  json per = json::array();
  for (int x = 0; x < q.size(); ++x)
    per.push_back({{"element", q.label(x)}, {"witness", subset_json(q, r.witness.empty()
                                                                           ? Subset::none()
                                                                           : r.witness[x])}});
  return {{"ok", r.ok}, {"generators", subset_json(q, r.base)}, {"witnesses", per}};
}

json rep3_to_json(const Qoset& q, const RepresentationResult& r) {
  json anti = json::array();
  for (const auto& [x, ys] : r.antichains) {
    json list = json::array();
    for (int y : ys) list.push_back(q.label(y));
    anti.push_back({{"element", q.label(x)}, {"antichain", list}});
  }
  return {{"kit", subset_json(q, r.kit_set)},
          {"kit_closed", r.kit_closed_ok},
          {"kmp", r.kmp_holds},
          {"extreme", subset_json(q, r.extreme_set)},
          {"antichains", anti},
          {"antichain_ok", r.antichain_ok},
          {"membership_ok", r.membership_ok},
          {"uniqueness_ok", r.uniqueness_ok},
          {"separating", r.separating},
          {"sup_ok", r.sup_ok}};
}

json factor_to_json(const FactorResult& r) {
  Qoset q = divisor_qoset(r.m);
  json j = rep3_to_json(q, r.rep);
  j["m"] = r.m;
  j["top_antichain"] = r.top_antichain;
  j["trial_division_match"] = r.top_matches_trial_division;
  return j;
}

json laws_to_json(const std::vector<LawReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json entry = {{"law", r.law}, {"instances", r.instances}, {"violations", r.violations}};
    if (r.violations > 0) entry["first_counterexample"] = r.first_counterexample;
    out.push_back(entry);
  }
  return out;
}

}  // namespace ordconv
