#include "ordconv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ordconv/io.hpp"

namespace ordconv::cli {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed json in " + path + ": " + e.what());
  }
  return j;
}

json parse_op_spec(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    try {
      return json::parse(spec);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed operator json: ") + e.what());
    }
  }
  return load_json_file(spec);
}

Subset parse_set(const std::string& csv, const Qoset& q) {
  if (csv.empty()) return q.all();
  Subset out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (int i = 0; i < q.size(); ++i)
      if (q.label(i) == item) {
        out |= Subset::single(i);
        found = true;
      }
    if (!found) {
      try {
        int idx = std::stoi(item);
        if (idx < 0 || idx >= q.size()) throw InputError("set element out of range: " + item);
        out |= Subset::single(idx);
      } catch (const std::invalid_argument&) {
        throw InputError("unknown element: " + item);
      }
    }
  }
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

struct AnalyzeArgs {
  std::string poset_file;
  std::string op_spec = R"({"kind":"builtin","name":"dm"})";
  std::string dir = "none";
  std::string enrich;
  std::string report;
  std::string set_csv;
  bool as_json = false;
};

int run_analysis(const AnalyzeArgs& a, std::ostream& out) {
  Qoset q = qoset_from_json(load_json_file(a.poset_file));
  PreclosureOp op = op_from_json(parse_op_spec(a.op_spec), q);
  if (a.dir == "up")
    op = conv_order(op, q, Dir::up);
  else if (a.dir == "down")
    op = conv_order(op, q, Dir::down);
  std::string enrich = a.enrich;
  if (enrich.empty()) enrich = a.dir == "none" ? "primary" : "equiv";
  ContextOrder order = enrich == "equiv" ? ContextOrder::equivalence : ContextOrder::primary;
  Subset set = parse_set(a.set_csv, q);

  if (a.report == "points") {
    EnrichedContext ctx(q, op, order);
    PointReport r = point_report(ctx);
    if (a.as_json) {
      out << point_report_to_json(q, r).dump(2) << "\n";
      return 0;
    }
    out << "carrier: " << q.size() << " elements\n";
    out << "compact: " << subset_to_string(q, r.compact) << "\n";
    out << "extreme: " << subset_to_string(q, r.extreme) << "\n";
    out << "kit:     " << subset_to_string(q, r.kit) << "\n";
    out << "caratheodory: " << r.caratheodory << "\n";
    out << "flags: continuous=" << yesno(r.flags.continuous)
        << " algebraic=" << yesno(r.flags.algebraic)
        << " distributive=" << yesno(r.flags.distributive) << " kitted=" << yesno(r.flags.kitted)
        << " local=" << yesno(r.flags.local) << " max-copoints=" << r.flags.max_copoints << "\n";
    out << "copoints:\n";
    for (int x = 0; x < q.size(); ++x) {
      out << "  " << q.label(x) << ":";
      if (r.copoints[x].empty()) out << " (none)";
      for (Subset v : r.copoints[x]) out << " " << subset_to_string(q, v);
      out << "\n";
    }
    return 0;
  }
  if (a.report == "extremality") {
    ExtremalityReport r = hierarchy_report(q);
    if (a.as_json) {
      out << extremality_to_json(q, r).dump(2) << "\n";
      return r.hierarchy_ok ? 0 : 1;
    }
    out << "irreducible:                     " << subset_to_string(q, r.irr) << "\n";
    out << "relatively-maximal:              " << subset_to_string(q, r.rmax) << "\n";
    out << "strongly-irreducible:            " << subset_to_string(q, r.str_irr) << "\n";
    out << "completely irreducible:          " << subset_to_string(q, r.c_irr) << "\n";
    out << "completely relatively-maximal:   " << subset_to_string(q, r.c_rmax) << "\n";
    out << "strongly completely irreducible: " << subset_to_string(q, r.str_c_irr) << "\n";
    out << "riesz: " << yesno(r.riesz) << "\n";
    out << "hierarchy: " << (r.hierarchy_ok ? "ok" : "VIOLATED") << "\n";
    return r.hierarchy_ok ? 0 : 1;
  }
  if (a.report == "rep1" || a.report == "rep2") {
    RepWitness r = a.report == "rep1" ? rep1(q, set) : rep2(q, set);
    if (a.as_json) {
      out << rep_witness_to_json(q, r).dump(2) << "\n";
      return r.ok ? 0 : 1;
    }
    out << a.report << ": " << (r.ok ? "ok" : "FAILED") << "\n";
    out << "generators: " << subset_to_string(q, r.base) << "\n";
    for (int x : set.members())
      out << "  " << q.label(x) << " <- inf " << subset_to_string(q, r.witness[x]) << "\n";
    return r.ok ? 0 : 1;
  }
  if (a.report == "rep3") {
    EnrichedContext ctx(q, op, order);
    RepresentationResult r = rep3(ctx);
    bool ok = r.kit_closed_ok && r.kmp_holds && r.antichain_ok && r.membership_ok &&
              r.uniqueness_ok && (!r.separating || r.sup_ok);
    if (a.as_json) {
      out << rep3_to_json(q, r).dump(2) << "\n";
      return ok ? 0 : 1;
    }
    out << "kit: " << subset_to_string(q, r.kit_set) << "\n";
    out << "kit-closed: " << yesno(r.kit_closed_ok) << "\n";
    out << "kmp: " << yesno(r.kmp_holds) << "\n";
    out << "extreme: " << subset_to_string(q, r.extreme_set) << "\n";
    out << "uniqueness: " << yesno(r.uniqueness_ok) << "\n";
    out << "separating: " << yesno(r.separating) << "  sup-generated: " << yesno(r.sup_ok)
        << "\n";
    out << "antichains:\n";
    for (const auto& [x, ys] : r.antichains) {
      out << "  " << q.label(x) << " -> {";
      for (std::size_t i = 0; i < ys.size(); ++i) out << (i ? ", " : "") << q.label(ys[i]);
      out << "}\n";
    }
    return ok ? 0 : 1;
  }
  if (a.report == "kmp") {
    EnrichedContext ctx(q, op, order);
    bool r = has_kmp(ctx, set);
    out << "kmp(" << subset_to_string(q, set) << "): " << yesno(r) << "\n";
    return r ? 0 : 1;
  }
  throw InputError("unknown report: " + a.report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computation over finite qosets with preclosure operators"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "point/extremality/representation reports");
  analyze->add_option("--poset", an.poset_file, "poset json file")->required();
  analyze->add_option("--op", an.op_spec, "operator json (inline or file)");
  analyze->add_option("--dir", an.dir, "convolve with the Alexandrov operator: up|down")
      ->check(CLI::IsMember({"up", "down", "none"}));
  analyze->add_option("--enrich", an.enrich, "context order: primary|equiv")
      ->check(CLI::IsMember({"primary", "equiv"}));
  analyze->add_option("--report", an.report, "points|extremality|rep1|rep2|rep3|kmp")->required();
  analyze->add_option("--set", an.set_csv, "subset as comma-separated labels (default: all)");
  analyze->add_flag("--json", an.as_json, "machine-readable output");

  int laws_n = 4;
  std::uint64_t laws_seed = 1;
  bool laws_json = false;
  auto* laws = app.add_subcommand("laws", "run the algebraic law suite");
  laws->add_option("--n", laws_n, "carrier size for random operators (<= 6)");
  laws->add_option("--seed", laws_seed, "random seed");
  laws->add_flag("--json", laws_json, "machine-readable output");

  std::string enum_kind = "posets";
  int enum_n = 3;
  bool enum_json = false, enum_list = false;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive structure enumeration");
  enumerate->add_option("--kind", enum_kind, "posets|moore")
      ->check(CLI::IsMember({"posets", "moore"}));
  enumerate->add_option("--n", enum_n, "carrier size")->required();
  enumerate->add_flag("--json", enum_json, "machine-readable output");
  enumerate->add_flag("--list", enum_list, "print every structure");

  std::string hunt_prop;
  int hunt_nmax = 4;
  auto* hunt = app.add_subcommand("hunt", "search small posets for a property witness");
  hunt->add_option("--property", hunt_prop, "property name (see --property help)")->required();
  hunt->add_option("--n-max", hunt_nmax, "largest carrier to scan");

  long long factor_m = 0;
  bool factor_json = false;
  auto* factor = app.add_subcommand("factor", "divisor-lattice antichain factorization");
  factor->add_option("m", factor_m, "positive integer")->required();
  factor->add_flag("--json", factor_json, "machine-readable output");

  int rep_check = 0;
  std::string rep_poset, rep_op = R"({"kind":"builtin","name":"dm"})", rep_set;
  auto* rep = app.add_subcommand("rep", "run a representation-theorem verdict");
  rep->add_option("--check", rep_check, "1|2|3")->required()->check(CLI::Range(1, 3));
  rep->add_option("--poset", rep_poset, "poset json file")->required();
  rep->add_option("--op", rep_op, "operator json (inline or file), used by --check 3");
  rep->add_option("--set", rep_set, "subset for checks 1 and 2 (default: all)");

  std::string export_poset, export_what = "dot";
  auto* exportc = app.add_subcommand("export", "emit dot or normalized json for a poset");
  exportc->add_option("--poset", export_poset, "poset json file")->required();
  exportc->add_option("--export", export_what, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  std::vector<std::string> argv(args);
  try {
    std::vector<const char*> cargs;
    cargs.push_back("ordconv");
    for (const auto& s : argv) cargs.push_back(s.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analysis(an, out);

    if (laws->parsed()) {
      LawConfig cfg;
      cfg.seed = laws_seed;
      cfg.random_n = std::min(laws_n, 6);
      auto reports = law_suite(cfg);
      std::uint64_t total_viol = 0;
      if (laws_json) {
        out << laws_to_json(reports).dump(2) << "\n";
        for (const auto& r : reports) total_viol += r.violations;
      } else {
        for (const auto& r : reports) {
          out << "law " << r.law << ": " << r.instances << " instances, " << r.violations
              << " violations";
          if (r.violations > 0) out << " (first: " << r.first_counterexample << ")";
          out << "\n";
          total_viol += r.violations;
        }
        out << (total_viol == 0 ? "all laws hold\n" : "LAW VIOLATIONS FOUND\n");
      }
      return total_viol == 0 ? 0 : 1;
    }

    if (enumerate->parsed()) {
      if (enum_kind == "posets") {
        auto posets = enum_posets(enum_n);
        if (enum_json) {
          json j = {{"kind", "posets"}, {"n", enum_n}, {"count", posets.size()}};
          if (enum_list) {
            json list = json::array();
            for (const auto& q : posets) list.push_back(qoset_to_json(q));
            j["posets"] = list;
          }
          out << j.dump(2) << "\n";
        } else {
          out << "labeled posets on " << enum_n << " elements: " << posets.size() << "\n";
          if (enum_list)
            for (const auto& q : posets) out << qoset_to_json(q)["leq_pairs"].dump() << "\n";
        }
      } else {
        auto fams = enum_moore(enum_n);
        if (enum_json) {
          json j = {{"kind", "moore"}, {"n", enum_n}, {"count", fams.size()}};
          if (enum_list) {
            json list = json::array();
            for (const auto& fam : fams) {
              json f = json::array();
              for (Subset s : fam) f.push_back(s.bits());
              list.push_back(f);
            }
            j["families"] = list;
          }
          out << j.dump(2) << "\n";
        } else {
          out << "Moore families on " << enum_n << " elements: " << fams.size() << "\n";
        }
      }
      return 0;
    }

    if (hunt->parsed()) {
      auto res = counterexample_search(hunt_prop, hunt_nmax);
      if (res) {
        out << "witness at n=" << res->n << " (poset #" << res->poset_index << "): "
            << res->detail << "\n";
      } else {
        out << "no witness up to n=" << hunt_nmax << "\n";
      }
      return 0;
    }

    if (factor->parsed()) {
      FactorResult r = factor_divisor_lattice(factor_m);
      if (factor_json) {
        out << factor_to_json(r).dump(2) << "\n";
      } else {
        out << r.m << " = sup{";
        for (std::size_t i = 0; i < r.top_antichain.size(); ++i)
          out << (i ? ", " : "") << r.top_antichain[i];
        out << "}\n";
        Qoset q = divisor_qoset(r.m);
        out << "divisor  antichain\n";
        for (const auto& [x, ys] : r.rep.antichains) {
          out << q.label(x) << "  {";
          for (std::size_t i = 0; i < ys.size(); ++i) out << (i ? ", " : "") << q.label(ys[i]);
          out << "}\n";
        }
      }
      bool ok = r.rep.kmp_holds && r.rep.uniqueness_ok && r.top_matches_trial_division;
      return ok ? 0 : 1;
    }

    if (rep->parsed()) {
      AnalyzeArgs a;
      a.poset_file = rep_poset;
      a.op_spec = rep_op;
      a.set_csv = rep_set;
      a.report = "rep" + std::to_string(rep_check);
      return run_analysis(a, out);
    }

    if (exportc->parsed()) {
      Qoset q = qoset_from_json(load_json_file(export_poset));
      if (export_what == "dot")
        out << to_dot(q);
      else
        out << qoset_to_json(q).dump(2) << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ordconv::cli
