#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "metacyc/error.hpp"
#include "metacyc/graphs.hpp"
#include "metacyc/serialize.hpp"
#include "metacyc/split_analysis.hpp"
#include "metacyc/two_groups.hpp"
#include "metacyc/verify.hpp"

namespace metacyc::cli {
namespace {

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

// ---- analyze ----

struct AnalyzeOptions {
  u64 n = 0, m = 0, r = 0;
  bool json = false;
};

Json analyze_report(const Group& G, u64 cap) {
  Json rep;
  rep["group"] = G.presentation();
  rep["order"] = G.order();
  rep["with_respect_to"] = "<a>";

  Json pairs = Json::array();
  const auto adm = admissible_pairs(G, cap);
  for (const auto& p : adm) pairs.push_back({{"i", p.i}, {"j", p.j}, {"order", p.order_of_bi}});
  rep["admissible_pairs"] = std::move(pairs);

  const bool oracle = is_absolutely_split_oracle(G, cap);
  rep["oracle"] = oracle;
  rep["counterexample"] = nullptr;
  Json witnesses = Json::array();
  if (G.is_abelian()) {
    rep["method"] = "oracle";
    rep["absolutely_split"] = oracle;
  } else {
    rep["method"] = "criterion";
    for (const auto& p : adm) {
      const auto w = complement_param_for(G, p.i, p.j);
      if (!w) {
        if (rep["counterexample"].is_null()) rep["counterexample"] = GroupElement{p.i, p.j};
        continue;
      }
      witnesses.push_back({{"target", GroupElement{p.i, p.j}}, {"t", w->t}, {"y", w->generator(G)}});
    }
    rep["absolutely_split"] = rep["counterexample"].is_null();
  }
  rep["witnesses"] = std::move(witnesses);

  const Subgroup Z = center(G, cap);
  rep["center"] = {{"order", Z.size()}, {"cyclic", Z.cyclic}, {"generators", Z.generators}};
  if (const auto nf = match_normal_form(G))
    rep["normal_form"] = *nf;
  else
    rep["normal_form"] = nullptr;
  return rep;
}

void print_analyze(const Json& rep, std::ostream& out) {
  const auto& g = rep["group"];
  out << "group        C_" << g["n"] << " : C_" << g["M"] << ", r = " << g["r"] << ", order " << rep["order"]
      << "\n";
  out << "admissible   " << rep["admissible_pairs"].size() << " pairs:";
  for (const auto& p : rep["admissible_pairs"]) out << " (" << p["i"] << "," << p["j"] << ")";
  out << "\n";
  out << "absolutely split with respect to <a>: " << (rep["absolutely_split"].get<bool>() ? "true" : "false")
      << "  [method " << rep["method"].get<std::string>() << ", oracle "
      << (rep["oracle"].get<bool>() ? "true" : "false") << "]\n";
  if (!rep["counterexample"].is_null())
    out << "counterexample pair (" << rep["counterexample"]["i"] << "," << rep["counterexample"]["j"] << ")\n";
  for (const auto& w : rep["witnesses"])
    out << "  witness " << "(" << w["target"]["i"] << "," << w["target"]["j"] << ") in <(1," << w["t"] << ")>\n";
  out << "center       order " << rep["center"]["order"] << ", "
      << (rep["center"]["cyclic"].get<bool>() ? "cyclic" : "non-cyclic") << "\n";
  if (!rep["normal_form"].is_null()) {
    const auto& f = rep["normal_form"];
    out << "normal form  r=" << f["r"] << " s=" << f["s"] << " t=" << f["t"] << " sign=" << f["sign"] << "\n";
  }
}

// ---- classify2 ----

Json classify_report(u64 max_order, u64 cap) {
  if (max_order == 0 || !is_power_of_two(max_order))
    throw Error(ErrorKind::NotTwoPower, "--max-order " + std::to_string(max_order) + " is not a power of 2");
  if (max_order > cap) throw Error(ErrorKind::CapExceeded, "--max-order exceeds cap " + std::to_string(cap));
  const unsigned k = v2(max_order);
  Json rep;
  Json groups = Json::array();
  for (const auto& e : enumerate_2groups(k, cap)) {
    Json row = params_to_json(e.params);
    row["order"] = u64{1} << e.order_exp;
    row["presentation"] = e.presentation;
    row["split"] = e.split;
    row["center_cyclic"] = e.center_cyclic;
    row["normal_form"] = e.normal_form ? Json(*e.normal_form) : Json(nullptr);
    groups.push_back(std::move(row));
  }
  rep["groups"] = std::move(groups);
  Json fams = Json::array();
  for (unsigned j = 1; j <= k; ++j)
    for (const auto& f : cyclic_maximal_families(j, cap))
      fams.push_back({{"order", u64{1} << j},
                      {"name", f.name},
                      {"presentation", f.presentation},
                      {"cyclic_maximal_generator", f.certificate}});
  rep["cyclic_maximal_families"] = std::move(fams);
  return rep;
}

void print_classify(const Json& rep, std::ostream& out) {
  out << std::left << std::setw(6) << "type" << std::setw(30) << "parameters" << std::setw(7) << "order"
      << std::setw(26) << "(n, M, E, r)" << std::setw(7) << "split" << std::setw(9) << "Z cyclic"
      << "normal form\n";
  for (const auto& g : rep["groups"]) {
    std::ostringstream params, pres, nf;
    if (g["type"] == "I")
      params << "r=" << g["r"] << " s=" << g["s"] << " t=" << g["t"] << " u=" << g["u"];
    else
      params << "r=" << g["r"] << " s=" << g["s"] << " v=" << g["v"] << " t=" << g["t"] << " t'=" << g["t_prime"]
             << " u=" << g["u"];
    const auto& p = g["presentation"];
    pres << "(" << p["n"] << ", " << p["M"] << ", " << p["E"] << ", " << p["r"] << ")";
    if (!g["normal_form"].is_null()) {
      const auto& f = g["normal_form"];
      nf << "(" << f["r"] << "," << f["s"] << "," << f["t"] << "," << (f["sign"].get<int>() > 0 ? "+" : "-") << ")";
    } else {
      nf << "-";
    }
    out << std::setw(6) << g["type"].get<std::string>() << std::setw(30) << params.str() << std::setw(7)
        << g["order"].get<u64>() << std::setw(26) << pres.str() << std::setw(7) << yes_no(g["split"].get<bool>())
        << std::setw(9) << yes_no(g["center_cyclic"].get<bool>()) << nf.str() << "\n";
  }
  if (rep["groups"].empty()) out << "(no ordinary or exceptional parameter tuples in range; minimum order is 16)\n";
  out << "\ngroups with a cyclic maximal subgroup (listed without type parameters):\n";
  for (const auto& f : rep["cyclic_maximal_families"]) {
    const auto& p = f["presentation"];
    out << "  order " << std::setw(5) << f["order"].get<u64>() << std::setw(26) << f["name"].get<std::string>() << "("
        << p["n"] << ", " << p["M"] << ", " << p["E"] << ", " << p["r"] << ")  generator (" << f["cyclic_maximal_generator"]["i"]
        << "," << f["cyclic_maximal_generator"]["j"] << ")\n";
  }
}

// ---- verify ----

void print_report(const VerificationReport& r, std::ostream& out) {
  out << r.suite << ": " << r.passes << "/" << r.instances << " passed, " << r.failures.size() << " failures ("
      << std::fixed << std::setprecision(2) << r.wall_seconds << " s)\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t k = 0; k < shown; ++k)
    out << "  FAIL " << r.failures[k].params.dump() << ": " << r.failures[k].property << "\n";
  if (shown < r.failures.size()) out << "  ... " << r.failures.size() - shown << " more\n";
}

// ---- graph ----

struct GraphOptions {
  u64 n = 0, m = 0, r = 0;
  std::string gens, h, conn, dot, json;
  bool certify = false;
};

}  // namespace

u64 default_cap() {
  if (const char* env = std::getenv("METACYC_CAP")) {
    try {
      std::size_t used = 0;
      const u64 v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationCap;
}

std::vector<GroupElement> parse_elements(const std::string& text) {
  std::vector<GroupElement> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    const auto comma = item.find(',');
    auto number = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorKind::InvalidArgument, "bad element '" + item + "', expected i,j");
      return static_cast<u64>(std::stoull(s));
    };
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad element '" + item + "', expected i,j");
    out.push_back({number(item.substr(0, comma)), number(item.substr(comma + 1))});
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"metacyc: split metacyclic groups, absolute splitness and metacirculant certificates"};
  app.require_subcommand(1);
  u64 cap = default_cap();
  app.add_option("--cap", cap, "enumeration cap on group order (env METACYC_CAP)");

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "admissible pairs, absolute splitness, center, normal form");
  analyze->add_option("--n", ao.n, "order of <a>")->required();
  analyze->add_option("--m", ao.m, "order of <b>")->required();
  analyze->add_option("--r", ao.r, "twist: b^-1 a b = a^r")->required();
  analyze->add_flag("--json", ao.json, "machine-readable output");
  analyze->add_option("--cap", cap, "enumeration cap on group order");

  u64 max_order = 0;
  bool classify_json = false;
  auto* classify = app.add_subcommand("classify2", "ordinary and exceptional metacyclic 2-groups");
  classify->add_option("--max-order", max_order, "largest order, a power of 2")->required();
  classify->add_flag("--json", classify_json, "machine-readable output");
  classify->add_option("--cap", cap, "enumeration cap on group order");

  std::string suite;
  u64 bound = 0;
  unsigned threads = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run an invariant sweep");
  verify->add_option("--suite", suite, "suite name, or 'all'")->required();
  verify->add_option("--max", bound, "suite bound (default per suite)");
  verify->add_option("--threads", threads, "worker threads (0 = hardware)");
  verify->add_flag("--json", verify_json, "machine-readable output");

  GraphOptions go;
  auto* graph = app.add_subcommand("graph", "Cayley and coset graphs");
  graph->require_subcommand(1);
  auto* cayley = graph->add_subcommand("cayley", "Cayley graph, x ~ s x");
  auto* coset = graph->add_subcommand("coset", "graph on right cosets of H");
  coset->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  for (auto* sub : {cayley, coset}) {
    sub->add_option("--n", go.n, "order of <a>")->required();
    sub->add_option("--m", go.m, "order of <b>")->required();
    sub->add_option("--r", go.r, "twist")->required();
    sub->add_option("--dot", go.dot, "write DOT to this path ('-' for stdout)");
    sub->add_option("--json", go.json, "write the JSON edge list to this path ('-' for stdout)");
    sub->add_flag("--certify", go.certify, "search a metacirculant certificate through the group action");
    sub->add_option("--cap", cap, "enumeration cap on group order");
  }
  cayley->add_option("--gens", go.gens, "connection set \"i,j;i,j;...\"")->required();
  coset->add_option("--h", go.h, "generators of H \"i,j;...\"")->required();
  coset->add_option("--conn", go.conn, "connection generators \"i,j;...\"")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const Group G = make_group(ao.n, ao.m, ao.r);
      const Json rep = analyze_report(G, cap);
      if (ao.json)
        out << rep.dump(2) << "\n";
      else
        print_analyze(rep, out);
      return kExitOk;
    }

    if (classify->parsed()) {
      const Json rep = classify_report(max_order, cap);
      if (classify_json)
        out << rep.dump(2) << "\n";
      else
        print_classify(rep, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<std::string> names;
      if (suite == "all")
        for (const auto& s : suites()) names.push_back(s.name);
      else
        names.push_back(suite);
      bool ok = true;
      Json all = Json::array();
      for (const auto& name : names) {
        const auto rep = run_suite(name, suite == "all" ? 0 : bound, threads);
        ok = ok && rep.ok();
        if (verify_json)
          all.push_back(rep);
        else
          print_report(rep, out);
      }
      if (verify_json) out << (names.size() == 1 ? all[0] : all).dump(2) << "\n";
      return ok ? kExitOk : kExitFailure;
    }

    if (graph->parsed()) {
      const Group G = make_group(go.n, go.m, go.r);
      GroupGraph gg = [&] {
        if (cayley->parsed()) {
          const auto given = parse_elements(go.gens);
          const auto S = symmetrize(G, given);
          if (S != sorted_unique(given))
            err << "warning: connection set was not closed under inversion; symmetrized to " << S.size()
                << " elements\n";
          return cayley_graph(G, S, cap);
        }
        const auto H = closure(G, parse_elements(go.h), cap);
        const auto given = parse_elements(go.conn);
        const auto C = double_coset_closure(G, H, given);
        if (C != sorted_unique(given))
          err << "warning: connection set expanded to its inverse-closed H-double-coset union (" << C.size()
              << " elements)\n";
        return coset_graph(G, H, C, cap);
      }();

      out << "vertices " << gg.space.size() << ", edges " << gg.graph.edges().size() << ", connected "
          << yes_no(gg.graph.is_connected()) << ", stabilizer order " << gg.space.stabilizer.size() << "\n";
      if (!go.dot.empty()) write_file(go.dot, to_dot(gg), out);

      Json doc = gg.graph;
      int status = kExitOk;
      if (go.certify) {
        try {
          const auto cert = find_certificate_2power(gg);
          doc["certificate"] = cert;
          out << "certificate: m = " << cert.m << ", n = " << cert.n << "\n";
        } catch (const Error& e) {
          doc["certificate"] = {{"failure", e.what()}};
          err << "certificate: " << e.what() << "\n";
          status = kExitFailure;
        }
      }
      if (!go.json.empty())
        write_file(go.json, doc.dump() + "\n", out);
      else if (go.certify && doc["certificate"].contains("sigma"))
        out << doc["certificate"].dump() << "\n";
      return status;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TheoremViolation ? kExitFailure : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace metacyc::cli
