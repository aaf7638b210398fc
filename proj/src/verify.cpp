#include "metacyc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include "metacyc/error.hpp"
#include "metacyc/split_analysis.hpp"

namespace metacyc {
namespace {

std::string elem_str(const GroupElement& g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

// nullopt on pass, otherwise the violated property.
using Check = std::optional<std::string>;

struct Instance {
  Json params;
  std::function<Check()> run;
};

// Optional post-run summary.
using Finish = std::function<void(VerificationReport&)>;

// Runs every instance across worker threads; results are merged in input order.
void run_instances(std::vector<Instance>& work, unsigned threads, VerificationReport& report) {
  std::vector<Check> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < work.size();) {
      try {
        results[k] = work[k].run();
      } catch (const std::exception& e) {
        results[k] = std::string("exception: ") + e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (std::size_t k = 0; k < work.size(); ++k) {
    ++report.instances;
    if (results[k])
      report.failures.push_back({work[k].params, *results[k]});
    else
      ++report.passes;
  }
}

Json pres_json(const SplitPresentation& p) { return Json(p); }

bool is_nonabelian(const SplitPresentation& p) { return p.n > 1 && p.r % p.n != 1; }

std::vector<SplitPresentation> two_power_presentations(u64 max_order) { return prime_power_presentations(2, max_order); }

unsigned log2_floor(u64 x) {
  unsigned k = 0;
  while (x >>= 1) ++k;
  return k;
}

Finish suite_lemma32(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (const auto& p : split_presentations(bound))
    work.push_back({pres_json(p), [p]() -> Check {
                      const Group G(p);
                      for (const auto& g : G.elements(G.order())) {
                        GroupElement iter = g;
                        for (u64 k = 2; k <= G.order(); ++k) {
                          iter = G.multiply(iter, g);
                          const GroupElement closed = G.power_closed(g, k);
                          const GroupElement binomial = G.power_binomial(g, k);
                          if (closed != iter || binomial != iter)
                            return "power mismatch at g=" + elem_str(g) + ", k=" + std::to_string(k);
                        }
                      }
                      return std::nullopt;
                    }});
  return {};
}

Finish suite_lemma41_42(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (const auto& p : split_presentations(bound)) {
    if (!is_nonabelian(p)) continue;
    work.push_back({pres_json(p), [p]() -> Check {
                      const Group G(p);
                      for (const auto& g : G.elements(G.order())) {
                        const bool def = G.meets_a_trivially(g);
                        if (def != G.is_admissible_order(g.i, g.j) || def != G.is_admissible_congruence(g.i, g.j))
                          return "admissibility tests disagree at " + elem_str(g);
                      }
                      return std::nullopt;
                    }});
  }
  return {};
}

Finish suite_thm43(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  std::vector<SplitPresentation> ps;
  for (const auto& p : split_presentations(bound))
    if (is_nonabelian(p)) ps.push_back(p);
  auto verdicts = std::make_shared<std::vector<int>>(ps.size(), -1);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const auto p = ps[k];
    work.push_back({pres_json(p), [p, k, verdicts]() -> Check {
                      const Group G(p);
                      const bool criterion = is_absolutely_split_criterion(G, G.order());
                      const bool oracle = is_absolutely_split_oracle(G, G.order());
                      (*verdicts)[k] = oracle;
                      if (criterion != oracle)
                        return std::string("criterion ") + (criterion ? "true" : "false") + " but oracle " +
                               (oracle ? "true" : "false");
                      return std::nullopt;
                    }});
  }
  return [verdicts](VerificationReport& report) {
    const auto yes = std::count(verdicts->begin(), verdicts->end(), 1);
    const auto no = std::count(verdicts->begin(), verdicts->end(), 0);
    report.notes.push_back(std::to_string(yes) + " absolutely split, " + std::to_string(no) + " not");
  };
}

Finish suite_thm51(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (const auto& p : two_power_presentations(bound)) {
    if (!is_nonabelian(p)) continue;
    work.push_back({pres_json(p), [p]() -> Check {
                      const Group G(p);
                      const auto orders = normal_cyclic_orders(decomposition_survey(G, G.order()));
                      if (orders.size() != 1)
                        return "expected one normal cyclic order, found " + std::to_string(orders.size());
                      return std::nullopt;
                    }});
  }
  const SplitPresentation remark{12, 2, 7};
  Json params = pres_json(remark);
  params["role"] = "mixed-order instance, expects at least two orders";
  work.push_back({params, [remark]() -> Check {
                    const Group G(remark);
                    const auto orders = normal_cyclic_orders(decomposition_survey(G, G.order()));
                    if (orders.size() < 2) return "expected at least two normal cyclic orders";
                    return std::nullopt;
                  }});
  return {};
}

Finish suite_thm52(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (const auto& p : two_power_presentations(bound)) {
    if (!center(Group(p), p.n * p.m).cyclic) continue;
    work.push_back({pres_json(p), [p]() -> Check {
                      const Group G(p);
                      if (!is_absolutely_split_oracle(G, G.order())) return std::string("cyclic center but not absolutely split");
                      return std::nullopt;
                    }});
  }
  for (const auto& f : normal_forms(log2_floor(bound))) {
    Json params = Json(f);
    params["role"] = "constructive complement for every admissible element";
    work.push_back({params, [f]() -> Check {
                      const Group G = f.realize();
                      for (const auto& g : G.elements(G.order())) {
                        if (g == G.identity() || !G.meets_a_trivially(g)) continue;
                        thm52_complement(f, g);
                      }
                      return std::nullopt;
                    }});
  }
  return {};
}

Finish suite_prop53(u64 bound, std::vector<Instance>& work, VerificationReport& report) {
  u64 outside = 0;
  for (const auto& p : two_group_params(log2_floor(bound))) {
    const Json params = params_to_json(p);
    work.push_back({params, [p]() -> Check {
                      const auto chk = split_flag_check(p, u64{1} << order_exponent(p));
                      if (!chk.consistent())
                        return std::string("split formula ") + (chk.formula ? "true" : "false") + " but search " +
                               (chk.search ? "true" : "false");
                      return std::nullopt;
                    }});
    const auto* two = std::get_if<TypeIIParams>(&p);
    if ((two && two->u != 0) || realize(p).is_abelian()) {
      ++outside;
      continue;
    }
    Json cparams = params;
    cparams["property"] = "center formula";
    work.push_back({cparams, [p]() -> Check {
                      if (!center_formula_check(p, u64{1} << order_exponent(p)))
                        return std::string("center formula differs from brute force");
                      return std::nullopt;
                    }});
  }
  report.notes.push_back(std::to_string(outside) +
                         " tuples outside the center formula's domain (abelian, or exceptional with u = 1)");
  return {};
}

Finish suite_lemma54(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (const auto& p : two_group_params(log2_floor(bound))) {
    if (!formula_split_flag(p)) continue;
    const Group G = realize(p);
    if (!center(G, G.order()).cyclic || has_cyclic_maximal(G, G.order()).present) continue;
    work.push_back({params_to_json(p), [p]() -> Check {
                      const Group H = realize(p);
                      const auto nf = normal_form_cyclic_center(p, H.order());
                      if (!verify_normal_form(H, nf, H.order())) return "normal form " + describe(nf.form) + " fails";
                      return std::nullopt;
                    }});
  }
  return {};
}

Finish suite_lemma55(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (unsigned n = 0; n <= bound; ++n)
    work.push_back({Json{{"n", n}}, [n]() -> Check {
                      for (unsigned i = 0; i <= n; ++i)
                        if (v2(binom(u64{1} << n, i + 1)) < n - i)
                          return "2^" + std::to_string(n - i) + " does not divide C(2^n, " + std::to_string(i + 1) + ")";
                      return std::nullopt;
                    }});
  return {};
}

Finish suite_lemma56(u64 bound, std::vector<Instance>& work, VerificationReport& report) {
  u64 outside = 0;
  for (const auto& f : normal_forms(log2_floor(bound))) {
    const Group G = f.realize();
    for (const auto& g : G.elements(G.order())) {
      if (g == G.identity() || !G.meets_a_trivially(g)) continue;
      Json params = Json(f);
      params["g"] = Json(g);
      if (f.sign < 0 && v2(g.i) == 0) {
        // Below the lemma's range 0 < k: counted, divisibility not expected.
        const auto rep = lemma56_representative(f, g);
        if (rep.j % (u64{1} << (f.r + f.t)) != 0) ++outside;
      }
      work.push_back({params, [f, g]() -> Check {
                        const auto rep = lemma56_representative(f, g);
                        const Group H = f.realize();
                        const GroupElement h{u64{1} << rep.k, rep.j};
                        auto a = H.cyclic_subgroup(h), b = H.cyclic_subgroup(g);
                        std::sort(a.begin(), a.end());
                        std::sort(b.begin(), b.end());
                        if (a != b) return "representative " + elem_str(h) + " generates a different subgroup";
                        if ((rep.k >= 1 || f.sign > 0) && rep.j % (u64{1} << (f.r + f.t + rep.k)) != 0)
                          return "2^{r+t+k} does not divide j=" + std::to_string(rep.j);
                        return std::nullopt;
                      }});
    }
  }
  report.notes.push_back(std::to_string(outside) +
                         " elements with k = 0 and sign -1 where 2^{r+t} does not divide j (outside 0 < k)");
  return {};
}

Finish suite_claim_v2(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (int sign : {1, -1})
    for (unsigned r = 2; r <= 5; ++r)
      for (unsigned t = 0; t <= 3; ++t)
        for (unsigned d = 1; d <= bound; ++d)
          work.push_back({Json{{"sign", sign}, {"r", r}, {"t", t}, {"d", d}}, [=]() -> Check {
                            const unsigned got = claim_v2(sign, r, t, d);
                            if (got != r + t + d)
                              return "valuation " + std::to_string(got) + ", expected " + std::to_string(r + t + d);
                            return std::nullopt;
                          }});
  return {};
}

Finish suite_lemma61(u64 bound, std::vector<Instance>& work, VerificationReport&) {
  for (const auto& p : two_power_presentations(bound)) {
    const Group G(p);
    if (G.order() < 2 || center(G, G.order()).cyclic) continue;
    work.push_back({pres_json(p), [p]() -> Check {
                      const Group H(p);
                      if (!lemma61_check(H, H.order())) return std::string("Omega_1 is not C2 x C2 inside the center");
                      return std::nullopt;
                    }});
  }
  return {};
}

Finish suite_thm62(u64 bound, std::vector<Instance>& work, VerificationReport& report) {
  const auto instances = thm62_instances(bound);
  u64 nonregular = 0;
  for (const auto& inst : instances) {
    if (inst.stabilizer.size() > 1) ++nonregular;
    Json params{{"group", inst.group}, {"stabilizer", inst.stabilizer}, {"connection", inst.connection}};
    work.push_back({params, [inst]() -> Check {
                      const Group G(inst.group);
                      const auto gg = coset_graph(G, inst.stabilizer, inst.connection, G.order());
                      if (!gg.graph.is_connected()) return "graph not connected";
                      if (!is_faithful(gg.space)) return "action not faithful";
                      const auto cert = find_certificate_2power(gg);
                      if (const auto chk = check_certificate(gg.graph, cert); !chk) return chk.failure;
                      return std::nullopt;
                    }});
  }
  report.notes.push_back(std::to_string(nonregular) + " of " + std::to_string(instances.size()) +
                         " instances have a nontrivial stabilizer");
  return {};
}

Finish suite_odd_prime(u64 bound, std::vector<Instance>& work, VerificationReport& report) {
  u64 wide = 0, wide_fail = 0;
  for (u64 p : {3, 5, 7})
    for (const auto& q : prime_power_presentations(p, bound)) {
      if (!is_nonabelian(q)) continue;
      if (q.n < q.m) {
        // Outside the hypothesis n >= m; tallied only.
        ++wide;
        if (!is_absolutely_split_criterion(Group(q), q.n * q.m)) ++wide_fail;
        continue;
      }
      work.push_back({pres_json(q), [q]() -> Check {
                        const Group G(q);
                        if (const auto bad = criterion_counterexample(G, G.order()))
                          return "criterion fails at " + elem_str({bad->i, bad->j});
                        return std::nullopt;
                      }});
    }
  report.notes.push_back(std::to_string(wide) + " presentations with |a| < |b| skipped; " + std::to_string(wide_fail) +
                         " of them are not absolutely split with respect to <a>");
  return {};
}

using SuiteFn = Finish (*)(u64, std::vector<Instance>&, VerificationReport&);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {{"lemma32", 128, "max group order"}, suite_lemma32},
      {{"lemma41_42", 200, "max group order"}, suite_lemma41_42},
      {{"thm43", 200, "max group order"}, suite_thm43},
      {{"thm51", 256, "max group order"}, suite_thm51},
      {{"thm52", 256, "max group order"}, suite_thm52},
      {{"prop53", 256, "max group order"}, suite_prop53},
      {{"lemma54", 256, "max group order"}, suite_lemma54},
      {{"lemma55", 12, "max n"}, suite_lemma55},
      {{"lemma56", 1024, "max group order"}, suite_lemma56},
      {{"claim_v2", 6, "max d"}, suite_claim_v2},
      {{"lemma61", 256, "max group order"}, suite_lemma61},
      {{"thm62", 128, "max group order"}, suite_thm62},
      {{"odd_prime", 729, "max group order"}, suite_odd_prime},
  };
  return entries;
}

}  // namespace

void to_json(Json& j, const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"params", f.params}, {"property", f.property}});
  j = Json{{"suite", r.suite},           {"instances", r.instances}, {"passes", r.passes},
           {"failures", std::move(failures)}, {"notes", r.notes},         {"wall_time", r.wall_seconds}};
}

void from_json(const Json& j, VerificationReport& r) {
  r.suite = j.at("suite").get<std::string>();
  r.instances = j.at("instances").get<u64>();
  r.passes = j.at("passes").get<u64>();
  r.failures.clear();
  for (const auto& f : j.at("failures")) r.failures.push_back({f.at("params"), f.at("property").get<std::string>()});
  r.notes = j.value("notes", std::vector<std::string>{});
  r.wall_seconds = j.at("wall_time").get<double>();
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

VerificationReport run_suite(const std::string& name, u64 bound, unsigned threads) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const SuiteEntry& e) { return e.info.name == name; });
  if (it == reg.end()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  if (bound == 0) bound = it->info.default_bound;

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  std::vector<Instance> work;
  const Finish finish = it->fn(bound, work, report);
  run_instances(work, threads, report);
  if (finish) finish(report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SplitPresentation> prime_power_presentations(u64 p, u64 max_order) {
  std::vector<SplitPresentation> out;
  for (u64 n = 1; n <= max_order; n *= p)
    for (u64 m = 1; n * m <= max_order; m *= p)
      for (u64 r = 0; r < n; ++r) {
        if (std::gcd(r, n) != 1 || pow_mod(r, m, n) != 1 % n) continue;
        out.push_back({n, m, r});
      }
  return out;
}

std::vector<Thm62Instance> thm62_instances(u64 max_order, unsigned per_pair, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Thm62Instance> out;
  for (const auto& p : prime_power_presentations(2, max_order)) {
    const Group G(p);
    if (G.order() < 2) continue;
    const auto all = G.elements(G.order());

    // One cyclic subgroup per distinct element set, core-free only.
    std::vector<std::vector<GroupElement>> subgroups;
    for (const auto& h : all) {
      auto H = G.cyclic_subgroup(h);
      std::sort(H.begin(), H.end());
      if (H.size() == G.order()) continue;
      if (std::find(subgroups.begin(), subgroups.end(), H) != subgroups.end()) continue;
      bool core_free = true;
      for (std::size_t k = 1; k < H.size() && core_free; ++k) {
        bool in_core = true;
        for (const auto& g : all)
          if (!std::binary_search(H.begin(), H.end(), G.conjugate(H[k], g))) {
            in_core = false;
            break;
          }
        core_free = !in_core;
      }
      if (core_free) subgroups.push_back(std::move(H));
    }

    for (const auto& H : subgroups) {
      std::vector<GroupElement> outside;
      for (const auto& g : all)
        if (!std::binary_search(H.begin(), H.end(), g)) outside.push_back(g);
      std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
      std::vector<std::vector<GroupElement>> seen;
      for (unsigned sample = 0; sample < per_pair; ++sample) {
        std::vector<GroupElement> gens, C;
        for (;;) {
          gens.push_back(outside[pick(rng)]);
          C = double_coset_closure(G, H, gens);
          std::vector<GroupElement> span(H.begin(), H.end());
          span.insert(span.end(), C.begin(), C.end());
          if (closure(G, span, G.order()).size() == G.order()) break;
        }
        if (std::find(seen.begin(), seen.end(), C) != seen.end()) continue;
        seen.push_back(C);
        out.push_back({p, H, C});
      }
    }
  }
  return out;
}

}  // namespace metacyc
