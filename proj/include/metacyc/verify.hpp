#pragma once

// Exhaustive and sampled invariant sweeps, one suite per result checked.

#include <string>
#include <vector>

#include "metacyc/serialize.hpp"

namespace metacyc {

struct Failure {
  Json params;
  std::string property;
};

struct VerificationReport {
  std::string suite;
  u64 instances = 0;
  u64 passes = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool ok() const { return failures.empty() && passes == instances; }
};

void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);

struct SuiteInfo {
  std::string name;
  u64 default_bound;
  std::string bound_meaning;
};

const std::vector<SuiteInfo>& suites();

/// Runs the named suite up to `bound` (0 = the suite's default). Throws
/// UnknownSuite for an unrecognised name.
VerificationReport run_suite(const std::string& name, u64 bound = 0, unsigned threads = 0);

/// Split presentations (n, m, r) with n, m powers of `p` and n*m <= max_order.
std::vector<SplitPresentation> prime_power_presentations(u64 p, u64 max_order);

struct Thm62Instance {
  SplitPresentation group;
  std::vector<GroupElement> stabilizer;
  std::vector<GroupElement> connection;
};

/// Deterministic sample of connected, faithful, transitive coset instances on
/// split 2-groups of order <= max_order, at most `per_pair` connection sets per
/// (group, stabilizer).
std::vector<Thm62Instance> thm62_instances(u64 max_order, unsigned per_pair = 2, unsigned seed = 62);

}  // namespace metacyc
