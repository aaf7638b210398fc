#pragma once

// Absolute splitness of C_n : C_m with respect to <a>: the admissible-pair
// criterion, explicit complements, and exhaustive oracles.

#include <optional>
#include <vector>

#include "metacyc/group.hpp"

namespace metacyc {

struct AdmissiblePair {
  u64 i = 0;
  u64 j = 0;
  u64 order_of_bi = 1;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// y = b a^t generates a complement of <a> containing b^i a^j.
struct ComplementWitness {
  u64 t = 0;
  GroupElement target;

  GroupElement generator(const Group& G) const { return G.element(1, t); }
};

std::vector<AdmissiblePair> admissible_pairs(const Group& G, u64 cap = kDefaultEnumerationCap);

/// Smallest t with (1, t) admissible and j(r-1) = t(r^i - 1) (mod n(r-1)).
/// Empty when no admissible t solves the lifted congruence.
std::optional<ComplementWitness> complement_param_for(const Group& G, u64 i, u64 j);

bool is_absolutely_split_criterion(const Group& G, u64 cap = kDefaultEnumerationCap);

/// The first admissible pair without a witness, if any.
std::optional<AdmissiblePair> criterion_counterexample(const Group& G, u64 cap = kDefaultEnumerationCap);

/// Direct check of the definition: every x with <x> meet <a> = 1 lies in a
/// cyclic <y> with o(y) = M and <y> meet <a> = 1. Uses only multiplication.
bool is_absolutely_split_oracle(const Group& G, u64 cap = kDefaultEnumerationCap);

/// y with o(y) = m, <y> meet <a> = 1 and g in <y>, built from the
/// admissible-pair witness. Empty when g has no covering complement.
std::optional<GroupElement> complement_through(const Group& G, const GroupElement& g);

struct Decomposition {
  u64 normal_order = 1;
  u64 complement_order = 1;
  GroupElement normal_generator;
  GroupElement complement_generator;
};

/// Every (<x> normal cyclic, <y> cyclic) with trivial intersection and
/// |<x>||<y>| = |G|, one entry per pair of distinct subgroups.
std::vector<Decomposition> decomposition_survey(const Group& G, u64 cap = kDefaultEnumerationCap);

/// Distinct normal-part orders appearing in decomposition_survey.
std::vector<u64> normal_cyclic_orders(const std::vector<Decomposition>& survey);

/// G is C_k : C_l for some normal cyclic C_k (not necessarily <a>).
bool is_split_metacyclic(const Group& G, u64 cap = kDefaultEnumerationCap);

}  // namespace metacyc
