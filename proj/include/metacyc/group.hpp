#pragma once

// Metacyclic groups <a, b | a^n = 1, b^M = a^E, b^{-1} a b = a^r> and exact
// arithmetic on their canonical elements b^i a^j.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "metacyc/residue.hpp"

namespace metacyc {

/// Default bound on the group order for exhaustive operations.
inline constexpr u64 kDefaultEnumerationCap = 4096;

/// C_n : C_m with b^{-1} a b = a^r.
struct SplitPresentation {
  u64 n = 1;
  u64 m = 1;
  u64 r = 0;
};

/// C_n . C_M with b^M = a^E; E = 0 is the split case.
struct GeneralPresentation {
  u64 n = 1;
  u64 M = 1;
  u64 E = 0;
  u64 r = 0;

  friend bool operator==(const GeneralPresentation&, const GeneralPresentation&) = default;
};

/// b^i a^j with 0 <= i < M and 0 <= j < n.
struct GroupElement {
  u64 i = 0;
  u64 j = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class Group {
 public:
  /// Validates and normalizes (E mod n, r mod n). Each violated condition
  /// raises its own ErrorKind.
  explicit Group(const GeneralPresentation& p);
  explicit Group(const SplitPresentation& p) : Group(GeneralPresentation{p.n, p.m, 0, p.r}) {}

  u64 n() const { return p_.n; }
  u64 M() const { return p_.M; }
  u64 E() const { return p_.E; }
  u64 r() const { return p_.r; }
  u64 order() const { return p_.n * p_.M; }
  const GeneralPresentation& presentation() const { return p_; }

  bool is_split() const { return p_.E == 0; }
  bool is_abelian() const { return abelian_; }
  /// Multiplicative order of r in Z_n^*.
  u64 twist_order() const { return twist_order_; }

  GroupElement identity() const { return {0, 0}; }
  GroupElement a() const { return {0, 1 % p_.n}; }
  GroupElement b() const { return {1 % p_.M, 0}; }
  /// Canonical form of b^i a^j for arbitrary non-negative exponents.
  GroupElement element(u64 i, u64 j) const;

  bool contains(const GroupElement& g) const { return g.i < p_.M && g.j < p_.n; }
  std::size_t index_of(const GroupElement& g) const { return static_cast<std::size_t>(g.i * p_.n + g.j); }
  GroupElement element_at(std::size_t index) const { return {index / p_.n, index % p_.n}; }
  /// All elements in canonical (i, j) order. Subject to the enumeration cap.
  std::vector<GroupElement> elements(u64 cap = kDefaultEnumerationCap) const;
  void require_enumerable(u64 cap) const;

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& by) const;  // by^{-1} g by

  /// g^k = b^{ik} a^{j * geom_sum(r, i, k, n)}, folding b^M = a^E.
  GroupElement power_closed(const GroupElement& g, u64 k) const;
  /// g^k from the product b^{ik} a^{jk} prod_s [a, s*b^i]^{j C(k, s+1)}, with the
  /// brackets evaluated as actual commutators. Requires k >= 2.
  GroupElement power_binomial(const GroupElement& g, u64 k) const;
  GroupElement power(const GroupElement& g, u64 k) const { return power_closed(g, k); }

  u64 element_order(const GroupElement& g) const;
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;
  /// Left-normed [x, g, ..., g] with s copies of g. Requires s >= 1.
  GroupElement bracket_iter(const GroupElement& x, const GroupElement& g, u64 s) const;

  /// (x y^{-1})^l == x^l (prod_{i+j<=l} [ix, jy]^{C(l, i+j)}) y^{-l}, where
  /// [ix, jy] = [x, y, x (i-1 times), y (j-1 times)]. Requires l >= 2.
  bool verify_xu_identity(const GroupElement& x, const GroupElement& y, u64 l) const;

  /// [e, g, g^2, ...] of length element_order(g).
  std::vector<GroupElement> cyclic_subgroup(const GroupElement& g) const;
  /// <g> meets <a> only in the identity.
  bool meets_a_trivially(const GroupElement& g) const;

  /// o(b^i a^j) == o(b^i). Split presentations only.
  bool is_admissible_order(u64 i, u64 j) const;
  /// j * (1 + r^i + ... + r^{i(k-1)}) == 0 (mod n) with k = o(b^i). Split only.
  bool is_admissible_congruence(u64 i, u64 j) const;
  /// o(b^i) = M / gcd(M, i) in a split group.
  u64 order_of_b_power(u64 i) const;

  /// r^e mod n.
  u64 twist_power(u64 e) const;

  friend bool operator==(const Group& x, const Group& y) { return x.p_ == y.p_; }

 private:
  static constexpr u64 kTwistTableLimit = u64{1} << 16;

  void require(const GroupElement& g) const;
  void require_split(const char* op) const;

  GeneralPresentation p_;
  u64 twist_order_ = 1;
  bool abelian_ = true;
  std::vector<u64> twist_table_;  // r^e for e < M, small M only
};

Group make_group(u64 n, u64 m, u64 r);
Group make_group(u64 n, u64 M, u64 E, u64 r);

/// A subgroup held as its sorted element list. generators is a single element
/// when cyclic, a generating pair when one exists, otherwise a greedy
/// generating set.
struct Subgroup {
  std::vector<GroupElement> elements;
  std::vector<GroupElement> generators;
  bool cyclic = true;

  std::size_t size() const { return elements.size(); }
  bool contains(const GroupElement& g) const;
  friend bool operator==(const Subgroup& x, const Subgroup& y) { return x.elements == y.elements; }
};

/// Closure of gens under multiplication.
std::vector<GroupElement> closure(const Group& G, std::span<const GroupElement> gens,
                                  u64 cap = kDefaultEnumerationCap);
/// Builds a descriptor from an element list already known to be a subgroup.
Subgroup make_subgroup(const Group& G, std::vector<GroupElement> elements);
Subgroup generated_subgroup(const Group& G, std::span<const GroupElement> gens,
                            u64 cap = kDefaultEnumerationCap);
bool is_subgroup(const Group& G, std::span<const GroupElement> elements);

Subgroup center(const Group& G, u64 cap = kDefaultEnumerationCap);
/// Subgroup generated by all g with g^{p^s} = 1; |G| must be a power of p.
Subgroup omega_s(const Group& G, unsigned s, u64 cap = kDefaultEnumerationCap);
Subgroup derived_subgroup(const Group& G, u64 cap = kDefaultEnumerationCap);

/// Largest exponent e with o(g) | e for all g.
u64 group_exponent(const Group& G, u64 cap = kDefaultEnumerationCap);

/// All split presentations (n, m, r) with n*m <= max_order, r ranging over
/// units of Z_n with r^m = 1. Ordered by (n*m, n, m, r).
std::vector<SplitPresentation> split_presentations(u64 max_order);

}  // namespace metacyc
