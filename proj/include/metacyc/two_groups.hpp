#pragma once

// Metacyclic 2-groups: the ordinary (Type I) and exceptional (Type II)
// presentations, the cyclic-center normal form, and the constructive
// complement used to show such groups are absolutely split.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metacyc/group.hpp"

namespace metacyc {

/// <a, b | a^{2^{r+s+u}} = 1, b^{2^{r+s+t}} = a^{2^{r+s}}, a^b = a^{1+2^r}>,
/// r >= 2, u <= r.
struct TypeIParams {
  unsigned r = 2, s = 0, t = 0, u = 0;
  friend bool operator==(const TypeIParams&, const TypeIParams&) = default;
};

/// <a, b | a^{2^{r+s+v+t'+u}} = 1, b^{2^{r+s+t}} = a^{2^{r+s+v+t'}}, a^b = a^{-1+2^{r+v}}>,
/// r >= 2, t' <= r, u <= 1, tt' = sv = tv = 0, and u = 0 when t' >= r-1.
struct TypeIIParams {
  unsigned r = 2, s = 0, v = 0, t = 0, tp = 0, u = 0;
  friend bool operator==(const TypeIIParams&, const TypeIIParams&) = default;
};

using TwoGroupParams = std::variant<TypeIParams, TypeIIParams>;

/// <a, b | a^{2^{2r+s+t}} = 1, b^{2^{r+s}} = 1, a^b = a^{sign + 2^{r+t}}>, r >= 2, st = 0.
struct NormalForm2 {
  unsigned r = 2, s = 0, t = 0;
  int sign = 1;

  u64 n() const { return u64{1} << (2 * r + s + t); }
  u64 m() const { return u64{1} << (r + s); }
  /// sign + 2^{r+t} as a residue mod n.
  u64 gamma() const;
  Group realize() const;
  friend bool operator==(const NormalForm2&, const NormalForm2&) = default;
};

void validate(const TypeIParams& p);
void validate(const TypeIIParams& p);
void validate(const NormalForm2& f);

Group realize_typeI(const TypeIParams& p);
Group realize_typeII(const TypeIIParams& p);
Group realize(const TwoGroupParams& p);

/// log2 of the realized group's order.
unsigned order_exponent(const TwoGroupParams& p);

/// stu = 0 for Type I, u = 0 for Type II.
bool formula_split_flag(const TwoGroupParams& p);

struct SplitFlagCheck {
  bool formula = false;
  bool search = false;  // exhaustive search for a normal cyclic subgroup with a cyclic complement
  bool consistent() const { return formula == search; }
};
SplitFlagCheck split_flag_check(const TwoGroupParams& p, u64 cap = kDefaultEnumerationCap);

/// Subgroup given by the structural center formula (non-abelian groups;
/// Type II only for u = 0).
Subgroup center_formula(const TwoGroupParams& p, u64 cap = kDefaultEnumerationCap);
/// Brute-force center equals center_formula.
bool center_formula_check(const TwoGroupParams& p, u64 cap = kDefaultEnumerationCap);

struct CyclicMaximal {
  bool present = false;
  GroupElement generator;
};
CyclicMaximal has_cyclic_maximal(const Group& G, u64 cap = kDefaultEnumerationCap);

struct NormalFormResult {
  NormalForm2 form;
  GroupElement x;  // image of the normal-form a
  GroupElement y;  // image of the normal-form b
};

/// Normal form of a split group with cyclic center and no cyclic maximal
/// subgroup, with explicit generator images in the realized source group.
NormalFormResult normal_form_cyclic_center(const TwoGroupParams& p, u64 cap = kDefaultEnumerationCap);

/// x and y satisfy the normal-form relations in G, have the right orders, and
/// generate G; the realized normal form matches G's order, exponent and
/// center order.
bool verify_normal_form(const Group& G, const NormalFormResult& nf, u64 cap = kDefaultEnumerationCap);

/// If `g` is in normal form (n, m, r) = (2^{2r+s+t}, 2^{r+s}, sign + 2^{r+t}),
/// the parameters.
std::optional<NormalForm2> match_normal_form(const Group& G);

struct Lemma56Rep {
  unsigned k = 0;
  u64 j = 0;
};

/// (k, j) with <b^{2^k} a^j> = <g>, via g^l for the smallest odd l with
/// l i' = 2^k (mod 2^{r+s}). For k >= 1, and for sign +1 at k = 0,
/// 2^{r+t+k} divides j.
Lemma56Rep lemma56_representative(const NormalForm2& f, const GroupElement& g);

/// v2(gamma^{2^d} - 1) for gamma = sign + 2^{r+t}, computed exactly.
unsigned claim_v2(int sign, unsigned r, unsigned t, unsigned d);

/// y = (1, l) with (1, l) admissible and g in <y>; throws TheoremViolation if
/// any step of the construction fails.
GroupElement thm52_complement(const NormalForm2& f, const GroupElement& g);

/// v2(C(2^n, i+1)) >= n - i for all 0 <= i <= n <= nmax.
bool lemma55_sweep(unsigned nmax);

/// Omega_1(G) has exactly 4 elements, all central, of exponent 2. Rejects
/// groups with cyclic center.
bool lemma61_check(const Group& G, u64 cap = kDefaultEnumerationCap);

struct TwoGroupEntry {
  TwoGroupParams params;
  GeneralPresentation presentation;
  unsigned order_exp = 0;
  bool split = false;
  bool center_cyclic = false;
  std::optional<NormalForm2> normal_form;
};

/// All Type I and Type II tuples of order <= 2^max_k, realized and annotated.
/// Sorted by (order, type, parameters).
std::vector<TwoGroupEntry> enumerate_2groups(unsigned max_k, u64 cap = kDefaultEnumerationCap);

/// Parameter tuples only, without realization.
std::vector<TwoGroupParams> two_group_params(unsigned max_k);

/// Named metacyclic 2-groups of order 2^k with a cyclic maximal subgroup.
struct CyclicMaximalFamily {
  std::string name;
  GeneralPresentation presentation;
  GroupElement certificate;
};
std::vector<CyclicMaximalFamily> cyclic_maximal_families(unsigned k, u64 cap = kDefaultEnumerationCap);

/// All normal forms of order <= 2^max_k.
std::vector<NormalForm2> normal_forms(unsigned max_k);

std::string describe(const TwoGroupParams& p);
std::string describe(const NormalForm2& f);

}  // namespace metacyc
