#include "metacyc/split_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "metacyc/error.hpp"

namespace metacyc {
namespace {

std::string pair_str(u64 i, u64 j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void require_split_nonabelian(const Group& G, const char* op) {
  if (!G.is_split()) throw Error(ErrorKind::NotSplit, std::string(op) + " needs a split presentation");
  if (G.is_abelian())
    throw Error(ErrorKind::AbelianUnsupported, std::string(op) + " needs r != 1; use the oracle");
}

// Cyclic subgroups of G, each identified by its first generator in canonical order.
struct CyclicSubgroups {
  struct Entry {
    GroupElement generator;
    u64 order = 1;
    std::vector<GroupElement> elements;
  };
  std::vector<Entry> entries;
  std::vector<std::size_t> id_of;  // element index -> entry
};

CyclicSubgroups cyclic_subgroups(const Group& G, u64 cap) {
  G.require_enumerable(cap);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  CyclicSubgroups out;
  out.id_of.assign(G.order(), kUnset);
  for (const auto& g : G.elements(cap)) {
    if (out.id_of[G.index_of(g)] != kUnset) continue;
    const std::size_t id = out.entries.size();
    auto powers = G.cyclic_subgroup(g);
    const u64 ord = powers.size();
    for (u64 k = 1; k < ord; ++k)
      if (std::gcd(k, ord) == 1) out.id_of[G.index_of(powers[k])] = id;
    if (ord == 1) out.id_of[G.index_of(g)] = id;
    out.entries.push_back({g, ord, std::move(powers)});
  }
  return out;
}

std::vector<Decomposition> survey(const Group& G, u64 cap, bool stop_at_first) {
  const auto subs = cyclic_subgroups(G, cap);
  const u64 order = G.order();
  std::vector<Decomposition> out;
  std::vector<char> in_normal(order, 0);
  for (const auto& N : subs.entries) {
    if (order % N.order != 0) continue;
    const auto& members = subs.id_of;
    const std::size_t nid = members[G.index_of(N.generator)];
    const bool normal = members[G.index_of(G.conjugate(N.generator, G.a()))] == nid &&
                        members[G.index_of(G.conjugate(N.generator, G.b()))] == nid;
    if (!normal) continue;
    std::fill(in_normal.begin(), in_normal.end(), 0);
    for (const auto& x : N.elements) in_normal[G.index_of(x)] = 1;
    const u64 want = order / N.order;
    for (const auto& K : subs.entries) {
      if (K.order != want) continue;
      bool trivial = true;
      for (std::size_t k = 1; k < K.elements.size() && trivial; ++k)
        trivial = !in_normal[G.index_of(K.elements[k])];
      if (!trivial) continue;
      out.push_back({N.order, K.order, N.generator, K.generator});
      if (stop_at_first) return out;
    }
  }
  return out;
}

}  // namespace

std::vector<AdmissiblePair> admissible_pairs(const Group& G, u64 cap) {
  if (!G.is_split()) throw Error(ErrorKind::NotSplit, "admissible_pairs needs a split presentation");
  G.require_enumerable(cap);
  std::vector<AdmissiblePair> out;
  for (u64 i = 0; i < G.M(); ++i)
    for (u64 j = 0; j < G.n(); ++j)
      if (G.is_admissible_congruence(i, j)) out.push_back({i, j, G.order_of_b_power(i)});
  return out;
}

std::optional<ComplementWitness> complement_param_for(const Group& G, u64 i, u64 j) {
  require_split_nonabelian(G, "complement_param_for");
  if (!G.contains({i, j}))
    throw Error(ErrorKind::ForeignElement, pair_str(i, j) + " is not canonical");
  if (!G.is_admissible_congruence(i, j))
    throw Error(ErrorKind::NotAdmissible, pair_str(i, j) + " is not admissible");

  // Lifted form j(r-1) = t(r^i - 1) (mod n(r-1)); the solution set is periodic mod n.
  const u64 n = G.n();
  const u64 r_minus_1 = G.r() - 1;  // 2 <= r < n here
  const u64 lifted = checked_modulus_product(n, r_minus_1);
  const u64 coef = (pow_mod(G.r(), i, lifted) + lifted - 1 % lifted) % lifted;
  const u64 rhs = mul_mod(j, r_minus_1, lifted);
  const auto sols = solve_lin_cong(coef, rhs, lifted);
  if (sols.empty()) return std::nullopt;
  for (u64 t = sols.base; t < n; t += sols.step)
    if (G.is_admissible_congruence(1, t)) return ComplementWitness{t, {i, j}};
  return std::nullopt;
}

std::optional<AdmissiblePair> criterion_counterexample(const Group& G, u64 cap) {
  require_split_nonabelian(G, "is_absolutely_split_criterion");
  for (const auto& p : admissible_pairs(G, cap))
    if (!complement_param_for(G, p.i, p.j)) return p;
  return std::nullopt;
}

bool is_absolutely_split_criterion(const Group& G, u64 cap) { return !criterion_counterexample(G, cap); }

bool is_absolutely_split_oracle(const Group& G, u64 cap) {
  const auto all = G.elements(cap);
  const GroupElement e = G.identity();
  std::vector<char> covered(G.order(), 0);
  std::vector<char> trivial_meet(G.order(), 1);
  std::vector<GroupElement> powers;
  for (const auto& y : all) {
    powers.assign(1, e);
    bool meets = true;
    for (GroupElement x = y; x != e; x = G.multiply(x, y)) {
      powers.push_back(x);
      if (x.i == 0) meets = false;
    }
    trivial_meet[G.index_of(y)] = meets;
    if (meets && powers.size() == G.M())
      for (const auto& x : powers) covered[G.index_of(x)] = 1;
  }
  for (const auto& x : all)
    if (trivial_meet[G.index_of(x)] && !covered[G.index_of(x)]) return false;
  return true;
}

std::optional<GroupElement> complement_through(const Group& G, const GroupElement& g) {
  require_split_nonabelian(G, "complement_through");
  if (!G.meets_a_trivially(g))
    throw Error(ErrorKind::NotAdmissible, pair_str(g.i, g.j) + " meets <a> non-trivially");

  // Replace g by the generator h = g^l of <g> whose b-exponent is gcd(i', M).
  const u64 M = G.M();
  const u64 d = std::gcd(g.i, M);
  const u64 period = M / d;  // = o(g), since g is admissible
  u64 l = 1;
  if (period > 1) l = unit_inverse((g.i / d) % period, period);
  if (l == 0) l = period;
  const GroupElement h = G.power_closed(g, l);
  if (h.i != d % M)
    throw Error(ErrorKind::TheoremViolation, "generator reduction of " + pair_str(g.i, g.j) + " failed");

  const auto witness = complement_param_for(G, h.i, h.j);
  if (!witness) return std::nullopt;
  const GroupElement y = witness->generator(G);

  const auto cyc = G.cyclic_subgroup(y);
  const bool covers = std::find(cyc.begin(), cyc.end(), g) != cyc.end();
  if (cyc.size() != M || !G.meets_a_trivially(y) || !covers)
    throw Error(ErrorKind::TheoremViolation,
                "witness " + pair_str(y.i, y.j) + " does not cover " + pair_str(g.i, g.j));
  return y;
}

std::vector<Decomposition> decomposition_survey(const Group& G, u64 cap) { return survey(G, cap, false); }

std::vector<u64> normal_cyclic_orders(const std::vector<Decomposition>& s) {
  std::vector<u64> out;
  for (const auto& d : s) out.push_back(d.normal_order);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_split_metacyclic(const Group& G, u64 cap) { return !survey(G, cap, true).empty(); }

}  // namespace metacyc
