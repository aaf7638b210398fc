#include "metacyc/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "metacyc/error.hpp"

namespace metacyc {
namespace {

std::string describe(const GroupElement& g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

std::string describe(const GeneralPresentation& p) {
  return "(n=" + std::to_string(p.n) + ", M=" + std::to_string(p.M) + ", E=" + std::to_string(p.E) +
         ", r=" + std::to_string(p.r) + ")";
}

}  // namespace

Group::Group(const GeneralPresentation& p) : p_(p) {
  if (p.n == 0 || p.M == 0)
    throw Error(ErrorKind::InvalidArgument, "n and M must be >= 1 in " + describe(p));
  checked_modulus_product(p.n, p.M);
  p_.r = p.r % p.n;
  p_.E = p.E % p.n;
  if (std::gcd(p_.r, p_.n) != 1)
    throw Error(ErrorKind::NotAUnit, "r=" + std::to_string(p.r) + " is not a unit mod n=" + std::to_string(p.n));
  if (pow_mod(p_.r, p_.M, p_.n) != 1 % p_.n)
    throw Error(ErrorKind::TwistOrderMismatch,
                "r^M mod n = " + std::to_string(pow_mod(p_.r, p_.M, p_.n)) + " in " + describe(p));
  const u64 r_minus_1 = (p_.r + p_.n - 1 % p_.n) % p_.n;
  if (mul_mod(p_.E, r_minus_1, p_.n) != 0)
    throw Error(ErrorKind::FoldNotCentral, "E(r-1) mod n != 0 in " + describe(p));
  abelian_ = p_.r == 1 % p_.n;
  twist_order_ = mult_order(p_.r, p_.n);
  if (p_.M <= kTwistTableLimit) {
    twist_table_.resize(p_.M);
    u64 x = 1 % p_.n;
    for (auto& t : twist_table_) {
      t = x;
      x = mul_mod(x, p_.r, p_.n);
    }
  }
}

u64 Group::twist_power(u64 e) const {
  return e < twist_table_.size() ? twist_table_[e] : pow_mod(p_.r, e, p_.n);
}

Group make_group(u64 n, u64 m, u64 r) { return Group(SplitPresentation{n, m, r}); }

Group make_group(u64 n, u64 M, u64 E, u64 r) { return Group(GeneralPresentation{n, M, E, r}); }

void Group::require(const GroupElement& g) const {
  if (!contains(g))
    throw Error(ErrorKind::ForeignElement, describe(g) + " is not canonical in " + describe(p_));
}

void Group::require_split(const char* op) const {
  if (!is_split()) throw Error(ErrorKind::NotSplit, std::string(op) + " needs E = 0, got " + describe(p_));
}

void Group::require_enumerable(u64 cap) const {
  if (order() > cap)
    throw Error(ErrorKind::CapExceeded,
                "group order " + std::to_string(order()) + " exceeds cap " + std::to_string(cap));
}

GroupElement Group::element(u64 i, u64 j) const {
  const u64 q = i / p_.M;
  return {i % p_.M, add_mod(j % p_.n, mul_mod(p_.E, q % p_.n, p_.n), p_.n)};
}

std::vector<GroupElement> Group::elements(u64 cap) const {
  require_enumerable(cap);
  std::vector<GroupElement> out;
  out.reserve(order());
  for (u64 i = 0; i < p_.M; ++i)
    for (u64 j = 0; j < p_.n; ++j) out.push_back({i, j});
  return out;
}

GroupElement Group::multiply(const GroupElement& x, const GroupElement& y) const {
  require(x);
  require(y);
  // b^{i1} a^{j1} b^{i2} a^{j2} = b^{i1+i2} a^{j1 r^{i2} + j2}
  u64 i = x.i + y.i;
  u64 j = add_mod(mul_mod(x.j, twist_power(y.i), p_.n), y.j, p_.n);
  if (i >= p_.M) {
    i -= p_.M;
    j = add_mod(j, p_.E, p_.n);
  }
  return {i, j};
}

GroupElement Group::inverse(const GroupElement& g) const {
  require(g);
  if (g.i == 0) return {0, (p_.n - g.j) % p_.n};
  const u64 i = p_.M - g.i;
  const u64 x = add_mod(p_.E, mul_mod(g.j, twist_power(i), p_.n), p_.n);
  return {i, (p_.n - x) % p_.n};
}

GroupElement Group::conjugate(const GroupElement& g, const GroupElement& by) const {
  return multiply(multiply(inverse(by), g), by);
}

GroupElement Group::power_closed(const GroupElement& g, u64 k) const {
  require(g);
  const u128 total = u128{g.i} * k;
  const u64 rem = static_cast<u64>(total % p_.M);
  const u64 folds = static_cast<u64>((total / p_.M) % p_.n);
  const u64 s = geom_sum(p_.r, g.i, k, p_.n);
  const u64 j = add_mod(mul_mod(g.j, s, p_.n), mul_mod(p_.E, folds, p_.n), p_.n);
  return {rem, j};
}

GroupElement Group::power_binomial(const GroupElement& g, u64 k) const {
  require(g);
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "power_binomial needs k >= 2");
  const GroupElement bi{g.i, 0};
  const GroupElement bi_inv = inverse(bi);
  const GroupElement b_part = power_closed(bi, k);  // b^{ik}, folded
  u64 a_exp = mul_mod(g.j, k % p_.n, p_.n);
  auto bracket_with_bi = [&](const GroupElement& x) { return multiply(multiply(multiply(inverse(x), bi_inv), x), bi); };
  GroupElement bracket = bracket_with_bi(a());  // [a, 1*b^i]
  for (u64 s = 1; s + 1 <= k; ++s) {
    if (bracket.i != 0)
      throw Error(ErrorKind::TheoremViolation, "[a, s*b^i] = " + describe(bracket) + " lies outside <a>");
    if (bracket.j == 0) break;  // all higher brackets are trivial too
    const u64 coeff = static_cast<u64>(binom(k, s + 1) % p_.n);
    a_exp = add_mod(a_exp, mul_mod(mul_mod(g.j, coeff, p_.n), bracket.j, p_.n), p_.n);
    bracket = bracket_with_bi(bracket);
  }
  return multiply(b_part, {0, a_exp});
}

u64 Group::element_order(const GroupElement& g) const {
  require(g);
  for (u64 d : divisors(order()))
    if (power_closed(g, d) == identity()) return d;
  throw Error(ErrorKind::TheoremViolation, "no divisor of |G| annihilates " + describe(g));
}

GroupElement Group::commutator(const GroupElement& g, const GroupElement& h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

GroupElement Group::bracket_iter(const GroupElement& x, const GroupElement& g, u64 s) const {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "bracket_iter needs s >= 1");
  GroupElement c = commutator(x, g);
  for (u64 t = 1; t < s; ++t) c = commutator(c, g);
  return c;
}

bool Group::verify_xu_identity(const GroupElement& x, const GroupElement& y, u64 l) const {
  if (l < 2) throw Error(ErrorKind::InvalidArgument, "verify_xu_identity needs l >= 2");
  const GroupElement lhs = power_closed(multiply(x, inverse(y)), l);
  GroupElement rhs = power_closed(x, l);
  for (u64 i = 1; i < l; ++i) {
    for (u64 j = 1; i + j <= l; ++j) {
      GroupElement br = commutator(x, y);
      for (u64 t = 1; t < i; ++t) br = commutator(br, x);
      for (u64 t = 1; t < j; ++t) br = commutator(br, y);
      const u64 e = static_cast<u64>(binom(l, i + j) % order());
      rhs = multiply(rhs, power_closed(br, e));
    }
  }
  rhs = multiply(rhs, inverse(power_closed(y, l)));
  return lhs == rhs;
}

std::vector<GroupElement> Group::cyclic_subgroup(const GroupElement& g) const {
  require(g);
  std::vector<GroupElement> out{identity()};
  for (GroupElement x = g; x != identity(); x = multiply(x, g)) out.push_back(x);
  return out;
}

bool Group::meets_a_trivially(const GroupElement& g) const {
  require(g);
  for (GroupElement x = g; x != identity(); x = multiply(x, g))
    if (x.i == 0) return false;
  return true;
}

u64 Group::order_of_b_power(u64 i) const { return p_.M / std::gcd(p_.M, i % p_.M); }

bool Group::is_admissible_order(u64 i, u64 j) const {
  require_split("is_admissible_order");
  require({i, j});
  return element_order({i, j}) == element_order({i, 0});
}

bool Group::is_admissible_congruence(u64 i, u64 j) const {
  require_split("is_admissible_congruence");
  require({i, j});
  const u64 k = order_of_b_power(i);
  return mul_mod(j, geom_sum(p_.r, i, k, p_.n), p_.n) == 0;
}

bool Subgroup::contains(const GroupElement& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::vector<GroupElement> closure(const Group& G, std::span<const GroupElement> gens, u64 cap) {
  G.require_enumerable(cap);
  std::vector<char> seen(G.order(), 0);
  std::vector<GroupElement> out{G.identity()};
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      const GroupElement y = G.multiply(out[k], g);
      auto& flag = seen[G.index_of(y)];
      if (!flag) {
        flag = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const Group& G, std::span<const GroupElement> elements) {
  if (elements.empty()) return false;
  std::vector<GroupElement> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const auto& g : sorted)
    if (!G.contains(g)) return false;
  if (!std::binary_search(sorted.begin(), sorted.end(), G.identity())) return false;
  // A finite non-empty subset closed under products is a subgroup.
  for (const auto& x : sorted)
    for (const auto& y : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), G.multiply(x, y))) return false;
  return true;
}

Subgroup make_subgroup(const Group& G, std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup H;
  H.elements = std::move(elements);
  const u64 size = H.elements.size();

  std::vector<std::pair<u64, GroupElement>> by_order;
  by_order.reserve(size);
  for (const auto& g : H.elements) by_order.emplace_back(G.element_order(g), g);

  for (const auto& [ord, g] : by_order) {
    if (ord == size) {
      H.cyclic = true;
      H.generators = {g};
      return H;
    }
  }
  H.cyclic = false;

  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  const u64 max_order = by_order.front().first;
  constexpr int kFirstGeneratorTries = 4;
  int tries = 0;
  for (const auto& [ord, g] : by_order) {
    if (ord != max_order || tries++ == kFirstGeneratorTries) break;
    const auto cyc = G.cyclic_subgroup(g);
    std::vector<GroupElement> in_g(cyc.begin(), cyc.end());
    std::sort(in_g.begin(), in_g.end());
    for (const auto& h : H.elements) {
      if (std::binary_search(in_g.begin(), in_g.end(), h)) continue;
      const GroupElement pair[] = {g, h};
      if (closure(G, pair, G.order()).size() == size) {
        H.generators = {g, h};
        return H;
      }
    }
  }

  // Greedy fallback: add elements until they span H.
  std::vector<GroupElement> gens;
  std::vector<GroupElement> span{G.identity()};
  for (const auto& [ord, g] : by_order) {
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(G, gens, G.order());
    if (span.size() == size) break;
  }
  H.generators = std::move(gens);
  return H;
}

Subgroup generated_subgroup(const Group& G, std::span<const GroupElement> gens, u64 cap) {
  return make_subgroup(G, closure(G, gens, cap));
}

Subgroup center(const Group& G, u64 cap) {
  std::vector<GroupElement> z;
  const GroupElement a = G.a(), b = G.b();
  for (const auto& g : G.elements(cap))
    if (G.multiply(g, a) == G.multiply(a, g) && G.multiply(g, b) == G.multiply(b, g)) z.push_back(g);
  return make_subgroup(G, std::move(z));
}

Subgroup omega_s(const Group& G, unsigned s, u64 cap) {
  G.require_enumerable(cap);
  const u64 order = G.order();
  if (order == 1) return make_subgroup(G, {G.identity()});
  const u64 p = smallest_prime_factor(order);
  u64 rest = order;
  while (rest % p == 0) rest /= p;
  if (rest != 1)
    throw Error(ErrorKind::NotPrimePower, "|G| = " + std::to_string(order) + " is not a prime power");
  u64 ps = 1;
  for (unsigned t = 0; t < s && ps < order; ++t) ps *= p;
  std::vector<GroupElement> gens;
  for (const auto& g : G.elements(cap))
    if (G.power_closed(g, ps) == G.identity()) gens.push_back(g);
  return make_subgroup(G, closure(G, gens, cap));
}

Subgroup derived_subgroup(const Group& G, u64 cap) {
  const auto all = G.elements(cap);
  std::vector<char> seen(G.order(), 0);
  std::vector<GroupElement> comms;
  for (const auto& x : all) {
    for (const auto& y : all) {
      const GroupElement c = G.commutator(x, y);
      auto& flag = seen[G.index_of(c)];
      if (!flag) {
        flag = 1;
        comms.push_back(c);
      }
    }
  }
  return make_subgroup(G, closure(G, comms, cap));
}

u64 group_exponent(const Group& G, u64 cap) {
  u64 e = 1;
  for (const auto& g : G.elements(cap)) e = std::lcm(e, G.element_order(g));
  return e;
}

std::vector<SplitPresentation> split_presentations(u64 max_order) {
  std::vector<SplitPresentation> out;
  for (u64 n = 1; n <= max_order; ++n) {
    for (u64 m = 1; n * m <= max_order; ++m) {
      for (u64 r = 0; r < n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        if (pow_mod(r, m, n) != 1 % n) continue;
        out.push_back({n, m, r});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.n * x.m != y.n * y.m) return x.n * x.m < y.n * y.m;
    if (x.n != y.n) return x.n < y.n;
    if (x.m != y.m) return x.m < y.m;
    return x.r < y.r;
  });
  return out;
}

}  // namespace metacyc
