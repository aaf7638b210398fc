#include "metacyc/two_groups.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <type_traits>

#include "metacyc/error.hpp"
#include "metacyc/split_analysis.hpp"

namespace metacyc {
namespace {

u64 pow2(unsigned e) {
  if (e >= 63) throw Error(ErrorKind::CapExceeded, "2^" + std::to_string(e) + " exceeds the modulus cap");
  return u64{1} << e;
}

std::string elem_str(const GroupElement& g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

void constraint(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConstraintViolation, what + " violated");
}

void require_admissible_nonidentity(const Group& G, const GroupElement& g) {
  if (!G.contains(g)) throw Error(ErrorKind::ForeignElement, elem_str(g) + " is not canonical");
  if (g == G.identity()) throw Error(ErrorKind::PreconditionFailed, "g must not be the identity");
  if (!G.meets_a_trivially(g)) throw Error(ErrorKind::NotAdmissible, elem_str(g) + " meets <a> non-trivially");
}

bool same_cyclic(const Group& G, const GroupElement& x, const GroupElement& y) {
  auto cx = G.cyclic_subgroup(x);
  auto cy = G.cyclic_subgroup(y);
  std::sort(cx.begin(), cx.end());
  std::sort(cy.begin(), cy.end());
  return cx == cy;
}

bool in_cyclic(const Group& G, const GroupElement& g, const GroupElement& y) {
  const auto c = G.cyclic_subgroup(y);
  return std::find(c.begin(), c.end(), g) != c.end();
}

int type_index(const TwoGroupParams& p) { return static_cast<int>(p.index()); }

auto key(const TwoGroupParams& p) {
  if (const auto* a = std::get_if<TypeIParams>(&p)) return std::tuple(a->r, a->s, 0u, a->t, 0u, a->u);
  const auto& b = std::get<TypeIIParams>(p);
  return std::tuple(b.r, b.s, b.v, b.t, b.tp, b.u);
}

}  // namespace

u64 NormalForm2::gamma() const {
  const u64 mod = n();
  const u64 p = pow2(r + t);
  return sign > 0 ? (p + 1) % mod : (p + mod - 1) % mod;
}

Group NormalForm2::realize() const {
  validate(*this);
  return make_group(n(), m(), gamma());
}

void validate(const TypeIParams& p) {
  constraint(p.r >= 2, "r >= 2");
  constraint(p.u <= p.r, "u <= r");
}

void validate(const TypeIIParams& p) {
  constraint(p.r >= 2, "r >= 2");
  constraint(p.tp <= p.r, "t' <= r");
  constraint(p.u <= 1, "u <= 1");
  constraint(p.t * p.tp == 0, "t*t' = 0");
  constraint(p.s * p.v == 0, "s*v = 0");
  constraint(p.t * p.v == 0, "t*v = 0");
  constraint(p.tp + 1 < p.r || p.u == 0, "t' >= r-1 implies u = 0");
}

void validate(const NormalForm2& f) {
  constraint(f.r >= 2, "r >= 2");
  constraint(f.s * f.t == 0, "s*t = 0");
  constraint(f.sign == 1 || f.sign == -1, "sign in {+1,-1}");
  pow2(2 * f.r + f.s + f.t);
}

Group realize_typeI(const TypeIParams& p) {
  validate(p);
  const u64 n = pow2(p.r + p.s + p.u);
  return make_group(n, pow2(p.r + p.s + p.t), pow2(p.r + p.s) % n, (1 + pow2(p.r)) % n);
}

Group realize_typeII(const TypeIIParams& p) {
  validate(p);
  const u64 n = pow2(p.r + p.s + p.v + p.tp + p.u);
  const u64 twist = (pow2(p.r + p.v) + n - 1) % n;
  return make_group(n, pow2(p.r + p.s + p.t), pow2(p.r + p.s + p.v + p.tp) % n, twist);
}

Group realize(const TwoGroupParams& p) {
  return std::visit(
      [](const auto& q) {
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, TypeIParams>)
          return realize_typeI(q);
        else
          return realize_typeII(q);
      },
      p);
}

unsigned order_exponent(const TwoGroupParams& p) {
  if (const auto* a = std::get_if<TypeIParams>(&p)) return 2 * a->r + 2 * a->s + a->t + a->u;
  const auto& b = std::get<TypeIIParams>(p);
  return (b.r + b.s + b.v + b.tp + b.u) + (b.r + b.s + b.t);
}

bool formula_split_flag(const TwoGroupParams& p) {
  if (const auto* a = std::get_if<TypeIParams>(&p)) return a->s * a->t * a->u == 0;
  return std::get<TypeIIParams>(p).u == 0;
}

SplitFlagCheck split_flag_check(const TwoGroupParams& p, u64 cap) {
  const Group G = realize(p);
  return {formula_split_flag(p), is_split_metacyclic(G, cap)};
}

Subgroup center_formula(const TwoGroupParams& p, u64 cap) {
  const Group G = realize(p);
  G.require_enumerable(cap);
  if (G.is_abelian()) throw Error(ErrorKind::AbelianUnsupported, describe(p) + " is abelian");
  GroupElement gens[2];
  if (const auto* a = std::get_if<TypeIParams>(&p)) {
    const u64 e = pow2(a->s + a->u);
    gens[0] = G.power(G.a(), e);
    gens[1] = G.power(G.b(), e);
  } else {
    const auto& b = std::get<TypeIIParams>(p);
    if (b.u != 0)
      throw Error(ErrorKind::OutsideFormulaDomain, "center formula is stated for u = 0, got " + describe(p));
    gens[0] = G.power(G.a(), pow2(b.r + b.s + b.v + b.tp - 1));
    gens[1] = G.power(G.b(), b.s + b.tp == 0 ? 2 : pow2(b.s + b.tp));
  }
  return generated_subgroup(G, gens, cap);
}

bool center_formula_check(const TwoGroupParams& p, u64 cap) {
  const Subgroup formula = center_formula(p, cap);
  return formula == center(realize(p), cap);
}

CyclicMaximal has_cyclic_maximal(const Group& G, u64 cap) {
  G.require_enumerable(cap);
  if (!is_power_of_two(G.order()))
    throw Error(ErrorKind::NotTwoPower, "group order " + std::to_string(G.order()) + " is not a power of 2");
  if (G.order() < 2) return {};
  const u64 want = G.order() / 2;
  for (const auto& g : G.elements(cap))
    if (G.element_order(g) == want) return {true, g};
  return {};
}

NormalFormResult normal_form_cyclic_center(const TwoGroupParams& p, u64 cap) {
  if (!formula_split_flag(p)) throw Error(ErrorKind::NotSplit, describe(p) + " is not split");
  const Group G = realize(p);
  G.require_enumerable(cap);
  if (const auto cm = has_cyclic_maximal(G, cap); cm.present)
    throw Error(ErrorKind::CyclicMaximalSubgroup,
                describe(p) + " has a cyclic maximal subgroup generated by " + elem_str(cm.generator));
  if (!center(G, cap).cyclic) throw Error(ErrorKind::CenterNotCyclic, describe(p) + " has non-cyclic center");

  NormalFormResult out;
  if (const auto* a = std::get_if<TypeIParams>(&p)) {
    if (a->u == a->r && a->t == 0) {
      out.form = {a->r, a->s, 0, 1};
      out.x = G.a();
      out.y = G.multiply(G.b(), G.power(G.a(), pow2(a->r - 1) - 1));
    } else if (a->u == a->r && a->s == 0) {
      out.form = {a->r, 0, a->t, 1};
      out.x = G.b();
      out.y = G.multiply(G.power(G.b(), pow2(a->t)), G.inverse(G.a()));
    } else {
      throw Error(ErrorKind::TheoremViolation, describe(p) + " matches no normal-form case");
    }
  } else {
    const auto& b = std::get<TypeIIParams>(p);
    if (b.tp != b.r || b.t != 0)
      throw Error(ErrorKind::TheoremViolation, describe(p) + " matches no normal-form case");
    out.form = {b.r, b.s, b.v, -1};
    out.x = G.a();
    out.y = G.b();
  }
  if (!verify_normal_form(G, out, cap))
    throw Error(ErrorKind::TheoremViolation, "normal form " + describe(out.form) + " fails inside " + describe(p));
  return out;
}

bool verify_normal_form(const Group& G, const NormalFormResult& nf, u64 cap) {
  const NormalForm2& f = nf.form;
  validate(f);
  if (G.element_order(nf.x) != f.n() || G.element_order(nf.y) != f.m()) return false;
  if (G.conjugate(nf.x, nf.y) != G.power(nf.x, f.gamma())) return false;
  const GroupElement gens[] = {nf.x, nf.y};
  if (closure(G, gens, cap).size() != G.order()) return false;
  const Group H = f.realize();
  return H.order() == G.order() && group_exponent(H, cap) == group_exponent(G, cap) &&
         center(H, cap).size() == center(G, cap).size();
}

std::optional<NormalForm2> match_normal_form(const Group& G) {
  if (!G.is_split() || !is_power_of_two(G.n()) || !is_power_of_two(G.M())) return std::nullopt;
  const unsigned N = v2(G.n());
  const unsigned Mexp = v2(G.M());
  for (int sign : {1, -1}) {
    const u64 diff = sign > 0 ? (G.r() + G.n() - 1) % G.n() : (G.r() + 1) % G.n();
    if (diff == 0 || !is_power_of_two(diff)) continue;
    const unsigned e = v2(diff);  // r + t
    if (N < e || N - e != Mexp) continue;
    for (const NormalForm2& f : {NormalForm2{Mexp, 0, e - std::min(e, Mexp), sign},
                                 NormalForm2{e, Mexp - std::min(e, Mexp), 0, sign}}) {
      if (f.r < 2 || f.r + f.t != e || f.r + f.s != Mexp || f.s * f.t != 0) continue;
      return f;
    }
  }
  return std::nullopt;
}

Lemma56Rep lemma56_representative(const NormalForm2& f, const GroupElement& g) {
  const Group G = f.realize();
  require_admissible_nonidentity(G, g);
  const u64 m = f.m();
  const unsigned k = v2(g.i);
  const u64 period = m >> k;
  const u64 l = period == 1 ? 1 : unit_inverse((g.i >> k) % period, period);
  const GroupElement h = G.power(g, l);
  if (h.i != (u64{1} << k) || !same_cyclic(G, g, h))
    throw Error(ErrorKind::TheoremViolation, "odd multiplier " + std::to_string(l) + " fails for " + elem_str(g));
  if ((k >= 1 || f.sign > 0) && h.j % pow2(f.r + f.t + k) != 0)
    throw Error(ErrorKind::TheoremViolation, "2^" + std::to_string(f.r + f.t + k) + " does not divide j=" +
                                                 std::to_string(h.j) + " for " + elem_str(g) + " in " + describe(f));
  return {k, h.j};
}

unsigned claim_v2(int sign, unsigned r, unsigned t, unsigned d) {
  constraint(r >= 2, "r >= 2");
  constraint(d >= 1, "d >= 1");
  constraint(sign == 1 || sign == -1, "sign in {+1,-1}");
  if (r + t >= 64) throw Error(ErrorKind::Overflow, "gamma does not fit in 64 bits");
  // Arithmetic mod 2^64 by unsigned wraparound; exact for valuations below 64.
  u64 x = (u64{1} << (r + t)) + static_cast<u64>(static_cast<std::int64_t>(sign));
  for (unsigned i = 0; i < d; ++i) x *= x;
  x -= 1;
  if (x == 0) throw Error(ErrorKind::Overflow, "2-adic valuation is at least 64");
  return v2(x);
}

GroupElement thm52_complement(const NormalForm2& f, const GroupElement& g) {
  const Group G = f.realize();
  require_admissible_nonidentity(G, g);
  const auto [k, j] = lemma56_representative(f, g);

  // (gamma^{2^k} - 1)/(gamma - 1) = 2^u * alpha, read off mod 2^63.
  const u64 sum = geom_sum(f.gamma(), 1, u64{1} << k, kModulusCap);
  if (sum == 0) throw Error(ErrorKind::Overflow, "geometric sum vanishes mod 2^63");
  const unsigned u = v2(sum);
  if (v2(f.n()) + u > 63) throw Error(ErrorKind::Overflow, "cofactor of 2^" + std::to_string(u) + " is not exact mod n");
  const u64 alpha = (sum >> u) % f.n();
  if (j % pow2(u) != 0)
    throw Error(ErrorKind::TheoremViolation,
                "2^" + std::to_string(u) + " does not divide j=" + std::to_string(j) + " for " + elem_str(g));
  const u64 l = mul_mod(unit_inverse(alpha, f.n()), j >> u, f.n());
  const GroupElement y{1 % G.M(), l};
  if (!G.is_admissible_congruence(y.i, y.j))
    throw Error(ErrorKind::TheoremViolation, elem_str(y) + " is not admissible");
  if (G.element_order(y) != G.M() || !in_cyclic(G, g, y))
    throw Error(ErrorKind::TheoremViolation, elem_str(y) + " does not cover " + elem_str(g));
  return y;
}

bool lemma55_sweep(unsigned nmax) {
  if (nmax >= 63) throw Error(ErrorKind::Overflow, "2^" + std::to_string(nmax) + " out of range");
  for (unsigned n = 0; n <= nmax; ++n)
    for (unsigned i = 0; i <= n; ++i)
      if (v2(binom(u64{1} << n, i + 1)) < n - i) return false;
  return true;
}

bool lemma61_check(const Group& G, u64 cap) {
  const Subgroup Z = center(G, cap);
  if (Z.cyclic) throw Error(ErrorKind::CenterCyclic, "lemma hypothesis needs a non-cyclic center");
  const Subgroup omega = omega_s(G, 1, cap);
  if (omega.size() != 4) return false;
  for (const auto& x : omega.elements)
    if (!Z.contains(x) || G.multiply(x, x) != G.identity()) return false;
  return true;
}

std::vector<TwoGroupParams> two_group_params(unsigned max_k) {
  std::vector<TwoGroupParams> out;
  // Every exponent below is bounded by max_k through the order formulas.
  for (unsigned r = 2; 2 * r <= max_k; ++r)
    for (unsigned s = 0; 2 * r + 2 * s <= max_k; ++s)
      for (unsigned t = 0; 2 * r + 2 * s + t <= max_k; ++t)
        for (unsigned u = 0; u <= r && 2 * r + 2 * s + t + u <= max_k; ++u) out.push_back(TypeIParams{r, s, t, u});
  for (unsigned r = 2; 2 * r <= max_k; ++r)
    for (unsigned s = 0; 2 * r + 2 * s <= max_k; ++s)
      for (unsigned v = 0; 2 * r + 2 * s + v <= max_k; ++v)
        for (unsigned t = 0; 2 * r + 2 * s + v + t <= max_k; ++t)
          for (unsigned tp = 0; tp <= r; ++tp)
            for (unsigned u = 0; u <= 1; ++u) {
              const TypeIIParams p{r, s, v, t, tp, u};
              if (t * tp != 0 || s * v != 0 || t * v != 0 || (tp + 1 >= r && u != 0)) continue;
              if (order_exponent(p) <= max_k) out.push_back(p);
            }
  std::stable_sort(out.begin(), out.end(), [](const TwoGroupParams& x, const TwoGroupParams& y) {
    return std::tuple(order_exponent(x), type_index(x), key(x)) < std::tuple(order_exponent(y), type_index(y), key(y));
  });
  return out;
}

std::vector<TwoGroupEntry> enumerate_2groups(unsigned max_k, u64 cap) {
  if (max_k < 63 && (u64{1} << max_k) > cap)
    throw Error(ErrorKind::CapExceeded, "2^" + std::to_string(max_k) + " exceeds cap " + std::to_string(cap));
  std::vector<TwoGroupEntry> out;
  for (const auto& p : two_group_params(max_k)) {
    const Group G = realize(p);
    TwoGroupEntry e{p, G.presentation(), order_exponent(p), formula_split_flag(p), center(G, cap).cyclic, {}};
    if (e.split && e.center_cyclic && !has_cyclic_maximal(G, cap).present)
      e.normal_form = normal_form_cyclic_center(p, cap).form;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CyclicMaximalFamily> cyclic_maximal_families(unsigned k, u64 cap) {
  std::vector<CyclicMaximalFamily> out;
  if (k == 0) return out;
  const u64 N = pow2(k);
  auto add = [&](std::string name, GeneralPresentation p) {
    const Group G(p);
    const auto cm = has_cyclic_maximal(G, cap);
    if (!cm.present) throw Error(ErrorKind::TheoremViolation, name + " has no cyclic maximal subgroup");
    out.push_back({std::move(name), G.presentation(), cm.generator});
  };
  add("cyclic", {N, 1, 0, 1});
  if (k >= 2) add("abelian C" + std::to_string(N / 2) + " x C2", {N / 2, 2, 0, 1});
  if (k >= 3) add("dihedral", {N / 2, 2, 0, N / 2 - 1});
  if (k >= 3) add("generalized quaternion", {N / 2, 2, N / 4, N / 2 - 1});
  if (k >= 4) add("semidihedral", {N / 2, 2, 0, N / 4 - 1});
  if (k >= 4) add("modular", {N / 2, 2, 0, N / 4 + 1});
  return out;
}

std::vector<NormalForm2> normal_forms(unsigned max_k) {
  std::vector<NormalForm2> out;
  for (unsigned r = 2; 3 * r <= max_k; ++r)
    for (unsigned s = 0; 3 * r + 2 * s <= max_k; ++s)
      for (unsigned t = 0; 3 * r + 2 * s + t <= max_k; ++t) {
        if (s * t != 0) continue;
        out.push_back({r, s, t, 1});
        out.push_back({r, s, t, -1});
      }
  return out;
}

std::string describe(const TwoGroupParams& p) {
  if (const auto* a = std::get_if<TypeIParams>(&p))
    return "I(r=" + std::to_string(a->r) + ",s=" + std::to_string(a->s) + ",t=" + std::to_string(a->t) +
           ",u=" + std::to_string(a->u) + ")";
  const auto& b = std::get<TypeIIParams>(p);
  return "II(r=" + std::to_string(b.r) + ",s=" + std::to_string(b.s) + ",v=" + std::to_string(b.v) +
         ",t=" + std::to_string(b.t) + ",t'=" + std::to_string(b.tp) + ",u=" + std::to_string(b.u) + ")";
}

std::string describe(const NormalForm2& f) {
  return "NF(r=" + std::to_string(f.r) + ",s=" + std::to_string(f.s) + ",t=" + std::to_string(f.t) +
         ",sign=" + (f.sign > 0 ? "+1" : "-1") + ")";
}

}  // namespace metacyc
