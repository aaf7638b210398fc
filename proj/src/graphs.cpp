#include "metacyc/graphs.hpp"

#include <algorithm>
#include <numeric>

#include "metacyc/error.hpp"
#include "metacyc/split_analysis.hpp"

namespace metacyc {
namespace {

std::string elem_str(const GroupElement& g) {
  return "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

void require_canonical(const Group& G, std::span<const GroupElement> xs) {
  for (const auto& x : xs)
    if (!G.contains(x)) throw Error(ErrorKind::ForeignElement, elem_str(x) + " is not canonical");
}

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

SimpleGraph translation_graph(const CosetSpace& space, std::span<const GroupElement> C) {
  const Group& G = space.group;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < space.size(); ++u)
    for (const auto& c : C) {
      const Vertex v = space.vertex_of(G.multiply(c, space.reps[u]));
      if (u < v) edges.emplace_back(u, v);
    }
  return SimpleGraph(space.size(), std::move(edges));
}

}  // namespace

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) throw Error(ErrorKind::InvalidArgument, "image is not a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Permutation(std::move(image));
}

Permutation Permutation::then(const Permutation& q) const {
  if (q.size() != size()) throw Error(ErrorKind::InvalidArgument, "permutation sizes differ");
  std::vector<Vertex> image(size());
  for (Vertex x = 0; x < size(); ++x) image[x] = q(image_[x]);
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> image(size());
  for (Vertex x = 0; x < size(); ++x) image[image_[x]] = x;
  return Permutation(std::move(image));
}

Permutation Permutation::pow(u64 k) const {
  Permutation result = identity(size());
  Permutation base = *this;
  for (; k; k >>= 1) {
    if (k & 1) result = result.then(base);
    base = base.then(base);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (Vertex x = 0; x < size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::vector<std::vector<Vertex>> Permutation::cycles() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(size(), 0);
  for (Vertex start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    auto& cyc = out.emplace_back();
    for (Vertex x = start; !seen[x]; x = image_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
  }
  return out;
}

u64 Permutation::order() const {
  u64 l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, static_cast<u64>(c.size()));
  return l;
}

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

std::size_t SimpleGraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

bool SimpleGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<Vertex> parent(n_);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_;
  for (const auto& [u, v] : edges_) {
    const Vertex a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool SimpleGraph::is_automorphism(const Permutation& p) const {
  if (p.size() != n_) return false;
  for (const auto& [u, v] : edges_)
    if (!has_edge(p(u), p(v))) return false;
  return true;  // injective on a finite edge set, so onto
}

std::string CosetSpace::label(Vertex v) const {
  return std::to_string(reps[v].i) + "." + std::to_string(reps[v].j);
}

CosetSpace make_coset_space(const Group& G, const Subgroup& H, u64 cap) {
  G.require_enumerable(cap);
  if (!is_subgroup(G, H.elements)) throw Error(ErrorKind::NotSubgroup, "H is not a subgroup");
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> coset_of(G.order(), kUnset);
  std::vector<GroupElement> reps;
  // Elements are visited in (i, j) order, so each coset's first hit is its minimum.
  for (const auto& g : G.elements(cap)) {
    if (coset_of[G.index_of(g)] != kUnset) continue;
    const Vertex v = reps.size();
    reps.push_back(g);
    for (const auto& h : H.elements) coset_of[G.index_of(G.multiply(h, g))] = v;
  }
  return CosetSpace{G, H, std::move(reps), std::move(coset_of)};
}

std::vector<GroupElement> symmetrize(const Group& G, std::span<const GroupElement> gens) {
  require_canonical(G, gens);
  std::vector<GroupElement> out(gens.begin(), gens.end());
  for (const auto& g : gens) out.push_back(G.inverse(g));
  return sorted_unique(std::move(out));
}

GroupGraph cayley_graph(const Group& G, std::span<const GroupElement> S, u64 cap) {
  require_canonical(G, S);
  const auto set = sorted_unique({S.begin(), S.end()});
  for (const auto& s : set) {
    if (s == G.identity()) throw Error(ErrorKind::InvalidArgument, "connection set contains the identity");
    if (!std::binary_search(set.begin(), set.end(), G.inverse(s)))
      throw Error(ErrorKind::NotClosed, "connection set lacks the inverse of " + elem_str(s));
  }
  CosetSpace space = make_coset_space(G, make_subgroup(G, std::vector{G.identity()}), cap);
  SimpleGraph graph = translation_graph(space, set);
  return {std::move(space), std::move(graph)};
}

std::vector<GroupElement> double_coset_closure(const Group& G, std::span<const GroupElement> H,
                                               std::span<const GroupElement> gens) {
  require_canonical(G, H);
  std::vector<GroupElement> out;
  for (const auto& g : symmetrize(G, gens))
    for (const auto& h1 : H)
      for (const auto& h2 : H) out.push_back(G.multiply(G.multiply(h1, g), h2));
  return sorted_unique(std::move(out));
}

GroupGraph coset_graph(const Group& G, std::span<const GroupElement> H, std::span<const GroupElement> C, u64 cap) {
  require_canonical(G, H);
  require_canonical(G, C);
  if (!is_subgroup(G, H)) throw Error(ErrorKind::NotSubgroup, "H is not a subgroup");
  const Subgroup sub = make_subgroup(G, {H.begin(), H.end()});
  const auto set = sorted_unique({C.begin(), C.end()});
  for (const auto& c : set)
    if (sub.contains(c)) throw Error(ErrorKind::ConstraintViolation, "connection set meets H at " + elem_str(c));
  if (double_coset_closure(G, sub.elements, set) != set)
    throw Error(ErrorKind::NotClosed, "connection set is not an inverse-closed union of H-double cosets");
  CosetSpace space = make_coset_space(G, sub, cap);
  SimpleGraph graph = translation_graph(space, set);
  return {std::move(space), std::move(graph)};
}

Permutation action_permutation(const CosetSpace& space, const GroupElement& g) {
  std::vector<Vertex> image(space.size());
  for (Vertex v = 0; v < space.size(); ++v) image[v] = space.vertex_of(space.group.multiply(space.reps[v], g));
  return Permutation(std::move(image));
}

std::vector<GroupElement> action_kernel(const CosetSpace& space) {
  std::vector<GroupElement> out;
  for (const auto& g : space.group.elements(space.group.order()))
    if (action_permutation(space, g).is_identity()) out.push_back(g);
  return out;
}

bool is_faithful(const CosetSpace& space) { return action_kernel(space).size() == 1; }

OrbitReport semiregular_orbits(const Permutation& p) { return semiregular_orbits(p, p.order()); }

OrbitReport semiregular_orbits(const Permutation& p, u64 group_order) {
  OrbitReport out;
  out.orbits = p.cycles();
  out.semiregular = std::all_of(out.orbits.begin(), out.orbits.end(),
                                [group_order](const auto& c) { return c.size() == group_order; });
  return out;
}

CertificateCheck check_certificate(const SimpleGraph& graph, const MetacircCertificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  const std::size_t N = graph.vertex_count();
  if (cert.sigma.size() != N || cert.tau.size() != N) return fail("permutation size differs from vertex count");
  if (!graph.is_automorphism(cert.sigma)) return fail("sigma is not an automorphism");
  if (!graph.is_automorphism(cert.tau)) return fail("tau is not an automorphism");

  const auto orb = semiregular_orbits(cert.sigma);
  if (!orb.semiregular) return fail("semiregularity: <sigma> is not semiregular");
  if (orb.orbits.size() != cert.m || cert.sigma.order() != cert.n)
    return fail("semiregularity: expected " + std::to_string(cert.m) + " orbits of size " + std::to_string(cert.n) +
                ", found " + std::to_string(orb.orbits.size()) + " of size " + std::to_string(cert.sigma.order()));
  if (cert.n < 2) return fail("semiregularity: orbits must have size at least 2");

  const Permutation conj = cert.tau.inverse().then(cert.sigma).then(cert.tau);
  bool normalizes = false;
  Permutation power = Permutation::identity(N);
  for (u64 k = 0; k < cert.n && !normalizes; ++k, power = power.then(cert.sigma)) normalizes = power == conj;
  if (!normalizes) return fail("orbit rotation: tau does not normalize <sigma>");

  std::vector<std::size_t> orbit_of(N);
  for (std::size_t k = 0; k < orb.orbits.size(); ++k)
    for (Vertex v : orb.orbits[k]) orbit_of[v] = k;
  std::vector<std::size_t> induced(cert.m);
  for (std::size_t k = 0; k < orb.orbits.size(); ++k) induced[k] = orbit_of[cert.tau(orb.orbits[k].front())];
  std::size_t len = 0;
  std::size_t k = 0;
  do {
    k = induced[k];
    ++len;
  } while (k != 0 && len <= cert.m);
  if (len != cert.m) return fail("orbit rotation: tau does not permute the orbits as an m-cycle");

  const auto cyc = cert.tau.cycles();
  if (std::none_of(cyc.begin(), cyc.end(), [&](const auto& c) { return c.size() == cert.m; }))
    return fail("m-cycle: tau has no cycle of length " + std::to_string(cert.m));
  return {true, {}};
}

Sylow2 sylow2_of_metacyclic(const SplitPresentation& p) {
  const Group G(p);
  const u64 n2 = u64{1} << v2(G.n());
  const u64 m2 = u64{1} << v2(G.M());
  const u64 odd_n = G.n() / n2;
  const u64 odd_m = G.M() / m2;
  const u64 twist = pow_mod(G.r(), odd_m, n2);
  return {{n2, m2, twist}, G.element(0, odd_n), G.element(odd_m, 0)};
}

MetacircCertificate find_certificate_2power(const GroupGraph& gg) {
  const CosetSpace& space = gg.space;
  const Group& G = space.group;
  const std::size_t N = space.size();
  if (N < 2 || !is_power_of_two(N))
    throw Error(ErrorKind::NotTwoPower, "vertex count " + std::to_string(N) + " is not a power of 2 >= 2");
  if (!is_power_of_two(G.order()))
    throw Error(ErrorKind::NotTwoPower, "group order " + std::to_string(G.order()) + " is not a power of 2");
  if (!G.is_split()) throw Error(ErrorKind::NotSplit, "the acting group must have a split presentation");
  if (!is_faithful(space)) throw Error(ErrorKind::NotFaithful, "the action has a nontrivial kernel");

  MetacircCertificate cert;
  if (space.is_regular()) {
    if (G.n() == 1) {
      cert.sigma = action_permutation(space, G.b());
      cert.tau = Permutation::identity(N);
    } else {
      cert.sigma = action_permutation(space, G.a());
      cert.tau = action_permutation(space, G.b());
    }
  } else {
    const Subgroup& H = space.stabilizer;
    if (!center(G, G.order()).cyclic)
      throw Error(ErrorKind::TheoremViolation, "non-cyclic center with a nontrivial stabilizer in a faithful action");
    if (!H.cyclic) throw Error(ErrorKind::TheoremViolation, "stabilizer is not cyclic");
    const GroupElement z = H.generators.front();
    const auto y = complement_through(G, z);
    if (!y) throw Error(ErrorKind::TheoremViolation, "no complement of <a> through " + elem_str(z));
    cert.sigma = action_permutation(space, G.a());
    cert.tau = action_permutation(space, *y);
  }

  const auto orb = semiregular_orbits(cert.sigma);
  if (!orb.semiregular) throw Error(ErrorKind::TheoremViolation, "sigma is not semiregular");
  cert.m = orb.orbits.size();
  cert.n = static_cast<std::size_t>(cert.sigma.order());
  if (const auto check = check_certificate(gg.graph, cert); !check)
    throw Error(ErrorKind::TheoremViolation, "certificate rejected: " + check.failure);
  return cert;
}

}  // namespace metacyc
