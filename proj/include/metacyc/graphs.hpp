#pragma once

// Weak metacirculants: Cayley and coset graphs on metacyclic groups, the
// right-translation action, and metacirculant certificates.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metacyc/group.hpp"

namespace metacyc {

using Vertex = std::size_t;

class Permutation {
 public:
  Permutation() = default;
  /// Validates that `image` is a bijection of 0..N-1.
  explicit Permutation(std::vector<Vertex> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex x) const { return image_[x]; }
  std::span<const Vertex> images() const { return image_; }

  /// Apply *this, then q.
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  Permutation pow(u64 k) const;
  bool is_identity() const;
  /// Cycles including fixed points, each starting at its smallest point.
  std::vector<std::vector<Vertex>> cycles() const;
  /// lcm of the cycle lengths.
  u64 order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

/// Undirected, loopless, no multi-edges. Edges stored as sorted (u < v) pairs.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool is_connected() const;
  bool is_automorphism(const Permutation& p) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Right cosets H g, indexed by their smallest element in (i, j) order.
struct CosetSpace {
  Group group;
  Subgroup stabilizer;                 // H, the stabilizer of vertex 0
  std::vector<GroupElement> reps;      // sorted
  std::vector<Vertex> coset_of;        // group index -> vertex

  std::size_t size() const { return reps.size(); }
  Vertex vertex_of(const GroupElement& g) const { return coset_of[group.index_of(g)]; }
  std::string label(Vertex v) const;
  bool is_regular() const { return stabilizer.size() == 1; }
};

CosetSpace make_coset_space(const Group& G, const Subgroup& H, u64 cap = kDefaultEnumerationCap);

struct GroupGraph {
  CosetSpace space;
  SimpleGraph graph;
};

/// x ~ s x for s in S, on the regular space. S must be inverse-closed and
/// miss the identity.
GroupGraph cayley_graph(const Group& G, std::span<const GroupElement> S, u64 cap = kDefaultEnumerationCap);

/// H x ~ H y iff x y^{-1} in C. C must be inverse-closed, a union of
/// H-double cosets, and disjoint from H.
GroupGraph coset_graph(const Group& G, std::span<const GroupElement> H, std::span<const GroupElement> C,
                       u64 cap = kDefaultEnumerationCap);

/// Smallest inverse-closed union of H-double cosets containing `gens`, sorted.
std::vector<GroupElement> double_coset_closure(const Group& G, std::span<const GroupElement> H,
                                               std::span<const GroupElement> gens);

/// gens together with their inverses, sorted and deduplicated.
std::vector<GroupElement> symmetrize(const Group& G, std::span<const GroupElement> gens);

/// Right translation by g on the space.
Permutation action_permutation(const CosetSpace& space, const GroupElement& g);

/// Elements acting trivially, by direct enumeration.
std::vector<GroupElement> action_kernel(const CosetSpace& space);
bool is_faithful(const CosetSpace& space);

struct OrbitReport {
  bool semiregular = false;
  std::vector<std::vector<Vertex>> orbits;
};

/// Orbits of <p>; semiregular iff every cycle has length o(p).
OrbitReport semiregular_orbits(const Permutation& p);
/// Same, for a cyclic group of abstract order `group_order` acting through p.
OrbitReport semiregular_orbits(const Permutation& p, u64 group_order);

struct MetacircCertificate {
  Permutation sigma;
  Permutation tau;
  std::size_t m = 0;  // orbit count
  std::size_t n = 0;  // orbit size

  friend bool operator==(const MetacircCertificate&, const MetacircCertificate&) = default;
};

struct CertificateCheck {
  bool ok = false;
  std::string failure;  // first violated condition, empty when ok

  explicit operator bool() const { return ok; }
};

CertificateCheck check_certificate(const SimpleGraph& graph, const MetacircCertificate& cert);

struct Sylow2 {
  SplitPresentation presentation;
  GroupElement a_image;  // image of the subgroup's a in G
  GroupElement b_image;
};

Sylow2 sylow2_of_metacyclic(const SplitPresentation& p);

/// Certificate for a faithful transitive action of a split metacyclic
/// 2-group, built from the action alone.
MetacircCertificate find_certificate_2power(const GroupGraph& gg);

}  // namespace metacyc
