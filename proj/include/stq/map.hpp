#pragma once

#include <utility>
#include <vector>

#include "stq/error.hpp"

namespace stq {

using VertexId = int;

// Inner angle (from, at, to): the edges at-from and at-to are consecutive in
// the cyclic order at `at`, with `to` immediately following `from`.
struct Angle {
  VertexId from = -1;
  VertexId at = -1;
  VertexId to = -1;

  bool operator==(const Angle& o) const { return from == o.from && at == o.at && to == o.to; }
};

// Face as a closed vertex walk, oriented; canonicalized to start at its
// smallest vertex.
using Face = std::vector<VertexId>;

// Combinatorial map: a graph with a cyclic order of incident edges at every
// vertex (rotation system). Vertices are 0..n-1; edges are stored as sorted
// pairs in lexicographic order, so edge ids are stable across mirrors.
class CombinatorialMap {
 public:
  static CombinatorialMap from_cyclic_orders(std::vector<std::vector<VertexId>> orders);

  int vertex_count() const { return static_cast<int>(orders_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;  // in cyclic order
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  int edge_index(VertexId u, VertexId v) const;  // -1 when absent
  bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }

  std::vector<Angle> angles_around(VertexId v) const;
  // Position of angle (from, at, to) in angles_around(at); -1 when absent.
  int angle_index(const Angle& a) const;

  // Same graph with every cyclic order reversed.
  CombinatorialMap mirrored() const;

  // Faces traced from the rotation system; count must satisfy V - E + F = 2.
  std::vector<Face> trace_faces() const;

  bool operator==(const CombinatorialMap& o) const { return orders_ == o.orders_; }

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> orders_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Vertex bijection; used both for automorphisms of one map and isomorphisms
// between two maps on the same vertex count.
struct MapAutomorphism {
  std::vector<VertexId> image;

  VertexId operator()(VertexId v) const { return image.at(static_cast<size_t>(v)); }
  MapAutomorphism compose(const MapAutomorphism& inner) const;  // this after inner
  MapAutomorphism inverse() const;
  bool is_identity() const;
  int order() const;  // smallest k >= 1 with h^k = id
};

// Pseudo-double wheel with F faces: an F-cycle v_0..v_{F-1} with a north
// apex adjacent to the even rim vertices and a south apex adjacent to the odd
// ones. Vertex ids: rim i -> i, north -> F, south -> F+1.
class PseudoDoubleWheel {
 public:
  explicit PseudoDoubleWheel(int faces);

  int faces() const { return faces_; }
  const CombinatorialMap& map() const { return map_; }
  VertexId north() const { return faces_; }
  VertexId south() const { return faces_ + 1; }
  VertexId rim(int i) const;  // index mod F
  bool is_rim(VertexId v) const { return v >= 0 && v < faces_; }

  enum class EdgeKind { northern, southern, rim };
  EdgeKind edge_kind(int edge_idx) const;

  std::string vertex_name(VertexId v) const;

 private:
  int faces_;
  CombinatorialMap map_;
};

PseudoDoubleWheel pseudo_double_wheel(int faces);

// f: swaps the poles and reflects the rim (v_i -> v_{1-i}); an involution.
MapAutomorphism automorphism_f(int faces);
// g: fixes the poles and shifts the rim by six (v_i -> v_{i+6}); requires
// 6 | F so its order is F/6.
MapAutomorphism automorphism_g(int faces);

bool is_automorphism(const CombinatorialMap& map, const MapAutomorphism& h);

// All cyclic-order-preserving isomorphisms from a to b (automorphisms when
// a == b). Exhaustive: anchored at vertex 0 of a, propagated by rotation
// alignment, then verified.
std::vector<MapAutomorphism> find_isomorphisms(const CombinatorialMap& a,
                                               const CombinatorialMap& b);

}  // namespace stq
