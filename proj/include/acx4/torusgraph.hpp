#pragma once

#include <array>
#include <string>
#include <vector>

#include "acx4/lattice.hpp"
#include "acx4/multifan.hpp"

namespace acx4 {

using VertexId = std::string;

struct GraphEdge {
  VertexId from;
  VertexId to;
  LatticeVector label;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Unvalidated graph input, as read from a document.
struct RawGraph {
  std::vector<VertexId> vertices;
  std::vector<GraphEdge> edges;
};

/// An admissible 2-regular labeled directed graph over Z^2. Edge directions
/// are arbitrary; (u, v) labeled w describes the same sphere as (v, u)
/// labeled -w. Operations that depend on direction normalize first.
class TorusGraph {
 public:
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  friend bool operator==(const TorusGraph&, const TorusGraph&) = default;

 private:
  friend TorusGraph validate_graph(RawGraph raw);
  TorusGraph(std::vector<VertexId> vertices, std::vector<GraphEdge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  std::vector<VertexId> vertices_;
  std::vector<GraphEdge> edges_;
};

/// Natural order on vertex ids: digit runs compare numerically, so p2 < p10.
/// "Least vertex id" always refers to this order.
bool vertex_id_less(const VertexId& a, const VertexId& b);

/// Checks, in order: DuplicateVertex, ZeroLabel(e), SelfLoop(e),
/// UnknownVertex(e), MultiEdge(u,v), NotTwoRegular(v), WeightsNotBasis(v),
/// RecurrenceFails(e1,e2,e3).
TorusGraph validate_graph(RawGraph raw);

/// {w(e) : from(e) = v} together with {-w(e) : to(e) = v}, in edge-list order.
std::array<LatticeVector, 2> weights_at(const TorusGraph& g, const VertexId& v);

/// Turns every component into a directed cycle, flipping (and negating) the
/// fewest edges; ties keep the direction of the least vertex's first outgoing
/// edge. Edge-list positions are preserved.
TorusGraph normalize_orientation(const TorusGraph& g);

/// One fan per component, ordered by least vertex id; each fan lists the labels
/// met walking the normalized cycle from that least vertex.
MultiFanFamily graph_to_family(const TorusGraph& g);

/// One directed cycle per fan with vertices "p{j},{i}" and (p{j},{i} -> p{j},{i+1})
/// labeled v_{j,i}.
TorusGraph family_to_graph(const MultiFanFamily& fam);

/// Replaces v (in-edge w1, out-edge w2 after normalization) by v' -> v''
/// labeled w1 + w2. New ids are v + "'" and v + "''" (made unique if taken).
TorusGraph blow_up_graph(const TorusGraph& g, const VertexId& v);

/// Contracts the edge joining u and v (either stored direction) when, after
/// normalization, its label is the in-label of its tail plus the out-label of
/// its head. The new vertex is the head's id + "'" (made unique if taken).
TorusGraph blow_down_graph(const TorusGraph& g, const VertexId& u, const VertexId& v);

/// Every component realizes (1,0),(0,a),(-1,0),(0,-a) repeated, a in {-1, 1},
/// from some starting vertex in some traversal direction.
bool is_minimal_graph(const TorusGraph& g);

bool is_connected(const TorusGraph& g);

/// f_from - f_to must lie in the ideal generated by `generator`.
struct GkmRelation {
  VertexId from;
  VertexId to;
  LatticeVector generator;

  friend bool operator==(const GkmRelation&, const GkmRelation&) = default;
};

/// One relation per stored edge, in edge-list order.
std::vector<GkmRelation> gkm_relations(const TorusGraph& g);

}  // namespace acx4
