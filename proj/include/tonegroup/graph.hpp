#pragma once

// The labeled graph on harmonic seventh chords. Nodes are the tabulated
// tetrads; every node has one outgoing i-edge and one d-edge and one a-edge
// (self-loops allowed). i-edges are directed; d and a are involutions, so
// their edges are undirected and stored once.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tonegroup/classify.hpp"
#include "tonegroup/core.hpp"
#include "tonegroup/transform.hpp"

namespace tonegroup {

struct GraphNode {
  Chord chord;
  ChordLabel label;
  std::string id;  // label text, e.g. "MM0"
};

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  Op op;
  bool directed;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

class ChordGraph {
 public:
  ChordGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges)
      : nodes_(std::move(nodes)), edges_(std::move(edges)) {}

  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }

  /// Index of the node with this chord or label id, or nodes().size().
  std::size_t find(const Chord& chord) const;
  std::size_t find(std::string_view id) const;

  /// Neighbour along `op`, following undirected edges both ways.
  std::size_t follow(std::size_t node, Op op) const;
  bool has_edge(std::size_t from, std::size_t to, Op op) const;

 private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
};

/// Nodes in label order (MM, mM, AM, Mm, dm, mm, then dd when requested);
/// edges sorted by (from, to, op).
ChordGraph build_chord_graph(bool include_dd = false);

/// Components of the underlying undirected graph, each sorted by node index,
/// ordered by size descending and then by their sorted chord lists.
std::vector<std::vector<std::size_t>> connected_components(const ChordGraph& g);

/// Node pairs (upper, lower) with upper in the MM/mM/AM component.
using ComponentMap = std::vector<std::pair<std::size_t, std::size_t>>;

/// The map MM->mm, mM->Mm, AM->dm keeping the inversion index.
ComponentMap family_swap_map(const ChordGraph& g);

/// Number of edges not carried to an edge with the same operator, counted in
/// both directions, plus any failures of bijectivity.
std::size_t count_isomorphism_violations(const ChordGraph& g, const ComponentMap& map);

/// family_swap_map, after checking it is an edge-preserving bijection
/// between the two 12-node components. Throws Error{IsomorphismViolation}.
ComponentMap component_isomorphism(const ChordGraph& g);

std::string export_dot(const ChordGraph& g);
std::string export_json(const ChordGraph& g);

}  // namespace tonegroup
