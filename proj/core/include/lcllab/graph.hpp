#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcllab/labels.hpp"

namespace lcllab {

using NodeId = std::int64_t;

/// Immutable simple graph with node input labels and one label per half-edge.
/// Adjacency and half-edge labels live in a shared structure block, so copies
/// that only change identifiers or node inputs are cheap.
class LabeledGraph {
 public:
  struct HalfEdge {
    std::int32_t neighbor;  // node index
    std::int32_t edge;      // edge index
    HalfEdgeLabel label;    // label on this side
  };

  struct Edge {
    std::int32_t u, v;
    HalfEdgeLabel label_u, label_v;
  };

  LabeledGraph() : structure_(std::make_shared<Structure>()) {}

  int node_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(structure_->edges.size()); }

  NodeId id_of(int index) const { return ids_[static_cast<size_t>(index)]; }
  const std::vector<NodeId>& ids() const { return ids_; }

  /// Index of a node id; throws on unknown ids.
  int index_of(NodeId id) const;
  std::optional<int> try_index_of(NodeId id) const;

  const NodeInput& input(int index) const { return inputs_[static_cast<size_t>(index)]; }
  const std::vector<NodeInput>& inputs() const { return inputs_; }

  std::span<const HalfEdge> half_edges(int index) const {
    const auto& s = *structure_;
    auto begin = s.adj_offset[static_cast<size_t>(index)];
    auto end = s.adj_offset[static_cast<size_t>(index) + 1];
    return {s.adj.data() + begin, static_cast<size_t>(end - begin)};
  }

  const Edge& edge(int e) const { return structure_->edges[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return structure_->edges; }

  int degree(int index) const { return static_cast<int>(half_edges(index).size()); }

  bool all_labels_plain_tree() const;
  bool all_labels_plain_grid() const;
  bool all_labels_bad_graph() const;

  /// Same structure, new identifiers (index order preserved).
  LabeledGraph with_ids(std::vector<NodeId> new_ids) const;
  /// Same structure, new node inputs (index order preserved).
  LabeledGraph with_inputs(std::vector<NodeInput> new_inputs) const;

  /// Stable token identifying the shared structure block; equal for graphs
  /// that differ only in ids or node inputs.
  const void* structure_key() const { return structure_.get(); }
  /// Keeps the structure block alive (for caches keyed by structure_key).
  std::shared_ptr<const void> structure_handle() const { return structure_; }

 private:
  friend class GraphBuilder;

  struct Structure {
    std::vector<Edge> edges;
    std::vector<HalfEdge> adj;
    std::vector<std::int64_t> adj_offset;  // size n+1
  };

  std::shared_ptr<const Structure> structure_;
  std::vector<NodeId> ids_;
  std::vector<NodeInput> inputs_;
  // id -> index lookup, sorted by id
  std::vector<std::pair<NodeId, std::int32_t>> id_index_;

  void rebuild_id_index();
};

/// Builder for LabeledGraph. Enforces the simple-graph invariants: positive
/// unique node ids, no self-loops, no parallel edges. Trusted mode skips the
/// duplicate bookkeeping for callers that construct from a simple graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool trusted = false) : trusted_(trusted) {}

  int add_node(NodeId id, NodeInput input = NodeInput::none());
  /// Adds an edge between node indices u and v with the given half-edge labels.
  void add_edge(int u, int v, HalfEdgeLabel label_u, HalfEdgeLabel label_v);

  int node_count() const { return static_cast<int>(ids_.size()); }
  void reserve(int nodes, int edges);

  LabeledGraph build();

 private:
  bool trusted_;
  std::vector<NodeId> ids_;
  std::vector<NodeInput> inputs_;
  std::vector<LabeledGraph::Edge> edges_;
  std::unordered_map<NodeId, int> seen_ids_;
  std::unordered_map<std::uint64_t, int> seen_edges_;
};

enum class Projection : std::uint8_t { Raw, Tree, Grid };

/// The path-follow function f. Starting at node index u, repeatedly moves along
/// the half-edge whose (projected) label matches the next symbol; the step is
/// taken only when exactly one incident half-edge at the current node matches.
/// Returns the final node index, or nullopt when some step fails.
std::optional<int> follow(const LabeledGraph& g, int u, std::span<const Port> symbols,
                          Projection projection = Projection::Raw);
std::optional<int> follow(const LabeledGraph& g, int u, std::initializer_list<Port> symbols,
                          Projection projection = Projection::Raw);

/// Single step along the half-edge carrying exactly this label.
std::optional<int> follow_label(const LabeledGraph& g, int u, const HalfEdgeLabel& label);

/// Subgraph induced by edges whose type contains treeEdge (resp. gridEdge),
/// with half-edges relabeled through val_T (resp. val_G). All nodes are kept.
/// Rejects graphs with non-badGraph half-edge labels.
LabeledGraph project(const LabeledGraph& g, EdgeType which);

/// Radius-r ball around a node: structure only. The simulator decorates views
/// with randomness and metadata.
struct View {
  NodeId center = 0;
  int radius = 0;
  LabeledGraph subgraph;
  std::unordered_map<NodeId, int> distance;  // id -> hops from center

  int center_index() const { return subgraph.index_of(center); }
};

View ball(const LabeledGraph& g, int u, int radius);

/// Connected components after dropping edges matching `drop`; blocks are
/// ordered by minimum node id and sorted by id inside each block.
using EdgePredicate = std::function<bool(const LabeledGraph&, int /*edge index*/)>;
std::vector<std::vector<int>> components(const LabeledGraph& g, const EdgePredicate& drop = {});

/// Component blocks as index vectors, plus a per-node component id.
struct ComponentSplit {
  std::vector<std::vector<int>> blocks;
  std::vector<int> component_of;
};
ComponentSplit component_split(const LabeledGraph& g, const EdgePredicate& drop = {});

/// Disjoint union; ids of g2 are shifted past max id of g1 when they collide.
LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2);

/// Subgraph induced by the given node indices (ids and inputs preserved).
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> nodes);

/// Fresh identifiers drawn uniformly without replacement from {1..n^c}.
LabeledGraph with_random_ids(const LabeledGraph& g, std::uint64_t seed, int c = 2);

}  // namespace lcllab
