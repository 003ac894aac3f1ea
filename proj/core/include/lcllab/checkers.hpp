#pragma once

#include <string>
#include <vector>

#include "lcllab/graph.hpp"
#include "lcllab/outputs.hpp"

namespace lcllab {

struct Violation {
  NodeId node;
  std::string rule;   // e.g. "tree.4", "badGraph.6", "pi.3"
  int radius;         // evaluation radius of the rule
  std::string message;
};

struct ViolationReport {
  std::vector<Violation> entries;

  bool empty() const { return entries.empty(); }
  size_t size() const { return entries.size(); }

  void add(NodeId node, std::string rule, int radius, std::string message);
  /// Deterministic order: (node id, rule id).
  void normalize();
  bool has(NodeId node, std::string_view rule) const;
  std::vector<NodeId> nodes() const;
};

/// Type of an edge: {} when the two half-edge types disagree, otherwise the
/// common type. Rejects plain labels.
EdgeType edge_type(const LabeledGraph& g, int edge_index);

/// The nine tree constraints, evaluated at every node. Requires plain
/// half-edge labels from the tree alphabet.
ViolationReport check_tree(const LabeledGraph& g);

/// The six grid constraints. Requires plain half-edge labels from the grid
/// alphabet.
ViolationReport check_grid(const LabeledGraph& g);

/// Grid constraints plus the three vertical-certificate constraints. Node
/// bits are read from Bit inputs, or from the grid part of badGraph inputs.
ViolationReport check_vgrid(const LabeledGraph& g);

/// Validity of a bad-tree output assignment on a ({0,1}, tree)-labeled graph.
/// Marks are Bit node inputs.
ViolationReport check_bad_tree(const LabeledGraph& g, const OutputAssignment& out);

/// Validity of a bad-graph output assignment. Requires badGraph half-edge
/// labels and badGraph node inputs (problem inputs are accepted and their
/// extra bit ignored).
ViolationReport check_bad_graph(const LabeledGraph& g, const OutputAssignment& out);

/// Validity of a full problem output assignment. Requires problem inputs.
ViolationReport check_pi(const LabeledGraph& g, const OutputAssignment& out);

/// Dispatch on the assignment's problem.
ViolationReport check_outputs(const LabeledGraph& g, const OutputAssignment& out);

bool is_valid(const LabeledGraph& g, const OutputAssignment& out);

/// Whether validity on the whole instance equals the conjunction of validity
/// on each connected component checked in isolation.
bool componentwise_validity(Problem problem, const LabeledGraph& g, const OutputAssignment& out);

namespace detail {
/// Per-node satisfaction of the tree constraints. `report` may be null.
bool tree_rules_at(const LabeledGraph& g, int u, ViolationReport* report);
/// Per-node satisfaction of the grid constraints (vertical = include the
/// three extra constraints). `report` may be null.
bool grid_rules_at(const LabeledGraph& g, int u, bool vertical, ViolationReport* report);
}  // namespace detail

}  // namespace lcllab
