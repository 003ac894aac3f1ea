#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lcllab/generators.hpp"

namespace lcllab {

/// Negative-instance factory. Each kind breaks one documented property of a
/// canonical instance:
///   torus-wrap-horizontal  rows wrap; grid constraints stay silent but the
///                          vertical certificate breaks
///   delete-edge            structural hole, tree or grid constraints fire
///   relabel-half-edge      labeling inconsistency
///   mark-node              bad-tree instances: a marked node forces a proof
///   horizontal-grid        instance wider than tall (w > h)
///   drop-vertical-ones     all vertical-certificate bits cleared
///   mismatch-edge-type     one edge with disagreeing half-edge types
///   detach-tree            one column loses its upper tree
enum class CorruptionKind : std::uint8_t {
  TorusWrapHorizontal,
  DeleteEdge,
  RelabelHalfEdge,
  MarkNode,
  HorizontalGrid,
  DropVerticalOnes,
  MismatchEdgeType,
  DetachTree,
};

std::string_view to_string(CorruptionKind k);
CorruptionKind corruption_kind_from_string(std::string_view s);

struct Corruption {
  CorruptionKind kind = CorruptionKind::DeleteEdge;
  std::uint64_t seed = 0;  // picks targets when not pinned
  NodeId target_u = 0;     // optional explicit targets (0 = pick from seed)
  NodeId target_v = 0;
};

struct CorruptedInstance {
  LabeledGraph graph;
  Corruption applied;
  std::string note;  // what changed
};

/// Applies a corruption to a family instance. HorizontalGrid rebuilds the
/// instance with w' = 2h. Throws when the kind does not apply.
CorruptedInstance corrupt(const FamilyInstance& fi, const Corruption& c);

/// Marks one node of a ({0,1}, tree)-labeled graph.
LabeledGraph mark_node(const LabeledGraph& g, NodeId target);

/// Deletes one edge of any graph.
LabeledGraph delete_edge(const LabeledGraph& g, NodeId u, NodeId v);

/// Replaces the half-edge label on u's side of edge {u,v}.
LabeledGraph relabel_half_edge(const LabeledGraph& g, NodeId u, NodeId v,
                               const HalfEdgeLabel& new_label);

/// Disjoint union of two family instances joined by a single edge whose
/// half-edge types disagree (tree side vs grid side).
LabeledGraph glue_mismatch(const FamilyInstance& a, const FamilyInstance& b);

}  // namespace lcllab
