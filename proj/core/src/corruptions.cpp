#include "lcllab/corruptions.hpp"

#include <random>
#include <stdexcept>

namespace lcllab {

std::string_view to_string(CorruptionKind k) {
  switch (k) {
    case CorruptionKind::TorusWrapHorizontal: return "torus-wrap-horizontal";
    case CorruptionKind::DeleteEdge: return "delete-edge";
    case CorruptionKind::RelabelHalfEdge: return "relabel-half-edge";
    case CorruptionKind::MarkNode: return "mark-node";
    case CorruptionKind::HorizontalGrid: return "horizontal-grid";
    case CorruptionKind::DropVerticalOnes: return "drop-vertical-ones";
    case CorruptionKind::MismatchEdgeType: return "mismatch-edge-type";
    case CorruptionKind::DetachTree: return "detach-tree";
  }
  return "?";
}

CorruptionKind corruption_kind_from_string(std::string_view s) {
  for (CorruptionKind k :
       {CorruptionKind::TorusWrapHorizontal, CorruptionKind::DeleteEdge,
        CorruptionKind::RelabelHalfEdge, CorruptionKind::MarkNode, CorruptionKind::HorizontalGrid,
        CorruptionKind::DropVerticalOnes, CorruptionKind::MismatchEdgeType,
        CorruptionKind::DetachTree}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown corruption kind: " + std::string(s));
}

namespace {

LabeledGraph rebuild_without_edges(const LabeledGraph& g, const std::vector<int>& dropped) {
  std::vector<bool> drop(static_cast<size_t>(g.edge_count()), false);
  for (int e : dropped) drop[static_cast<size_t>(e)] = true;
  GraphBuilder b(/*trusted=*/true);
  for (int i = 0; i < g.node_count(); ++i) b.add_node(g.id_of(i), g.input(i));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (drop[static_cast<size_t>(e)]) continue;
    const auto& ed = g.edge(e);
    b.add_edge(ed.u, ed.v, ed.label_u, ed.label_v);
  }
  return b.build();
}

LabeledGraph add_edges(const LabeledGraph& g,
                       const std::vector<LabeledGraph::Edge>& extra) {
  GraphBuilder b;
  for (int i = 0; i < g.node_count(); ++i) b.add_node(g.id_of(i), g.input(i));
  for (const auto& ed : g.edges()) b.add_edge(ed.u, ed.v, ed.label_u, ed.label_v);
  for (const auto& ed : extra) b.add_edge(ed.u, ed.v, ed.label_u, ed.label_v);
  return b.build();
}

}  // namespace

LabeledGraph mark_node(const LabeledGraph& g, NodeId target) {
  int idx = g.index_of(target);
  std::vector<NodeInput> inputs = g.inputs();
  inputs[static_cast<size_t>(idx)] = NodeInput::bit(1);
  return g.with_inputs(std::move(inputs));
}

LabeledGraph delete_edge(const LabeledGraph& g, NodeId u, NodeId v) {
  int ui = g.index_of(u), vi = g.index_of(v);
  for (const auto& he : g.half_edges(ui)) {
    if (he.neighbor == vi) return rebuild_without_edges(g, {he.edge});
  }
  throw std::invalid_argument("no such edge to delete");
}

LabeledGraph relabel_half_edge(const LabeledGraph& g, NodeId u, NodeId v,
                               const HalfEdgeLabel& new_label) {
  int ui = g.index_of(u), vi = g.index_of(v);
  GraphBuilder b(/*trusted=*/true);
  for (int i = 0; i < g.node_count(); ++i) b.add_node(g.id_of(i), g.input(i));
  bool found = false;
  for (const auto& ed : g.edges()) {
    HalfEdgeLabel lu = ed.label_u, lv = ed.label_v;
    if (ed.u == ui && ed.v == vi) { lu = new_label; found = true; }
    if (ed.u == vi && ed.v == ui) { lv = new_label; found = true; }
    b.add_edge(ed.u, ed.v, lu, lv);
  }
  if (!found) throw std::invalid_argument("no such edge to relabel");
  return b.build();
}

CorruptedInstance corrupt(const FamilyInstance& fi, const Corruption& c) {
  std::mt19937_64 rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
  const LabeledGraph& g = fi.graph;
  CorruptedInstance out;
  out.applied = c;

  switch (c.kind) {
    case CorruptionKind::TorusWrapHorizontal: {
      if (fi.w < 3) throw std::invalid_argument("torus wrap needs w >= 3");
      std::vector<LabeledGraph::Edge> wrap;
      for (int y = 0; y < fi.h; ++y) {
        wrap.push_back({static_cast<std::int32_t>(fi.rightmost(y)),
                        static_cast<std::int32_t>(fi.leftmost(y)), HalfEdgeLabel::grid(Port::R),
                        HalfEdgeLabel::grid(Port::L)});
      }
      out.graph = add_edges(g, wrap);
      out.note = "added wrap-around horizontal grid edges on every row";
      return out;
    }
    case CorruptionKind::DeleteEdge: {
      int e = c.target_u != 0
                  ? -1
                  : static_cast<int>(rng() % static_cast<std::uint64_t>(g.edge_count()));
      if (c.target_u != 0) {
        out.graph = delete_edge(g, c.target_u, c.target_v);
        out.note = "deleted edge {" + std::to_string(c.target_u) + "," +
                   std::to_string(c.target_v) + "}";
      } else {
        const auto& ed = g.edge(e);
        out.note = "deleted edge {" + std::to_string(g.id_of(ed.u)) + "," +
                   std::to_string(g.id_of(ed.v)) + "}";
        out.graph = rebuild_without_edges(g, {e});
      }
      return out;
    }
    case CorruptionKind::RelabelHalfEdge: {
      int e = static_cast<int>(rng() % static_cast<std::uint64_t>(g.edge_count()));
      const auto& ed = g.edge(e);
      // Swap the tree value of the u side, keeping the label universe.
      HalfEdgeLabel fresh = ed.label_u.has_tree_type() && ed.label_u.kind() == HalfEdgeLabel::Kind::Tree
              ? HalfEdgeLabel::tree(ed.label_u.tree_value() == Port::P ? Port::L : Port::P)
              : (ed.label_u.kind() == HalfEdgeLabel::Kind::Grid
                     ? HalfEdgeLabel::grid(ed.label_u.grid_value() == Port::L ? Port::R : Port::L)
                     : HalfEdgeLabel::composite(ed.label_u.grid_value() == Port::U ? Port::D
                                                                                   : Port::U));
      out.graph = relabel_half_edge(g, g.id_of(ed.u), g.id_of(ed.v), fresh);
      out.note = "relabeled half-edge at node " + std::to_string(g.id_of(ed.u)) + " to " +
                 fresh.to_string();
      return out;
    }
    case CorruptionKind::MarkNode:
      throw std::invalid_argument("mark-node applies to bad-tree instances, not family instances");
    case CorruptionKind::HorizontalGrid: {
      FamilyInstance wide = gen_family_instance_unchecked(
          fi.params.ell, 2 * fi.h, {}, fi.params.seed ^ (c.seed | 1));
      out.graph = wide.graph;
      out.note = "rebuilt with w = 2h (wider than tall)";
      return out;
    }
    case CorruptionKind::DropVerticalOnes: {
      std::vector<NodeInput> inputs = g.inputs();
      int cleared = 0;
      for (auto& in : inputs) {
        if (in.has_grid_part() && in.vgrid_bit() == 1) {
          in = NodeInput::pi_tree_grid(0, in.pi_input_bit());
          ++cleared;
        }
      }
      out.graph = g.with_inputs(std::move(inputs));
      out.note = "cleared " + std::to_string(cleared) + " vertical-certificate bits";
      return out;
    }
    case CorruptionKind::MismatchEdgeType: {
      // Relabel one pure tree half-edge as a grid half-edge so the types of
      // the two sides disagree.
      for (int tries = 0; tries < 1000; ++tries) {
        int e = static_cast<int>(rng() % static_cast<std::uint64_t>(g.edge_count()));
        const auto& ed = g.edge(e);
        if (ed.label_u.kind() != HalfEdgeLabel::Kind::Tree) continue;
        out.graph = relabel_half_edge(g, g.id_of(ed.u), g.id_of(ed.v),
                                      HalfEdgeLabel::grid(Port::L));
        out.note = "half-edge at node " + std::to_string(g.id_of(ed.u)) +
                   " retyped from treeEdge to gridEdge";
        return out;
      }
      throw std::invalid_argument("no pure tree edge available for a type mismatch");
    }
    case CorruptionKind::DetachTree: {
      // Remove the parent edges between the column (tree layer ell) and the
      // layer above it, for one column.
      int x = static_cast<int>(rng() % static_cast<std::uint64_t>(fi.w));
      const auto& tree = fi.tree_at[static_cast<size_t>(x)];
      if (tree.size() < 2) throw std::invalid_argument("instance has no upper tree to detach");
      const auto& above = tree[tree.size() - 2];
      std::vector<int> dropped;
      for (int parent : above) {
        for (const auto& he : g.half_edges(parent)) {
          auto tv = he.label.tree_value();
          if (he.label.kind() == HalfEdgeLabel::Kind::Tree &&
              (tv == Port::ChL || tv == Port::ChR)) {
            // only the edges down to the bottom layer
            for (int leaf : tree.back())
              if (he.neighbor == leaf) dropped.push_back(he.edge);
          }
        }
      }
      out.graph = rebuild_without_edges(g, dropped);
      out.note = "detached the upper tree of column " + std::to_string(x);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

LabeledGraph glue_mismatch(const FamilyInstance& a, const FamilyInstance& b) {
  LabeledGraph u = disjoint_union(a.graph, b.graph);
  std::vector<LabeledGraph::Edge> extra;
  // Join a's top-right tree root to b's top-left tree root with disagreeing
  // half-edge types.
  int ra = a.tree_at.back()[0][0];
  int rb = b.tree_at.front()[0][0] + a.graph.node_count();
  extra.push_back({static_cast<std::int32_t>(ra), static_cast<std::int32_t>(rb),
                   HalfEdgeLabel::tree(Port::R), HalfEdgeLabel::grid(Port::L)});
  return add_edges(u, extra);
}

}  // namespace lcllab
