#include "lcllab/checkers.hpp"

#include <algorithm>
#include <array>

namespace lcllab {

void ViolationReport::add(NodeId node, std::string rule, int radius, std::string message) {
  entries.push_back({node, std::move(rule), radius, std::move(message)});
}

void ViolationReport::normalize() {
  std::sort(entries.begin(), entries.end(), [](const Violation& a, const Violation& b) {
    if (a.node != b.node) return a.node < b.node;
    return a.rule < b.rule;
  });
}

bool ViolationReport::has(NodeId node, std::string_view rule) const {
  for (const auto& v : entries)
    if (v.node == node && v.rule == rule) return true;
  return false;
}

std::vector<NodeId> ViolationReport::nodes() const {
  std::vector<NodeId> out;
  for (const auto& v : entries) out.push_back(v.node);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeType edge_type(const LabeledGraph& g, int edge_index) {
  const auto& e = g.edge(edge_index);
  EdgeType tu = label_type(e.label_u);
  EdgeType tv = label_type(e.label_v);
  return tu == tv ? tu : EdgeType::None;
}

namespace {

struct PortCounts {
  std::array<std::uint8_t, kPortCount> count{};
  bool dup = false;

  int has(Port p) const { return count[static_cast<size_t>(p)]; }
};

PortCounts plain_counts(const LabeledGraph& g, int u) {
  PortCounts c;
  for (const auto& he : g.half_edges(u)) {
    auto& slot = c.count[static_cast<size_t>(he.label.plain_value())];
    if (slot) c.dup = true;
    if (slot < 250) ++slot;
  }
  return c;
}

Port partner_label(const LabeledGraph& g, int u, const LabeledGraph::HalfEdge& he) {
  const auto& e = g.edge(he.edge);
  return (e.u == u ? e.label_v : e.label_u).plain_value();
}

void require_plain_tree(const LabeledGraph& g) {
  if (!g.all_labels_plain_tree())
    throw std::invalid_argument("expected half-edge labels from {L, R, P, ChL, ChR}");
}

void require_plain_grid(const LabeledGraph& g) {
  if (!g.all_labels_plain_grid())
    throw std::invalid_argument("expected half-edge labels from {L, R, U, D}");
}

}  // namespace

namespace detail {

bool tree_rules_at(const LabeledGraph& g, int u, ViolationReport* rep) {
  bool ok = true;
  const NodeId id = g.id_of(u);
  auto fail = [&](const char* rule, int radius, std::string msg) {
    ok = false;
    if (rep) rep->add(id, rule, radius, std::move(msg));
  };

  PortCounts pc = plain_counts(g, u);

  // 1: incident half-edge labels are pairwise distinct
  if (pc.dup) fail("tree.1", 1, "two incident half-edges carry the same label");

  for (const auto& he : g.half_edges(u)) {
    Port mine = he.label.plain_value();
    Port partner = partner_label(g, u, he);
    // 2: L pairs with R
    if ((mine == Port::L && partner != Port::R) || (mine == Port::R && partner != Port::L)) {
      if (mine == Port::L || mine == Port::R)
        fail("tree.2", 1, "L/R half-edge not matched by R/L on the other side");
    }
    // 3: P pairs with ChL or ChR
    if (mine == Port::P && partner != Port::ChL && partner != Port::ChR)
      fail("tree.3", 1, "P half-edge not matched by a child label");
    if ((mine == Port::ChL || mine == Port::ChR) && partner != Port::P)
      fail("tree.3", 1, "child half-edge not matched by P");
  }

  for (const auto& he : g.half_edges(u)) {
    if (he.label.plain_value() != Port::P) continue;
    Port partner = partner_label(g, u, he);
    // 4: left child closes the triangle parent -> right sibling -> back
    if (partner == Port::ChL) {
      auto back = follow(g, u, {Port::P, Port::ChR, Port::L});
      if (!back || *back != u) fail("tree.4", 3, "f(u,P,ChR,L) != u");
    }
    if (partner == Port::ChR) {
      // 5: right child with a right neighbor closes the square
      if (pc.has(Port::R)) {
        auto back = follow(g, u, {Port::P, Port::R, Port::ChL, Port::L});
        if (!back || *back != u) fail("tree.5", 4, "f(u,P,R,ChL,L) != u");
      }
      // 9: presence of R agrees with the parent
      int parent = he.neighbor;
      PortCounts ppc = plain_counts(g, parent);
      if ((pc.has(Port::R) != 0) != (ppc.has(Port::R) != 0))
        fail("tree.9", 2, "right child and parent disagree on having an R half-edge");
    }
    if (partner == Port::ChL) {
      int parent = he.neighbor;
      PortCounts ppc = plain_counts(g, parent);
      if ((pc.has(Port::L) != 0) != (ppc.has(Port::L) != 0))
        fail("tree.9", 2, "left child and parent disagree on having an L half-edge");
    }
  }

  // 6: children come in pairs
  if ((pc.has(Port::ChL) != 0) != (pc.has(Port::ChR) != 0))
    fail("tree.6", 1, "ChL present iff ChR present fails");

  // 7: no parent iff no layer neighbors
  if ((pc.has(Port::P) == 0) != (pc.has(Port::L) == 0 && pc.has(Port::R) == 0))
    fail("tree.7", 1, "no P iff no L and no R fails");

  // 8: layer neighbors of leaves are leaves
  if (pc.has(Port::ChL) == 0 && pc.has(Port::ChR) == 0) {
    for (Port d : {Port::L, Port::R}) {
      auto w = follow(g, u, {d});
      if (!w) continue;
      PortCounts wc = plain_counts(g, *w);
      if (wc.has(Port::ChL) || wc.has(Port::ChR))
        fail("tree.8", 2, "childless node has a layer neighbor with children");
    }
  }

  return ok;
}

bool grid_rules_at(const LabeledGraph& g, int u, bool vertical, ViolationReport* rep) {
  bool ok = true;
  const NodeId id = g.id_of(u);
  auto fail = [&](const char* rule, int radius, std::string msg) {
    ok = false;
    if (rep) rep->add(id, rule, radius, std::move(msg));
  };

  PortCounts pc = plain_counts(g, u);

  if (pc.dup) fail("grid.1", 1, "two incident half-edges carry the same label");

  for (const auto& he : g.half_edges(u)) {
    Port mine = he.label.plain_value();
    Port partner = partner_label(g, u, he);
    if ((mine == Port::L && partner != Port::R) || (mine == Port::R && partner != Port::L))
      fail("grid.2", 1, "L/R half-edge not matched by R/L on the other side");
    if ((mine == Port::U && partner != Port::D) || (mine == Port::D && partner != Port::U))
      fail("grid.3", 1, "U/D half-edge not matched by D/U on the other side");
  }

  // 4: unit squares close
  if (pc.has(Port::R) && pc.has(Port::U)) {
    auto back = follow(g, u, {Port::R, Port::U, Port::L, Port::D});
    if (!back || *back != u) fail("grid.4", 4, "f(u,R,U,L,D) != u");
  }

  // 5: D/U presence propagates to the right neighbor
  if (auto r = follow(g, u, {Port::R})) {
    PortCounts rc = plain_counts(g, *r);
    if ((pc.has(Port::D) != 0) != (rc.has(Port::D) != 0))
      fail("grid.5", 2, "node and right neighbor disagree on having a D half-edge");
    if ((pc.has(Port::U) != 0) != (rc.has(Port::U) != 0))
      fail("grid.5", 2, "node and right neighbor disagree on having a U half-edge");
  }

  // 6: L/R presence propagates upward
  if (auto up = follow(g, u, {Port::U})) {
    PortCounts uc = plain_counts(g, *up);
    if ((pc.has(Port::L) != 0) != (uc.has(Port::L) != 0))
      fail("grid.6", 2, "node and up neighbor disagree on having an L half-edge");
    if ((pc.has(Port::R) != 0) != (uc.has(Port::R) != 0))
      fail("grid.6", 2, "node and up neighbor disagree on having an R half-edge");
  }

  if (vertical && g.input(u).vgrid_bit() == 1) {
    // vgrid.1: the 1-diagonal propagates
    if (auto a = follow(g, u, {Port::U, Port::R})) {
      if (g.input(*a).vgrid_bit() != 1)
        fail("vgrid.1", 2, "f(u,U,R) exists but is not labeled 1");
    }
    if (auto b = follow(g, u, {Port::D, Port::L})) {
      if (g.input(*b).vgrid_bit() != 1)
        fail("vgrid.1", 2, "f(u,D,L) exists but is not labeled 1");
    }
    // vgrid.2 / vgrid.3: the diagonal starts at the lower-left corner and may
    // leave the grid only at the right boundary
    if (!follow(g, u, {Port::D}) && follow(g, u, {Port::L}))
      fail("vgrid.2", 1, "1-labeled node on the bottom boundary has an L half-edge");
    if (!follow(g, u, {Port::U}) && follow(g, u, {Port::R}))
      fail("vgrid.3", 1, "1-labeled node on the top boundary has an R half-edge");
  }

  return ok;
}

}  // namespace detail

ViolationReport check_tree(const LabeledGraph& g) {
  require_plain_tree(g);
  ViolationReport rep;
  for (int u = 0; u < g.node_count(); ++u) detail::tree_rules_at(g, u, &rep);
  rep.normalize();
  return rep;
}

ViolationReport check_grid(const LabeledGraph& g) {
  require_plain_grid(g);
  ViolationReport rep;
  for (int u = 0; u < g.node_count(); ++u) detail::grid_rules_at(g, u, false, &rep);
  rep.normalize();
  return rep;
}

ViolationReport check_vgrid(const LabeledGraph& g) {
  require_plain_grid(g);
  ViolationReport rep;
  for (int u = 0; u < g.node_count(); ++u) detail::grid_rules_at(g, u, true, &rep);
  rep.normalize();
  return rep;
}

namespace {

bool pointer_transition_ok(Port p, Port next) {
  switch (p) {
    case Port::L: return next == Port::L;
    case Port::R: return next == Port::R;
    case Port::P: return next == Port::P || next == Port::L || next == Port::R;
    case Port::ChR: return next == Port::ChR || next == Port::L || next == Port::R;
    default: return false;
  }
}

/// Bad-tree constraints over a plain tree-labeled graph with explicit marks
/// and per-node tree-constraint flags. Used directly by check_bad_tree and for
/// the derived instance inside the bad-graph checker.
void eval_bad_tree_rules(const LabeledGraph& g, const std::vector<std::uint8_t>& marks,
                         const std::vector<Output>& out, const std::vector<std::uint8_t>& tree_bad,
                         const char* rule2, const char* rule3, ViolationReport& rep) {
  for (int u = 0; u < g.node_count(); ++u) {
    const Output& o = out[static_cast<size_t>(u)];
    if (o.kind == Output::Kind::Error) {
      if (!tree_bad[static_cast<size_t>(u)] && !marks[static_cast<size_t>(u)])
        rep.add(g.id_of(u), rule2, 4,
                "Error output without a tree-constraint violation or a mark");
    } else if (o.kind == Output::Kind::Pointer) {
      Port p = o.pointer;
      auto v = follow(g, u, {p});
      if (!v) {
        rep.add(g.id_of(u), rule3, 2,
                "pointer " + std::string(to_string(p)) + " has no unique half-edge to follow");
        continue;
      }
      const Output& ov = out[static_cast<size_t>(*v)];
      if (ov.kind == Output::Kind::Error) continue;
      if (ov.kind != Output::Kind::Pointer) {
        rep.add(g.id_of(u), rule3, 2, "pointer target outputs neither Error nor a pointer");
        continue;
      }
      auto back = follow(g, *v, {p});
      if (back && *back == u) {
        rep.add(g.id_of(u), rule3, 2, "pointer target points straight back (f(v,p) = u)");
        continue;
      }
      if (!pointer_transition_ok(p, ov.pointer))
        rep.add(g.id_of(u), rule3, 2,
                "pointer " + std::string(to_string(p)) + " followed by incompatible pointer " +
                    std::string(to_string(ov.pointer)));
    }
  }
}

}  // namespace

ViolationReport check_bad_tree(const LabeledGraph& g, const OutputAssignment& out) {
  require_plain_tree(g);
  if (out.problem != Problem::BadTree || out.size() != g.node_count())
    throw std::invalid_argument("expected a bad-tree assignment covering the graph");
  for (const auto& o : out.by_index)
    if (!o.in_bad_tree_universe())
      throw std::invalid_argument("output label outside the bad-tree universe");

  const int n = g.node_count();
  std::vector<std::uint8_t> marks(static_cast<size_t>(n), 0);
  std::vector<std::uint8_t> tree_bad(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    marks[static_cast<size_t>(u)] = static_cast<std::uint8_t>(g.input(u).mark());
    tree_bad[static_cast<size_t>(u)] =
        static_cast<std::uint8_t>(!detail::tree_rules_at(g, u, nullptr));
  }
  ViolationReport rep;
  eval_bad_tree_rules(g, marks, out.by_index, tree_bad, "badTree.2", "badTree.3", rep);
  rep.normalize();
  return rep;
}

ViolationReport check_bad_graph(const LabeledGraph& g, const OutputAssignment& out) {
  if (!g.all_labels_bad_graph())
    throw std::invalid_argument("expected badGraph half-edge labels");
  for (const auto& in : g.inputs())
    if (!in.is_bad_graph())
      throw std::invalid_argument("expected badGraph node inputs");
  if (out.problem != Problem::BadGraph || out.size() != g.node_count())
    throw std::invalid_argument("expected a bad-graph assignment covering the graph");
  for (const auto& o : out.by_index)
    if (!o.in_bad_graph_universe())
      throw std::invalid_argument("output label outside the bad-graph universe");

  const int n = g.node_count();
  LabeledGraph tree_proj = project(g, EdgeType::Tree);
  LabeledGraph grid_proj = project(g, EdgeType::Grid);

  std::vector<std::uint8_t> tree_bad(static_cast<size_t>(n), 0);
  std::vector<std::uint8_t> vgrid_bad(static_cast<size_t>(n), 0);
  std::vector<std::uint8_t> error_ok(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    tree_bad[static_cast<size_t>(u)] =
        static_cast<std::uint8_t>(!detail::tree_rules_at(tree_proj, u, nullptr));
    vgrid_bad[static_cast<size_t>(u)] =
        static_cast<std::uint8_t>(!detail::grid_rules_at(grid_proj, u, true, nullptr));
    bool eligible = false;
    for (const auto& he : g.half_edges(u)) {
      const auto& e = g.edge(he.edge);
      if (label_type(e.label_u) != label_type(e.label_v)) { eligible = true; break; }
      if (g.input(u).is_tree_only() && type_contains_grid(label_type(he.label))) {
        eligible = true;
        break;
      }
    }
    error_ok[static_cast<size_t>(u)] = static_cast<std::uint8_t>(eligible);
  }

  ViolationReport rep;
  for (int u = 0; u < n; ++u) {
    const Output& o = out.at(u);
    switch (o.kind) {
      case Output::Kind::Error:
        if (!error_ok[static_cast<size_t>(u)])
          rep.add(g.id_of(u), "badGraph.2", 1,
                  "Error output without an edge-type mismatch or a misplaced grid edge");
        break;
      case Output::Kind::TreeError:
        if (!tree_bad[static_cast<size_t>(u)])
          rep.add(g.id_of(u), "badGraph.3", 4,
                  "TreeError output but tree constraints hold on the tree projection");
        break;
      case Output::Kind::GridError:
        if (g.input(u).is_tree_only() || !vgrid_bad[static_cast<size_t>(u)])
          rep.add(g.id_of(u), "badGraph.4", 4,
                  "GridError output but vertical-grid constraints hold on the grid projection");
        break;
      default:
        break;
    }
  }

  // Rule 5: the derived bad-tree instance on the tree projection.
  std::vector<std::uint8_t> marks(static_cast<size_t>(n), 0);
  std::vector<Output> derived(static_cast<size_t>(n), Output::bot());
  for (int u = 0; u < n; ++u) {
    const Output& o = out.at(u);
    bool error_class = o.kind == Output::Kind::Error || o.kind == Output::Kind::TreeError ||
                       o.kind == Output::Kind::GridError;
    marks[static_cast<size_t>(u)] = static_cast<std::uint8_t>(error_class);
    if (error_class) {
      derived[static_cast<size_t>(u)] = Output::error();
    } else if (o.kind == Output::Kind::ColumnErrorError ||
               o.kind == Output::Kind::ColumnErrorPointer) {
      derived[static_cast<size_t>(u)] = o.unwrap_column();
    }
  }
  eval_bad_tree_rules(tree_proj, marks, derived, tree_bad, "badGraph.5", "badGraph.5", rep);

  // Rule 6: VertError propagates over the tree projection and is incompatible
  // with a (treeNode, gridNode, 1) input.
  for (int u = 0; u < n; ++u) {
    if (out.at(u).kind != Output::Kind::VertError) continue;
    for (const auto& he : tree_proj.half_edges(u)) {
      if (out.at(he.neighbor).kind != Output::Kind::VertError) {
        rep.add(g.id_of(u), "badGraph.6", 1, "VertError with a non-VertError tree neighbor");
        break;
      }
    }
    if (g.input(u).has_grid_part() && g.input(u).vgrid_bit() == 1)
      rep.add(g.id_of(u), "badGraph.6", 1, "VertError on a node with input (treeNode,gridNode,1)");
  }

  rep.normalize();
  return rep;
}

ViolationReport check_pi(const LabeledGraph& g, const OutputAssignment& out) {
  if (!g.all_labels_bad_graph())
    throw std::invalid_argument("expected badGraph half-edge labels");
  for (const auto& in : g.inputs())
    if (!in.is_pi()) throw std::invalid_argument("expected problem inputs (badGraph part + bit)");
  if (out.problem != Problem::Pi || out.size() != g.node_count())
    throw std::invalid_argument("expected a problem assignment covering the graph");
  for (const auto& o : out.by_index)
    if (!o.in_pi_universe())
      throw std::invalid_argument("output label outside the problem output universe");

  const int n = g.node_count();
  ViolationReport rep;

  // Rule 1: remap everything outside the badGraph universe to an empty output
  // and require the badGraph constraints.
  OutputAssignment mapped = OutputAssignment::all_bot(Problem::BadGraph, n);
  for (int u = 0; u < n; ++u)
    if (out.at(u).in_bad_graph_universe()) mapped.at(u) = out.at(u);
  ViolationReport inner = check_bad_graph(g, mapped);
  for (auto& v : inner.entries)
    rep.add(v.node, "pi.1", v.radius, "after remap: " + v.rule + ": " + v.message);

  const HalfEdgeLabel grid_right = HalfEdgeLabel::grid(Port::R);

  for (int u = 0; u < n; ++u) {
    const Output& o = out.at(u);
    const NodeInput& in = g.input(u);

    if (in.has_grid_part() && !o.in_bad_graph_universe() && o.kind != Output::Kind::BitFlag)
      rep.add(g.id_of(u), "pi.2", 0, "grid node must output a (bit, yes/no) pair");
    if (in.is_tree_only() && !o.in_bad_graph_universe() && o.kind != Output::Kind::Flag)
      rep.add(g.id_of(u), "pi.5", 0, "tree node must output yes or no");

    if (o.kind == Output::Kind::BitFlag) {
      auto v = follow_label(g, u, grid_right);
      if (v) {
        const Output& ov = out.at(*v);
        if (!ov.in_bad_graph_universe() &&
            !(ov.kind == Output::Kind::BitFlag && ov.bit == o.bit))
          rep.add(g.id_of(u), "pi.3", 1, "right grid neighbor outputs a different bit");
      } else {
        if (o.yes != (in.pi_input_bit() == o.bit))
          rep.add(g.id_of(u), "pi.4", 1,
                  "right-most node: yes iff output bit equals input bit fails");
      }
    }

    if (o.kind == Output::Kind::Flag) {
      auto v = follow(g, u, {Port::ChL}, Projection::Tree);
      auto z = follow(g, u, {Port::ChR}, Projection::Tree);
      bool child_yes = false;
      bool children_ok = v.has_value() && z.has_value();
      for (const auto& child : {v, z}) {
        if (!child) continue;
        const Output& oc = out.at(*child);
        if (oc.kind == Output::Kind::Flag || oc.kind == Output::Kind::BitFlag)
          child_yes = child_yes || oc.yes;
        else
          children_ok = false;
      }
      if (!children_ok)
        rep.add(g.id_of(u), "pi.6", 1, "yes/no node without two yes/no-valued children");
      else if (o.yes != child_yes)
        rep.add(g.id_of(u), "pi.6", 1, "yes iff some child is yes fails");

      if (!follow(g, u, {Port::P}, Projection::Tree) && !o.yes)
        rep.add(g.id_of(u), "pi.7", 1, "root of a tree-like structure must output yes");
    }
  }

  rep.normalize();
  return rep;
}

ViolationReport check_outputs(const LabeledGraph& g, const OutputAssignment& out) {
  switch (out.problem) {
    case Problem::BadTree: return check_bad_tree(g, out);
    case Problem::BadGraph: return check_bad_graph(g, out);
    case Problem::Pi: return check_pi(g, out);
  }
  throw std::logic_error("unreachable");
}

bool is_valid(const LabeledGraph& g, const OutputAssignment& out) {
  return check_outputs(g, out).empty();
}

bool componentwise_validity(Problem problem, const LabeledGraph& g, const OutputAssignment& out) {
  OutputAssignment whole = out;
  whole.problem = problem;
  bool whole_valid = is_valid(g, whole);

  bool conjunction = true;
  for (const auto& block : components(g)) {
    LabeledGraph sub = induced_subgraph(g, block);
    OutputAssignment part;
    part.problem = problem;
    part.by_index.reserve(block.size());
    for (int x : block) part.by_index.push_back(out.at(x));
    if (!is_valid(sub, part)) conjunction = false;
  }
  return whole_valid == conjunction;
}

}  // namespace lcllab
