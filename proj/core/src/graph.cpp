#include "lcllab/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_set>

namespace lcllab {

void LabeledGraph::rebuild_id_index() {
  id_index_.clear();
  id_index_.reserve(ids_.size());
  for (size_t i = 0; i < ids_.size(); ++i)
    id_index_.emplace_back(ids_[i], static_cast<std::int32_t>(i));
  std::sort(id_index_.begin(), id_index_.end());
}

int LabeledGraph::index_of(NodeId id) const {
  auto idx = try_index_of(id);
  if (!idx) throw std::invalid_argument("unknown node id " + std::to_string(id));
  return *idx;
}

std::optional<int> LabeledGraph::try_index_of(NodeId id) const {
  auto it = std::lower_bound(id_index_.begin(), id_index_.end(),
                             std::make_pair(id, std::int32_t{0}));
  if (it == id_index_.end() || it->first != id) return std::nullopt;
  return it->second;
}

bool LabeledGraph::all_labels_plain_tree() const {
  for (const auto& e : structure_->edges) {
    for (const auto& l : {e.label_u, e.label_v})
      if (!l.is_plain() || !is_tree_port(l.plain_value())) return false;
  }
  return true;
}

bool LabeledGraph::all_labels_plain_grid() const {
  for (const auto& e : structure_->edges) {
    for (const auto& l : {e.label_u, e.label_v})
      if (!l.is_plain() || !is_grid_port(l.plain_value())) return false;
  }
  return true;
}

bool LabeledGraph::all_labels_bad_graph() const {
  for (const auto& e : structure_->edges)
    if (e.label_u.is_plain() || e.label_v.is_plain()) return false;
  return true;
}

LabeledGraph LabeledGraph::with_ids(std::vector<NodeId> new_ids) const {
  if (new_ids.size() != ids_.size())
    throw std::invalid_argument("id vector size mismatch");
  LabeledGraph g = *this;
  g.ids_ = std::move(new_ids);
  g.rebuild_id_index();
  std::unordered_set<NodeId> seen;
  for (NodeId id : g.ids_) {
    if (id <= 0 || !seen.insert(id).second)
      throw std::invalid_argument("node ids must be unique positive integers");
  }
  return g;
}

LabeledGraph LabeledGraph::with_inputs(std::vector<NodeInput> new_inputs) const {
  if (new_inputs.size() != inputs_.size())
    throw std::invalid_argument("input vector size mismatch");
  LabeledGraph g = *this;
  g.inputs_ = std::move(new_inputs);
  return g;
}

int GraphBuilder::add_node(NodeId id, NodeInput input) {
  if (id <= 0) throw std::invalid_argument("node ids must be positive");
  if (!trusted_ && !seen_ids_.emplace(id, node_count()).second)
    throw std::invalid_argument("duplicate node id " + std::to_string(id));
  ids_.push_back(id);
  inputs_.push_back(input);
  return static_cast<int>(ids_.size()) - 1;
}

void GraphBuilder::add_edge(int u, int v, HalfEdgeLabel label_u, HalfEdgeLabel label_v) {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (!trusted_) {
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                        static_cast<std::uint32_t>(std::max(u, v));
    if (!seen_edges_.emplace(key, static_cast<int>(edges_.size())).second)
      throw std::invalid_argument("parallel edges are not allowed");
  }
  edges_.push_back({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v), label_u, label_v});
}

void GraphBuilder::reserve(int nodes, int edges) {
  ids_.reserve(static_cast<size_t>(nodes));
  inputs_.reserve(static_cast<size_t>(nodes));
  edges_.reserve(static_cast<size_t>(edges));
}

LabeledGraph GraphBuilder::build() {
  auto s = std::make_shared<LabeledGraph::Structure>();
  s->edges = std::move(edges_);
  const int n = node_count();
  std::vector<std::int64_t> deg(static_cast<size_t>(n) + 1, 0);
  for (const auto& e : s->edges) {
    ++deg[static_cast<size_t>(e.u) + 1];
    ++deg[static_cast<size_t>(e.v) + 1];
  }
  for (size_t i = 1; i < deg.size(); ++i) deg[i] += deg[i - 1];
  s->adj_offset = deg;
  s->adj.resize(static_cast<size_t>(s->adj_offset.back()));
  std::vector<std::int64_t> cursor(s->adj_offset.begin(), s->adj_offset.end() - 1);
  for (size_t e = 0; e < s->edges.size(); ++e) {
    const auto& ed = s->edges[e];
    s->adj[static_cast<size_t>(cursor[static_cast<size_t>(ed.u)]++)] =
        {ed.v, static_cast<std::int32_t>(e), ed.label_u};
    s->adj[static_cast<size_t>(cursor[static_cast<size_t>(ed.v)]++)] =
        {ed.u, static_cast<std::int32_t>(e), ed.label_v};
  }
  LabeledGraph g;
  g.structure_ = std::move(s);
  g.ids_ = std::move(ids_);
  g.inputs_ = std::move(inputs_);
  g.rebuild_id_index();
  seen_ids_.clear();
  seen_edges_.clear();
  return g;
}

namespace {

std::optional<Port> projected_value(const HalfEdgeLabel& l, Projection proj) {
  switch (proj) {
    case Projection::Tree: return l.tree_value();
    case Projection::Grid: return l.grid_value();
    default: return std::nullopt;  // unused
  }
}

}  // namespace

std::optional<int> follow(const LabeledGraph& g, int u, std::span<const Port> symbols,
                          Projection projection) {
  for (Port want : symbols) {
    if (projection == Projection::Tree && !is_tree_port(want))
      throw std::invalid_argument("tree projection cannot follow a non-tree symbol");
    if (projection == Projection::Grid && !is_grid_port(want))
      throw std::invalid_argument("grid projection cannot follow a non-grid symbol");
    int next = -1;
    int matches = 0;
    for (const auto& he : g.half_edges(u)) {
      bool hit;
      if (projection == Projection::Raw) {
        hit = he.label.is_plain() && he.label.plain_value() == want;
      } else {
        auto v = projected_value(he.label, projection);
        hit = v.has_value() && *v == want;
      }
      if (hit) {
        ++matches;
        next = he.neighbor;
      }
    }
    if (matches != 1) return std::nullopt;
    u = next;
  }
  return u;
}

std::optional<int> follow(const LabeledGraph& g, int u, std::initializer_list<Port> symbols,
                          Projection projection) {
  return follow(g, u, std::span<const Port>(symbols.begin(), symbols.size()), projection);
}

std::optional<int> follow_label(const LabeledGraph& g, int u, const HalfEdgeLabel& label) {
  int next = -1;
  int matches = 0;
  for (const auto& he : g.half_edges(u)) {
    if (he.label == label) {
      ++matches;
      next = he.neighbor;
    }
  }
  if (matches != 1) return std::nullopt;
  return next;
}

LabeledGraph project(const LabeledGraph& g, EdgeType which) {
  if (which != EdgeType::Tree && which != EdgeType::Grid)
    throw std::invalid_argument("projection must select treeEdge or gridEdge");
  if (!g.all_labels_bad_graph())
    throw std::invalid_argument("project requires badGraph half-edge labels");
  GraphBuilder b(/*trusted=*/true);
  b.reserve(g.node_count(), g.edge_count());
  for (int i = 0; i < g.node_count(); ++i) b.add_node(g.id_of(i), g.input(i));
  for (const auto& e : g.edges()) {
    EdgeType tu = label_type(e.label_u);
    EdgeType tv = label_type(e.label_v);
    if (tu != tv) continue;  // edge type {}
    bool keep = which == EdgeType::Tree ? type_contains_tree(tu) : type_contains_grid(tu);
    if (!keep) continue;
    auto vu = which == EdgeType::Tree ? e.label_u.tree_value() : e.label_u.grid_value();
    auto vv = which == EdgeType::Tree ? e.label_v.tree_value() : e.label_v.grid_value();
    b.add_edge(e.u, e.v, HalfEdgeLabel::plain(*vu), HalfEdgeLabel::plain(*vv));
  }
  return b.build();
}

View ball(const LabeledGraph& g, int u, int radius) {
  if (u < 0 || u >= g.node_count()) throw std::invalid_argument("ball: node out of range");
  if (radius < 0) throw std::invalid_argument("ball: radius must be non-negative");
  std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
  std::vector<int> order;
  order.push_back(u);
  dist[static_cast<size_t>(u)] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    int x = order[head];
    int dx = dist[static_cast<size_t>(x)];
    if (dx == radius) continue;
    for (const auto& he : g.half_edges(x)) {
      if (dist[static_cast<size_t>(he.neighbor)] < 0) {
        dist[static_cast<size_t>(he.neighbor)] = dx + 1;
        order.push_back(he.neighbor);
      }
    }
  }
  std::sort(order.begin(), order.end());
  View v;
  v.center = g.id_of(u);
  v.radius = radius;
  v.subgraph = induced_subgraph(g, order);
  for (int x : order) v.distance.emplace(g.id_of(x), dist[static_cast<size_t>(x)]);
  return v;
}

ComponentSplit component_split(const LabeledGraph& g, const EdgePredicate& drop) {
  const int n = g.node_count();
  ComponentSplit out;
  out.component_of.assign(static_cast<size_t>(n), -1);
  // Nodes in id order so blocks come out ordered by minimum id.
  std::vector<int> by_id(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) by_id[static_cast<size_t>(i)] = i;
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return g.id_of(a) < g.id_of(b); });

  std::vector<int> queue;
  for (int seed : by_id) {
    if (out.component_of[static_cast<size_t>(seed)] >= 0) continue;
    int comp = static_cast<int>(out.blocks.size());
    queue.clear();
    queue.push_back(seed);
    out.component_of[static_cast<size_t>(seed)] = comp;
    std::vector<int> block;
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      block.push_back(x);
      for (const auto& he : g.half_edges(x)) {
        if (drop && drop(g, he.edge)) continue;
        if (out.component_of[static_cast<size_t>(he.neighbor)] < 0) {
          out.component_of[static_cast<size_t>(he.neighbor)] = comp;
          queue.push_back(he.neighbor);
        }
      }
    }
    std::sort(block.begin(), block.end(),
              [&](int a, int b) { return g.id_of(a) < g.id_of(b); });
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<std::vector<int>> components(const LabeledGraph& g, const EdgePredicate& drop) {
  return component_split(g, drop).blocks;
}

LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2) {
  NodeId shift = 0;
  for (NodeId id : g1.ids()) shift = std::max(shift, id);
  // Shift only when needed, so unions of id-disjoint graphs keep their ids.
  bool collision = false;
  for (NodeId id : g2.ids())
    if (g1.try_index_of(id)) { collision = true; break; }
  GraphBuilder b;
  for (int i = 0; i < g1.node_count(); ++i) b.add_node(g1.id_of(i), g1.input(i));
  for (int i = 0; i < g2.node_count(); ++i)
    b.add_node(collision ? g2.id_of(i) + shift : g2.id_of(i), g2.input(i));
  for (const auto& e : g1.edges()) b.add_edge(e.u, e.v, e.label_u, e.label_v);
  const int off = g1.node_count();
  for (const auto& e : g2.edges()) b.add_edge(e.u + off, e.v + off, e.label_u, e.label_v);
  return b.build();
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> nodes) {
  GraphBuilder b;
  std::unordered_map<int, int> local;
  local.reserve(nodes.size());
  for (int x : nodes) {
    local.emplace(x, b.node_count());
    b.add_node(g.id_of(x), g.input(x));
  }
  for (int x : nodes) {
    for (const auto& he : g.half_edges(x)) {
      if (he.neighbor <= x) continue;  // visit each edge once
      auto it = local.find(he.neighbor);
      if (it == local.end()) continue;
      const auto& e = g.edge(he.edge);
      b.add_edge(local[x], it->second,
                 e.u == x ? e.label_u : e.label_v,
                 e.u == x ? e.label_v : e.label_u);
    }
  }
  return b.build();
}

LabeledGraph with_random_ids(const LabeledGraph& g, std::uint64_t seed, int c) {
  if (c < 1) throw std::invalid_argument("id exponent must be >= 1");
  const std::int64_t n = g.node_count();
  if (n == 0) return g;
  std::int64_t space = 1;
  for (int i = 0; i < c; ++i) {
    if (space > std::numeric_limits<std::int64_t>::max() / std::max<std::int64_t>(n, 1)) {
      space = std::numeric_limits<std::int64_t>::max();
      break;
    }
    space *= n;
  }
  std::mt19937_64 rng(seed);
  std::unordered_set<NodeId> used;
  std::vector<NodeId> fresh;
  fresh.reserve(static_cast<size_t>(n));
  std::uniform_int_distribution<std::int64_t> dist(1, space);
  while (static_cast<std::int64_t>(fresh.size()) < n) {
    NodeId cand = dist(rng);
    if (used.insert(cand).second) fresh.push_back(cand);
  }
  return g.with_ids(std::move(fresh));
}

}  // namespace lcllab
