#include "lcllab/algorithms.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace lcllab {

namespace {

enum class PipelineKind : std::uint8_t { BadTree, BadGraph, PiShared, PiZero, PiRowRand };

/// Growth schedule of the ball oracle: 4, 6, 8, ... Stage-1 error detection
/// happens at radius 4; component closure needs slack 5 so that the stage-1
/// flags of every component node are certified inside the view.
constexpr int kFlagRadius = 4;
constexpr int kClosureSlack = 5;

int sched(int needed) {
  if (needed <= kFlagRadius) return kFlagRadius;
  int r = kFlagRadius;
  while (r < needed) r += 2;
  return r;
}

/// Everything about one graph the pipeline needs that does not depend on the
/// problem input bits, the identifiers, or the randomness.
struct Prepared {
  bool bad_tree_mode = false;
  LabeledGraph tree_proj;  // = the graph itself in bad-tree mode

  std::vector<std::uint8_t> flagged;  // stage-1 error class
  std::vector<Output> stage1;
  ComponentSplit comps;
  std::vector<std::uint8_t> comp_has_mark;
  std::vector<std::uint8_t> comp_has_one;
  std::vector<Output> chains;  // bad-tree labels; Bot on clean components
  std::vector<int> r_col;      // closure radius per node

  // Stage-3 tables, populated on clean components of bad-graph pipelines.
  std::vector<int> row_index;          // -1 when absent
  std::vector<int> chain_height;       // 0 when absent
  std::vector<std::uint8_t> has_right; // unique (gridEdge,R) half-edge
  std::vector<int> walk_len;           // steps to the right-most node; -1 none, -2 cycle
  std::vector<int> walk_target;        // node index of the right-most node
  std::vector<std::array<int, 2>> children;  // via tree ChL/ChR
  std::vector<int> or_order;           // clean-component nodes, children first
};

/// Hash of the certificate-relevant node inputs (marks, grid membership,
/// vertical bits). Problem input bits are excluded: they only enter the
/// per-run evaluation.
std::uint64_t cert_hash(const LabeledGraph& g) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (int i = 0; i < g.node_count(); ++i) {
    const NodeInput& in = g.input(i);
    std::uint64_t code = static_cast<std::uint64_t>(in.is_tree_only()) |
                         (static_cast<std::uint64_t>(in.has_grid_part()) << 1) |
                         (static_cast<std::uint64_t>(in.vgrid_bit()) << 2) |
                         (static_cast<std::uint64_t>(in.mark()) << 3);
    h = mix64(h, code + 0x100);
  }
  return h;
}

/// Round-synchronous pointer-chain construction. Assignments in one round see
/// only earlier rounds, so the result is a pure function of the component and
/// the error set (and in particular agrees between a closed view and the full
/// graph).
void build_chains(const LabeledGraph& g, const std::vector<std::uint8_t>& error_nodes,
                  std::vector<Output>& out) {
  const int n = g.node_count();
  for (int u = 0; u < n; ++u)
    out[static_cast<size_t>(u)] = error_nodes[static_cast<size_t>(u)] ? Output::error() : Output::bot();

  auto can_point = [&](int u, Port p, std::initializer_list<Port> allowed_next) -> bool {
    auto v = follow(g, u, {p});
    if (!v) return false;
    auto back = follow(g, *v, {p});
    if (back && *back == u) return false;
    const Output& ov = out[static_cast<size_t>(*v)];
    if (ov.kind == Output::Kind::Error) return true;
    if (ov.kind != Output::Kind::Pointer) return false;
    for (Port a : allowed_next)
      if (ov.pointer == a) return true;
    return false;
  };

  // Phase 1: L/R tails.
  for (;;) {
    std::vector<std::pair<int, Port>> newly;
    for (int u = 0; u < n; ++u) {
      if (!out[static_cast<size_t>(u)].is_bot()) continue;
      if (can_point(u, Port::L, {Port::L})) newly.emplace_back(u, Port::L);
      else if (can_point(u, Port::R, {Port::R})) newly.emplace_back(u, Port::R);
    }
    if (newly.empty()) break;
    for (auto& [u, p] : newly) out[static_cast<size_t>(u)] = Output::pointer_to(p);
  }
  // Phase 2: P / ChR heads.
  for (;;) {
    std::vector<std::pair<int, Port>> newly;
    for (int u = 0; u < n; ++u) {
      if (!out[static_cast<size_t>(u)].is_bot()) continue;
      if (can_point(u, Port::P, {Port::P, Port::L, Port::R})) newly.emplace_back(u, Port::P);
      else if (can_point(u, Port::ChR, {Port::ChR, Port::L, Port::R}))
        newly.emplace_back(u, Port::ChR);
    }
    if (newly.empty()) break;
    for (auto& [u, p] : newly) out[static_cast<size_t>(u)] = Output::pointer_to(p);
  }
}

std::shared_ptr<const Prepared> prepare(const LabeledGraph& g, bool bad_tree_mode) {
  auto P = std::make_shared<Prepared>();
  P->bad_tree_mode = bad_tree_mode;
  const int n = g.node_count();

  LabeledGraph grid_proj;
  if (bad_tree_mode) {
    P->tree_proj = g;
  } else {
    P->tree_proj = project(g, EdgeType::Tree);
    grid_proj = project(g, EdgeType::Grid);
  }

  P->flagged.assign(static_cast<size_t>(n), 0);
  P->stage1.assign(static_cast<size_t>(n), Output::bot());
  for (int u = 0; u < n; ++u) {
    if (bad_tree_mode) {
      if (!detail::tree_rules_at(g, u, nullptr) || g.input(u).mark()) {
        P->flagged[static_cast<size_t>(u)] = 1;
        P->stage1[static_cast<size_t>(u)] = Output::error();
      }
      continue;
    }
    // Error, then TreeError, then GridError.
    bool mismatch = false;
    for (const auto& he : g.half_edges(u)) {
      const auto& e = g.edge(he.edge);
      if (label_type(e.label_u) != label_type(e.label_v)) { mismatch = true; break; }
      if (g.input(u).is_tree_only() && type_contains_grid(label_type(he.label))) {
        mismatch = true;
        break;
      }
    }
    if (mismatch) {
      P->flagged[static_cast<size_t>(u)] = 1;
      P->stage1[static_cast<size_t>(u)] = Output::error();
    } else if (!detail::tree_rules_at(P->tree_proj, u, nullptr)) {
      P->flagged[static_cast<size_t>(u)] = 1;
      P->stage1[static_cast<size_t>(u)] = Output::tree_error();
    } else if (!g.input(u).is_tree_only() && !detail::grid_rules_at(grid_proj, u, true, nullptr)) {
      P->flagged[static_cast<size_t>(u)] = 1;
      P->stage1[static_cast<size_t>(u)] = Output::grid_error();
    }
  }

  P->comps = component_split(P->tree_proj);
  const int ncomp = static_cast<int>(P->comps.blocks.size());
  P->comp_has_mark.assign(static_cast<size_t>(ncomp), 0);
  P->comp_has_one.assign(static_cast<size_t>(ncomp), 0);
  for (int u = 0; u < n; ++u) {
    int c = P->comps.component_of[static_cast<size_t>(u)];
    if (P->flagged[static_cast<size_t>(u)]) P->comp_has_mark[static_cast<size_t>(c)] = 1;
    if (g.input(u).has_grid_part() && g.input(u).vgrid_bit() == 1)
      P->comp_has_one[static_cast<size_t>(c)] = 1;
  }

  P->chains.assign(static_cast<size_t>(n), Output::bot());
  build_chains(P->tree_proj, P->flagged, P->chains);
  // Clean components keep their all-empty chains.
  for (int u = 0; u < n; ++u) {
    int c = P->comps.component_of[static_cast<size_t>(u)];
    if (!P->comp_has_mark[static_cast<size_t>(c)])
      P->chains[static_cast<size_t>(u)] = Output::bot();
  }

  // Closure radii: eccentricity of each node inside its component.
  P->r_col.assign(static_cast<size_t>(n), kFlagRadius);
  {
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    for (int u = 0; u < n; ++u) {
      queue.clear();
      queue.push_back(u);
      dist[static_cast<size_t>(u)] = 0;
      int ecc = 0;
      for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        ecc = std::max(ecc, dist[static_cast<size_t>(x)]);
        for (const auto& he : P->tree_proj.half_edges(x)) {
          if (dist[static_cast<size_t>(he.neighbor)] < 0) {
            dist[static_cast<size_t>(he.neighbor)] = dist[static_cast<size_t>(x)] + 1;
            queue.push_back(he.neighbor);
          }
        }
      }
      for (int x : queue) dist[static_cast<size_t>(x)] = -1;
      P->r_col[static_cast<size_t>(u)] = sched(ecc + kClosureSlack);
    }
  }

  if (bad_tree_mode) return P;

  // Stage-3 tables on clean components.
  P->row_index.assign(static_cast<size_t>(n), -1);
  P->chain_height.assign(static_cast<size_t>(n), 0);
  P->has_right.assign(static_cast<size_t>(n), 0);
  P->walk_len.assign(static_cast<size_t>(n), -1);
  P->walk_target.assign(static_cast<size_t>(n), -1);
  P->children.assign(static_cast<size_t>(n), {-1, -1});
  const HalfEdgeLabel grid_right = HalfEdgeLabel::grid(Port::R);

  std::vector<int> depth(static_cast<size_t>(n), -1);
  for (int c = 0; c < ncomp; ++c) {
    if (P->comp_has_mark[static_cast<size_t>(c)] || !P->comp_has_one[static_cast<size_t>(c)])
      continue;
    const auto& block = P->comps.blocks[static_cast<size_t>(c)];

    // Vertical chains: rows counted from the bottom.
    for (int u : block) {
      if (!g.input(u).has_grid_part() || P->row_index[static_cast<size_t>(u)] >= 0) continue;
      // walk down
      int bottom = u;
      std::vector<int> seen{u};
      for (;;) {
        auto d = follow(g, bottom, {Port::D}, Projection::Grid);
        if (!d) break;
        bottom = *d;
        seen.push_back(bottom);
        if (seen.size() > static_cast<size_t>(n)) { bottom = -1; break; }
      }
      if (bottom < 0) continue;  // vertical cycle; leave the chain untabled
      std::vector<int> chain{bottom};
      int cur = bottom;
      for (;;) {
        auto up = follow(g, cur, {Port::U}, Projection::Grid);
        if (!up) break;
        cur = *up;
        chain.push_back(cur);
        if (chain.size() > static_cast<size_t>(n)) { chain.clear(); break; }
      }
      for (size_t i = 0; i < chain.size(); ++i) {
        P->row_index[static_cast<size_t>(chain[i])] = static_cast<int>(i);
        P->chain_height[static_cast<size_t>(chain[i])] = static_cast<int>(chain.size());
      }
    }

    // Horizontal walks to the right-most node of each row. A walk that bites
    // its own tail reports its step count and no target.
    for (int u : block) {
      if (!g.input(u).has_grid_part()) continue;
      P->has_right[static_cast<size_t>(u)] =
          static_cast<std::uint8_t>(follow_label(g, u, grid_right).has_value());
      int cur = u;
      int steps = 0;
      bool cycle = false;
      for (;;) {
        auto r = follow_label(g, cur, grid_right);
        if (!r) break;
        cur = *r;
        ++steps;
        if (cur == u || steps > n) { cycle = true; break; }
      }
      P->walk_len[static_cast<size_t>(u)] = steps;
      P->walk_target[static_cast<size_t>(u)] = cycle ? -1 : cur;
    }

    // OR aggregation order: children before parents.
    int root = -1;
    for (int u : block)
      if (!follow(g, u, {Port::P}, Projection::Tree)) { root = u; break; }
    for (int u : block) {
      auto cl = follow(g, u, {Port::ChL}, Projection::Tree);
      auto cr = follow(g, u, {Port::ChR}, Projection::Tree);
      P->children[static_cast<size_t>(u)] = {cl ? *cl : -1, cr ? *cr : -1};
    }
    std::vector<int> order;
    if (root >= 0) {
      std::vector<int> stack{root};
      depth[static_cast<size_t>(root)] = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int ch : P->children[static_cast<size_t>(x)]) {
          if (ch >= 0 && depth[static_cast<size_t>(ch)] < 0) {
            depth[static_cast<size_t>(ch)] = depth[static_cast<size_t>(x)] + 1;
            stack.push_back(ch);
          }
        }
      }
      for (int x : order) depth[static_cast<size_t>(x)] = -1;
    }
    // Nodes missed by the downward sweep (no proper root) are appended so the
    // evaluation still assigns them something.
    std::vector<char> placed(block.size(), 0);
    std::reverse(order.begin(), order.end());
    for (int x : order) P->or_order.push_back(x);
    for (int x : order)
      for (size_t i = 0; i < block.size(); ++i)
        if (block[i] == x) placed[i] = 1;
    for (size_t i = 0; i < block.size(); ++i)
      if (!placed[i]) P->or_order.push_back(block[i]);
  }

  return P;
}

std::shared_ptr<const Prepared> prepare_cached(const LabeledGraph& g, bool bad_tree_mode) {
  struct Key {
    const void* structure;
    std::uint64_t inputs;
    bool mode;
    bool operator==(const Key& o) const {
      return structure == o.structure && inputs == o.inputs && mode == o.mode;
    }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return static_cast<size_t>(
          mix64(reinterpret_cast<std::uintptr_t>(k.structure), k.inputs ^ (k.mode ? 1 : 0)));
    }
  };
  struct Entry {
    std::shared_ptr<const void> keepalive;
    std::shared_ptr<const Prepared> prepared;
  };
  static std::mutex mu;
  static std::unordered_map<Key, Entry, KeyHash> cache;

  Key key{g.structure_key(), cert_hash(g), bad_tree_mode};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.prepared;
  }
  auto prepared = prepare(g, bad_tree_mode);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 64) cache.clear();
    cache.emplace(key, Entry{g.structure_handle(), prepared});
  }
  return prepared;
}

struct EvalSettings {
  PipelineKind kind;
  double c_log = kDefaultCLog;
};

/// Eccentricity of u inside its component of the tree projection (the whole
/// graph in bad-tree mode), computed without materializing the projection.
int component_ecc(const LabeledGraph& g, int u, bool tree_mode) {
  std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
  std::vector<int> queue{u};
  dist[static_cast<size_t>(u)] = 0;
  int ecc = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    ecc = std::max(ecc, dist[static_cast<size_t>(x)]);
    for (const auto& he : g.half_edges(x)) {
      if (!tree_mode) {
        const auto& e = g.edge(he.edge);
        EdgeType tu = label_type(e.label_u), tv = label_type(e.label_v);
        if (tu != tv || !type_contains_tree(tu)) continue;
      }
      if (dist[static_cast<size_t>(he.neighbor)] < 0) {
        dist[static_cast<size_t>(he.neighbor)] = dist[static_cast<size_t>(x)] + 1;
        queue.push_back(he.neighbor);
      }
    }
  }
  return ecc;
}

bool use_brute_force(const Prepared& P, int u, std::optional<std::int64_t> n_hint,
                     const EvalSettings& s) {
  if (s.kind != PipelineKind::PiShared) return false;
  if (!n_hint) return false;  // without n the height test is unavailable
  int h = P.chain_height[static_cast<size_t>(u)];
  return h > 0 && h <= s.c_log * std::log2(static_cast<double>(*n_hint));
}

/// Output and locality radius of every node. The per-node path computes the
/// same function from a certified view.
BulkOutput eval_pipeline(const LabeledGraph& g, const Prepared& P, const TapeSet& tapes,
                         std::optional<std::int64_t> n_hint, const EvalSettings& s) {
  const int n = g.node_count();
  BulkOutput out;
  out.outputs.problem = s.kind == PipelineKind::BadTree
                            ? Problem::BadTree
                            : (s.kind == PipelineKind::BadGraph ? Problem::BadGraph : Problem::Pi);
  out.outputs.by_index.assign(static_cast<size_t>(n), Output::bot());
  out.radii.assign(static_cast<size_t>(n), kFlagRadius);

  // yes/no values on clean components (problem pipelines only).
  std::vector<std::uint8_t> flag_yes(static_cast<size_t>(n), 0);
  if (s.kind != PipelineKind::BadTree && s.kind != PipelineKind::BadGraph) {
    for (int u : P.or_order) {
      const NodeInput& in = g.input(u);
      if (in.has_grid_part()) {
        int b;
        if (s.kind == PipelineKind::PiZero) {
          b = 0;
        } else if (s.kind == PipelineKind::PiRowRand) {
          b = tapes.private_bit(g.id_of(u), 0);
        } else if (use_brute_force(P, u, n_hint, s)) {
          int target = P.walk_target[static_cast<size_t>(u)];
          b = target >= 0 ? g.input(target).pi_input_bit() : 0;
        } else {
          int row = P.row_index[static_cast<size_t>(u)];
          if (row < 0) row = 0;
          b = tapes.has_shared ? tapes.shared_bit(static_cast<std::uint64_t>(row))
                               : tapes.private_bit(g.id_of(u), static_cast<std::uint64_t>(row));
        }
        bool yes = P.has_right[static_cast<size_t>(u)] ? true : (b == in.pi_input_bit());
        flag_yes[static_cast<size_t>(u)] = yes;
        // stash the bit in the output now; radii fixed below
        out.outputs.at(u) = Output::bit_flag(b, yes);
      } else {
        bool yes = false;
        for (int ch : P.children[static_cast<size_t>(u)])
          if (ch >= 0) yes = yes || flag_yes[static_cast<size_t>(ch)];
        flag_yes[static_cast<size_t>(u)] = yes;
        out.outputs.at(u) = Output::flag(yes);
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    const size_t su = static_cast<size_t>(u);
    if (P.flagged[su]) {
      out.outputs.at(u) = P.stage1[su];
      out.radii[su] = kFlagRadius;
      continue;
    }
    int c = P.comps.component_of[su];
    out.radii[su] = P.r_col[su];
    if (P.comp_has_mark[static_cast<size_t>(c)]) {
      // broken column: wrapped proof (bare in bad-tree mode)
      out.outputs.at(u) = s.kind == PipelineKind::BadTree ? P.chains[su]
                                                          : Output::column_error(P.chains[su]);
      continue;
    }
    if (s.kind == PipelineKind::BadTree) {
      out.outputs.at(u) = Output::bot();
      continue;
    }
    if (!P.comp_has_one[static_cast<size_t>(c)]) {
      out.outputs.at(u) = Output::vert_error();
      continue;
    }
    if (s.kind == PipelineKind::BadGraph) {
      out.outputs.at(u) = Output::bot();
      continue;
    }
    // problem pipelines: output already assembled above; fix the radius
    if (g.input(u).has_grid_part() && use_brute_force(P, u, n_hint, s)) {
      int len = std::max(0, P.walk_len[su]);
      out.radii[su] = std::max(P.r_col[su], sched(len + 1));
    }
  }
  return out;
}

/// One algorithm family: the marking pipeline with a problem-specific tail.
class PipelineAlgorithm : public Algorithm {
 public:
  PipelineAlgorithm(std::string name, PipelineKind kind, bool det, double c_log = kDefaultCLog)
      : name_(std::move(name)), settings_{kind, c_log}, deterministic_(det) {}

  std::string_view name() const override { return name_; }
  Problem problem() const override {
    switch (settings_.kind) {
      case PipelineKind::BadTree: return Problem::BadTree;
      case PipelineKind::BadGraph: return Problem::BadGraph;
      default: return Problem::Pi;
    }
  }
  bool deterministic() const override { return deterministic_; }
  int declared_locality(std::int64_t n) const override {
    // component closure plus slack; row walks never exceed the node count
    return static_cast<int>(std::min<std::int64_t>(n + kClosureSlack + 2, 1 << 28));
  }

  Output compute(AlgorithmContext& ctx) const override {
    const bool tree_mode = settings_.kind == PipelineKind::BadTree;
    {
      const View& v4 = ctx.view(kFlagRadius);
      int center = v4.subgraph.index_of(ctx.node());
      auto P = prepare(v4.subgraph, tree_mode);
      if (P->flagged[static_cast<size_t>(center)]) return P->stage1[static_cast<size_t>(center)];
    }
    for (int r = kFlagRadius + 2;; r += 2) {
      const View& v = ctx.view(r);
      const LabeledGraph& ballg = v.subgraph;
      int center = ballg.index_of(ctx.node());
      // Component closure: once the in-view eccentricity fits with slack, the
      // in-view component is provably the whole component and every node in it
      // has its stage-1 flag certified.
      if (sched(component_ecc(ballg, center, tree_mode) + kClosureSlack) > r) continue;
      auto P = prepare(ballg, tree_mode);
      int c = P->comps.component_of[static_cast<size_t>(center)];
      // A brute-force row walk is certified once it fits inside the view with
      // one hop to spare (the end node's missing R edge is then visible).
      if (!tree_mode && ballg.input(center).has_grid_part() &&
          !P->comp_has_mark[static_cast<size_t>(c)] && P->comp_has_one[static_cast<size_t>(c)] &&
          use_brute_force(*P, center, ctx.n(), settings_)) {
        if (std::max(0, P->walk_len[static_cast<size_t>(center)]) > r - 1) continue;
      }
      BulkOutput res = eval_pipeline(ballg, *P, ctx.tapes(), ctx.n(), settings_);
      return res.outputs.at(center);
    }
  }

  bool has_bulk() const override { return true; }
  BulkOutput bulk(const BulkInput& in) const override {
    const bool tree_mode = settings_.kind == PipelineKind::BadTree;
    auto P = prepare_cached(*in.graph, tree_mode);
    return eval_pipeline(*in.graph, *P, in.tapes, in.n_hint, settings_);
  }

 private:
  std::string name_;
  EvalSettings settings_;
  bool deterministic_;
};

/// Deterministic online baseline: copies the right-most input of its row when
/// the transcript or its own view already contains it, otherwise outputs 0.
class OnlineGreedyAlgorithm : public Algorithm {
 public:
  std::string_view name() const override { return "pi-online-greedy"; }
  Problem problem() const override { return Problem::Pi; }
  bool deterministic() const override { return true; }
  int declared_locality(std::int64_t) const override { return 8; }

  Output compute(AlgorithmContext& ctx) const override {
    const View& v = ctx.view(8);
    const LabeledGraph& ballg = v.subgraph;
    int center = ballg.index_of(ctx.node());
    const NodeInput& in = ballg.input(center);
    const HalfEdgeLabel right = HalfEdgeLabel::grid(Port::R);
    if (in.has_grid_part()) {
      int b = 0;
      // follow the row in whatever is known
      const LabeledGraph* known = ctx.transcript();
      const LabeledGraph& world = known ? *known : ballg;
      auto cur = world.try_index_of(ctx.node());
      if (cur) {
        int steps = 0;
        while (steps++ <= world.node_count()) {
          auto nxt = follow_label(world, *cur, right);
          if (!nxt) break;
          cur = nxt;
        }
        b = world.input(*cur).pi_input_bit();
      }
      bool yes = follow_label(ballg, center, right).has_value() ? true
                                                                : (b == in.pi_input_bit());
      return Output::bit_flag(b, yes);
    }
    // tree node: OR over committed children, optimistic default
    bool yes = true;
    auto cl = follow(ballg, center, {Port::ChL}, Projection::Tree);
    auto cr = follow(ballg, center, {Port::ChR}, Projection::Tree);
    if (cl || cr) {
      bool any = false, all_known = true;
      for (const auto& ch : {cl, cr}) {
        if (!ch) continue;
        auto o = ctx.committed_output(ballg.id_of(*ch));
        if (!o) { all_known = false; continue; }
        if (o->kind == Output::Kind::Flag || o->kind == Output::Kind::BitFlag)
          any = any || o->yes;
      }
      if (all_known) yes = any;
    }
    return Output::flag(yes);
  }
};

/// Sequential fixture: a grid node copies the bit of a committed horizontal
/// neighbor it can see, otherwise flips a private coin.
class SlocalCopyAlgorithm : public Algorithm {
 public:
  std::string_view name() const override { return "slocal-copy"; }
  Problem problem() const override { return Problem::Pi; }
  bool deterministic() const override { return false; }
  int declared_locality(std::int64_t) const override { return 1; }

  Output compute(AlgorithmContext& ctx) const override {
    const View& v = ctx.view(1);
    const LabeledGraph& ballg = v.subgraph;
    int center = ballg.index_of(ctx.node());
    const NodeInput& in = ballg.input(center);
    if (!in.has_grid_part()) return Output::flag(true);
    int b = -1;
    for (Port side : {Port::L, Port::R}) {
      auto nb = follow_label(ballg, center, HalfEdgeLabel::grid(side));
      if (!nb) continue;
      auto o = ctx.committed_output(ballg.id_of(*nb));
      if (o && o->kind == Output::Kind::BitFlag) { b = o->bit; break; }
    }
    if (b < 0) b = ctx.tapes().private_bit(ctx.node(), 0);
    bool yes = follow_label(ballg, center, HalfEdgeLabel::grid(Port::R)).has_value()
                   ? true
                   : (b == in.pi_input_bit());
    return Output::bit_flag(b, yes);
  }
};

const std::vector<std::unique_ptr<Algorithm>>& registry() {
  static std::vector<std::unique_ptr<Algorithm>> algos = [] {
    std::vector<std::unique_ptr<Algorithm>> v;
    v.push_back(std::make_unique<PipelineAlgorithm>("bad-tree", PipelineKind::BadTree, true));
    v.push_back(std::make_unique<PipelineAlgorithm>("bad-graph", PipelineKind::BadGraph, true));
    v.push_back(std::make_unique<PipelineAlgorithm>("pi-shared", PipelineKind::PiShared, false));
    v.push_back(std::make_unique<PipelineAlgorithm>("pi-private-zero", PipelineKind::PiZero, true));
    v.push_back(
        std::make_unique<PipelineAlgorithm>("pi-private-rowrand", PipelineKind::PiRowRand, false));
    v.push_back(std::make_unique<OnlineGreedyAlgorithm>());
    v.push_back(std::make_unique<SlocalCopyAlgorithm>());
    return v;
  }();
  return algos;
}

}  // namespace

std::vector<Output> solve_bad_tree(const LabeledGraph& tree_graph,
                                   std::vector<std::uint8_t> error_nodes, bool add_violations) {
  if (!tree_graph.all_labels_plain_tree())
    throw std::invalid_argument("expected a tree-labeled graph");
  const int n = tree_graph.node_count();
  error_nodes.resize(static_cast<size_t>(n), 0);
  if (add_violations) {
    for (int u = 0; u < n; ++u)
      if (!detail::tree_rules_at(tree_graph, u, nullptr)) error_nodes[static_cast<size_t>(u)] = 1;
  }
  std::vector<Output> out(static_cast<size_t>(n), Output::bot());
  build_chains(tree_graph, error_nodes, out);
  // components without errors stay all-empty
  ComponentSplit comps = component_split(tree_graph);
  std::vector<std::uint8_t> comp_marked(comps.blocks.size(), 0);
  for (int u = 0; u < n; ++u)
    if (error_nodes[static_cast<size_t>(u)])
      comp_marked[static_cast<size_t>(comps.component_of[static_cast<size_t>(u)])] = 1;
  for (int u = 0; u < n; ++u)
    if (!comp_marked[static_cast<size_t>(comps.component_of[static_cast<size_t>(u)])])
      out[static_cast<size_t>(u)] = Output::bot();
  return out;
}

std::vector<Output> solve_bad_graph(const LabeledGraph& g) {
  BulkInput in;
  in.graph = &g;
  in.tapes = TapeSet{};
  in.n_hint = g.node_count();
  return find_algorithm("bad-graph").bulk(in).outputs.by_index;
}

std::unique_ptr<Algorithm> make_pi_shared(double c_log, bool deterministic) {
  return std::make_unique<PipelineAlgorithm>("pi-shared-custom", PipelineKind::PiShared,
                                             deterministic, c_log);
}

const Algorithm& find_algorithm(std::string_view name) {
  for (const auto& a : registry())
    if (a->name() == name) return *a;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::vector<const Algorithm*> all_algorithms() {
  std::vector<const Algorithm*> out;
  for (const auto& a : registry()) out.push_back(a.get());
  return out;
}

}  // namespace lcllab
