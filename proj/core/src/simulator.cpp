#include "lcllab/simulator.hpp"

#include <atomic>
#include <thread>

namespace lcllab {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::LocalDet: return "local-det";
    case ModelKind::LocalPrivate: return "local-private";
    case ModelKind::LocalShared: return "local-shared";
    case ModelKind::SlocalPrivate: return "slocal-private";
    case ModelKind::OnlineLocalDet: return "online-local-det";
  }
  return "?";
}

ModelKind model_kind_from_string(std::string_view s) {
  for (ModelKind k : {ModelKind::LocalDet, ModelKind::LocalPrivate, ModelKind::LocalShared,
                      ModelKind::SlocalPrivate, ModelKind::OnlineLocalDet})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown model: " + std::string(s));
}

int TapeSet::private_bit(NodeId visible_id, std::uint64_t i) const {
  if (!has_private) throw std::logic_error("model provides no private randomness");
  if (constant) return 0;
  return static_cast<int>(mix64(seed, mix64(static_cast<std::uint64_t>(visible_id), i)) & 1);
}

int TapeSet::shared_bit(std::uint64_t i) const {
  if (!has_shared) throw std::logic_error("model provides no shared randomness");
  return static_cast<int>(mix64(seed ^ 0x53484152ULL, i) & 1);
}

TapeSet tapes_for(const Model& m) {
  TapeSet t;
  t.seed = m.seed;
  switch (m.kind) {
    case ModelKind::LocalDet:
    case ModelKind::OnlineLocalDet:
      t.has_private = true;
      t.constant = true;
      break;
    case ModelKind::LocalPrivate:
    case ModelKind::SlocalPrivate:
      t.has_private = true;
      break;
    case ModelKind::LocalShared:
      t.has_shared = true;
      break;
  }
  return t;
}

/// Shared state of one run; owns the working graph and per-node bookkeeping.
class LocalEngine {
 public:
  LocalEngine(const Algorithm& alg, const LabeledGraph& g, const Model& model)
      : alg_(alg), original_(g), model_(model), tapes_(tapes_for(model)) {
    working_ = model.id_seed == 0 ? g : with_random_ids(g, model.id_seed);
    cap_ = alg.declared_locality(g.node_count());
    committed_.assign(static_cast<size_t>(g.node_count()), std::nullopt);
  }

  const LabeledGraph& working() const { return working_; }
  const Model& model() const { return model_; }
  const TapeSet& tapes() const { return tapes_; }
  int cap() const { return cap_; }

  std::optional<std::int64_t> n_hint() const {
    if (model_.withhold_n) return std::nullopt;
    return working_.node_count();
  }

  Output evaluate(int node_index, int* radius_out) {
    AlgorithmContext ctx(*this, node_index);
    Output o = alg_.compute(ctx);
    *radius_out = ctx.radius_used();
    return o;
  }

  void commit(int node_index, const Output& o) {
    committed_[static_cast<size_t>(node_index)] = o;
  }
  const std::optional<Output>& committed(int node_index) const {
    return committed_[static_cast<size_t>(node_index)];
  }

  void reveal(const View& v) {
    for (const auto& [id, d] : v.distance) {
      int idx = working_.index_of(id);
      if (!revealed_[static_cast<size_t>(idx)]) {
        revealed_[static_cast<size_t>(idx)] = 1;
        transcript_dirty_ = true;
      }
    }
  }
  void enable_online() {
    online_ = true;
    revealed_.assign(static_cast<size_t>(working_.node_count()), 0);
  }
  bool online() const { return online_; }
  bool sequential() const { return sequential_; }
  void enable_sequential() { sequential_ = true; }
  bool is_revealed(int idx) const { return online_ && revealed_[static_cast<size_t>(idx)] != 0; }

  const LabeledGraph* transcript_graph() {
    if (!online_) return nullptr;
    if (transcript_dirty_) {
      std::vector<int> nodes;
      for (int i = 0; i < working_.node_count(); ++i)
        if (revealed_[static_cast<size_t>(i)]) nodes.push_back(i);
      transcript_cache_ = induced_subgraph(working_, nodes);
      transcript_dirty_ = false;
    }
    return &transcript_cache_;
  }

  int stream_bit() {
    return static_cast<int>(mix64(tapes_.seed ^ 0x53514cULL, stream_cursor_++) & 1);
  }

 private:
  friend class AlgorithmContext;
  const Algorithm& alg_;
  const LabeledGraph& original_;
  LabeledGraph working_;
  Model model_;
  TapeSet tapes_;
  int cap_ = 0;
  std::vector<std::optional<Output>> committed_;
  bool sequential_ = false;
  bool online_ = false;
  std::vector<char> revealed_;
  bool transcript_dirty_ = true;
  LabeledGraph transcript_cache_;
  std::uint64_t stream_cursor_ = 0;
};

NodeId AlgorithmContext::node() const { return engine_.working().id_of(node_index_); }

std::optional<std::int64_t> AlgorithmContext::n() const { return engine_.n_hint(); }

const View& AlgorithmContext::view(int radius) {
  if (radius < 0) throw std::invalid_argument("negative view radius");
  if (radius > engine_.cap())
    throw LocalityViolation("view radius " + std::to_string(radius) +
                            " exceeds the declared locality " + std::to_string(engine_.cap()));
  auto it = views_.find(radius);
  if (it == views_.end()) {
    it = views_.emplace(radius, ball(engine_.working(), node_index_, radius)).first;
    if (engine_.online()) engine_.reveal(it->second);
  }
  radius_used_ = std::max(radius_used_, radius);
  return it->second;
}

const TapeSet& AlgorithmContext::tapes() const { return engine_.tapes(); }
ModelKind AlgorithmContext::model() const { return engine_.model().kind; }

std::optional<Output> AlgorithmContext::committed_output(NodeId visible_id) const {
  auto idx = engine_.working().try_index_of(visible_id);
  if (!idx) return std::nullopt;
  if (engine_.online()) {
    if (!engine_.is_revealed(*idx)) return std::nullopt;
    return engine_.committed(*idx);
  }
  if (!engine_.sequential()) return std::nullopt;
  // Sequential model: the node must be inside the current view.
  auto it = views_.rbegin();
  if (it == views_.rend() || !it->second.distance.count(visible_id)) return std::nullopt;
  return engine_.committed(*idx);
}

int AlgorithmContext::sequential_stream_bit() {
  if (!engine_.sequential()) throw std::logic_error("stream bits exist in the sequential model");
  return engine_.stream_bit();
}

const LabeledGraph* AlgorithmContext::transcript() const { return engine_.transcript_graph(); }

namespace {

RunResult finalize(const Algorithm& alg, const LabeledGraph& g, OutputAssignment outputs,
                   std::vector<int> radii, bool complete = true) {
  RunResult r;
  r.outputs = std::move(outputs);
  r.outputs.problem = alg.problem();
  r.transcript.reserve(static_cast<size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) {
    r.locality_used = std::max(r.locality_used, radii[static_cast<size_t>(i)]);
    r.transcript.push_back({g.id_of(i), radii[static_cast<size_t>(i)], r.outputs.at(i)});
  }
  if (complete) {
    try {
      r.valid = check_outputs(g, r.outputs).empty();
    } catch (const std::invalid_argument&) {
      r.valid = false;  // outputs or inputs outside the problem's universes
    }
  }
  return r;
}

}  // namespace

RunResult run_local(const Algorithm& alg, const LabeledGraph& g, const Model& model) {
  if (model.kind != ModelKind::LocalDet && model.kind != ModelKind::LocalPrivate &&
      model.kind != ModelKind::LocalShared)
    throw std::invalid_argument("run_local expects a LOCAL model");
  LocalEngine engine(alg, g, model);
  const int n = g.node_count();
  OutputAssignment outputs = OutputAssignment::all_bot(alg.problem(), n);
  std::vector<int> radii(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    int r = 0;
    outputs.at(u) = engine.evaluate(u, &r);
    radii[static_cast<size_t>(u)] = r;
  }
  return finalize(alg, g, std::move(outputs), std::move(radii));
}

RunResult run_local_fast(const Algorithm& alg, const LabeledGraph& g, const Model& model) {
  if (!alg.has_bulk()) return run_local(alg, g, model);
  if (model.kind != ModelKind::LocalDet && model.kind != ModelKind::LocalPrivate &&
      model.kind != ModelKind::LocalShared)
    throw std::invalid_argument("run_local expects a LOCAL model");
  LabeledGraph working = model.id_seed == 0 ? g : with_random_ids(g, model.id_seed);
  BulkInput in;
  in.graph = &working;
  in.tapes = tapes_for(model);
  in.n_hint = model.withhold_n ? std::nullopt : std::optional<std::int64_t>(g.node_count());
  BulkOutput out = alg.bulk(in);
  return finalize(alg, g, std::move(out.outputs), std::move(out.radii));
}

namespace {

std::vector<int> order_to_indices(const LabeledGraph& g, const std::vector<NodeId>& order) {
  if (static_cast<int>(order.size()) != g.node_count())
    throw std::invalid_argument("order must be a permutation of the node ids");
  std::vector<char> seen(static_cast<size_t>(g.node_count()), 0);
  std::vector<int> idx;
  idx.reserve(order.size());
  for (NodeId id : order) {
    int i = g.index_of(id);
    if (seen[static_cast<size_t>(i)]) throw std::invalid_argument("order repeats a node");
    seen[static_cast<size_t>(i)] = 1;
    idx.push_back(i);
  }
  return idx;
}

}  // namespace

RunResult run_slocal(const Algorithm& alg, const LabeledGraph& g,
                     const std::vector<NodeId>& order, const Model& model) {
  if (model.kind != ModelKind::SlocalPrivate)
    throw std::invalid_argument("run_slocal expects the sequential model");
  LocalEngine engine(alg, g, model);
  engine.enable_sequential();
  const int n = g.node_count();
  OutputAssignment outputs = OutputAssignment::all_bot(alg.problem(), n);
  std::vector<int> radii(static_cast<size_t>(n), 0);
  for (int u : order_to_indices(g, order)) {
    int r = 0;
    Output o = engine.evaluate(u, &r);
    outputs.at(u) = o;
    radii[static_cast<size_t>(u)] = r;
    engine.commit(u, o);
  }
  return finalize(alg, g, std::move(outputs), std::move(radii));
}

RunResult run_online_local(const Algorithm& alg, const LabeledGraph& g,
                           const std::vector<NodeId>& order, const Model& model,
                           std::int64_t limit) {
  if (model.kind != ModelKind::OnlineLocalDet)
    throw std::invalid_argument("run_online_local expects the deterministic online model");
  if (!alg.deterministic())
    throw std::invalid_argument("the online model here is deterministic only");
  LocalEngine engine(alg, g, model);
  engine.enable_online();
  const int n = g.node_count();
  OutputAssignment outputs = OutputAssignment::all_bot(alg.problem(), n);
  std::vector<int> radii(static_cast<size_t>(n), 0);
  std::int64_t done = 0;
  for (int u : order_to_indices(g, order)) {
    if (limit > 0 && done++ >= limit) break;
    int r = 0;
    Output o = engine.evaluate(u, &r);
    outputs.at(u) = o;
    radii[static_cast<size_t>(u)] = r;
    engine.commit(u, o);
  }
  return finalize(alg, g, std::move(outputs), std::move(radii), limit <= 0);
}

SuccessEstimate estimate_success(const Algorithm& alg, const InstanceFactory& factory,
                                 const Model& model, std::int64_t trials, int jobs) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<char> ok(static_cast<size_t>(trials), 0);
  std::vector<int> loc(static_cast<size_t>(trials), 0);
  std::atomic<std::int64_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::int64_t t = next.fetch_add(1);
      if (t >= trials) return;
      Model m = model;
      m.seed = mix64(model.seed, static_cast<std::uint64_t>(t) + 1);
      LabeledGraph g = factory(static_cast<std::uint64_t>(t));
      RunResult r = run_local_fast(alg, g, m);
      ok[static_cast<size_t>(t)] = r.valid ? 1 : 0;
      loc[static_cast<size_t>(t)] = r.locality_used;
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SuccessEstimate est;
  est.trials = trials;
  for (std::int64_t t = 0; t < trials; ++t) {
    est.successes += ok[static_cast<size_t>(t)];
    est.max_locality = std::max(est.max_locality, loc[static_cast<size_t>(t)]);
  }
  est.rate = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.ci = wilson_interval(est.successes, trials);
  return est;
}

}  // namespace lcllab
