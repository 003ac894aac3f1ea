#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string_view>

#include "lcllab/checkers.hpp"
#include "lcllab/graph.hpp"
#include "lcllab/outputs.hpp"
#include "lcllab/stats.hpp"

namespace lcllab {

enum class ModelKind : std::uint8_t {
  LocalDet,
  LocalPrivate,
  LocalShared,
  SlocalPrivate,
  OnlineLocalDet,
};

std::string_view to_string(ModelKind k);
ModelKind model_kind_from_string(std::string_view s);

struct Model {
  ModelKind kind = ModelKind::LocalPrivate;
  std::uint64_t seed = 0;     // randomness streams
  std::uint64_t id_seed = 0;  // 0 = keep the instance's identifiers
  bool withhold_n = false;    // hide the node count from the algorithm
};

/// Lazily served random bit streams. Private strings are keyed by
/// (seed, visible node id); the shared string by the seed alone, so it is the
/// same in every view. The deterministic models serve constant zeros.
struct TapeSet {
  std::uint64_t seed = 0;
  bool has_private = false;
  bool has_shared = false;
  bool constant = false;  // deterministic model: all-zero private strings

  int private_bit(NodeId visible_id, std::uint64_t i) const;
  int shared_bit(std::uint64_t i) const;
};

TapeSet tapes_for(const Model& m);

struct LocalityViolation : std::runtime_error {
  explicit LocalityViolation(const std::string& what) : std::runtime_error(what) {}
};

class LocalEngine;

/// What one node evaluation may look at. Views are pulled by radius and the
/// engine records the maximum radius requested.
class AlgorithmContext {
 public:
  NodeId node() const;
  std::optional<std::int64_t> n() const;

  const View& view(int radius);
  int radius_used() const { return radius_used_; }

  const TapeSet& tapes() const;
  ModelKind model() const;

  /// Committed output of a previously processed node. In the sequential model
  /// the node must lie inside the currently requested view; the online model
  /// answers for every node revealed so far.
  std::optional<Output> committed_output(NodeId visible_id) const;

  /// Read-once global random stream of the sequential model.
  int sequential_stream_bit();

  /// Online model: everything revealed so far (structure and inputs).
  const LabeledGraph* transcript() const;

 private:
  friend class LocalEngine;
  AlgorithmContext(LocalEngine& e, int node_index) : engine_(e), node_index_(node_index) {}

  LocalEngine& engine_;
  int node_index_;
  int radius_used_ = 0;
  std::map<int, View> views_;
};

struct TranscriptEntry {
  NodeId node;
  int radius;
  Output output;
};

struct RunResult {
  OutputAssignment outputs;
  int locality_used = 0;
  std::vector<TranscriptEntry> transcript;
  bool valid = false;
};

struct BulkInput {
  const LabeledGraph* graph = nullptr;
  TapeSet tapes;
  std::optional<std::int64_t> n_hint;
};

struct BulkOutput {
  OutputAssignment outputs;
  std::vector<int> radii;
};

/// A node algorithm: a pure function from views (plus the model's randomness)
/// to an output label. Algorithms may additionally provide a whole-graph
/// evaluator that must agree with the per-node path; the test suite checks the
/// agreement and the experiment harness relies on it for large sweeps.
class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual std::string_view name() const = 0;
  virtual Problem problem() const = 0;
  virtual bool deterministic() const = 0;
  /// Locality cap; requests beyond it abort the run.
  virtual int declared_locality(std::int64_t n) const {
    return static_cast<int>(std::min<std::int64_t>(n, 1 << 28));
  }
  virtual Output compute(AlgorithmContext& ctx) const = 0;

  virtual bool has_bulk() const { return false; }
  virtual BulkOutput bulk(const BulkInput&) const { throw std::logic_error("no bulk evaluator"); }
};

/// Simultaneous evaluation on every node (the LOCAL model).
RunResult run_local(const Algorithm& alg, const LabeledGraph& g, const Model& model);

/// Same contract through the whole-graph evaluator when available.
RunResult run_local_fast(const Algorithm& alg, const LabeledGraph& g, const Model& model);

/// Sequential processing; each evaluation sees committed outputs inside its
/// view. `order` lists node ids of g.
RunResult run_slocal(const Algorithm& alg, const LabeledGraph& g,
                     const std::vector<NodeId>& order, const Model& model);

/// Deterministic online model: global memory of everything revealed so far.
/// `limit` stops after the first `limit` nodes of the order (0 = all); the
/// remaining outputs stay empty and `valid` refers to the full assignment.
RunResult run_online_local(const Algorithm& alg, const LabeledGraph& g,
                           const std::vector<NodeId>& order, const Model& model,
                           std::int64_t limit = 0);

struct SuccessEstimate {
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double rate = 0.0;
  Interval ci;
  int max_locality = 0;
};

using InstanceFactory = std::function<LabeledGraph(std::uint64_t /*trial*/)>;

/// Independent trials with fresh seeds; validity judged by the checker of the
/// algorithm's problem.
SuccessEstimate estimate_success(const Algorithm& alg, const InstanceFactory& factory,
                                 const Model& model, std::int64_t trials, int jobs = 1);

std::uint64_t mix64(std::uint64_t x);
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);

}  // namespace lcllab
