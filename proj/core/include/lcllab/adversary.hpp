#pragma once

#include "lcllab/algorithms.hpp"
#include "lcllab/generators.hpp"

namespace lcllab {

/// Adversarial right-most-column inputs against a private-randomness
/// algorithm: estimate, per row, how the left-most node leans, then feed the
/// opposite to the right-most node.
struct AdversaryPlan {
  std::vector<int> input_bits;        // by row
  std::vector<double> estimated_p0;   // P[left-most outputs 0], by row
  std::int64_t trials_used = 0;
  int measured_locality = 0;
};

/// Runs `alg` under private randomness on the instance with all-zero
/// placeholder inputs and classifies each row by the Wilson interval of the
/// left-most node's output-0 frequency. Refuses algorithms whose measured
/// locality exceeds w/3 (the independence hypothesis would fail).
AdversaryPlan adversary_inputs(const Algorithm& alg, const FamilyInstance& fi,
                               std::int64_t trials, std::uint64_t seed, int jobs = 1);

/// Processing orders of the sequential lower bounds: the left-most column
/// first, then (for the sequential model) the right-most column top to bottom,
/// then the rest. Requires a square instance (w = h).
enum class SequentialModel : std::uint8_t { Slocal, OnlineLocal };
std::vector<NodeId> adversary_order(SequentialModel model, const FamilyInstance& fi);

/// Deterministic online adversary: commits the left column, reads its outputs
/// o_u, and replays the full run with right-most inputs 1 - o_u. Returns the
/// final run on the modified instance (valid is expected to be false) and the
/// inputs used.
struct OnlineAdversaryResult {
  std::vector<int> input_bits;
  RunResult final_run;
  int left_column_locality = 0;
};
OnlineAdversaryResult adversary_online_inputs(const Algorithm& alg, const FamilyInstance& fi,
                                              std::uint64_t id_seed = 0);

}  // namespace lcllab
