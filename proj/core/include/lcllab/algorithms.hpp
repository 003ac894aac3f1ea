#pragma once

#include <memory>
#include <vector>

#include "lcllab/simulator.hpp"

namespace lcllab {

/// Certifier for the bad-tree problem on one graph: empty outputs on valid
/// unmarked components, everywhere-non-empty proofs on components with a
/// tree-constraint violation or a mark. `error_nodes` marks the proof targets
/// (violations are added internally when `add_violations` is set).
std::vector<Output> solve_bad_tree(const LabeledGraph& tree_graph,
                                   std::vector<std::uint8_t> error_nodes,
                                   bool add_violations = true);

/// The marking pipeline for the bad-graph problem: local error detection,
/// per-column bad-tree proofs wrapped as ColumnError, then the vertical
/// certificate sweep.
std::vector<Output> solve_bad_graph(const LabeledGraph& g);

/// Named algorithm registry used by the CLI and the experiments.
///   bad-tree            certifier for the bad-tree problem
///   bad-graph           marking pipeline for the bad-graph problem
///   pi-shared           shared-randomness solver (small components by brute
///                       force, tall ones by row-indexed shared bits)
///   pi-private-zero     baseline: every row outputs 0
///   pi-private-rowrand  baseline: every grid node draws its own private bit
///   pi-online-greedy    deterministic online baseline (copies a visible
///                       right-most input, defaults to 0)
///   slocal-copy         sequential fixture: copies a committed row neighbor,
///                       otherwise flips a private coin
const Algorithm& find_algorithm(std::string_view name);
std::vector<const Algorithm*> all_algorithms();

/// Height threshold factor of the shared-randomness solver: components of
/// grid height at most c_log * log2(n) are solved by brute force.
constexpr double kDefaultCLog = 2.0;

/// Shared-randomness solver with a custom height threshold (c_log = 0 never
/// brute-forces; a huge c_log always does, which makes the solver effectively
/// deterministic). The registry's "pi-shared" uses the default.
std::unique_ptr<Algorithm> make_pi_shared(double c_log, bool deterministic = false);

}  // namespace lcllab
