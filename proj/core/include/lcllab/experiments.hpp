#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lcllab/adversary.hpp"

namespace lcllab {

/// One reproducible experiment over a grid of instance sizes.
///   shared-upper   success and locality of pi-shared under shared randomness
///   private-lower  both private baselines against the input adversary
///   slocal-lower   left/right independence under the sequential order
///   online-lower   the online input adversary against every deterministic
///                  registered problem algorithm
///   union-demo     pi-shared with n withheld on padded disjoint unions
struct ExperimentSpec {
  std::string name;
  std::vector<std::pair<int, int>> sizes;  // (ell, w)
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::filesystem::path out_dir = ".";
};

struct ExperimentResult {
  std::string csv;        // one row per (size, measurement)
  std::string summary;    // human-readable recap
  bool all_passed = true; // every per-size assertion held
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Default size grids per experiment name.
std::vector<std::pair<int, int>> default_sizes(const std::string& name);

}  // namespace lcllab
