#pragma once

#include <cstdint>
#include <vector>

#include "lcllab/graph.hpp"

namespace lcllab {

/// Canonically-labeled tree-like structure: a perfect binary tree on layers
/// 0..ell-1 whose same-layer nodes are joined in a path.
struct TreeInstance {
  LabeledGraph graph;
  /// layer[l][k] = node index of the node at depth l, position k.
  std::vector<std::vector<int>> layer;

  int height() const { return static_cast<int>(layer.size()); }
};

TreeInstance gen_tree(int ell, std::uint64_t id_seed = 0);

/// Canonically-labeled h x w grid structure.
struct GridInstance {
  LabeledGraph graph;
  int h = 0, w = 0;
  /// at[x][y] = node index of the node at column x, row y.
  std::vector<std::vector<int>> at;
};

GridInstance gen_grid(int h, int w, std::uint64_t id_seed = 0);

/// Vertical certificate: walks the diagonal from (0,0) via repeated (R,U)
/// moves, labels those nodes 1 and everything else 0. Requires h >= w.
GridInstance label_vertical(const GridInstance& grid);

/// Parameters of a hard instance: an h x w vertical grid (h = 2^ell) with a
/// tree-like structure attached on top of each column.
struct FamilyParams {
  int ell = 1;                 // h = 2^ell
  int w = 1;                   // 1 <= w <= h
  std::vector<int> input_bits; // right-most column bits by row; empty = all 0
  std::uint64_t seed = 0;      // id randomization

  int height() const { return 1 << ell; }
};

struct FamilyInstance {
  LabeledGraph graph;
  FamilyParams params;
  int h = 0, w = 0;
  /// grid_at[x][y] = node index of the grid node at column x, row y.
  std::vector<std::vector<int>> grid_at;
  /// tree_at[x][l][k] = node index in column x's tree, depth l, position k.
  /// The deepest layer aliases the column: tree_at[x][ell][k] == grid_at[x][k].
  std::vector<std::vector<std::vector<int>>> tree_at;

  int rightmost(int y) const { return grid_at[static_cast<size_t>(w - 1)][static_cast<size_t>(y)]; }
  int leftmost(int y) const { return grid_at[0][static_cast<size_t>(y)]; }
};

/// Builds the hard instance with the certificate labeling that forces the
/// all-empty bad-graph output, plus the problem input bits.
FamilyInstance gen_family_instance(const FamilyParams& params);

/// Same construction with the h >= w requirement dropped; used to build
/// negative instances whose vertical certificate cannot exist.
FamilyInstance gen_family_instance_unchecked(int ell, int w, const std::vector<int>& input_bits,
                                             std::uint64_t seed);

/// Replaces the problem input bits of the right-most column.
LabeledGraph with_input_bits(const FamilyInstance& fi, const std::vector<int>& bits);

}  // namespace lcllab
