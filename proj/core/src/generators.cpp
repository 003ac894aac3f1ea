#include "lcllab/generators.hpp"

#include <stdexcept>

namespace lcllab {

namespace {

LabeledGraph maybe_randomize(LabeledGraph g, std::uint64_t seed) {
  return seed == 0 ? g : with_random_ids(g, seed);
}

}  // namespace

TreeInstance gen_tree(int ell, std::uint64_t id_seed) {
  if (ell < 1) throw std::invalid_argument("tree height must be >= 1");
  TreeInstance t;
  GraphBuilder b(/*trusted=*/true);
  t.layer.resize(static_cast<size_t>(ell));
  NodeId next_id = 1;
  for (int l = 0; l < ell; ++l) {
    t.layer[static_cast<size_t>(l)].resize(static_cast<size_t>(1) << l);
    for (int k = 0; k < (1 << l); ++k)
      t.layer[static_cast<size_t>(l)][static_cast<size_t>(k)] = b.add_node(next_id++);
  }
  auto L = [](Port p) { return HalfEdgeLabel::plain(p); };
  for (int l = 0; l < ell; ++l) {
    for (int k = 0; k < (1 << l); ++k) {
      int u = t.layer[static_cast<size_t>(l)][static_cast<size_t>(k)];
      if (k + 1 < (1 << l)) {
        int v = t.layer[static_cast<size_t>(l)][static_cast<size_t>(k) + 1];
        b.add_edge(u, v, L(Port::R), L(Port::L));
      }
      if (l + 1 < ell) {
        int cl = t.layer[static_cast<size_t>(l) + 1][static_cast<size_t>(2 * k)];
        int cr = t.layer[static_cast<size_t>(l) + 1][static_cast<size_t>(2 * k) + 1];
        b.add_edge(u, cl, L(Port::ChL), L(Port::P));
        b.add_edge(u, cr, L(Port::ChR), L(Port::P));
      }
    }
  }
  t.graph = maybe_randomize(b.build(), id_seed);
  return t;
}

GridInstance gen_grid(int h, int w, std::uint64_t id_seed) {
  if (h < 1 || w < 1) throw std::invalid_argument("grid dimensions must be >= 1");
  GridInstance g;
  g.h = h;
  g.w = w;
  GraphBuilder b(/*trusted=*/true);
  b.reserve(h * w, 2 * h * w);
  g.at.assign(static_cast<size_t>(w), std::vector<int>(static_cast<size_t>(h)));
  NodeId next_id = 1;
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < h; ++y)
      g.at[static_cast<size_t>(x)][static_cast<size_t>(y)] = b.add_node(next_id++);
  auto L = [](Port p) { return HalfEdgeLabel::plain(p); };
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      int u = g.at[static_cast<size_t>(x)][static_cast<size_t>(y)];
      if (x + 1 < w)
        b.add_edge(u, g.at[static_cast<size_t>(x) + 1][static_cast<size_t>(y)], L(Port::R),
                   L(Port::L));
      if (y + 1 < h)
        b.add_edge(u, g.at[static_cast<size_t>(x)][static_cast<size_t>(y) + 1], L(Port::U),
                   L(Port::D));
    }
  }
  g.graph = maybe_randomize(b.build(), id_seed);
  return g;
}

GridInstance label_vertical(const GridInstance& grid) {
  if (grid.h < grid.w) throw std::invalid_argument("vertical labeling requires h >= w");
  std::vector<NodeInput> inputs(static_cast<size_t>(grid.graph.node_count()), NodeInput::bit(0));
  // Diagonal walk from (0,0) via repeated (R,U) moves.
  int x = 0, y = 0;
  inputs[static_cast<size_t>(grid.at[0][0])] = NodeInput::bit(1);
  while (x + 1 < grid.w && y + 1 < grid.h) {
    ++x;
    ++y;
    inputs[static_cast<size_t>(grid.at[static_cast<size_t>(x)][static_cast<size_t>(y)])] =
        NodeInput::bit(1);
  }
  GridInstance out = grid;
  out.graph = grid.graph.with_inputs(std::move(inputs));
  return out;
}

namespace {

FamilyInstance build_family(int ell, int w, const std::vector<int>& input_bits,
                            std::uint64_t seed) {
  if (ell < 1) throw std::invalid_argument("family instances require ell >= 1 (h >= 2)");
  if (w < 1) throw std::invalid_argument("family instances require w >= 1");
  const int h = 1 << ell;
  if (!input_bits.empty() && static_cast<int>(input_bits.size()) != h)
    throw std::invalid_argument("input bits must cover the right-most column");

  FamilyInstance fi;
  fi.params = {ell, w, input_bits, seed};
  fi.h = h;
  fi.w = w;

  GraphBuilder b(/*trusted=*/true);
  b.reserve(w * (2 * h - 1), w * 4 * h + h * w);
  fi.grid_at.assign(static_cast<size_t>(w), std::vector<int>(static_cast<size_t>(h)));
  fi.tree_at.assign(static_cast<size_t>(w), {});

  // Vertical-certificate bits: the diagonal from (0,0), as in label_vertical.
  auto vbit = [&](int x, int y) { return (x == y && x < w && x < h) ? 1 : 0; };
  auto pi_bit = [&](int x, int y) {
    if (x != w - 1 || input_bits.empty()) return 0;
    return input_bits[static_cast<size_t>(y)];
  };

  NodeId next_id = 1;
  for (int x = 0; x < w; ++x) {
    auto& tree = fi.tree_at[static_cast<size_t>(x)];
    tree.resize(static_cast<size_t>(ell) + 1);
    // Upper tree layers 0..ell-1 hold plain tree nodes; layer ell is the column.
    for (int l = 0; l <= ell; ++l) {
      tree[static_cast<size_t>(l)].resize(static_cast<size_t>(1) << l);
      for (int k = 0; k < (1 << l); ++k) {
        NodeInput in = l == ell ? NodeInput::pi_tree_grid(vbit(x, k), pi_bit(x, k))
                                : NodeInput::pi_tree(0);
        int idx = b.add_node(next_id++, in);
        tree[static_cast<size_t>(l)][static_cast<size_t>(k)] = idx;
        if (l == ell) fi.grid_at[static_cast<size_t>(x)][static_cast<size_t>(k)] = idx;
      }
    }
    // Tree edges. The bottom layer path doubles as the column and carries the
    // composite labels; everything above is pure tree.
    for (int l = 0; l <= ell; ++l) {
      for (int k = 0; k < (1 << l); ++k) {
        int u = tree[static_cast<size_t>(l)][static_cast<size_t>(k)];
        if (k + 1 < (1 << l)) {
          int v = tree[static_cast<size_t>(l)][static_cast<size_t>(k) + 1];
          if (l == ell)
            b.add_edge(u, v, HalfEdgeLabel::composite(Port::U), HalfEdgeLabel::composite(Port::D));
          else
            b.add_edge(u, v, HalfEdgeLabel::tree(Port::R), HalfEdgeLabel::tree(Port::L));
        }
        if (l + 1 <= ell) {
          int cl = tree[static_cast<size_t>(l) + 1][static_cast<size_t>(2 * k)];
          int cr = tree[static_cast<size_t>(l) + 1][static_cast<size_t>(2 * k) + 1];
          b.add_edge(u, cl, HalfEdgeLabel::tree(Port::ChL), HalfEdgeLabel::tree(Port::P));
          b.add_edge(u, cr, HalfEdgeLabel::tree(Port::ChR), HalfEdgeLabel::tree(Port::P));
        }
      }
    }
  }
  // Horizontal grid edges.
  for (int x = 0; x + 1 < w; ++x)
    for (int y = 0; y < h; ++y)
      b.add_edge(fi.grid_at[static_cast<size_t>(x)][static_cast<size_t>(y)],
                 fi.grid_at[static_cast<size_t>(x) + 1][static_cast<size_t>(y)],
                 HalfEdgeLabel::grid(Port::R), HalfEdgeLabel::grid(Port::L));

  fi.graph = maybe_randomize(b.build(), seed);
  return fi;
}

}  // namespace

FamilyInstance gen_family_instance(const FamilyParams& params) {
  if (params.w > params.height())
    throw std::invalid_argument("family instances require w <= h = 2^ell");
  return build_family(params.ell, params.w, params.input_bits, params.seed);
}

FamilyInstance gen_family_instance_unchecked(int ell, int w, const std::vector<int>& input_bits,
                                             std::uint64_t seed) {
  return build_family(ell, w, input_bits, seed);
}

LabeledGraph with_input_bits(const FamilyInstance& fi, const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != fi.h)
    throw std::invalid_argument("input bits must cover the right-most column");
  std::vector<NodeInput> inputs = fi.graph.inputs();
  for (int y = 0; y < fi.h; ++y) {
    int idx = fi.rightmost(y);
    inputs[static_cast<size_t>(idx)] =
        inputs[static_cast<size_t>(idx)].bad_graph_part().with_pi_bit(bits[static_cast<size_t>(y)]);
  }
  return fi.graph.with_inputs(std::move(inputs));
}

}  // namespace lcllab
