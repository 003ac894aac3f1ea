#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcllab {

/// Half-edge symbols. Tree labelings use {L, R, P, ChL, ChR}, grid labelings
/// use {L, R, U, D}. L/R are shared spellings between the two alphabets.
enum class Port : std::uint8_t { L = 0, R, P, ChL, ChR, U, D };

constexpr int kPortCount = 7;

constexpr bool is_tree_port(Port p) {
  return p == Port::L || p == Port::R || p == Port::P || p == Port::ChL ||
         p == Port::ChR;
}
constexpr bool is_grid_port(Port p) {
  return p == Port::L || p == Port::R || p == Port::U || p == Port::D;
}

std::string_view to_string(Port p);
Port port_from_string(std::string_view s);

/// A half-edge label from one of the universes used by the problems:
///   - Plain(p):       bare symbol, used by tree/grid labeled graphs
///   - Tree(t):        (treeEdge, t)
///   - Grid(g):        (gridEdge, g), g in {L, R}
///   - TreeGrid:       the two composite labels
///                     ((gridEdge,D),(treeEdge,L)) and ((gridEdge,U),(treeEdge,R))
class HalfEdgeLabel {
 public:
  enum class Kind : std::uint8_t { Plain, Tree, Grid, TreeGrid };

  HalfEdgeLabel() : kind_(Kind::Plain), main_(Port::L), tree_(Port::L) {}

  static HalfEdgeLabel plain(Port p) { return HalfEdgeLabel(Kind::Plain, p, p); }

  static HalfEdgeLabel tree(Port t) {
    if (!is_tree_port(t)) throw std::invalid_argument("treeEdge label must be a tree symbol");
    return HalfEdgeLabel(Kind::Tree, t, t);
  }

  static HalfEdgeLabel grid(Port g) {
    if (g != Port::L && g != Port::R)
      throw std::invalid_argument("pure gridEdge labels are restricted to {L, R}");
    return HalfEdgeLabel(Kind::Grid, g, g);
  }

  /// Composite label from its grid side: U pairs with tree R, D with tree L.
  static HalfEdgeLabel composite(Port grid_side) {
    if (grid_side == Port::U) return HalfEdgeLabel(Kind::TreeGrid, Port::U, Port::R);
    if (grid_side == Port::D) return HalfEdgeLabel(Kind::TreeGrid, Port::D, Port::L);
    throw std::invalid_argument("composite labels pair only (U,R) and (D,L)");
  }

  Kind kind() const { return kind_; }
  bool is_plain() const { return kind_ == Kind::Plain; }
  bool is_bad_graph() const { return kind_ != Kind::Plain; }

  Port plain_value() const {
    if (kind_ != Kind::Plain) throw std::logic_error("not a plain label");
    return main_;
  }

  bool has_tree_type() const { return kind_ == Kind::Tree || kind_ == Kind::TreeGrid; }
  bool has_grid_type() const { return kind_ == Kind::Grid || kind_ == Kind::TreeGrid; }

  /// val_T, extended to plain symbols from the tree alphabet.
  std::optional<Port> tree_value() const {
    switch (kind_) {
      case Kind::Plain: return is_tree_port(main_) ? std::optional<Port>(main_) : std::nullopt;
      case Kind::Tree: return main_;
      case Kind::TreeGrid: return tree_;
      default: return std::nullopt;
    }
  }

  /// val_G, extended to plain symbols from the grid alphabet.
  std::optional<Port> grid_value() const {
    switch (kind_) {
      case Kind::Plain: return is_grid_port(main_) ? std::optional<Port>(main_) : std::nullopt;
      case Kind::Grid: return main_;
      case Kind::TreeGrid: return main_;
      default: return std::nullopt;
    }
  }

  bool operator==(const HalfEdgeLabel& o) const {
    return kind_ == o.kind_ && main_ == o.main_ && tree_ == o.tree_;
  }
  bool operator!=(const HalfEdgeLabel& o) const { return !(*this == o); }

  std::string to_string() const;
  static HalfEdgeLabel from_string(std::string_view s);

 private:
  HalfEdgeLabel(Kind k, Port main, Port tree) : kind_(k), main_(main), tree_(tree) {}

  Kind kind_;
  Port main_;  // Plain/Tree: the symbol; Grid/TreeGrid: the grid side
  Port tree_;  // TreeGrid: the tree side
};

/// Type of a half-edge label: the t(.) extractor over the badGraph universe.
enum class EdgeType : std::uint8_t { None = 0, Tree = 1, Grid = 2, Both = 3 };

inline EdgeType label_type(const HalfEdgeLabel& l) {
  if (l.is_plain()) throw std::invalid_argument("t() is defined on badGraph labels only");
  switch (l.kind()) {
    case HalfEdgeLabel::Kind::Tree: return EdgeType::Tree;
    case HalfEdgeLabel::Kind::Grid: return EdgeType::Grid;
    default: return EdgeType::Both;
  }
}

inline bool type_contains_tree(EdgeType t) { return t == EdgeType::Tree || t == EdgeType::Both; }
inline bool type_contains_grid(EdgeType t) { return t == EdgeType::Grid || t == EdgeType::Both; }

/// Node input label.
///   None:        unlabeled
///   Bit:         marks for the bad-tree problem / bits for vertical grids
///   TreeNode:    (treeNode)
///   TreeGrid:    (treeNode, gridNode, bit)
///   PiTree:      ((treeNode), inputBit)
///   PiTreeGrid:  ((treeNode, gridNode, bit), inputBit)
class NodeInput {
 public:
  enum class Kind : std::uint8_t { None, Bit, TreeNode, TreeGrid, PiTree, PiTreeGrid };

  NodeInput() : kind_(Kind::None), bit_(0), pi_bit_(0) {}

  static NodeInput none() { return NodeInput(); }
  static NodeInput bit(int b) { return NodeInput(Kind::Bit, b, 0); }
  static NodeInput tree_node() { return NodeInput(Kind::TreeNode, 0, 0); }
  static NodeInput tree_grid(int vbit) { return NodeInput(Kind::TreeGrid, vbit, 0); }
  static NodeInput pi_tree(int input_bit) { return NodeInput(Kind::PiTree, 0, input_bit); }
  static NodeInput pi_tree_grid(int vbit, int input_bit) {
    return NodeInput(Kind::PiTreeGrid, vbit, input_bit);
  }

  Kind kind() const { return kind_; }

  bool is_bad_graph() const {
    return kind_ == Kind::TreeNode || kind_ == Kind::TreeGrid || kind_ == Kind::PiTree ||
           kind_ == Kind::PiTreeGrid;
  }
  bool is_pi() const { return kind_ == Kind::PiTree || kind_ == Kind::PiTreeGrid; }

  /// (treeNode) without a grid part, over the badGraph projection.
  bool is_tree_only() const { return kind_ == Kind::TreeNode || kind_ == Kind::PiTree; }
  bool has_grid_part() const { return kind_ == Kind::TreeGrid || kind_ == Kind::PiTreeGrid; }

  /// Mark bit for bad-tree instances; 0 when absent.
  int mark() const { return kind_ == Kind::Bit ? bit_ : 0; }

  /// Vertical-grid bit; 0 when the node carries none.
  int vgrid_bit() const {
    return (kind_ == Kind::Bit || kind_ == Kind::TreeGrid || kind_ == Kind::PiTreeGrid) ? bit_ : 0;
  }

  int pi_input_bit() const {
    if (!is_pi()) throw std::logic_error("node carries no problem input bit");
    return pi_bit_;
  }

  /// Strip the Pi bit, keeping the badGraph part.
  NodeInput bad_graph_part() const {
    switch (kind_) {
      case Kind::PiTree: return tree_node();
      case Kind::PiTreeGrid: return tree_grid(bit_);
      default: return *this;
    }
  }

  NodeInput with_pi_bit(int input_bit) const {
    switch (kind_) {
      case Kind::TreeNode:
      case Kind::PiTree: return pi_tree(input_bit);
      case Kind::TreeGrid:
      case Kind::PiTreeGrid: return pi_tree_grid(bit_, input_bit);
      default: throw std::logic_error("only badGraph inputs extend to problem inputs");
    }
  }

  bool operator==(const NodeInput& o) const {
    return kind_ == o.kind_ && bit_ == o.bit_ && pi_bit_ == o.pi_bit_;
  }
  bool operator!=(const NodeInput& o) const { return !(*this == o); }

  std::string to_string() const;
  static NodeInput from_string(std::string_view s);

 private:
  NodeInput(Kind k, int bit, int pi_bit)
      : kind_(k), bit_(static_cast<std::uint8_t>(bit & 1)),
        pi_bit_(static_cast<std::uint8_t>(pi_bit & 1)) {
    if (bit != 0 && bit != 1 && k != Kind::None) throw std::invalid_argument("bits must be 0/1");
    if (pi_bit != 0 && pi_bit != 1) throw std::invalid_argument("bits must be 0/1");
  }

  Kind kind_;
  std::uint8_t bit_;
  std::uint8_t pi_bit_;
};

}  // namespace lcllab
