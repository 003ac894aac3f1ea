#include "lcllab/labels.hpp"

namespace lcllab {

std::string_view to_string(Port p) {
  switch (p) {
    case Port::L: return "L";
    case Port::R: return "R";
    case Port::P: return "P";
    case Port::ChL: return "ChL";
    case Port::ChR: return "ChR";
    case Port::U: return "U";
    case Port::D: return "D";
  }
  return "?";
}

Port port_from_string(std::string_view s) {
  if (s == "L") return Port::L;
  if (s == "R") return Port::R;
  if (s == "P") return Port::P;
  if (s == "ChL") return Port::ChL;
  if (s == "ChR") return Port::ChR;
  if (s == "U") return Port::U;
  if (s == "D") return Port::D;
  throw std::invalid_argument("unknown half-edge symbol: " + std::string(s));
}

std::string HalfEdgeLabel::to_string() const {
  switch (kind_) {
    case Kind::Plain:
      return std::string(lcllab::to_string(main_));
    case Kind::Tree:
      return "treeEdge:" + std::string(lcllab::to_string(main_));
    case Kind::Grid:
      return "gridEdge:" + std::string(lcllab::to_string(main_));
    case Kind::TreeGrid:
      return "gridEdge:" + std::string(lcllab::to_string(main_)) +
             "+treeEdge:" + std::string(lcllab::to_string(tree_));
  }
  return "?";
}

HalfEdgeLabel HalfEdgeLabel::from_string(std::string_view s) {
  auto plus = s.find('+');
  if (plus != std::string_view::npos) {
    std::string_view g = s.substr(0, plus);
    std::string_view t = s.substr(plus + 1);
    if (g.rfind("gridEdge:", 0) != 0 || t.rfind("treeEdge:", 0) != 0)
      throw std::invalid_argument("malformed composite label: " + std::string(s));
    Port gp = port_from_string(g.substr(9));
    Port tp = port_from_string(t.substr(9));
    HalfEdgeLabel l = composite(gp);
    if (l.tree_value() != tp)
      throw std::invalid_argument("composite label pairs only (U,R) and (D,L): " + std::string(s));
    return l;
  }
  if (s.rfind("treeEdge:", 0) == 0) return tree(port_from_string(s.substr(9)));
  if (s.rfind("gridEdge:", 0) == 0) return grid(port_from_string(s.substr(9)));
  return plain(port_from_string(s));
}

std::string NodeInput::to_string() const {
  switch (kind_) {
    case Kind::None: return "";
    case Kind::Bit: return bit_ ? "1" : "0";
    case Kind::TreeNode: return "treeNode";
    case Kind::TreeGrid: return std::string("treeNode+gridNode:") + (bit_ ? "1" : "0");
    case Kind::PiTree: return std::string("treeNode|bit:") + (pi_bit_ ? "1" : "0");
    case Kind::PiTreeGrid:
      return std::string("treeNode+gridNode:") + (bit_ ? "1" : "0") + "|bit:" +
             (pi_bit_ ? "1" : "0");
  }
  return "";
}

NodeInput NodeInput::from_string(std::string_view s) {
  if (s.empty()) return none();
  if (s == "0") return bit(0);
  if (s == "1") return bit(1);
  int pi = -1;
  auto bar = s.find("|bit:");
  if (bar != std::string_view::npos) {
    std::string_view b = s.substr(bar + 5);
    if (b == "0") pi = 0;
    else if (b == "1") pi = 1;
    else throw std::invalid_argument("malformed node input: " + std::string(s));
    s = s.substr(0, bar);
  }
  NodeInput base;
  if (s == "treeNode") {
    base = tree_node();
  } else if (s.rfind("treeNode+gridNode:", 0) == 0) {
    std::string_view b = s.substr(18);
    if (b == "0") base = tree_grid(0);
    else if (b == "1") base = tree_grid(1);
    else throw std::invalid_argument("malformed node input: " + std::string(s));
  } else {
    throw std::invalid_argument("malformed node input: " + std::string(s));
  }
  return pi < 0 ? base : base.with_pi_bit(pi);
}

}  // namespace lcllab
