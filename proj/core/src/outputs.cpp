#include "lcllab/outputs.hpp"

namespace lcllab {

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::BadTree: return "bad-tree";
    case Problem::BadGraph: return "bad-graph";
    case Problem::Pi: return "pi";
  }
  return "?";
}

Problem problem_from_string(std::string_view s) {
  if (s == "bad-tree") return Problem::BadTree;
  if (s == "bad-graph") return Problem::BadGraph;
  if (s == "pi") return Problem::Pi;
  throw std::invalid_argument("unknown problem: " + std::string(s));
}

Output Output::column_error(const Output& inner) {
  if (!inner.in_bad_tree_universe())
    throw std::invalid_argument("ColumnError wraps bad-tree labels only");
  switch (inner.kind) {
    case Kind::Bot: return bot();
    case Kind::Error: return {Kind::ColumnErrorError};
    default: {
      Output o{Kind::ColumnErrorPointer};
      o.pointer = inner.pointer;
      return o;
    }
  }
}

std::string Output::to_string() const {
  switch (kind) {
    case Kind::Bot: return "bot";
    case Kind::Error: return "Error";
    case Kind::Pointer: return "pointer:" + std::string(lcllab::to_string(pointer));
    case Kind::TreeError: return "TreeError";
    case Kind::GridError: return "GridError";
    case Kind::VertError: return "VertError";
    case Kind::ColumnErrorError: return "ColumnError:Error";
    case Kind::ColumnErrorPointer:
      return "ColumnError:pointer:" + std::string(lcllab::to_string(pointer));
    case Kind::BitFlag:
      return std::string(bit ? "1" : "0") + (yes ? ":yes" : ":no");
    case Kind::Flag: return yes ? "yes" : "no";
  }
  return "?";
}

Output Output::from_string(std::string_view s) {
  if (s == "bot") return bot();
  if (s == "Error") return error();
  if (s == "TreeError") return tree_error();
  if (s == "GridError") return grid_error();
  if (s == "VertError") return vert_error();
  if (s == "yes") return flag(true);
  if (s == "no") return flag(false);
  if (s.rfind("pointer:", 0) == 0) return pointer_to(port_from_string(s.substr(8)));
  if (s == "ColumnError:Error") return column_error(error());
  if (s.rfind("ColumnError:pointer:", 0) == 0)
    return column_error(pointer_to(port_from_string(s.substr(20))));
  if (s.size() >= 3 && (s[0] == '0' || s[0] == '1') && s[1] == ':') {
    std::string_view rest = s.substr(2);
    if (rest == "yes") return bit_flag(s[0] - '0', true);
    if (rest == "no") return bit_flag(s[0] - '0', false);
  }
  throw std::invalid_argument("unknown output label: " + std::string(s));
}

std::vector<Output> bad_tree_universe() {
  std::vector<Output> u{Output::bot(), Output::error()};
  for (Port p : {Port::L, Port::R, Port::P, Port::ChR}) u.push_back(Output::pointer_to(p));
  return u;
}

std::vector<Output> bad_graph_universe() {
  std::vector<Output> u{Output::bot(), Output::error(), Output::tree_error(),
                        Output::grid_error(), Output::vert_error()};
  u.push_back(Output::column_error(Output::error()));
  for (Port p : {Port::L, Port::R, Port::P, Port::ChR})
    u.push_back(Output::column_error(Output::pointer_to(p)));
  return u;
}

std::vector<Output> pi_universe() {
  std::vector<Output> u;
  for (const auto& o : bad_graph_universe())
    if (!o.is_bot()) u.push_back(o);
  for (int b : {0, 1})
    for (bool y : {true, false}) u.push_back(Output::bit_flag(b, y));
  u.push_back(Output::flag(true));
  u.push_back(Output::flag(false));
  return u;
}

}  // namespace lcllab
