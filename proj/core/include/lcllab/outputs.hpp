#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcllab/labels.hpp"

namespace lcllab {

enum class Problem : std::uint8_t { BadTree, BadGraph, Pi };

std::string_view to_string(Problem p);
Problem problem_from_string(std::string_view s);

/// One output label across the three universes.
///
///   bad-tree:  Bot | Error | (pointer, p), p in {L, R, P, ChR}
///   bad-graph: Bot | Error | TreeError | GridError | VertError
///              | (ColumnError, l) with l a non-Bot bad-tree label
///              ((ColumnError, Bot) is identified with Bot and never stored)
///   problem:   bad-graph minus Bot, plus (bit, yes/no) and yes/no
struct Output {
  enum class Kind : std::uint8_t {
    Bot, Error, Pointer, TreeError, GridError, VertError,
    ColumnErrorError, ColumnErrorPointer, BitFlag, Flag
  };

  Kind kind = Kind::Bot;
  Port pointer = Port::L;  // Pointer / ColumnErrorPointer
  std::uint8_t bit = 0;    // BitFlag
  bool yes = false;        // BitFlag / Flag

  static Output bot() { return {}; }
  static Output error() { return {Kind::Error}; }
  static Output pointer_to(Port p) {
    if (p != Port::L && p != Port::R && p != Port::P && p != Port::ChR)
      throw std::invalid_argument("pointer labels are restricted to {L, R, P, ChR}");
    Output o{Kind::Pointer};
    o.pointer = p;
    return o;
  }
  static Output tree_error() { return {Kind::TreeError}; }
  static Output grid_error() { return {Kind::GridError}; }
  static Output vert_error() { return {Kind::VertError}; }
  /// Wraps a bad-tree label; (ColumnError, Bot) collapses to Bot.
  static Output column_error(const Output& bad_tree_label);
  static Output bit_flag(int b, bool is_yes) {
    Output o{Kind::BitFlag};
    o.bit = static_cast<std::uint8_t>(b & 1);
    o.yes = is_yes;
    return o;
  }
  static Output flag(bool is_yes) {
    Output o{Kind::Flag};
    o.yes = is_yes;
    return o;
  }

  bool is_bot() const { return kind == Kind::Bot; }

  bool in_bad_tree_universe() const {
    return kind == Kind::Bot || kind == Kind::Error || kind == Kind::Pointer;
  }
  bool in_bad_graph_universe() const {
    switch (kind) {
      case Kind::Bot: case Kind::Error: case Kind::TreeError: case Kind::GridError:
      case Kind::VertError: case Kind::ColumnErrorError: case Kind::ColumnErrorPointer:
        return true;
      default:
        return false;
    }
  }
  bool in_pi_universe() const {
    if (kind == Kind::BitFlag || kind == Kind::Flag) return true;
    return in_bad_graph_universe() && kind != Kind::Bot;
  }

  /// The bad-tree label a ColumnError wraps; Bot for plain Bot.
  Output unwrap_column() const {
    if (kind == Kind::ColumnErrorError) return error();
    if (kind == Kind::ColumnErrorPointer) return pointer_to(pointer);
    if (kind == Kind::Bot) return bot();
    throw std::logic_error("not a column label");
  }

  bool operator==(const Output& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::Pointer: case Kind::ColumnErrorPointer: return pointer == o.pointer;
      case Kind::BitFlag: return bit == o.bit && yes == o.yes;
      case Kind::Flag: return yes == o.yes;
      default: return true;
    }
  }
  bool operator!=(const Output& o) const { return !(*this == o); }

  std::string to_string() const;
  static Output from_string(std::string_view s);

 private:
  Output(Kind k) : kind(k) {}
  Output() = default;
  friend struct OutputAssignment;
};

/// node index -> output label for one problem instance.
struct OutputAssignment {
  Problem problem = Problem::BadTree;
  std::vector<Output> by_index;

  static OutputAssignment all_bot(Problem p, int n) {
    OutputAssignment a;
    a.problem = p;
    a.by_index.assign(static_cast<size_t>(n), Output::bot());
    return a;
  }

  const Output& at(int index) const { return by_index[static_cast<size_t>(index)]; }
  Output& at(int index) { return by_index[static_cast<size_t>(index)]; }
  int size() const { return static_cast<int>(by_index.size()); }
};

/// All labels of a universe, for exhaustive enumeration.
std::vector<Output> bad_tree_universe();
std::vector<Output> bad_graph_universe();
std::vector<Output> pi_universe();

}  // namespace lcllab
