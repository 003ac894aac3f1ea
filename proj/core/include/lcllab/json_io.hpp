#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "lcllab/graph.hpp"
#include "lcllab/outputs.hpp"
#include "lcllab/checkers.hpp"

namespace lcllab {

/// Graph file format:
///   {"n": int,
///    "nodes": [{"id": int, "input": string}, ...],
///    "edges": [{"u": int, "v": int, "label_u": string, "label_v": string}, ...],
///    "meta": {...}}        // optional, preserved round-trip by the CLI
std::string graph_to_json(const LabeledGraph& g,
                          const std::map<std::string, std::string>& meta = {});
LabeledGraph graph_from_json(const std::string& text);

void save_graph(const LabeledGraph& g, const std::filesystem::path& path,
                const std::map<std::string, std::string>& meta = {});
LabeledGraph load_graph(const std::filesystem::path& path);

/// {"problem": string, "outputs": [{"id": int, "out": string}, ...]}
std::string outputs_to_json(const LabeledGraph& g, const OutputAssignment& out);
OutputAssignment outputs_from_json(const LabeledGraph& g, const std::string& text);

void save_outputs(const LabeledGraph& g, const OutputAssignment& out,
                  const std::filesystem::path& path);
OutputAssignment load_outputs(const LabeledGraph& g, const std::filesystem::path& path);

/// One JSON object per line: {"node":..,"rule":..,"radius":..,"msg":..}
std::string violations_to_json_lines(const ViolationReport& report);

}  // namespace lcllab
