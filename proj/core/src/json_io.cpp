#include "lcllab/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace lcllab {

using nlohmann::json;

std::string graph_to_json(const LabeledGraph& g, const std::map<std::string, std::string>& meta) {
  json j;
  j["n"] = g.node_count();
  json nodes = json::array();
  for (int i = 0; i < g.node_count(); ++i) {
    nodes.push_back({{"id", g.id_of(i)}, {"input", g.input(i).to_string()}});
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", g.id_of(e.u)},
                     {"v", g.id_of(e.v)},
                     {"label_u", e.label_u.to_string()},
                     {"label_v", e.label_v.to_string()}});
  }
  j["edges"] = std::move(edges);
  if (!meta.empty()) {
    json m;
    for (const auto& [k, v] : meta) m[k] = v;
    j["meta"] = std::move(m);
  }
  return j.dump(2);
}

LabeledGraph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  GraphBuilder b;
  for (const auto& n : j.at("nodes")) {
    b.add_node(n.at("id").get<NodeId>(),
               NodeInput::from_string(n.value("input", std::string())));
  }
  LabeledGraph partial = b.build();
  if (j.contains("n") && j.at("n").get<int>() != partial.node_count())
    throw std::invalid_argument("graph file: n does not match the node list");
  GraphBuilder full;
  for (int i = 0; i < partial.node_count(); ++i) full.add_node(partial.id_of(i), partial.input(i));
  for (const auto& e : j.at("edges")) {
    int u = partial.index_of(e.at("u").get<NodeId>());
    int v = partial.index_of(e.at("v").get<NodeId>());
    full.add_edge(u, v, HalfEdgeLabel::from_string(e.at("label_u").get<std::string>()),
                  HalfEdgeLabel::from_string(e.at("label_v").get<std::string>()));
  }
  return full.build();
}

void save_graph(const LabeledGraph& g, const std::filesystem::path& path,
                const std::map<std::string, std::string>& meta) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << graph_to_json(g, meta) << "\n";
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return graph_from_json(text);
}

std::string outputs_to_json(const LabeledGraph& g, const OutputAssignment& out) {
  json j;
  j["problem"] = std::string(to_string(out.problem));
  json arr = json::array();
  for (int i = 0; i < out.size(); ++i)
    arr.push_back({{"id", g.id_of(i)}, {"out", out.at(i).to_string()}});
  j["outputs"] = std::move(arr);
  return j.dump(2);
}

OutputAssignment outputs_from_json(const LabeledGraph& g, const std::string& text) {
  json j = json::parse(text);
  OutputAssignment out;
  out.problem = problem_from_string(j.at("problem").get<std::string>());
  out.by_index.assign(static_cast<size_t>(g.node_count()), Output::bot());
  std::vector<bool> seen(static_cast<size_t>(g.node_count()), false);
  for (const auto& o : j.at("outputs")) {
    int idx = g.index_of(o.at("id").get<NodeId>());
    out.at(idx) = Output::from_string(o.at("out").get<std::string>());
    seen[static_cast<size_t>(idx)] = true;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw std::invalid_argument("output file misses node " + std::to_string(g.id_of(static_cast<int>(i))));
  return out;
}

void save_outputs(const LabeledGraph& g, const OutputAssignment& out,
                  const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << outputs_to_json(g, out) << "\n";
}

OutputAssignment load_outputs(const LabeledGraph& g, const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return outputs_from_json(g, text);
}

std::string violations_to_json_lines(const ViolationReport& report) {
  std::string out;
  for (const auto& v : report.entries) {
    json j{{"node", v.node}, {"rule", v.rule}, {"radius", v.radius}, {"msg", v.message}};
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace lcllab
