#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcllab/algorithms.hpp"
#include "lcllab/corruptions.hpp"
#include "lcllab/experiments.hpp"
#include "lcllab/json_io.hpp"

using namespace lcllab;
using nlohmann::json;

namespace {

int row_of(const LabeledGraph& g, int u) {
  int row = 0, cur = u;
  while (auto d = follow(g, cur, {Port::D}, Projection::Grid)) {
    cur = *d;
    if (++row > g.node_count()) return -1;
  }
  return row;
}

std::vector<NodeId> make_order(const LabeledGraph& g, const std::string& spec,
                               std::uint64_t seed) {
  std::vector<NodeId> order = g.ids();
  if (spec == "random") {
    std::mt19937_64 rng(seed ^ 0x08de8);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  }
  if (spec == "leftmost-first") {
    const HalfEdgeLabel grid_left = HalfEdgeLabel::grid(Port::L);
    std::vector<std::pair<int, int>> left;  // (row, index)
    std::vector<char> taken(static_cast<size_t>(g.node_count()), 0);
    for (int i = 0; i < g.node_count(); ++i) {
      if (!g.input(i).has_grid_part()) continue;
      if (follow_label(g, i, grid_left)) continue;
      left.push_back({row_of(g, i), i});
    }
    std::sort(left.begin(), left.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<NodeId> out;
    for (auto& [row, i] : left) {
      out.push_back(g.id_of(i));
      taken[static_cast<size_t>(i)] = 1;
    }
    for (int i = 0; i < g.node_count(); ++i)
      if (!taken[static_cast<size_t>(i)]) out.push_back(g.id_of(i));
    return out;
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream f(spec.substr(5));
    if (!f) throw std::runtime_error("cannot read order file " + spec.substr(5));
    json j = json::parse(f);
    std::vector<NodeId> out;
    for (const auto& v : j) out.push_back(v.get<NodeId>());
    return out;
  }
  throw std::runtime_error("unknown order: " + spec + " (random|leftmost-first|file:PATH)");
}

json run_result_to_json(const LabeledGraph& g, const RunResult& r, const std::string& alg,
                        const std::string& model) {
  json j;
  j["algorithm"] = alg;
  j["model"] = model;
  j["n"] = g.node_count();
  j["valid"] = r.valid;
  j["locality_used"] = r.locality_used;
  json outs = json::array();
  for (const auto& te : r.transcript)
    outs.push_back({{"id", te.node}, {"radius", te.radius}, {"out", te.output.to_string()}});
  j["transcript"] = std::move(outs);
  return j;
}

/// Wrapper enforcing a caller-supplied locality cap.
class CappedAlgorithm : public Algorithm {
 public:
  CappedAlgorithm(const Algorithm& inner, int cap) : inner_(inner), cap_(cap) {}
  std::string_view name() const override { return inner_.name(); }
  Problem problem() const override { return inner_.problem(); }
  bool deterministic() const override { return inner_.deterministic(); }
  int declared_locality(std::int64_t n) const override {
    return std::min(cap_, inner_.declared_locality(n));
  }
  Output compute(AlgorithmContext& ctx) const override { return inner_.compute(ctx); }
  bool has_bulk() const override { return inner_.has_bulk(); }
  BulkOutput bulk(const BulkInput& in) const override {
    BulkOutput out = inner_.bulk(in);
    for (int r : out.radii)
      if (r > cap_)
        throw LocalityViolation("whole-graph evaluation exceeded the locality cap");
    return out;
  }

 private:
  const Algorithm& inner_;
  int cap_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for locally checkable labelings: generators, checkers, simulators"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  std::uint64_t seed = 1;
  int jobs = 1;
  bool as_json = false;
  app.add_option("--seed", seed, "global seed")->envname("LCLLAB_SEED");
  app.add_option("--jobs", jobs, "worker threads")->envname("LCLLAB_JOBS");
  app.add_flag("--json", as_json, "machine-readable output where applicable")
      ->envname("LCLLAB_JSON");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate canonical or corrupted instances");
  std::string gen_kind = "family", gen_out = "-", gen_corrupt, gen_bits;
  int gen_ell = 3, gen_w = 2, gen_h = 4;
  gen->add_option("--kind", gen_kind, "family|tree|grid|vgrid")->capture_default_str();
  gen->add_option("--ell", gen_ell, "tree height parameter; family height h = 2^ell")
      ->capture_default_str();
  gen->add_option("-w,--width", gen_w, "columns")->capture_default_str();
  gen->add_option("--height", gen_h, "grid rows (grid/vgrid kinds)")->capture_default_str();
  gen->add_option("--bits", gen_bits, "right-most column input bits, e.g. 0,1,1,0");
  gen->add_option("--corrupt", gen_corrupt, "apply a corruption to the family instance");
  gen->add_option("-o,--out", gen_out, "output file (- = stdout)")->capture_default_str();

  // ---- check ----
  auto* check = app.add_subcommand("check", "run a constraint checker on a graph file");
  std::string check_which = "bad-graph", check_file, check_project = "none", check_outputs_file;
  check->add_option("file", check_file, "graph JSON file")->required();
  check->add_option("--which", check_which, "tree|grid|vgrid|bad-tree|bad-graph|pi")
      ->capture_default_str();
  check->add_option("--project", check_project, "project first: none|tree|grid")
      ->capture_default_str();
  check->add_option("--outputs", check_outputs_file,
                    "output assignment JSON (default: all-empty for bad-tree/bad-graph)");

  // ---- run ----
  auto* run = app.add_subcommand("run", "simulate an algorithm on a graph file");
  std::string run_file, run_alg = "pi-shared", run_model = "local-shared",
              run_order = "random", run_out = "-";
  int run_T = 0;
  std::int64_t run_trials = 1;
  bool run_fast = false;
  run->add_option("file", run_file, "graph JSON file")->required();
  run->add_option("--alg", run_alg, "algorithm name")->capture_default_str();
  run->add_option("--model", run_model,
                  "local-det|local-private|local-shared|slocal-private|online-local-det")
      ->capture_default_str();
  run->add_option("--T", run_T, "locality cap (0 = algorithm default)");
  run->add_option("--trials", run_trials, "independent trials")->capture_default_str();
  run->add_option("--order", run_order, "random|leftmost-first|file:PATH (sequential models)")
      ->capture_default_str();
  run->add_flag("--fast", run_fast, "use the whole-graph evaluator when available");
  run->add_option("-o,--out", run_out, "output file (- = stdout)")->capture_default_str();

  // ---- experiment ----
  auto* exp = app.add_subcommand("experiment", "reproduce one of the paper-scale experiments");
  std::string exp_name, exp_sizes, exp_dir = ".";
  std::int64_t exp_trials = 0;
  exp->add_option("--name", exp_name,
                  "shared-upper|private-lower|slocal-lower|online-lower|union-demo")
      ->required();
  exp->add_option("--sizes", exp_sizes, "comma list of ell:w pairs, e.g. 4:3,5:4");
  exp->add_option("--trials", exp_trials, "trials per cell (0 = default)");
  exp->add_option("--out", exp_dir, "output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      LabeledGraph g;
      std::map<std::string, std::string> meta;
      if (gen_kind == "tree") {
        g = gen_tree(gen_ell, seed).graph;
        meta = {{"family", "tree"}, {"ell", std::to_string(gen_ell)}};
      } else if (gen_kind == "grid" || gen_kind == "vgrid") {
        GridInstance gi = gen_grid(gen_h, gen_w, seed);
        if (gen_kind == "vgrid") gi = label_vertical(gi);
        g = gi.graph;
        meta = {{"family", gen_kind}, {"h", std::to_string(gen_h)}, {"w", std::to_string(gen_w)}};
      } else if (gen_kind == "family") {
        std::vector<int> bits;
        if (!gen_bits.empty()) {
          for (char c : gen_bits)
            if (c == '0' || c == '1') bits.push_back(c - '0');
        }
        FamilyInstance fi = gen_family_instance({gen_ell, gen_w, bits, seed});
        if (!gen_corrupt.empty()) {
          Corruption c{corruption_kind_from_string(gen_corrupt), seed, 0, 0};
          CorruptedInstance ci = corrupt(fi, c);
          g = ci.graph;
          meta = {{"family", "G"},
                  {"ell", std::to_string(gen_ell)},
                  {"w", std::to_string(gen_w)},
                  {"seed", std::to_string(seed)},
                  {"corruption", std::string(to_string(c.kind))},
                  {"note", ci.note}};
        } else {
          g = fi.graph;
          meta = {{"family", "G"},
                  {"ell", std::to_string(gen_ell)},
                  {"w", std::to_string(gen_w)},
                  {"seed", std::to_string(seed)}};
        }
      } else {
        std::cerr << "unknown kind: " << gen_kind << "\n";
        return 2;
      }
      if (gen_out == "-")
        std::cout << graph_to_json(g, meta) << "\n";
      else
        save_graph(g, gen_out, meta);
      return 0;
    }

    if (*check) {
      LabeledGraph g = load_graph(check_file);
      if (check_project == "tree") g = project(g, EdgeType::Tree);
      else if (check_project == "grid") g = project(g, EdgeType::Grid);
      else if (check_project != "none") {
        std::cerr << "unknown projection: " << check_project << "\n";
        return 2;
      }
      ViolationReport rep;
      if (check_which == "tree") rep = check_tree(g);
      else if (check_which == "grid") rep = check_grid(g);
      else if (check_which == "vgrid") rep = check_vgrid(g);
      else {
        Problem p = problem_from_string(check_which);
        OutputAssignment out;
        if (!check_outputs_file.empty()) {
          out = load_outputs(g, check_outputs_file);
          out.problem = p;
        } else if (p == Problem::Pi) {
          std::cerr << "--which pi requires --outputs\n";
          return 2;
        } else {
          out = OutputAssignment::all_bot(p, g.node_count());
        }
        rep = check_outputs(g, out);
      }
      std::cout << violations_to_json_lines(rep);
      if (!as_json)
        std::cerr << (rep.empty() ? "ok: no violations" : "violations: " +
                      std::to_string(rep.size()))
                  << "\n";
      return rep.empty() ? 0 : 1;
    }

    if (*run) {
      LabeledGraph g = load_graph(run_file);
      const Algorithm& base = find_algorithm(run_alg);
      std::unique_ptr<CappedAlgorithm> capped;
      const Algorithm* alg = &base;
      if (run_T > 0) {
        capped = std::make_unique<CappedAlgorithm>(base, run_T);
        alg = capped.get();
      }
      ModelKind kind = model_kind_from_string(run_model);
      if (run_trials <= 1) {
        Model model{kind, seed, mix64(seed, 2), false};
        RunResult r;
        if (kind == ModelKind::SlocalPrivate)
          r = run_slocal(*alg, g, make_order(g, run_order, seed), model);
        else if (kind == ModelKind::OnlineLocalDet)
          r = run_online_local(*alg, g, make_order(g, run_order, seed), model);
        else
          r = run_fast ? run_local_fast(*alg, g, model) : run_local(*alg, g, model);
        json j = run_result_to_json(g, r, run_alg, run_model);
        if (run_out == "-")
          std::cout << j.dump(2) << "\n";
        else
          std::ofstream(run_out) << j.dump(2) << "\n";
        return r.valid ? 0 : 1;
      }
      Model model{kind, seed, 0, false};
      auto factory = [&g](std::uint64_t trial) {
        return with_random_ids(g, mix64(trial, 0x1d5) | 1);
      };
      SuccessEstimate est = estimate_success(*alg, factory, model, run_trials, jobs);
      std::ostringstream csv;
      csv << "n,trials,rate,ci_low,ci_high,locality_used\n"
          << g.node_count() << "," << est.trials << "," << est.rate << "," << est.ci.low << ","
          << est.ci.high << "," << est.max_locality << "\n";
      if (run_out == "-")
        std::cout << csv.str();
      else
        std::ofstream(run_out) << csv.str();
      return 0;
    }

    if (*exp) {
      ExperimentSpec spec;
      spec.name = exp_name;
      spec.seed = seed;
      spec.jobs = jobs;
      spec.out_dir = exp_dir;
      if (exp_trials > 0) spec.trials = exp_trials;
      else spec.trials = exp_name == "shared-upper" ? 2000 : 1000;
      if (!exp_sizes.empty()) {
        std::stringstream ss(exp_sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto colon = tok.find(':');
          if (colon == std::string::npos) throw std::runtime_error("sizes must be ell:w pairs");
          spec.sizes.emplace_back(std::stoi(tok.substr(0, colon)),
                                  std::stoi(tok.substr(colon + 1)));
        }
      }
      ExperimentResult res = run_experiment(spec);
      std::filesystem::create_directories(spec.out_dir);
      std::ofstream(spec.out_dir / (spec.name + ".csv")) << res.csv;
      std::ofstream(spec.out_dir / (spec.name + ".summary.txt")) << res.summary;
      std::cout << res.summary;
      std::cout << (res.all_passed ? "result: PASS" : "result: FAIL") << "\n";
      return res.all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
