#include "lcllab/adversary.hpp"

#include <atomic>
#include <thread>

namespace lcllab {

AdversaryPlan adversary_inputs(const Algorithm& alg, const FamilyInstance& fi,
                               std::int64_t trials, std::uint64_t seed, int jobs) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (alg.problem() != Problem::Pi)
    throw std::invalid_argument("the input adversary targets problem algorithms");
  const int h = fi.h;
  LabeledGraph placeholder = with_input_bits(fi, std::vector<int>(static_cast<size_t>(h), 0));

  std::vector<std::int64_t> zeros(static_cast<size_t>(h), 0);
  std::atomic<int> max_locality{0};
  std::vector<std::vector<std::int64_t>> partials(static_cast<size_t>(std::max(1, jobs)),
                                                  std::vector<std::int64_t>(static_cast<size_t>(h), 0));
  std::atomic<std::int64_t> next{0};

  auto worker = [&](int slot) {
    for (;;) {
      std::int64_t t = next.fetch_add(1);
      if (t >= trials) return;
      Model m{ModelKind::LocalPrivate, mix64(seed, static_cast<std::uint64_t>(t) + 1), 0, false};
      RunResult r = run_local_fast(alg, placeholder, m);
      int cur = max_locality.load();
      while (r.locality_used > cur && !max_locality.compare_exchange_weak(cur, r.locality_used)) {
      }
      for (int y = 0; y < h; ++y) {
        const Output& o = r.outputs.at(fi.leftmost(y));
        if (o.kind == Output::Kind::BitFlag && o.bit == 0)
          ++partials[static_cast<size_t>(slot)][static_cast<size_t>(y)];
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
  }
  for (const auto& part : partials)
    for (int y = 0; y < h; ++y) zeros[static_cast<size_t>(y)] += part[static_cast<size_t>(y)];

  AdversaryPlan plan;
  plan.trials_used = trials;
  plan.measured_locality = max_locality.load();
  if (plan.measured_locality * 3 > fi.w)
    throw std::invalid_argument("measured locality " + std::to_string(plan.measured_locality) +
                                " exceeds w/3 = " + std::to_string(fi.w / 3.0) +
                                "; the independence hypothesis fails");
  plan.input_bits.resize(static_cast<size_t>(h));
  plan.estimated_p0.resize(static_cast<size_t>(h));
  for (int y = 0; y < h; ++y) {
    plan.estimated_p0[static_cast<size_t>(y)] =
        static_cast<double>(zeros[static_cast<size_t>(y)]) / static_cast<double>(trials);
    // Row leans toward 1 when even the upper confidence bound of P[output 0]
    // stays below 1/2: starve it with input 0. Otherwise input 1.
    Interval ci = wilson_interval(zeros[static_cast<size_t>(y)], trials);
    plan.input_bits[static_cast<size_t>(y)] = ci.high < 0.5 ? 0 : 1;
  }
  return plan;
}

std::vector<NodeId> adversary_order(SequentialModel model, const FamilyInstance& fi) {
  if (fi.w != fi.h)
    throw std::invalid_argument("the sequential adversaries use square instances (w = h)");
  std::vector<NodeId> order;
  std::vector<char> placed(static_cast<size_t>(fi.graph.node_count()), 0);
  auto put = [&](int idx) {
    if (!placed[static_cast<size_t>(idx)]) {
      placed[static_cast<size_t>(idx)] = 1;
      order.push_back(fi.graph.id_of(idx));
    }
  };
  for (int y = fi.h - 1; y >= 0; --y) put(fi.leftmost(y));  // left column, top to bottom
  if (model == SequentialModel::Slocal)
    for (int y = fi.h - 1; y >= 0; --y) put(fi.rightmost(y));
  for (int i = 0; i < fi.graph.node_count(); ++i) put(i);
  return order;
}

OnlineAdversaryResult adversary_online_inputs(const Algorithm& alg, const FamilyInstance& fi,
                                              std::uint64_t id_seed) {
  if (!alg.deterministic())
    throw std::invalid_argument("the online adversary targets deterministic algorithms");
  std::vector<NodeId> order = adversary_order(SequentialModel::OnlineLocal, fi);
  Model model{ModelKind::OnlineLocalDet, 0, id_seed, false};

  // Phase 1: probe run on placeholder inputs; only the left column matters.
  LabeledGraph placeholder = with_input_bits(fi, std::vector<int>(static_cast<size_t>(fi.h), 0));
  RunResult probe = run_online_local(alg, placeholder, order, model, fi.h);

  OnlineAdversaryResult out;
  out.input_bits.resize(static_cast<size_t>(fi.h), 0);
  for (int y = 0; y < fi.h; ++y) {
    const Output& o = probe.outputs.at(fi.leftmost(y));
    int committed = o.kind == Output::Kind::BitFlag ? o.bit : 0;
    out.input_bits[static_cast<size_t>(y)] = 1 - committed;
    for (const auto& te : probe.transcript)
      if (te.node == fi.graph.id_of(fi.leftmost(y)))
        out.left_column_locality = std::max(out.left_column_locality, te.radius);
  }

  // Phase 2: the run that counts, on the adversarial inputs. The algorithm is
  // deterministic and the left column cannot see the right-most inputs, so the
  // left column commits to the same outputs as in the probe.
  LabeledGraph rigged = with_input_bits(fi, out.input_bits);
  out.final_run = run_online_local(alg, rigged, order, model);
  return out;
}

}  // namespace lcllab
