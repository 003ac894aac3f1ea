#include <doctest.h>

#include "lcllab/adversary.hpp"
#include "oracles.hpp"

using namespace lcllab;

namespace {

class WideEyes : public Algorithm {
 public:
  std::string_view name() const override { return "test-wide-eyes"; }
  Problem problem() const override { return Problem::Pi; }
  bool deterministic() const override { return true; }
  Output compute(AlgorithmContext& ctx) const override {
    ctx.view(8);
    return Output::bit_flag(0, true);
  }
};

}  // namespace

TEST_CASE("order shapes") {
  FamilyInstance fi = gen_family_instance({2, 4, {}, 7});  // square: w = h = 4
  std::vector<NodeId> slocal = adversary_order(SequentialModel::Slocal, fi);
  std::vector<NodeId> online = adversary_order(SequentialModel::OnlineLocal, fi);
  CHECK(slocal.size() == static_cast<size_t>(fi.graph.node_count()));
  CHECK(online.size() == static_cast<size_t>(fi.graph.node_count()));
  for (int i = 0; i < fi.h; ++i) {
    CHECK(slocal[static_cast<size_t>(i)] == fi.graph.id_of(fi.leftmost(fi.h - 1 - i)));
    CHECK(slocal[static_cast<size_t>(fi.h + i)] == fi.graph.id_of(fi.rightmost(fi.h - 1 - i)));
    CHECK(online[static_cast<size_t>(i)] == fi.graph.id_of(fi.leftmost(fi.h - 1 - i)));
  }
  FamilyInstance tall = gen_family_instance({2, 2, {}, 7});
  CHECK_THROWS_AS(adversary_order(SequentialModel::Slocal, tall), std::invalid_argument);
}

TEST_CASE("input adversary refuses far-seeing algorithms") {
  FamilyInstance fi = gen_family_instance({2, 4, {}, 9});
  CHECK_THROWS_AS(adversary_inputs(WideEyes{}, fi, 5, 3), std::invalid_argument);
}

TEST_CASE("input adversary flips every row of a deterministic baseline") {
  FamilyInstance fi = gen_family_instance({6, 64, {}, 11});
  const Algorithm& zero = find_algorithm("pi-private-zero");
  AdversaryPlan plan = adversary_inputs(zero, fi, 20, 13);
  CHECK(plan.measured_locality * 3 <= fi.w);
  for (int y = 0; y < fi.h; ++y) {
    CHECK(plan.estimated_p0[static_cast<size_t>(y)] == 1.0);  // always outputs 0
    CHECK(plan.input_bits[static_cast<size_t>(y)] == 1);      // starve it
  }
  LabeledGraph rigged = with_input_bits(fi, plan.input_bits);
  auto factory = [&rigged](std::uint64_t t) { return with_random_ids(rigged, mix64(t, 5) | 1); };
  SuccessEstimate est =
      estimate_success(zero, factory, {ModelKind::LocalPrivate, 15, 0, false}, 40);
  CHECK(est.rate == 0.0);
}

TEST_CASE("uncoordinated rows collapse with or without the adversary") {
  FamilyInstance fi = gen_family_instance({6, 64, {}, 17});
  const Algorithm& rowrand = find_algorithm("pi-private-rowrand");
  AdversaryPlan plan = adversary_inputs(rowrand, fi, 60, 19);
  LabeledGraph rigged = with_input_bits(fi, plan.input_bits);
  auto factory = [&rigged](std::uint64_t t) { return with_random_ids(rigged, mix64(t, 7) | 1); };
  SuccessEstimate est =
      estimate_success(rowrand, factory, {ModelKind::LocalPrivate, 23, 0, false}, 60);
  CHECK(est.rate <= 0.1);
}

TEST_CASE("shared randomness evades the input adversary") {
  // fix the plan from observed runs, then draw fresh shared bits per trial
  FamilyInstance fi = gen_family_instance({6, 64, {}, 29});
  const Algorithm& shared = find_algorithm("pi-shared");
  const std::int64_t probe_trials = 40;
  std::vector<std::int64_t> zeros(static_cast<size_t>(fi.h), 0);
  for (std::int64_t t = 0; t < probe_trials; ++t) {
    RunResult r = run_local_fast(shared, fi.graph,
                                 {ModelKind::LocalShared, mix64(31, t), 0, false});
    for (int y = 0; y < fi.h; ++y) {
      const Output& o = r.outputs.at(fi.leftmost(y));
      if (o.kind == Output::Kind::BitFlag && o.bit == 0) ++zeros[static_cast<size_t>(y)];
    }
  }
  std::vector<int> bits(static_cast<size_t>(fi.h));
  for (int y = 0; y < fi.h; ++y)
    bits[static_cast<size_t>(y)] =
        wilson_interval(zeros[static_cast<size_t>(y)], probe_trials).high < 0.5 ? 0 : 1;
  LabeledGraph rigged = with_input_bits(fi, bits);
  auto factory = [&rigged](std::uint64_t t) { return with_random_ids(rigged, mix64(t, 9) | 1); };
  SuccessEstimate est =
      estimate_success(shared, factory, {ModelKind::LocalShared, 37, 0, false}, 60);
  CHECK(est.rate >= 0.9);  // the plan cannot anticipate fresh shared bits
}

TEST_CASE("online adversary defeats the greedy baseline") {
  FamilyInstance fi = gen_family_instance({5, 32, {}, 41});
  const Algorithm& greedy = find_algorithm("pi-online-greedy");
  OnlineAdversaryResult res = adversary_online_inputs(greedy, fi, 43);
  CHECK(res.final_run.locality_used * 3 <= fi.w);
  CHECK(!res.final_run.valid);
  // the committed left column cannot match the rigged inputs
  for (int y = 0; y < fi.h; ++y) {
    const Output& o = res.final_run.outputs.at(fi.leftmost(y));
    REQUIRE(o.kind == Output::Kind::BitFlag);
    CHECK(o.bit == 1 - res.input_bits[static_cast<size_t>(y)]);
  }
}
