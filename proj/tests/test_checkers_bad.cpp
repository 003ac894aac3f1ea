#include <doctest.h>

#include <random>

#include "lcllab/algorithms.hpp"
#include "lcllab/corruptions.hpp"
#include "oracles.hpp"

using namespace lcllab;

namespace {

HalfEdgeLabel pl(Port p) { return HalfEdgeLabel::plain(p); }

OutputAssignment assignment(Problem p, const LabeledGraph& g, std::vector<Output> outs) {
  OutputAssignment a;
  a.problem = p;
  a.by_index = std::move(outs);
  REQUIRE(a.size() == g.node_count());
  return a;
}

/// Row-constant solution built from the generator's coordinates, independent
/// of the solver: bit[y] on row y, honest yes/no aggregation up the trees.
OutputAssignment handmade_pi_solution(const FamilyInstance& fi, const std::vector<int>& row_bits) {
  OutputAssignment out = OutputAssignment::all_bot(Problem::Pi, fi.graph.node_count());
  std::vector<char> yes(static_cast<size_t>(fi.graph.node_count()), 0);
  for (int x = 0; x < fi.w; ++x) {
    for (int y = 0; y < fi.h; ++y) {
      int u = fi.grid_at[static_cast<size_t>(x)][static_cast<size_t>(y)];
      bool is_yes = x + 1 < fi.w
                        ? true
                        : row_bits[static_cast<size_t>(y)] == fi.graph.input(u).pi_input_bit();
      yes[static_cast<size_t>(u)] = is_yes;
      out.at(u) = Output::bit_flag(row_bits[static_cast<size_t>(y)], is_yes);
    }
  }
  for (int x = 0; x < fi.w; ++x) {
    const auto& tree = fi.tree_at[static_cast<size_t>(x)];
    for (int l = static_cast<int>(tree.size()) - 2; l >= 0; --l) {
      for (size_t k = 0; k < tree[static_cast<size_t>(l)].size(); ++k) {
        int u = tree[static_cast<size_t>(l)][k];
        int cl = tree[static_cast<size_t>(l) + 1][2 * k];
        int cr = tree[static_cast<size_t>(l) + 1][2 * k + 1];
        yes[static_cast<size_t>(u)] =
            yes[static_cast<size_t>(cl)] || yes[static_cast<size_t>(cr)];
        out.at(u) = Output::flag(yes[static_cast<size_t>(u)]);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("edge types") {
  FamilyInstance fi = gen_family_instance({1, 1, {}, 2});
  // vertical edges are both tree and grid typed
  bool saw_both = false, saw_tree = false;
  for (int e = 0; e < fi.graph.edge_count(); ++e) {
    EdgeType t = edge_type(fi.graph, e);
    if (t == EdgeType::Both) saw_both = true;
    if (t == EdgeType::Tree) saw_tree = true;
  }
  CHECK(saw_both);
  CHECK(saw_tree);
  // disagreeing half-edge types give the empty type
  GraphBuilder b;
  int u = b.add_node(1, NodeInput::tree_node()), v = b.add_node(2, NodeInput::tree_node());
  b.add_edge(u, v, HalfEdgeLabel::tree(Port::L), HalfEdgeLabel::grid(Port::L));
  LabeledGraph g = b.build();
  CHECK(edge_type(g, 0) == EdgeType::None);
  GridInstance plain = gen_grid(2, 2);
  CHECK_THROWS_AS(edge_type(plain.graph, 0), std::invalid_argument);
}

TEST_CASE("bad-tree: the empty output is the only solution on clean trees") {
  TreeInstance t = gen_tree(2);
  const int n = t.graph.node_count();
  std::vector<Output> universe = bad_tree_universe();
  REQUIRE(universe.size() == 6);
  int valid_count = 0;
  std::vector<size_t> pick(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<Output> outs;
    for (int i = 0; i < n; ++i) outs.push_back(universe[pick[static_cast<size_t>(i)]]);
    OutputAssignment a = assignment(Problem::BadTree, t.graph, std::move(outs));
    bool valid = check_bad_tree(t.graph, a).empty();
    bool all_bot = true;
    for (const auto& o : a.by_index) all_bot = all_bot && o.is_bot();
    if (valid) {
      ++valid_count;
      CHECK(all_bot);
    }
    if (all_bot) CHECK(valid);
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == universe.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  CHECK(valid_count == 1);
}

TEST_CASE("bad-tree rule fixtures") {
  TreeInstance t = gen_tree(2);
  SUBCASE("unjustified Error") {
    OutputAssignment a = OutputAssignment::all_bot(Problem::BadTree, 3);
    a.at(0) = Output::error();
    CHECK(check_bad_tree(t.graph, a).has(t.graph.id_of(0), "badTree.2"));
  }
  SUBCASE("marked node justifies Error, pointers may aim at it") {
    LabeledGraph marked = mark_node(t.graph, t.graph.id_of(t.layer[1][0]));
    OutputAssignment a = OutputAssignment::all_bot(Problem::BadTree, 3);
    a.at(t.layer[1][0]) = Output::error();
    a.at(t.layer[1][1]) = Output::pointer_to(Port::L);
    // ChL is not a pointer label
    CHECK_THROWS_AS(Output::pointer_to(Port::ChL), std::invalid_argument);
    a.at(t.layer[0][0]) = Output::pointer_to(Port::ChR);
    // root points ChR to the unmarked right child, which points L to the error
    CHECK(check_bad_tree(marked, a).empty());
  }
  SUBCASE("pointer at a bot node violates the chain rule") {
    LabeledGraph marked = mark_node(t.graph, t.graph.id_of(t.layer[1][0]));
    OutputAssignment a = OutputAssignment::all_bot(Problem::BadTree, 3);
    a.at(t.layer[1][1]) = Output::pointer_to(Port::L);
    CHECK(check_bad_tree(marked, a).has(marked.id_of(t.layer[1][1]), "badTree.3"));
  }
  SUBCASE("mutual pointers bounce back") {
    LabeledGraph marked = mark_node(t.graph, t.graph.id_of(t.layer[0][0]));
    OutputAssignment a = OutputAssignment::all_bot(Problem::BadTree, 3);
    a.at(t.layer[1][0]) = Output::pointer_to(Port::R);
    a.at(t.layer[1][1]) = Output::pointer_to(Port::L);
    ViolationReport rep = check_bad_tree(marked, a);
    CHECK(rep.has(marked.id_of(t.layer[1][0]), "badTree.3"));
    CHECK(rep.has(marked.id_of(t.layer[1][1]), "badTree.3"));
  }
  SUBCASE("pointer transitions obey the head-tail discipline") {
    TreeInstance t3 = gen_tree(3);
    LabeledGraph marked = mark_node(t3.graph, t3.graph.id_of(t3.layer[0][0]));
    OutputAssignment a = OutputAssignment::all_bot(Problem::BadTree, 7);
    // L must be followed by L, not by P
    a.at(t3.layer[2][2]) = Output::pointer_to(Port::L);
    a.at(t3.layer[2][1]) = Output::pointer_to(Port::P);
    a.at(t3.layer[1][0]) = Output::pointer_to(Port::P);
    ViolationReport rep = check_bad_tree(marked, a);
    CHECK(rep.has(marked.id_of(t3.layer[2][2]), "badTree.3"));
  }
}

TEST_CASE("accepted bad-tree outputs have well-formed pointer chains") {
  // chains must match (P*|ChR*)(L*|R*) and end at an Error node
  std::mt19937_64 rng(77);
  for (int it = 0; it < 40; ++it) {
    TreeInstance t = gen_tree(2 + static_cast<int>(rng() % 3));
    LabeledGraph g = t.graph;
    int marks = 1 + static_cast<int>(rng() % 2);
    for (int m = 0; m < marks; ++m)
      g = mark_node(g, g.id_of(static_cast<int>(rng() % static_cast<std::uint64_t>(g.node_count()))));
    std::vector<std::uint8_t> error_nodes(static_cast<size_t>(g.node_count()), 0);
    for (int i = 0; i < g.node_count(); ++i)
      error_nodes[static_cast<size_t>(i)] = static_cast<std::uint8_t>(g.input(i).mark());
    std::vector<Output> outs = solve_bad_tree(g, error_nodes);
    OutputAssignment a = assignment(Problem::BadTree, g, outs);
    REQUIRE(check_bad_tree(g, a).empty());
    for (int u = 0; u < g.node_count(); ++u) {
      if (a.at(u).kind != Output::Kind::Pointer) continue;
      // walk the chain
      int cur = u;
      std::string word;
      int guard = 0;
      while (a.at(cur).kind == Output::Kind::Pointer) {
        REQUIRE(guard++ <= g.node_count());
        word += std::string(to_string(a.at(cur).pointer));
        cur = *follow(g, cur, {a.at(cur).pointer});
      }
      CHECK(a.at(cur).kind == Output::Kind::Error);
      // (P*|ChR*)(L*|R*): heads all equal and in {P, ChR}; tails all equal in {L, R}
      size_t i = 0;
      while (i < word.size() && (word.compare(0, 1, "P") == 0 || word.compare(0, 3, "ChR") == 0)) {
        if (word[i] == 'P' && word[0] == 'P') ++i;
        else if (word.compare(i, 3, "ChR") == 0 && word.compare(0, 3, "ChR") == 0) i += 3;
        else break;
      }
      std::string tail = word.substr(i);
      CHECK((tail.empty() || tail.find_first_not_of('L') == std::string::npos ||
             tail.find_first_not_of('R') == std::string::npos));
    }
  }
}

TEST_CASE("bad-graph: canonical instances force the empty output") {
  FamilyInstance fi = gen_family_instance({2, 3, {}, 6});
  OutputAssignment bot = OutputAssignment::all_bot(Problem::BadGraph, fi.graph.node_count());
  CHECK(check_bad_graph(fi.graph, bot).empty());

  SUBCASE("GridError needs a vertical-grid violation") {
    OutputAssignment a = bot;
    a.at(fi.grid_at[0][0]) = Output::grid_error();
    CHECK(check_bad_graph(fi.graph, a).has(fi.graph.id_of(fi.grid_at[0][0]), "badGraph.4"));
  }
  SUBCASE("TreeError needs a tree violation") {
    OutputAssignment a = bot;
    a.at(fi.tree_at[0][0][0]) = Output::tree_error();
    CHECK(check_bad_graph(fi.graph, a).has(fi.graph.id_of(fi.tree_at[0][0][0]), "badGraph.3"));
  }
  SUBCASE("VertError contradicts a present certificate bit") {
    OutputAssignment a = bot;
    for (int u = 0; u < fi.graph.node_count(); ++u) a.at(u) = Output::vert_error();
    ViolationReport rep = check_bad_graph(fi.graph, a);
    CHECK(rep.has(fi.graph.id_of(fi.grid_at[0][0]), "badGraph.6"));
  }
  SUBCASE("VertError must propagate over the whole column") {
    OutputAssignment a = bot;
    a.at(fi.tree_at[0][0][0]) = Output::vert_error();
    CHECK(check_bad_graph(fi.graph, a).has(fi.graph.id_of(fi.tree_at[0][0][0]), "badGraph.6"));
  }
  SUBCASE("ColumnError wraps chains through the derived instance") {
    OutputAssignment a = bot;
    a.at(fi.tree_at[0][0][0]) = Output::column_error(Output::pointer_to(Port::ChR));
    // pointer without an error terminal in a clean column
    ViolationReport rep = check_bad_graph(fi.graph, a);
    CHECK(!rep.empty());
    CHECK(rep.entries.front().rule == "badGraph.5");
  }
}

TEST_CASE("bad-graph: a type mismatch justifies Error and marks its column") {
  FamilyInstance a = gen_family_instance({1, 1, {}, 21});
  FamilyInstance b = gen_family_instance({1, 1, {}, 22});
  LabeledGraph glued = glue_mismatch(a, b);
  std::vector<Output> outs = solve_bad_graph(glued);
  OutputAssignment oa = assignment(Problem::BadGraph, glued, outs);
  CHECK(check_bad_graph(glued, oa).empty());
  // the glue endpoints output Error, their columns are certified, nothing is empty
  int errors = 0, bots = 0;
  for (const auto& o : oa.by_index) {
    if (o.kind == Output::Kind::Error) ++errors;
    if (o.is_bot()) ++bots;
  }
  CHECK(errors == 2);
  CHECK(bots == 0);
}

TEST_CASE("problem checker accepts handmade valid solutions") {
  FamilyInstance fi = gen_family_instance({2, 2, {0, 1, 1, 0}, 8});
  std::vector<int> bits{0, 0, 1, 1};  // rows 1 and 2 mismatch, rows 0 and 3 match... row 0: bit 0 vs input 0
  OutputAssignment out = handmade_pi_solution(fi, bits);
  CHECK(check_pi(fi.graph, out).empty());

  SUBCASE("a row with two different bits violates the row rule") {
    OutputAssignment broken = out;
    int u = fi.grid_at[0][1];
    broken.at(u) = Output::bit_flag(1 - bits[1], broken.at(u).yes);
    CHECK(check_pi(fi.graph, broken).has(fi.graph.id_of(u), "pi.3"));
  }
  SUBCASE("bad-graph labels are rejected on canonical instances") {
    OutputAssignment broken = out;
    broken.at(fi.tree_at[0][0][0]) = Output::vert_error();
    CHECK(!check_pi(fi.graph, broken).empty());
  }
  SUBCASE("no row matching its input breaks the root") {
    std::vector<int> all_wrong{1, 0, 0, 1};
    OutputAssignment losing = handmade_pi_solution(fi, all_wrong);
    ViolationReport rep = check_pi(fi.graph, losing);
    CHECK(rep.has(fi.graph.id_of(fi.tree_at[1][0][0]), "pi.7"));
  }
  SUBCASE("grid nodes must output pairs") {
    OutputAssignment broken = out;
    broken.at(fi.grid_at[0][0]) = Output::flag(true);
    CHECK(check_pi(fi.graph, broken).has(fi.graph.id_of(fi.grid_at[0][0]), "pi.2"));
  }
  SUBCASE("tree nodes must aggregate honestly") {
    OutputAssignment broken = out;
    int root = fi.tree_at[0][0][0];
    broken.at(root) = Output::flag(!broken.at(root).yes);
    ViolationReport rep = check_pi(fi.graph, broken);
    CHECK((rep.has(fi.graph.id_of(root), "pi.6") || rep.has(fi.graph.id_of(root), "pi.7")));
  }
}

TEST_CASE("componentwise validity holds for all three problems") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    FamilyInstance a = gen_family_instance({1 + static_cast<int>(rng() % 2), 1, {}, rng()});
    FamilyInstance b = gen_family_instance({1, 1, {}, rng()});
    LabeledGraph u = disjoint_union(a.graph, b.graph);

    // problem: one side valid, other side corrupted by a wrong root flag
    std::vector<int> bits_a(static_cast<size_t>(a.h), 0);
    std::vector<int> bits_b(static_cast<size_t>(b.h), 0);
    OutputAssignment pa = handmade_pi_solution(a, bits_a);
    OutputAssignment pb = handmade_pi_solution(b, bits_b);
    if (rng() & 1) pb.at(b.tree_at[0][0][0]) = Output::flag(false);
    OutputAssignment pu;
    pu.problem = Problem::Pi;
    pu.by_index = pa.by_index;
    pu.by_index.insert(pu.by_index.end(), pb.by_index.begin(), pb.by_index.end());
    CHECK(componentwise_validity(Problem::Pi, u, pu));

    // bad-graph: random sprinkle of labels
    OutputAssignment bg = OutputAssignment::all_bot(Problem::BadGraph, u.node_count());
    for (int i = 0; i < u.node_count(); ++i)
      if ((rng() & 7) == 0) bg.at(i) = Output::vert_error();
    CHECK(componentwise_validity(Problem::BadGraph, u, bg));
  }
  // single-component instances are trivially component-wise checkable
  FamilyInstance fi = gen_family_instance({2, 2, {}, 5});
  OutputAssignment bot = OutputAssignment::all_bot(Problem::BadGraph, fi.graph.node_count());
  CHECK(componentwise_validity(Problem::BadGraph, fi.graph, bot));
}

TEST_CASE("bad checkers reject wrong universes") {
  FamilyInstance fi = gen_family_instance({1, 1, {}, 3});
  OutputAssignment pi_out = OutputAssignment::all_bot(Problem::Pi, fi.graph.node_count());
  CHECK_THROWS_AS(check_pi(fi.graph, pi_out), std::invalid_argument);  // bot is not a problem output
  OutputAssignment tree_out = OutputAssignment::all_bot(Problem::BadTree, fi.graph.node_count());
  CHECK_THROWS_AS(check_bad_tree(fi.graph, tree_out), std::invalid_argument);
}
