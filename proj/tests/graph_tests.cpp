// Construction, validation, traversal, and incidence behavior of the
// reversal-paired directed graphs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "generators.hpp"
#include "speclap/graph.hpp"

using namespace speclap;
using gen::code_of;

TEST_CASE("undirected construction pairs each edge with its reversal") {
  Graph g = gen::cycle(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.dedge_count() == 8);
  for (const DirectedEdge& d : g.dedges()) {
    const DirectedEdge& r = g.dedge(d.op);
    CHECK(r.op == d.id);
    CHECK(r.tail == d.head);
    CHECK(r.head == d.tail);
    CHECK(d.op != d.id);
  }
  CHECK(g.undirected_reps() == std::vector<int>{0, 2, 4, 6});
}

TEST_CASE("degrees count incoming directed edges and sum to the edge count") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen::random_graph(rng, 1, 9, /*loops=*/true, /*multi=*/true);
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == g.dedge_count());
  }
}

TEST_CASE("a loop raises the degree by two but not the neighbor count") {
  Graph g = Graph::make({{"v0", 1}}, {{0, 0}});
  CHECK(g.degree(0) == 2);
  CHECK(g.simple_degree(0) == 0);
  CHECK(g.has_loop());
  CHECK(!g.has_multi_edge());
  CHECK(!g.is_simple_loopless());
}

TEST_CASE("parallel edges raise the degree but not the neighbor count") {
  Graph g = Graph::make(gen::ids(2), {{0, 1}, {0, 1}});
  CHECK(g.degree(0) == 2);
  CHECK(g.simple_degree(0) == 1);
  CHECK(g.has_multi_edge());
  CHECK(!g.has_loop());
}

TEST_CASE("block offsets partition the total dimension by vertex rank") {
  Graph g = gen::with_ranks(gen::path(3), {2, 3, 1});
  CHECK(g.total_dimension() == 6);
  CHECK(g.block_offset(0) == 0);
  CHECK(g.block_offset(1) == 2);
  CHECK(g.block_offset(2) == 5);
}

TEST_CASE("vertex lookup by id round-trips and rejects unknown ids") {
  Graph g = gen::path(3);
  CHECK(g.index_of("v2") == 2);
  CHECK(!g.index_of("w9").has_value());
  CHECK(g.require_index("v0") == 0);
  CHECK(code_of([&] { g.require_index("w9"); }) == errc::unknown_vertex);
}

TEST_CASE("construction rejects malformed inputs with specific codes") {
  CHECK(code_of([] { Graph::make({{"a", 1}, {"a", 1}}, {}); }) == errc::bad_input);
  CHECK(code_of([] { Graph::make({{"a", -1}}, {}); }) == errc::bad_rank);
  CHECK(code_of([] { Graph::make(gen::ids(2), {{0, 5}}); }) == errc::unknown_vertex);

  // A reversal map that fixes an edge.
  CHECK(code_of([] {
          Graph::from_dedges(gen::ids(2), {{0, 0, 1, 0}});
        }) == errc::bad_op_pairing);
  // A reversal whose endpoints do not swap.
  CHECK(code_of([] {
          Graph::from_dedges(gen::ids(3), {{0, 0, 1, 1}, {1, 2, 0, 0}});
        }) == errc::bad_op_pairing);
  // Edge ids out of order.
  CHECK(code_of([] {
          Graph::from_dedges(gen::ids(2), {{1, 0, 1, 0}, {0, 1, 0, 1}});
        }) == errc::bad_input);
}

TEST_CASE("rank zero vertices are allowed and contribute no dimension") {
  Graph g = gen::with_ranks(gen::path(2), {0, 2});
  CHECK(g.total_dimension() == 2);
  CHECK(g.block_offset(1) == 0);
}

TEST_CASE("subsets deduplicate, sort, and complement cleanly") {
  Graph g = gen::cycle(5);
  VertexSubset a = VertexSubset::of(g, {3, 1, 3});
  CHECK(a.members == std::vector<int>{1, 3});
  CHECK(a.size() == 2);
  CHECK(a.contains(3));
  CHECK(!a.contains(0));

  VertexSubset b = VertexSubset::complement(g, a);
  CHECK(b.members == std::vector<int>{0, 2, 4});
  for (int v = 0; v < 5; ++v) CHECK((a.contains(v) ^ b.contains(v)));

  CHECK(code_of([&] { VertexSubset::of(g, {7}); }) == errc::unknown_vertex);

  VertexSubset m = VertexSubset::from_mask(g, 0b10110ULL);
  CHECK(m.members == std::vector<int>{1, 2, 4});

  VertexSubset byid = VertexSubset::from_ids(g, {"v4", "v0"});
  CHECK(byid.members == std::vector<int>{0, 4});
}

TEST_CASE("cycle distances wrap around and the diameter is half the length") {
  for (int n = 3; n <= 9; ++n) {
    Graph g = gen::cycle(n);
    for (int k = 0; k < n; ++k)
      CHECK(distance(g, 0, k) == std::min(k, n - k));
    CHECK(diameter(g) == n / 2);
  }
  CHECK(diameter(gen::path(6)) == 5);
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = gen::random_graph(rng, 2, 8);
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        auto duv = distance(g, u, v);
        REQUIRE(duv.has_value()); // random_graph builds a connected graph
        CHECK(duv == distance(g, v, u));
        for (int w = 0; w < n; ++w)
          CHECK(*duv <= *distance(g, u, w) + *distance(g, w, v));
      }
  }
}

TEST_CASE("disconnected graphs have no diameter and unreachable pairs") {
  Graph g = Graph::make(gen::ids(4), {{0, 1}, {2, 3}});
  CHECK(!distance(g, 0, 2).has_value());
  CHECK(distance(g, 0, 1) == 1);
  CHECK(!diameter(g).has_value());
}

TEST_CASE("boundary lists exactly the outward crossing directed edges") {
  Graph g = gen::cycle(4);
  VertexSubset a = VertexSubset::of(g, {0, 1});
  std::vector<int> b = boundary(g, a);
  CHECK(b == std::vector<int>{2, 7}); // v1 -> v2 and v0 -> v3

  // Outward and inward crossings pair up via the reversal.
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Graph h = gen::random_graph(rng, 2, 8, true, true);
    unsigned long long bits =
        rng.uniform_int(1, (1 << h.vertex_count()) - 2);
    VertexSubset s = VertexSubset::from_mask(h, bits);
    VertexSubset sc = VertexSubset::complement(h, s);
    std::vector<int> out = boundary(h, s);
    std::vector<int> in = boundary(h, sc);
    CHECK(out.size() == in.size());
    std::set<int> inset(in.begin(), in.end());
    for (int e : out) CHECK(inset.count(h.dedge(e).op) == 1);
  }
}

TEST_CASE("incidence squares to degree plus adjacency") {
  for (const Graph& g : {gen::cycle(5), gen::complete(4), gen::petersen()}) {
    Eigen::MatrixXd inc = incidence(g);
    Eigen::MatrixXd lhs = inc * inc.transpose();
    Eigen::MatrixXd rhs = adjacency_counts(g);
    for (int v = 0; v < g.vertex_count(); ++v) rhs(v, v) += g.degree(v);
    CHECK((lhs - rhs).norm() == 0.0);
  }
  Graph loop = Graph::make({{"v0", 1}}, {{0, 0}});
  CHECK(code_of([&] { incidence(loop); }) == errc::not_simple);
}

TEST_CASE("edge graph satisfies the companion integer identity") {
  for (const Graph& g : {gen::cycle(6), gen::complete(4), gen::petersen()}) {
    Eigen::MatrixXd inc = incidence(g);
    Graph d = dual(g);
    Eigen::MatrixXd lhs = inc.transpose() * inc;
    Eigen::MatrixXd rhs = adjacency_counts(d);
    for (int v = 0; v < d.vertex_count(); ++v) rhs(v, v) += 2.0;
    CHECK((lhs - rhs).norm() == 0.0);
  }
}

TEST_CASE("edge graph of a cycle is a cycle of the same length") {
  Graph d = dual(gen::cycle(5));
  CHECK(d.vertex_count() == 5);
  CHECK(d.dedge_count() == 10);
  for (int v = 0; v < 5; ++v) {
    CHECK(d.degree(v) == 2);
    CHECK(d.vertex(v).id == "e" + std::to_string(v));
  }
  CHECK(diameter(d) == 2);
}

TEST_CASE("edge graph of the complete graph on four vertices is the octahedron") {
  Graph d = dual(gen::complete(4));
  CHECK(d.vertex_count() == 6);
  CHECK(d.dedge_count() == 24); // 12 undirected edges
  for (int v = 0; v < 6; ++v) CHECK(d.degree(v) == 4);
  Graph loop = Graph::make({{"v0", 1}}, {{0, 0}});
  CHECK(code_of([&] { dual(loop); }) == errc::not_simple);
}

TEST_CASE("adjacency counts record multiplicities and loops") {
  Graph g = Graph::make(gen::ids(3), {{0, 1}, {0, 1}, {1, 1}, {1, 2}});
  Eigen::MatrixXd a = adjacency_counts(g);
  CHECK(a(0, 1) == 2.0);
  CHECK(a(1, 0) == 2.0);
  CHECK(a(1, 1) == 1.0);
  CHECK(a(1, 2) == 1.0);
  CHECK(a(0, 0) == 0.0);
  CHECK(a(0, 2) == 0.0);
}

TEST_CASE("degree profile pairs total and distinct-neighbor degrees") {
  Graph g = Graph::make(gen::ids(3), {{0, 1}, {0, 1}, {1, 1}, {1, 2}});
  auto prof = degree_profile(g);
  CHECK(prof[0] == std::pair<int, int>{2, 1});
  CHECK(prof[1] == std::pair<int, int>{5, 2});
  CHECK(prof[2] == std::pair<int, int>{1, 1});
}
