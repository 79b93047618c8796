#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpp/dfs.hpp"
#include "lpp/error.hpp"
#include "support/oracles.hpp"

namespace {

using lpp::DfsState;
using lpp::Edge;
using lpp::SimpleGraph;
using lpp::Vertex;

SimpleGraph five_vertex_graph() {
  const std::vector<Edge> edges{{1, 4}, {2, 3}, {2, 5}, {3, 5}};
  return SimpleGraph(5, edges);
}

std::size_t pairs(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

void check_invariants(const SimpleGraph& g, const lpp::DfsTrace& trace) {
  const int n = g.n();
  const auto comps = lpp::oracle::components(g);
  REQUIRE(trace.step_count() == n + comps.size() + pairs(n));

  const auto states = trace.states();
  REQUIRE(states.size() == trace.step_count() + 1);
  for (const DfsState& s : states) {
    // partition
    std::set<Vertex> seen;
    for (Vertex v : s.completed) seen.insert(v);
    for (Vertex v : s.stack) seen.insert(v);
    for (Vertex v : s.unvisited) seen.insert(v);
    REQUIRE(seen.size() == static_cast<std::size_t>(n));
    REQUIRE(s.completed.size() + s.stack.size() + s.unvisited.size() ==
            static_cast<std::size_t>(n));

    // P2
    const std::set<Edge> explored(s.explored.begin(), s.explored.end());
    REQUIRE(explored.size() == s.explored.size());
    REQUIRE(s.explored.size() >= s.completed.size() * s.unvisited.size());
    for (Vertex a : s.completed) {
      for (Vertex b : s.unvisited) {
        REQUIRE(explored.count(lpp::make_edge(a, b)) == 1);
        REQUIRE_FALSE(g.has_edge(a, b));
      }
    }

    // P3
    for (std::size_t i = 1; i < s.stack.size(); ++i) {
      REQUIRE(g.has_edge(s.stack[i - 1], s.stack[i]));
    }
  }
  REQUIRE(states.back().explored.size() == pairs(n));
  REQUIRE(states.back().stack.empty());
  REQUIRE(states.back().unvisited.empty());

  REQUIRE(trace.epochs().size() == comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    REQUIRE(trace.epochs()[i].component == comps[i]);
  }
}

}  // namespace

TEST_SUITE("dfs") {

TEST_CASE("five-vertex golden states") {
  const auto start = std::chrono::steady_clock::now();
  const auto trace = lpp::run_dfs(five_vertex_graph());
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::milliseconds(1));

  CHECK(trace.step_count() == 17);
  REQUIRE(trace.epochs().size() == 2);
  CHECK(trace.epochs()[0].component == std::vector<Vertex>{1, 4});
  CHECK(trace.epochs()[1].component == std::vector<Vertex>{2, 3, 5});

  const DfsState s4 = trace.state(4);
  CHECK(s4.stack == std::vector<Vertex>{1, 4});
  CHECK(s4.explored == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
  const DfsState s13 = trace.state(13);
  CHECK(s13.stack == std::vector<Vertex>{2, 3, 5});
  CHECK(s13.unvisited.empty());
  const DfsState last = trace.state(17);
  CHECK(last.completed == std::vector<Vertex>{1, 2, 3, 4, 5});
  CHECK(last.explored.size() == 10);
  const std::vector<Edge> order{{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4},
                                {4, 5}, {1, 5}, {2, 3}, {3, 5}, {2, 5}};
  CHECK(last.explored == order);

  std::ostringstream csv;
  lpp::write_trace_csv(csv, trace);
  const auto golden = lpp::oracle::strip_comment_lines(
      lpp::oracle::read_file(LPP_TEST_DATA_DIR "/five_vertex_trace.csv"));
  CHECK(csv.str() == golden);

  const auto path = lpp::longest_u_excursion(trace);
  CHECK(path.vertices() == std::vector<Vertex>{2, 3, 5});
  CHECK(path.length() == 2);
}

TEST_CASE("five-vertex edge list file") {
  std::istringstream in(
      lpp::oracle::read_file(LPP_TEST_DATA_DIR "/five_vertex.edgelist"));
  CHECK(lpp::read_edge_list(in) == five_vertex_graph());
}

TEST_CASE("compact mode replays the same states") {
  lpp::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const SimpleGraph g = lpp::sample_gnp(9 + trial % 5, 0.25, rng);
    const auto full = lpp::run_dfs(g, lpp::TraceMode::kFull);
    const auto compact = lpp::run_dfs(g, lpp::TraceMode::kCompact);
    CHECK(full.has_full_states());
    CHECK_FALSE(compact.has_full_states());
    CHECK(full.steps() == compact.steps());
    CHECK(full.epochs() == compact.epochs());
    CHECK(full.states() == compact.states());
    CHECK(full.state(full.step_count() / 2) ==
          compact.state(compact.step_count() / 2));
  }
  CHECK_THROWS_AS(lpp::run_dfs(five_vertex_graph()).state(18),
                  lpp::PreconditionError);
}

TEST_CASE("empty graph on three vertices") {
  const auto trace = lpp::run_dfs(SimpleGraph(3));
  CHECK(trace.step_count() == 9);
  CHECK(trace.epochs().size() == 3);
  for (const DfsState& s : trace.states()) CHECK(s.stack.size() <= 1);
  const auto path = lpp::longest_u_excursion(trace);
  CHECK(path.vertex_count() == 1);
  CHECK(path.length() == 0);
}

TEST_CASE("complete graph on four vertices") {
  const auto trace = lpp::run_dfs(SimpleGraph::complete(4));
  CHECK(trace.step_count() == 11);
  CHECK(trace.epochs().size() == 1);
  const auto path = lpp::longest_u_excursion(trace);
  CHECK(path.vertices() == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(path.length() == 3);
  CHECK(trace.state(5).stack == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("single vertex") {
  const auto trace = lpp::run_dfs(SimpleGraph(1));
  CHECK(trace.step_count() == 2);
  CHECK(lpp::longest_u_excursion(trace).vertices() == std::vector<Vertex>{1});
  CHECK(lpp::longest_dfs_excursion(SimpleGraph(1)).vertex_count() == 1);
}

TEST_CASE("P1, P2, P3 and epochs on random graphs") {
  lpp::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 19;
    const double p = 0.05 + 0.9 * lpp::uniform_open(rng);
    const SimpleGraph g = lpp::sample_gnp(n, p, rng);
    const auto trace = lpp::run_dfs(g);
    check_invariants(g, trace);
    CHECK(lpp::run_dfs(g).steps() == trace.steps());
  }
}

TEST_CASE("streaming excursion equals the traced excursion") {
  lpp::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 140;
    const double p = 2.0 * lpp::uniform_open(rng) / n;
    const SimpleGraph g = lpp::sample_gnp(n, std::min(1.0, p), rng);
    const auto traced = lpp::longest_u_excursion(lpp::run_dfs(g));
    const auto streamed = lpp::longest_dfs_excursion(g);
    REQUIRE(streamed == traced);
    const auto& vs = streamed.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i) {
      REQUIRE(g.has_edge(vs[i - 1], vs[i]));
    }
  }
}

TEST_CASE("k-subset edge property") {
  CHECK(lpp::check_st_edge_property(SimpleGraph::complete(8), 1));
  CHECK(lpp::check_st_edge_property(SimpleGraph::complete(8), 4));
  CHECK_FALSE(lpp::check_st_edge_property(SimpleGraph(2), 1));
  CHECK_FALSE(lpp::check_st_edge_property(SimpleGraph(9), 1));
  CHECK_FALSE(lpp::check_st_edge_property(five_vertex_graph(), 2));
  CHECK_THROWS_AS(lpp::check_st_edge_property(five_vertex_graph(), 3),
                  lpp::PreconditionError);
  CHECK_THROWS_AS(lpp::check_st_edge_property(five_vertex_graph(), 0),
                  lpp::PreconditionError);
  // C(60,15) C(45,15) is far beyond the guard.
  CHECK_THROWS_AS(lpp::check_st_edge_property(SimpleGraph::complete(60), 15),
                  lpp::PreconditionError);

  lpp::Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 13;
    const SimpleGraph g =
        lpp::sample_gnp(n, 0.3 + 0.6 * lpp::uniform_open(rng), rng);
    for (int k = 1; k <= n / 2; ++k) {
      REQUIRE(lpp::check_st_edge_property(g, k) ==
              lpp::oracle::st_property_by_counting(g, k));
    }
  }
}

TEST_CASE("guaranteed length formula") {
  CHECK(lpp::excursion_guarantee(12, 3) == 7);
  CHECK(lpp::excursion_guarantee(5, 2) == 2);
  for (int n = 2; n < 30; ++n) CHECK(lpp::excursion_guarantee(n, 1) == n - 1);
  CHECK_THROWS_AS(lpp::excursion_guarantee(5, 5), lpp::PreconditionError);
  CHECK_THROWS_AS(lpp::excursion_guarantee(5, 0), lpp::PreconditionError);
}

TEST_CASE("k-subset property implies a long excursion") {
  lpp::Rng rng(555);
  std::size_t instances = 0;
  std::size_t hypotheses = 0;
  for (int n : {8, 10, 12}) {
    for (int trial = 0; trial < 100; ++trial) {
      const double p = 0.3 + 0.65 * lpp::uniform_open(rng);
      const SimpleGraph g = lpp::sample_gnp(n, p, rng);
      ++instances;
      const auto excursion = lpp::longest_u_excursion(lpp::run_dfs(g));
      for (int k = 1; k <= n / 2; ++k) {
        if (!lpp::check_st_edge_property(g, k)) continue;
        ++hypotheses;
        REQUIRE(excursion.length() >=
                static_cast<std::size_t>(lpp::excursion_guarantee(n, k)));
      }
    }
  }
  CHECK(instances >= 200);
  CHECK(hypotheses > 100);
}

}  // TEST_SUITE
