#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "cutfit/algorithms.hpp"
#include "cutfit/harness.hpp"
#include "cutfit/profile.hpp"
#include "support/oracles.hpp"

using namespace cutfit;

namespace {

VertexCutGraph cut(const Graph& g, Strategy s = Strategy::kRvc, std::uint64_t n = 4) {
  return build_vertex_cut(g, partition_edges(g, s, n));
}

DistanceMap dmap(std::vector<std::pair<VertexId, std::uint32_t>> e) { return DistanceMap{std::move(e)}; }

Graph k3() { return Graph({{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_SUITE("algorithms") {
  TEST_CASE("names") {
    for (Algorithm a : kAllAlgorithms) CHECK(parse_algorithm(to_string(a)) == a);
    CHECK_FALSE(parse_algorithm("BFS"));
  }

  TEST_CASE("pagerank examples") {
    const auto cyc = pagerank(cut(Graph({{0, 1}, {1, 0}})), 7);
    CHECK(cyc.ranks == std::vector<double>{1.0, 1.0});
    CHECK(cyc.counters.supersteps == 7);
    CHECK(cyc.counters.converged);

    const auto one = pagerank(cut(Graph({{0, 1}})), 1);
    CHECK(one.ranks[0] == doctest::Approx(0.15).epsilon(1e-15));
    CHECK(one.ranks[1] == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("pagerank matches dense iteration") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 5; ++i) {
      const Graph g = cutfit::testing::random_graph(rng, 100, 400);
      const auto want = cutfit::testing::dense_pagerank(g, 10, 0.15);
      for (Strategy s : kAllStrategies) {
        const auto got = pagerank(cut(g, s, 16), 10);
        for (std::size_t v = 0; v < want.size(); ++v) CHECK(std::abs(got.ranks[v] - want[v]) <= 1e-9);
      }
    }
  }

  TEST_CASE("pagerank is reproducible bit for bit") {
    std::mt19937_64 rng(42);
    const Graph g = cutfit::testing::random_graph(rng, 400, 3000);
    const auto vcg = cut(g, Strategy::kTwoD, 16);
    PregelOptions seq;
    seq.workers = 1;
    const auto a = pagerank(vcg, 10, 0.15, seq);
    const auto b = pagerank(vcg, 10);
    const auto c = pagerank(vcg, 10);
    CHECK(a.ranks == b.ranks);
    CHECK(b.ranks == c.ranks);
  }

  TEST_CASE("connected components examples") {
    const auto r = connected_components(cut(Graph({{0, 1}, {1, 2}, {5, 6}})));
    CHECK(r.count == 2);
    CHECK(r.labels == std::vector<VertexId>{0, 0, 0, 5, 5});
    CHECK(r.counters.converged);
    CHECK(connected_components(cut(k3())).count == 1);
  }

  TEST_CASE("connected components report an exhausted budget") {
    std::vector<Edge> chain;
    for (VertexId v = 0; v < 50; ++v) chain.push_back({v + 1, v});
    PregelOptions opt;
    opt.max_supersteps = 5;
    const auto r = connected_components(cut(Graph(chain)), opt);
    CHECK_FALSE(r.counters.converged);
    CHECK(r.counters.supersteps == 5);
  }

  TEST_CASE("connected components match BFS labelling") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 5; ++i) {
      const Graph g = cutfit::testing::random_graph(rng, 250, 300);
      const auto want = cutfit::testing::bfs_component_labels(g);
      for (Strategy s : kAllStrategies) {
        for (std::uint64_t n : {4, 16}) {
          CHECK(connected_components(cut(g, s, n)).labels == want);
        }
      }
      CHECK(connected_components(cut(g)).labels == weak_components(g).labels);
    }
  }

  TEST_CASE("triangle examples") {
    const auto t = triangle_count(cut(k3()));
    CHECK(t.total == 1);
    CHECK(t.per_vertex == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(triangle_count(cut(Graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}}))).total == 0);
  }

  TEST_CASE("triangle counting rejects non-canonical input") {
    try {
      (void)triangle_count(cut(Graph({{0, 1}, {1, 2}, {1, 0}})));
      FAIL("expected InvalidInputError");
    } catch (const InvalidInputError& e) {
      CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
    }
    CHECK_THROWS_AS((void)triangle_count(cut(Graph({{0, 1}, {0, 1}}))), InvalidInputError);
    CHECK_THROWS_AS((void)triangle_count(cut(Graph({{3, 3}, {0, 1}}))), InvalidInputError);
  }

  TEST_CASE("triangles match triple enumeration") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 3; ++i) {
      const Graph g = cutfit::testing::random_simple_graph(rng, 200, 1500);
      const auto [per, total] = cutfit::testing::brute_triangles(g);
      REQUIRE(total > 0);
      for (Strategy s : kAllStrategies) {
        const auto t = triangle_count(cut(g, s, 16));
        CHECK(t.total == total);
        CHECK(t.per_vertex == per);
      }
      CHECK(triangle_count_exact(g).total == total);
    }
  }

  TEST_CASE("shortest path examples") {
    const Graph chain({{0, 1}, {1, 2}});
    const std::vector<VertexId> to2{2};
    const auto a = shortest_paths(cut(chain), to2);
    CHECK(a.distances[0] == dmap({{2, 2}}));
    CHECK(a.distances[1] == dmap({{2, 1}}));
    CHECK(a.distances[2] == dmap({{2, 0}}));

    const std::vector<VertexId> to0{0};
    const auto b = shortest_paths(cut(chain), to0);
    CHECK(b.distances[0] == dmap({{0, 0}}));
    CHECK(b.distances[1].entries.empty());
    CHECK(b.distances[2].entries.empty());
    CHECK_FALSE(b.distances[1].distance_to(0));

    const std::vector<VertexId> unknown{9};
    CHECK_THROWS_AS((void)shortest_paths(cut(chain), unknown), std::invalid_argument);
    CHECK_THROWS_AS((void)shortest_paths(cut(chain), std::span<const VertexId>{}), std::invalid_argument);
  }

  TEST_CASE("shortest paths match reverse BFS") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 5; ++i) {
      const Graph g = cutfit::testing::random_graph(rng, 100, 250);
      const auto landmarks = draw_landmarks(g.vertices(), 5, 100 + i);
      const auto want = cutfit::testing::reverse_bfs_distances(g, landmarks);
      for (Strategy s : kAllStrategies) {
        const auto got = shortest_paths(cut(g, s, 16), landmarks);
        for (std::size_t v = 0; v < want.size(); ++v) {
          std::vector<std::pair<VertexId, std::uint32_t>> w(want[v].begin(), want[v].end());
          CHECK(got.distances[v].entries == w);
        }
      }
    }
  }

  TEST_CASE("improvements keeps strictly shorter offers only") {
    const auto offer = ShortestPathsProgram::improvements(dmap({{1, 0}, {4, 2}, {7, 5}}), dmap({{1, 3}, {7, 6}}));
    CHECK(offer == dmap({{1, 1}, {4, 3}}));
    CHECK(ShortestPathsProgram::improvements(dmap({}), dmap({{1, 0}})).entries.empty());
  }

  TEST_CASE("message merges are insensitive to grouping and order") {
    std::mt19937_64 rng(46);
    std::uniform_int_distribution<std::uint32_t> hops(0, 20);
    std::uniform_int_distribution<VertexId> lm(0, 12);

    const ShortestPathsProgram sp({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    const ConnectedComponentsProgram cc;
    for (int round = 0; round < 200; ++round) {
      std::vector<DistanceMap> maps(6);
      std::vector<VertexId> labels(6);
      for (std::size_t k = 0; k < maps.size(); ++k) {
        std::map<VertexId, std::uint32_t> m;
        for (int j = 0; j < 4; ++j) m[lm(rng)] = hops(rng);
        maps[k].entries.assign(m.begin(), m.end());
        labels[k] = lm(rng);
      }
      auto fold = [&](std::vector<std::size_t> order, bool pairwise) {
        DistanceMap acc = maps[order[0]];
        VertexId lab = labels[order[0]];
        if (!pairwise) {
          for (std::size_t k = 1; k < order.size(); ++k) {
            sp.merge(acc, maps[order[k]]);
            cc.merge(lab, labels[order[k]]);
          }
          return std::pair{acc, lab};
        }
        // ((a b) (c d)) (e f)
        std::vector<DistanceMap> level;
        std::vector<VertexId> llev;
        for (std::size_t k = 0; k < order.size(); k += 2) {
          DistanceMap x = maps[order[k]];
          VertexId y = labels[order[k]];
          sp.merge(x, maps[order[k + 1]]);
          cc.merge(y, labels[order[k + 1]]);
          level.push_back(x);
          llev.push_back(y);
        }
        sp.merge(level[0], level[1]);
        sp.merge(level[0], level[2]);
        cc.merge(llev[0], llev[1]);
        cc.merge(llev[0], llev[2]);
        return std::pair{level[0], llev[0]};
      };
      std::vector<std::size_t> order{0, 1, 2, 3, 4, 5};
      const auto base = fold(order, false);
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(fold(order, true) == base);
      CHECK(fold(order, false) == base);
    }

    // triangle neighbour lists compare equal once normalized by apply
    const TriangleCountProgram tr;
    TriangleMessage a{true, {5, 2}, 0}, b{true, {9}, 0}, c{true, {1, 7}, 0};
    TriangleMessage ab = a, ba = b;
    tr.merge(ab, b);
    tr.merge(ab, c);
    tr.merge(ba, c);
    tr.merge(ba, a);
    TriangleState s1, s2;
    CHECK(tr.apply(0, s1, &ab));
    CHECK(tr.apply(0, s2, &ba));
    CHECK(s1 == s2);
    CHECK(s1.neighbors == std::vector<VertexIndex>{1, 2, 5, 7, 9});

    // PageRank sums agree to rounding under reassociation
    const auto k3_cut = cut(k3());
    const PageRankProgram pr(k3_cut, 0.15);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int round = 0; round < 200; ++round) {
      std::vector<double> xs(8);
      for (double& x : xs) x = u(rng);
      double left = xs[0];
      for (std::size_t k = 1; k < xs.size(); ++k) pr.merge(left, xs[k]);
      std::shuffle(xs.begin(), xs.end(), rng);
      double l1 = xs[0], l2 = xs[4];
      for (std::size_t k = 1; k < 4; ++k) pr.merge(l1, xs[k]);
      for (std::size_t k = 5; k < 8; ++k) pr.merge(l2, xs[k]);
      pr.merge(l1, l2);
      CHECK(std::abs(l1 - left) <= 1e-12 * std::abs(left));
    }
  }

  TEST_CASE("results are independent of partitioning") {
    std::mt19937_64 rng(47);
    const Graph g = cutfit::testing::random_graph(rng, 200, 800);
    const Graph simple = canonicalize_undirected(g);
    const auto landmarks = draw_landmarks(g.vertices(), 4, 3);
    const auto ref_pr = pagerank(cut(g, Strategy::kRvc, 1), 10).ranks;
    const auto ref_cc = connected_components(cut(g, Strategy::kRvc, 1)).labels;
    const auto ref_tr = triangle_count(cut(simple, Strategy::kRvc, 1)).per_vertex;
    const auto ref_sp = shortest_paths(cut(g, Strategy::kRvc, 1), landmarks).distances;
    for (Strategy s : kAllStrategies) {
      for (std::uint64_t n : {4, 16, 128}) {
        const auto pr = pagerank(cut(g, s, n), 10).ranks;
        for (std::size_t v = 0; v < pr.size(); ++v) CHECK(std::abs(pr[v] - ref_pr[v]) <= 1e-12);
        CHECK(connected_components(cut(g, s, n)).labels == ref_cc);
        CHECK(triangle_count(cut(simple, s, n)).per_vertex == ref_tr);
        CHECK(shortest_paths(cut(g, s, n), landmarks).distances == ref_sp);
      }
    }
  }

  TEST_CASE("value dumps") {
    const std::vector<VertexId> ids{3, 8};
    std::ostringstream a, b, c, d;
    write_ranks_csv(a, ids, std::vector<double>{0.5, 1.25});
    CHECK(a.str() == "vertex,value\n3,0.5\n8,1.25\n");
    write_labels_csv(b, ids, std::vector<VertexId>{3, 3});
    CHECK(b.str() == "vertex,value\n3,3\n8,3\n");
    write_triangles_csv(c, ids, std::vector<std::uint64_t>{0, 2});
    CHECK(c.str() == "vertex,value\n3,0\n8,2\n");
    write_distances_csv(d, ids, std::vector<DistanceMap>{dmap({{3, 0}, {8, 4}}), dmap({})});
    CHECK(d.str() == "vertex,value\n3,3:0;8:4\n8,\n");
  }
}
