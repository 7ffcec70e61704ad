#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cutfit/graph.hpp"
#include "cutfit/profile.hpp"
#include "support/oracles.hpp"

using namespace cutfit;
using cutfit::testing::random_graph;

namespace {

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

Graph k3() { return Graph({{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("parse skips comments and keeps input order") {
    const auto r = parse_edge_list("# c\n0 1\n1 2\n");
    CHECK(edges_of(r.graph) == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(r.graph.num_vertices() == 3);
    CHECK(r.dropped_self_loops == 0);
  }

  TEST_CASE("parse accepts tabs, CRLF and trailing tokens") {
    const auto r = parse_edge_list("# FromNodeId\tToNodeId\r\n7\t3\r\n3 7 42\n\n18446744073709551615 0\n");
    CHECK(edges_of(r.graph) == std::vector<Edge>{{7, 3}, {3, 7}, {18446744073709551615ULL, 0}});
  }

  TEST_CASE("self-loop filter") {
    const auto r = parse_edge_list("0 0\n", false);
    CHECK(r.graph.empty());
    CHECK(r.dropped_self_loops == 1);
    const auto kept = parse_edge_list("0 0\n");
    CHECK(kept.graph.num_edges() == 1);
    CHECK(kept.graph.num_vertices() == 1);
  }

  TEST_CASE("parse errors carry the line number") {
    try {
      (void)parse_edge_list("# header\n0 1\n2 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS((void)parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("-1 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("1 2 z\n"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("99999999999999999999 1\n"), ParseError);
  }

  TEST_CASE("empty input") {
    CHECK_THROWS_AS((void)parse_edge_list(""), EmptyGraphError);
    CHECK_THROWS_AS((void)parse_edge_list("# only a comment\n"), EmptyGraphError);
  }

  TEST_CASE("load from file") {
    const auto path = std::filesystem::temp_directory_path() / "cutfit_test_graph_load.txt";
    {
      std::ofstream f(path);
      f << "# x\n1 2\n2 3\n";
    }
    CHECK(load_edge_list(path).graph.num_edges() == 2);
    std::filesystem::remove(path);
    CHECK_THROWS((void)load_edge_list(path));
  }

  TEST_CASE("degrees and dense index") {
    const Graph g({{10, 20}, {10, 30}, {30, 10}});
    REQUIRE(g.num_vertices() == 3);
    const VertexIndex a = *g.index_of(10);
    CHECK(g.out_degree(a) == 2);
    CHECK(g.in_degree(a) == 1);
    CHECK(g.in_degree(*g.index_of(20)) == 1);
    CHECK_FALSE(g.contains(15));
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      CHECK(g.id_of(g.dense_edges()[i].src) == g.edges()[i].src);
      CHECK(g.id_of(g.dense_edges()[i].dst) == g.edges()[i].dst);
    }
  }

  TEST_CASE("canonicalize_undirected") {
    CHECK(edges_of(canonicalize_undirected(Graph({{0, 1}, {1, 0}, {1, 2}}))) == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(edges_of(canonicalize_undirected(Graph({{2, 2}, {0, 1}}))) == std::vector<Edge>{{0, 1}});
    CHECK(edges_of(canonicalize_undirected(Graph({{5, 3}, {3, 5}, {5, 3}}))) == std::vector<Edge>{{3, 5}});
  }

  TEST_CASE("canonical form is idempotent and recognized") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_graph(rng, 40, 120);
      const Graph c = canonicalize_undirected(g);
      CHECK(edges_of(canonicalize_undirected(c)) == edges_of(c));
      CHECK(is_canonical_undirected(c));
    }
    Edge bad;
    CHECK_FALSE(is_canonical_undirected(Graph({{0, 1}, {2, 3}, {1, 0}}), &bad));
    CHECK(bad == Edge{1, 0});
    CHECK_FALSE(is_canonical_undirected(Graph({{4, 4}}), &bad));
    CHECK(bad == Edge{4, 4});
    CHECK_FALSE(is_canonical_undirected(Graph({{1, 2}, {1, 2}}), &bad));
  }
}

TEST_SUITE("profile") {
  TEST_CASE("symmetry") {
    CHECK(symmetry_pct(Graph({{0, 1}, {1, 0}})) == 100.0);
    CHECK(symmetry_pct(Graph({{0, 1}, {1, 2}})) == 0.0);
    CHECK(symmetry_pct(Graph({{0, 1}, {1, 0}, {1, 2}, {3, 3}})) == 75.0);
    CHECK_THROWS_AS((void)symmetry_pct(Graph()), UndefinedMetricError);
  }

  TEST_CASE("symmetrize makes any graph fully symmetric") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_graph(rng, 30, 80);
      CHECK(symmetry_pct(symmetrize(canonicalize_undirected(g))) == 100.0);
      CHECK(symmetry_pct(symmetrize(g)) == 100.0);
    }
  }

  TEST_CASE("zero degree percentages") {
    const auto a = zero_degree_pcts(Graph({{0, 1}}));
    CHECK(a.zero_in == 50.0);
    CHECK(a.zero_out == 50.0);
    const auto b = zero_degree_pcts(Graph({{0, 1}, {1, 0}}));
    CHECK(b.zero_in == 0.0);
    CHECK(b.zero_out == 0.0);
    CHECK_THROWS_AS((void)zero_degree_pcts(Graph()), UndefinedMetricError);
  }

  TEST_CASE("degree histograms") {
    const auto h = degree_histograms(Graph({{0, 1}, {2, 1}}));
    CHECK(h.in == DegreeHistogram{{0, 2}, {2, 1}});
    CHECK(h.out == DegreeHistogram{{0, 1}, {1, 2}});
    const auto star = degree_histograms(Graph({{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.out == DegreeHistogram{{0, 3}, {3, 1}});
  }

  TEST_CASE("degree histograms match a per-vertex recount") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
      const Graph g = random_graph(rng, 25, 50);
      DegreeHistogram in, out;
      for (VertexId v : g.vertices()) {
        std::uint64_t din = 0, dout = 0;
        for (const Edge& e : g.edges()) {
          din += e.dst == v;
          dout += e.src == v;
        }
        ++in[din];
        ++out[dout];
      }
      const auto h = degree_histograms(g);
      CHECK(h.in == in);
      CHECK(h.out == out);
    }
  }

  TEST_CASE("out/in ratio cdf") {
    const auto sym = out_in_ratio_cdf(Graph({{0, 1}, {1, 0}}));
    REQUIRE(sym.points.size() == 1);
    CHECK(sym.points[0] == std::pair{1.0, 1.0});

    // vertex 0: out 2 / in 1, vertex 1: 1/1, vertex 2: 0/1
    const auto c = out_in_ratio_cdf(Graph({{0, 1}, {0, 2}, {1, 0}}));
    REQUIRE(c.points.size() == 3);
    CHECK(c.points[0].first == 0.0);
    CHECK(c.points[1].first == 1.0);
    CHECK(c.points[2].first == 2.0);
    CHECK(c.points[2].second == 1.0);
    CHECK(c.zero_in_vertices == 0);
  }

  TEST_CASE("ratio cdf matches a sort-based oracle") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 10; ++i) {
      const Graph g = random_graph(rng, 40, 100);
      std::vector<double> ratios;
      std::uint64_t zero_in = 0;
      for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        if (g.in_degree(v) == 0) {
          ++zero_in;
          continue;
        }
        ratios.push_back(static_cast<double>(g.out_degree(v)) / static_cast<double>(g.in_degree(v)));
      }
      std::sort(ratios.begin(), ratios.end());
      std::vector<std::pair<double, double>> expect;
      for (std::size_t k = 0; k < ratios.size(); ++k) {
        if (k + 1 < ratios.size() && ratios[k + 1] == ratios[k]) continue;
        expect.emplace_back(ratios[k], static_cast<double>(k + 1) / static_cast<double>(ratios.size()));
      }
      const auto c = out_in_ratio_cdf(g);
      CHECK(c.zero_in_vertices == zero_in);
      REQUIRE(c.points.size() == expect.size());
      for (std::size_t k = 0; k < expect.size(); ++k) {
        CHECK(c.points[k].first == expect[k].first);
        CHECK(c.points[k].second == doctest::Approx(expect[k].second).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("exact triangles") {
    const auto t = triangle_count_exact(k3());
    CHECK(t.total == 1);
    CHECK(t.per_vertex == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(triangle_count_exact(Graph({{0, 1}, {1, 2}})).total == 0);
    // direction, duplicates and self-loops are irrelevant
    CHECK(triangle_count_exact(Graph({{0, 1}, {1, 0}, {2, 1}, {0, 2}, {2, 0}, {2, 2}})).total == 1);
  }

  TEST_CASE("exact triangles match triple enumeration") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 10; ++i) {
      const Graph g = random_graph(rng, 60 + 10 * i, 400);
      const auto [per, total] = cutfit::testing::brute_triangles(g);
      const auto t = triangle_count_exact(g);
      CHECK(t.total == total);
      CHECK(t.per_vertex == per);
    }
  }

  TEST_CASE("weak components") {
    const auto c = weak_components(Graph({{0, 1}, {1, 2}, {5, 6}}));
    CHECK(c.count == 2);
    CHECK(c.labels == std::vector<VertexId>{0, 0, 0, 5, 5});
    const auto t = weak_components(k3());
    CHECK(t.count == 1);
    CHECK(t.labels == std::vector<VertexId>{0, 0, 0});
  }

  TEST_CASE("weak components match BFS labelling") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_graph(rng, 250, 200);
      const auto expect = cutfit::testing::bfs_component_labels(g);
      const auto c = weak_components(g);
      CHECK(c.labels == expect);
      CHECK(c.count == std::set<VertexId>(expect.begin(), expect.end()).size());
    }
  }

  TEST_CASE("strong components") {
    CHECK(strong_components(Graph({{0, 1}, {1, 0}})) == 1);
    CHECK(strong_components(Graph({{0, 1}, {1, 2}})) == 3);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
      const Graph g = random_graph(rng, 100, 90 + 10 * i);
      CHECK(strong_components(g) == cutfit::testing::reachability_scc_count(g));
    }
  }

  TEST_CASE("strong components on a long chain does not recurse") {
    std::vector<Edge> e;
    for (VertexId v = 0; v < 300000; ++v) e.push_back({v, v + 1});
    e.push_back({300000, 0});
    CHECK(strong_components(Graph(std::move(e))) == 1);
  }

  TEST_CASE("diameter") {
    CHECK(diameter(Graph({{0, 1}, {1, 2}, {2, 3}})) == Diameter::finite(3));
    CHECK(diameter(Graph({{0, 1}, {5, 6}})) == Diameter::infinite());
    CHECK(to_string(Diameter::finite(3)) == "3");
    CHECK(to_string(Diameter::infinite()) == "inf");
    CHECK(to_string(Diameter::lower_bound(7)) == ">=7");
  }

  TEST_CASE("diameter matches Floyd-Warshall") {
    std::mt19937_64 rng(18);
    int connected = 0;
    for (int i = 0; i < 15; ++i) {
      const Graph g = random_graph(rng, 80 + 5 * i, 100 + 20 * i);
      const auto fw = cutfit::testing::floyd_warshall_diameter(g);
      const Diameter d = diameter(g);
      if (fw) {
        ++connected;
        CHECK(d == Diameter::finite(*fw));
      } else {
        CHECK(d == Diameter::infinite());
      }
    }
    CHECK(connected > 0);
  }

  TEST_CASE("approximate diameter is a lower bound") {
    // 30x30 grid: true diameter 58
    std::vector<Edge> e;
    for (VertexId r = 0; r < 30; ++r)
      for (VertexId c = 0; c < 30; ++c) {
        if (c + 1 < 30) e.push_back({r * 30 + c, r * 30 + c + 1});
        if (r + 1 < 30) e.push_back({r * 30 + c, (r + 1) * 30 + c});
      }
    const Graph g(std::move(e));
    CHECK(diameter(g) == Diameter::finite(58));
    const Diameter approx = diameter(g, 100);
    CHECK(approx.kind == Diameter::Kind::kLowerBound);
    CHECK(approx.hops <= 58);
    CHECK(approx.hops >= 29);
  }

  TEST_CASE("profile of K3 and a path") {
    const auto p = profile(symmetrize(k3()));
    CHECK(p.vertices == 3);
    CHECK(p.edges == 6);
    CHECK(p.symmetry_pct == 100.0);
    CHECK(p.triangles == 1);
    CHECK(p.weak_components == 1);
    CHECK(p.strong_components == 1);
    CHECK(p.diameter == Diameter::finite(1));
    CHECK(profile(k3()).edges == 3);

    const auto q = profile(Graph({{0, 1}, {1, 2}}));
    CHECK(q.vertices == 3);
    CHECK(q.symmetry_pct == 0.0);
    CHECK(q.diameter == Diameter::finite(2));
    CHECK(q.triangles == 0);
    CHECK(q.strong_components == 3);
  }

  TEST_CASE("profile csv") {
    const auto p = profile(Graph({{0, 1}}));
    CHECK(profile_csv_header() == "dataset,vertices,edges,symmetry_pct,zero_in_pct,zero_out_pct,triangles,weak_cc,strong_cc,diameter");
    CHECK(profile_csv_row("x", p) == "x,2,1,0.00,50.00,50.00,0,1,2,1");
    std::ostringstream kv;
    write_profile_key_value(kv, "x", p);
    CHECK(kv.str().find("symmetry_pct=0.00") != std::string::npos);
  }
}
