// Dataset characterization: the columns of a per-dataset summary table plus
// the degree distributions. Also serves as the single-machine oracles that
// the BSP algorithms are validated against.
#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cutfit/graph.hpp"

namespace cutfit {

/// Percentage of edge-list entries (u,v) whose reverse (v,u) is also present.
/// Self-loops count as reciprocated.
double symmetry_pct(const Graph& g);

struct ZeroDegreePcts {
  double zero_in = 0.0;
  double zero_out = 0.0;
};
ZeroDegreePcts zero_degree_pcts(const Graph& g);

/// degree -> number of vertices with that degree (0 bucket included).
using DegreeHistogram = std::map<std::uint64_t, std::uint64_t>;

struct DegreeHistograms {
  DegreeHistogram in;
  DegreeHistogram out;
};
DegreeHistograms degree_histograms(const Graph& g);

/// CDF of outDegree/inDegree over vertices with inDegree > 0. One point per
/// distinct ratio, ascending. Vertices with inDegree == 0 are counted in
/// zero_in_vertices and kept off the curve.
struct RatioCdf {
  std::vector<std::pair<double, double>> points;
  std::uint64_t zero_in_vertices = 0;
};
RatioCdf out_in_ratio_cdf(const Graph& g);

struct TriangleCounts {
  std::vector<std::uint64_t> per_vertex;  // aligned with g.vertices()
  std::uint64_t total = 0;
};
/// Counts unique triangles of the simple undirected graph underlying g.
TriangleCounts triangle_count_exact(const Graph& g);

struct ComponentLabels {
  std::vector<VertexId> labels;  // min vertex id of the component, aligned with g.vertices()
  std::size_t count = 0;
};
ComponentLabels weak_components(const Graph& g);

std::size_t strong_components(const Graph& g);

struct Diameter {
  enum class Kind { kFinite, kInfinite, kLowerBound };
  Kind kind = Kind::kFinite;
  std::uint64_t hops = 0;

  static Diameter finite(std::uint64_t h) { return {Kind::kFinite, h}; }
  static Diameter infinite() { return {Kind::kInfinite, 0}; }
  static Diameter lower_bound(std::uint64_t h) { return {Kind::kLowerBound, h}; }

  friend bool operator==(const Diameter&, const Diameter&) = default;
};

/// "3", "inf" or ">=3".
std::string to_string(const Diameter& d);

inline constexpr std::size_t kDefaultExactDiameterThreshold = 10'000;

/// Undirected diameter. INFINITE when the graph is disconnected, exact
/// all-sources BFS up to exact_threshold vertices, double-sweep lower bound above.
Diameter diameter(const Graph& g, std::size_t exact_threshold = kDefaultExactDiameterThreshold);

struct DatasetProfile {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  double symmetry_pct = 0.0;
  double zero_in_pct = 0.0;
  double zero_out_pct = 0.0;
  std::uint64_t triangles = 0;
  std::uint64_t weak_components = 0;
  std::uint64_t strong_components = 0;
  Diameter diameter;
  DegreeHistogram in_degree_hist;
  DegreeHistogram out_degree_hist;
  RatioCdf out_to_in_ratio_cdf;
};

DatasetProfile profile(const Graph& g, std::size_t exact_threshold = kDefaultExactDiameterThreshold);

void write_profile_key_value(std::ostream& out, const std::string& dataset, const DatasetProfile& p);
std::string profile_csv_header();
std::string profile_csv_row(const std::string& dataset, const DatasetProfile& p);

}  // namespace cutfit
