#include "cutfit/algorithms.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace cutfit {

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kPageRank: return "PR";
    case Algorithm::kConnectedComponents: return "CC";
    case Algorithm::kTriangles: return "TR";
    case Algorithm::kShortestPaths: return "SSSP";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

PageRankResult pagerank(const VertexCutGraph& g, std::size_t iterations, double reset_prob, PregelOptions options) {
  if (iterations == 0) throw std::invalid_argument("pagerank needs at least one iteration");
  if (!(reset_prob > 0.0 && reset_prob < 1.0)) throw std::invalid_argument("reset probability must be in (0, 1)");
  options.max_supersteps = iterations;
  auto run = run_pregel(g, PageRankProgram(g, reset_prob), options);

  PageRankResult out;
  out.ranks.reserve(run.states.size());
  for (const RankState& s : run.states) out.ranks.push_back(s.rank);
  out.counters = std::move(run.counters);
  out.counters.converged = out.counters.supersteps == iterations;
  return out;
}

ComponentsResult connected_components(const VertexCutGraph& g, PregelOptions options) {
  auto run = run_pregel(g, ConnectedComponentsProgram{}, options);
  ComponentsResult out;
  out.labels = std::move(run.states);
  std::vector<VertexId> distinct = out.labels;
  std::sort(distinct.begin(), distinct.end());
  out.count = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  out.counters = std::move(run.counters);
  return out;
}

bool TriangleCountProgram::apply(VertexIndex, State& s, const Message* m) const {
  if (!m) return false;
  if (m->neighbor_round) {
    s.neighbors = m->neighbors;
    std::sort(s.neighbors.begin(), s.neighbors.end());
    s.neighbors.erase(std::unique(s.neighbors.begin(), s.neighbors.end()), s.neighbors.end());
    s.stage = 1;
  } else {
    s.triangles = m->credit / 2;
    s.stage = 2;
  }
  return true;
}

std::uint64_t TriangleCountProgram::intersection_size(std::span<const VertexIndex> a,
                                                      std::span<const VertexIndex> b) {
  std::uint64_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

TriangleResult triangle_count(const VertexCutGraph& g, PregelOptions options) {
  Edge bad;
  if (!is_canonical_undirected(Graph(g.edges()), &bad)) {
    throw InvalidInputError(fmt::format(
        "triangle counting needs a simple undirected edge list; offending edge ({},{})", bad.src, bad.dst));
  }
  auto run = run_pregel(g, TriangleCountProgram{}, options);
  TriangleResult out;
  out.per_vertex.reserve(run.states.size());
  std::uint64_t sum = 0;
  for (const TriangleState& s : run.states) {
    out.per_vertex.push_back(s.triangles);
    sum += s.triangles;
  }
  if (sum % 3 != 0) throw std::logic_error("per-vertex triangle counts do not sum to a multiple of 3");
  out.total = sum / 3;
  out.counters = std::move(run.counters);
  return out;
}

std::optional<std::uint32_t> DistanceMap::distance_to(VertexId landmark) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), landmark,
                             [](const auto& e, VertexId id) { return e.first < id; });
  if (it == entries.end() || it->first != landmark) return std::nullopt;
  return it->second;
}

ShortestPathsProgram::State ShortestPathsProgram::initial_state(VertexIndex, VertexId id) const {
  DistanceMap m;
  if (std::binary_search(landmarks_.begin(), landmarks_.end(), id)) m.entries.emplace_back(id, 0);
  return m;
}

DistanceMap ShortestPathsProgram::improvements(const DistanceMap& via, const DistanceMap& current) {
  DistanceMap offer;
  auto cur = current.entries.begin();
  for (const auto& [landmark, hops] : via.entries) {
    while (cur != current.entries.end() && cur->first < landmark) ++cur;
    const std::uint32_t candidate = hops + 1;
    if (cur == current.entries.end() || cur->first != landmark || candidate < cur->second) {
      offer.entries.emplace_back(landmark, candidate);
    }
  }
  return offer;
}

void ShortestPathsProgram::merge(Message& into, const Message& other) const {
  std::vector<std::pair<VertexId, std::uint32_t>> out;
  out.reserve(into.entries.size() + other.entries.size());
  auto a = into.entries.begin();
  auto b = other.entries.begin();
  while (a != into.entries.end() || b != other.entries.end()) {
    if (b == other.entries.end() || (a != into.entries.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == into.entries.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      out.emplace_back(a->first, std::min(a->second, b->second));
      ++a;
      ++b;
    }
  }
  into.entries = std::move(out);
}

bool ShortestPathsProgram::apply(VertexIndex, State& s, const Message* m) const {
  if (!m) return false;
  // Offers were computed against a mirror; keep only those that still improve.
  DistanceMap better;
  for (const auto& [landmark, hops] : m->entries) {
    const auto cur = s.distance_to(landmark);
    if (!cur || hops < *cur) better.entries.emplace_back(landmark, hops);
  }
  if (better.entries.empty()) return false;
  merge(s, better);
  return true;
}

ShortestPathsResult shortest_paths(const VertexCutGraph& g, std::span<const VertexId> landmarks,
                                   PregelOptions options) {
  if (landmarks.empty()) throw std::invalid_argument("at least one landmark is required");
  std::vector<VertexId> sorted(landmarks.begin(), landmarks.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto ids = g.vertex_ids();
  for (VertexId l : sorted) {
    if (!std::binary_search(ids.begin(), ids.end(), l)) {
      throw std::invalid_argument("landmark " + std::to_string(l) + " is not a vertex of the graph");
    }
  }
  auto run = run_pregel(g, ShortestPathsProgram(std::move(sorted)), options);
  return {std::move(run.states), std::move(run.counters)};
}

namespace {

template <class T, class Fmt>
void write_values(std::ostream& out, std::span<const VertexId> ids, std::span<const T> values, Fmt&& fmt_value) {
  if (ids.size() != values.size()) throw std::invalid_argument("vertex ids and values differ in length");
  out << "vertex,value\n";
  for (std::size_t i = 0; i < ids.size(); ++i) out << ids[i] << ',' << fmt_value(values[i]) << '\n';
}

}  // namespace

void write_ranks_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const double> ranks) {
  write_values(out, ids, ranks, [](double r) { return fmt::format("{}", r); });
}

void write_labels_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const VertexId> labels) {
  write_values(out, ids, labels, [](VertexId l) { return std::to_string(l); });
}

void write_triangles_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const std::uint64_t> counts) {
  write_values(out, ids, counts, [](std::uint64_t c) { return std::to_string(c); });
}

void write_distances_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const DistanceMap> maps) {
  write_values(out, ids, maps, [](const DistanceMap& m) {
    std::string s;
    for (const auto& [landmark, hops] : m.entries) {
      if (!s.empty()) s += ';';
      s += fmt::format("{}:{}", landmark, hops);
    }
    return s;
  });
}

}  // namespace cutfit
