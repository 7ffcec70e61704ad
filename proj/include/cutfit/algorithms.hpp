// PageRank, connected components, triangle counting and landmark shortest
// paths as vertex programs on the superstep engine.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "cutfit/pregel.hpp"

namespace cutfit {

enum class Algorithm { kPageRank, kConnectedComponents, kTriangles, kShortestPaths };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms = {
    Algorithm::kPageRank, Algorithm::kConnectedComponents, Algorithm::kTriangles, Algorithm::kShortestPaths};

/// "PR", "CC", "TR", "SSSP".
std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// PageRank: static, unnormalized. Every vertex starts at 1.0 and each
// iteration sets rank = reset + (1 - reset) * sum(rank(u) / outDegree(u)) over
// in-neighbors u.

struct RankState {
  double rank = 1.0;
  double delta = 0.0;  // change applied in the latest iteration

  friend bool operator==(const RankState&, const RankState&) = default;
};

class PageRankProgram {
 public:
  using State = RankState;
  using Message = double;
  static constexpr ActiveDirection kActiveDirection = ActiveDirection::kOut;
  static constexpr bool kApplyToAll = true;

  PageRankProgram(const VertexCutGraph& g, double reset_prob) : g_(&g), reset_(reset_prob) {}

  State initial_state(VertexIndex, VertexId) const { return {}; }

  template <class Sink>
  void edge_message(const SuperstepContext&, const EdgeTriplet<State>& t, Sink& sink) const {
    sink.send_to_dst(t.src_state.rank / static_cast<double>(g_->out_degree(t.src)));
  }

  void merge(Message& into, const Message& other) const { into += other; }

  bool apply(VertexIndex, State& s, const Message* sum) const {
    const double next = reset_ + (1.0 - reset_) * (sum ? *sum : 0.0);
    s.delta = next - s.rank;
    s.rank = next;
    return true;
  }

 private:
  const VertexCutGraph* g_;
  double reset_;
};

struct PageRankResult {
  std::vector<double> ranks;  // aligned with vertex_ids()
  RunCounters counters;
};

inline constexpr double kDefaultResetProb = 0.15;

/// Runs exactly `iterations` supersteps. counters.converged reports that all
/// iterations completed.
PageRankResult pagerank(const VertexCutGraph& g, std::size_t iterations, double reset_prob = kDefaultResetProb,
                        PregelOptions options = {});

// ---------------------------------------------------------------------------
// Connected components: minimum vertex id propagated along edges in both
// directions (weak connectivity).

class ConnectedComponentsProgram {
 public:
  using State = VertexId;
  using Message = VertexId;
  static constexpr ActiveDirection kActiveDirection = ActiveDirection::kEither;
  static constexpr bool kApplyToAll = false;

  State initial_state(VertexIndex, VertexId id) const { return id; }

  template <class Sink>
  void edge_message(const SuperstepContext&, const EdgeTriplet<State>& t, Sink& sink) const {
    if (t.src_state < t.dst_state) {
      sink.send_to_dst(t.src_state);
    } else if (t.dst_state < t.src_state) {
      sink.send_to_src(t.dst_state);
    }
  }

  void merge(Message& into, const Message& other) const { into = std::min(into, other); }

  bool apply(VertexIndex, State& label, const Message* m) const {
    if (m && *m < label) {
      label = *m;
      return true;
    }
    return false;
  }
};

struct ComponentsResult {
  std::vector<VertexId> labels;  // aligned with vertex_ids()
  std::size_t count = 0;
  RunCounters counters;  // counters.converged == false means the budget ran out
};

inline constexpr std::size_t kDefaultMaxSupersteps = 100;

ComponentsResult connected_components(const VertexCutGraph& g, PregelOptions options = {});

// ---------------------------------------------------------------------------
// Triangle counting in two rounds: every vertex first collects its neighbor
// set, then each edge {u,v} credits |N(u) ∩ N(v)| to both endpoints.

struct TriangleState {
  int stage = 0;  // 0: collecting neighbors, 1: neighbors known, 2: counted
  std::vector<VertexIndex> neighbors;
  std::uint64_t triangles = 0;

  friend bool operator==(const TriangleState&, const TriangleState&) = default;
};

struct TriangleMessage {
  bool neighbor_round = true;
  std::vector<VertexIndex> neighbors;  // unsorted; normalized on apply
  std::uint64_t credit = 0;
};

class TriangleCountProgram {
 public:
  using State = TriangleState;
  using Message = TriangleMessage;
  static constexpr ActiveDirection kActiveDirection = ActiveDirection::kEither;
  static constexpr bool kApplyToAll = false;

  State initial_state(VertexIndex, VertexId) const { return {}; }

  template <class Sink>
  void edge_message(const SuperstepContext&, const EdgeTriplet<State>& t, Sink& sink) const {
    if (t.src_state.stage == 0 && t.dst_state.stage == 0) {
      sink.send_to_src({true, {t.dst}, 0});
      sink.send_to_dst({true, {t.src}, 0});
    } else if (t.src_state.stage == 1 && t.dst_state.stage == 1) {
      const std::uint64_t common = intersection_size(t.src_state.neighbors, t.dst_state.neighbors);
      sink.send_to_src({false, {}, common});
      sink.send_to_dst({false, {}, common});
    }
  }

  void merge(Message& into, const Message& other) const {
    into.neighbors.insert(into.neighbors.end(), other.neighbors.begin(), other.neighbors.end());
    into.credit += other.credit;
  }

  bool apply(VertexIndex, State& s, const Message* m) const;

  static std::uint64_t intersection_size(std::span<const VertexIndex> a, std::span<const VertexIndex> b);
};

struct TriangleResult {
  std::vector<std::uint64_t> per_vertex;  // aligned with vertex_ids()
  std::uint64_t total = 0;
  RunCounters counters;
};

/// Requires a simple undirected edge list (no self-loops, duplicates or
/// reciprocal pairs); throws InvalidInputError naming the first offending edge.
TriangleResult triangle_count(const VertexCutGraph& g, PregelOptions options = {});

// ---------------------------------------------------------------------------
// Landmark shortest paths: hop distance from every vertex to each landmark it
// can reach along directed edges. Distance maps flow backward over edges.

/// (landmark, hops) sorted by landmark; a missing landmark is unreachable.
struct DistanceMap {
  std::vector<std::pair<VertexId, std::uint32_t>> entries;

  std::optional<std::uint32_t> distance_to(VertexId landmark) const;
  friend bool operator==(const DistanceMap&, const DistanceMap&) = default;
};

class ShortestPathsProgram {
 public:
  using State = DistanceMap;
  using Message = DistanceMap;
  static constexpr ActiveDirection kActiveDirection = ActiveDirection::kIn;
  static constexpr bool kApplyToAll = false;

  explicit ShortestPathsProgram(std::vector<VertexId> sorted_landmarks) : landmarks_(std::move(sorted_landmarks)) {}

  State initial_state(VertexIndex, VertexId id) const;

  template <class Sink>
  void edge_message(const SuperstepContext&, const EdgeTriplet<State>& t, Sink& sink) const {
    DistanceMap offer = improvements(t.dst_state, t.src_state);
    if (!offer.entries.empty()) sink.send_to_src(std::move(offer));
  }

  void merge(Message& into, const Message& other) const;
  bool apply(VertexIndex, State& s, const Message* m) const;

  /// Entries of (via + 1 hop) that are strictly shorter than in `current`.
  static DistanceMap improvements(const DistanceMap& via, const DistanceMap& current);

 private:
  std::vector<VertexId> landmarks_;
};

struct ShortestPathsResult {
  std::vector<DistanceMap> distances;  // aligned with vertex_ids()
  RunCounters counters;
};

/// Throws std::invalid_argument for an empty landmark set or an unknown id.
ShortestPathsResult shortest_paths(const VertexCutGraph& g, std::span<const VertexId> landmarks,
                                   PregelOptions options = {});

// "vertex,value" dumps.
void write_ranks_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const double> ranks);
void write_labels_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const VertexId> labels);
void write_triangles_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const std::uint64_t> counts);
void write_distances_csv(std::ostream& out, std::span<const VertexId> ids, std::span<const DistanceMap> maps);

}  // namespace cutfit
