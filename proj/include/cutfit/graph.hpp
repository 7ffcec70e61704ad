// Immutable directed edge-list graph with a dense vertex index.
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cutfit {

/// Opaque 64-bit vertex identifier as it appears in the input file.
using VertexId = std::uint64_t;

/// Position of a vertex in Graph::vertices(); dense in [0, num_vertices()).
using VertexIndex = std::uint32_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DenseEdge {
  VertexIndex src = 0;
  VertexIndex dst = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Edges in input order plus the vertex set they induce. A vertex exists only
/// through an incident edge; there are no isolated vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Edge> edges);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const DenseEdge> dense_edges() const noexcept { return dense_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_vertices() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  /// Distinct vertex ids in ascending order.
  std::span<const VertexId> vertices() const noexcept { return ids_; }
  VertexId id_of(VertexIndex v) const { return ids_[v]; }
  std::optional<VertexIndex> index_of(VertexId id) const;
  bool contains(VertexId id) const { return index_of(id).has_value(); }

  std::size_t in_degree(VertexIndex v) const { return in_[v]; }
  std::size_t out_degree(VertexIndex v) const { return out_[v]; }
  std::span<const std::uint64_t> in_degrees() const noexcept { return in_; }
  std::span<const std::uint64_t> out_degrees() const noexcept { return out_; }

 private:
  std::vector<Edge> edges_;
  std::vector<DenseEdge> dense_;
  std::vector<VertexId> ids_;
  std::vector<std::uint64_t> in_;
  std::vector<std::uint64_t> out_;
};

struct LoadResult {
  Graph graph;
  std::size_t dropped_self_loops = 0;
};

/// Parses SNAP-style text: '#' comment lines, then lines of at least two
/// unsigned integers separated by spaces or tabs. Extra tokens are ignored.
LoadResult parse_edge_list(std::string_view text, bool allow_self_loops = true);
LoadResult load_edge_list(const std::filesystem::path& path, bool allow_self_loops = true);

/// {(min(u,v), max(u,v))} sorted and deduplicated, self-loops removed.
Graph canonicalize_undirected(const Graph& g);

/// Adds every missing reciprocal edge; keeps original edges first.
Graph symmetrize(const Graph& g);

/// True when g has no self-loops, no duplicate edges and no reciprocal pairs.
/// On failure, offending receives the first edge that violates the form.
bool is_canonical_undirected(const Graph& g, Edge* offending = nullptr);

}  // namespace cutfit
