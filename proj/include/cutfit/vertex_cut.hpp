// Per-partition representation of a vertex-cut graph: local edges, mirrored
// vertices, and the master partition of every vertex.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cutfit/graph.hpp"
#include "cutfit/partition.hpp"

namespace cutfit {

/// Edge endpoints as positions in EdgePartition::mirrors.
struct LocalEdge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
};

struct EdgePartition {
  std::vector<VertexIndex> mirrors;     // ascending global vertex indices present here
  std::vector<LocalEdge> edges;         // in original edge-list order
  std::vector<std::size_t> edge_index;  // original position of each local edge
};

class VertexCutGraph {
 public:
  VertexCutGraph() = default;

  PartitionId num_partitions() const noexcept { return static_cast<PartitionId>(partitions_.size()); }
  std::size_t num_vertices() const noexcept { return ids_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  Strategy strategy() const noexcept { return strategy_; }

  std::span<const VertexId> vertex_ids() const noexcept { return ids_; }
  VertexId id_of(VertexIndex v) const { return ids_[v]; }

  const EdgePartition& partition(PartitionId p) const { return partitions_[p]; }
  std::span<const EdgePartition> partitions() const noexcept { return partitions_; }

  PartitionId master_of(VertexIndex v) const { return master_[v]; }
  std::span<const PartitionId> replicas(VertexIndex v) const { return replicas_.replicas(v); }
  std::size_t replica_count(VertexIndex v) const { return replicas_.replica_count(v); }
  const ReplicationTable& replication() const noexcept { return replicas_; }

  std::uint64_t out_degree(VertexIndex v) const { return out_degree_[v]; }
  std::uint64_t in_degree(VertexIndex v) const { return in_degree_[v]; }

  /// Edge list reassembled from all partitions, ordered by original index.
  std::vector<Edge> edges() const;

  friend VertexCutGraph build_vertex_cut(const Graph& g, const PartitionAssignment& a);

 private:
  Strategy strategy_ = Strategy::kRvc;
  std::size_t num_edges_ = 0;
  std::vector<VertexId> ids_;
  std::vector<EdgePartition> partitions_;
  std::vector<PartitionId> master_;
  ReplicationTable replicas_;
  std::vector<std::uint64_t> out_degree_;
  std::vector<std::uint64_t> in_degree_;
};

/// Groups edges by partition and picks the lowest replica partition as master.
/// Throws std::invalid_argument when a is not aligned with g.
VertexCutGraph build_vertex_cut(const Graph& g, const PartitionAssignment& a);

}  // namespace cutfit
