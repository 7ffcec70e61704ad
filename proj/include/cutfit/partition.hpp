// Vertex-cut edge partitioning: deterministic hashing, the six strategies,
// replica tables and partition quality metrics.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutfit/graph.hpp"

namespace cutfit {

using PartitionId = std::uint32_t;

/// SplitMix64 finalizer. Bit-exact across platforms; all arithmetic mod 2^64.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Order-sensitive hash of a vertex pair: pair_hash(a,b) != pair_hash(b,a) in general.
constexpr std::uint64_t pair_hash(VertexId a, VertexId b) noexcept {
  return mix64(mix64(a) ^ (mix64(b) * 0xFF51AFD7ED558CCDULL));
}

enum class Strategy { kRvc, kOneD, kTwoD, kCrvc, kSc, kDc };

inline constexpr std::array<Strategy, 6> kAllStrategies = {
    Strategy::kRvc, Strategy::kOneD, Strategy::kTwoD, Strategy::kCrvc, Strategy::kSc, Strategy::kDc};

/// "RVC", "1D", "2D", "CRVC", "SC", "DC".
std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

/// Side of the square grid used by the 2D strategy: ceil(sqrt(n)).
std::uint64_t grid_side(std::uint64_t num_partitions) noexcept;

/// Partition id of edge (src, dst); num_partitions must be >= 1.
PartitionId partition_of(Strategy s, VertexId src, VertexId dst, std::uint64_t num_partitions) noexcept;

struct PartitionAssignment {
  Strategy strategy = Strategy::kRvc;
  PartitionId num_partitions = 1;
  std::vector<PartitionId> per_edge;  // aligned with Graph::edges()
};

/// Throws std::invalid_argument when num_partitions == 0.
PartitionAssignment partition_edges(const Graph& g, Strategy s, std::uint64_t num_partitions);

/// CSV "edge_index,src,dst,partition", LF line endings.
void write_assignment_csv(std::ostream& out, const Graph& g, const PartitionAssignment& a);

/// Sorted partition ids holding a replica of each vertex, CSR over dense indices.
class ReplicationTable {
 public:
  ReplicationTable() = default;
  ReplicationTable(std::vector<std::size_t> offsets, std::vector<PartitionId> parts)
      : offsets_(std::move(offsets)), parts_(std::move(parts)) {}

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const PartitionId> replicas(VertexIndex v) const {
    return {parts_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t replica_count(VertexIndex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t total_replicas() const noexcept { return parts_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<PartitionId> parts_;
};

/// Throws std::invalid_argument when the assignment is not aligned with g.
ReplicationTable replication_table(const Graph& g, const PartitionAssignment& a);

struct PartitionMetrics {
  double balance = 0.0;
  std::uint64_t non_cut = 0;
  std::uint64_t cut = 0;
  std::uint64_t comm_cost = 0;  // sum of replica counts over cut vertices
  double part_stddev = 0.0;     // population stddev of edges per partition

  friend bool operator==(const PartitionMetrics&, const PartitionMetrics&) = default;
};

/// Edge count of every partition, empty partitions included.
std::vector<std::uint64_t> partition_edge_counts(const PartitionAssignment& a);

PartitionMetrics compute_metrics(const Graph& g, const PartitionAssignment& a);
PartitionMetrics compute_metrics(const Graph& g, const PartitionAssignment& a, const ReplicationTable& replicas);

std::string metrics_csv_header();
std::string metrics_csv_row(std::string_view dataset, Strategy s, std::uint64_t num_partitions,
                            const PartitionMetrics& m);

}  // namespace cutfit
