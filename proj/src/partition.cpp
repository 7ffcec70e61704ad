#include "cutfit/partition.hpp"

#include <fmt/format.h>
#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cutfit {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::kRvc: return "RVC";
    case Strategy::kOneD: return "1D";
    case Strategy::kTwoD: return "2D";
    case Strategy::kCrvc: return "CRVC";
    case Strategy::kSc: return "SC";
    case Strategy::kDc: return "DC";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  if (name == "ONE_D") return Strategy::kOneD;
  if (name == "TWO_D") return Strategy::kTwoD;
  return std::nullopt;
}

std::uint64_t grid_side(std::uint64_t n) noexcept {
  auto q = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (q * q < n) ++q;
  while (q > 1 && (q - 1) * (q - 1) >= n) --q;
  return q;
}

PartitionId partition_of(Strategy s, VertexId src, VertexId dst, std::uint64_t n) noexcept {
  switch (s) {
    case Strategy::kRvc:
      return static_cast<PartitionId>(pair_hash(src, dst) % n);
    case Strategy::kOneD:
      return static_cast<PartitionId>(mix64(src) % n);
    case Strategy::kTwoD: {
      const std::uint64_t q = grid_side(n);
      const std::uint64_t col = mix64(src) % q;
      const std::uint64_t row = mix64(dst) % q;
      return static_cast<PartitionId>((col * q + row) % n);
    }
    case Strategy::kCrvc:
      return static_cast<PartitionId>(pair_hash(std::min(src, dst), std::max(src, dst)) % n);
    case Strategy::kSc:
      return static_cast<PartitionId>(src % n);
    case Strategy::kDc:
      return static_cast<PartitionId>(dst % n);
  }
  return 0;
}

PartitionAssignment partition_edges(const Graph& g, Strategy s, std::uint64_t num_partitions) {
  if (num_partitions == 0) throw std::invalid_argument("number of partitions must be >= 1");
  if (num_partitions > std::numeric_limits<PartitionId>::max()) {
    throw std::invalid_argument("number of partitions exceeds PartitionId range");
  }
  PartitionAssignment a;
  a.strategy = s;
  a.num_partitions = static_cast<PartitionId>(num_partitions);
  a.per_edge.resize(g.num_edges());
  const auto edges = g.edges();
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, edges.size(), 1 << 14),
                    [&](const tbb::blocked_range<std::size_t>& r) {
                      for (std::size_t i = r.begin(); i != r.end(); ++i) {
                        a.per_edge[i] = partition_of(s, edges[i].src, edges[i].dst, num_partitions);
                      }
                    });
  return a;
}

void write_assignment_csv(std::ostream& out, const Graph& g, const PartitionAssignment& a) {
  if (a.per_edge.size() != g.num_edges()) {
    throw std::invalid_argument("partition assignment is not aligned with the graph");
  }
  out << "edge_index,src,dst,partition\n";
  fmt::memory_buffer buf;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    fmt::format_to(std::back_inserter(buf), "{},{},{},{}\n", i, edges[i].src, edges[i].dst, a.per_edge[i]);
    if (buf.size() > (1 << 16)) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

ReplicationTable replication_table(const Graph& g, const PartitionAssignment& a) {
  if (a.per_edge.size() != g.num_edges()) {
    throw std::invalid_argument("partition assignment is not aligned with the graph");
  }
  const std::size_t n = g.num_vertices();
  const auto dense = g.dense_edges();

  // Collect (vertex, partition) incidences, then sort+dedup per vertex.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const DenseEdge& e : dense) {
    ++offsets[e.src + 1];
    ++offsets[e.dst + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<PartitionId> parts(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    parts[cursor[dense[i].src]++] = a.per_edge[i];
    parts[cursor[dense[i].dst]++] = a.per_edge[i];
  }

  std::vector<std::size_t> compact(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = parts.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = parts.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    compact[v] = write;
    for (auto it = first; it != last; ++it) parts[write++] = *it;
  }
  compact[n] = write;
  parts.resize(write);
  parts.shrink_to_fit();
  return ReplicationTable(std::move(compact), std::move(parts));
}

std::vector<std::uint64_t> partition_edge_counts(const PartitionAssignment& a) {
  std::vector<std::uint64_t> counts(a.num_partitions, 0);
  for (PartitionId p : a.per_edge) ++counts[p];
  return counts;
}

PartitionMetrics compute_metrics(const Graph& g, const PartitionAssignment& a) {
  return compute_metrics(g, a, replication_table(g, a));
}

PartitionMetrics compute_metrics(const Graph& g, const PartitionAssignment& a, const ReplicationTable& replicas) {
  if (g.empty()) throw UndefinedMetricError("partition metrics of an empty graph are undefined");
  if (a.per_edge.size() != g.num_edges() || replicas.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("partition assignment is not aligned with the graph");
  }

  PartitionMetrics m;
  const auto counts = partition_edge_counts(a);
  const double n = static_cast<double>(a.num_partitions);
  const double mean = static_cast<double>(g.num_edges()) / n;
  m.balance = static_cast<double>(*std::max_element(counts.begin(), counts.end())) / mean;

  double ss = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - mean;
    ss += d * d;
  }
  m.part_stddev = std::sqrt(ss / n);

  for (VertexIndex v = 0; v < replicas.num_vertices(); ++v) {
    const std::size_t r = replicas.replica_count(v);
    if (r >= 2) {
      ++m.cut;
      m.comm_cost += r;
    } else {
      ++m.non_cut;
    }
  }
  return m;
}

std::string metrics_csv_header() {
  return "dataset,strategy,num_partitions,balance,non_cut,cut,comm_cost,part_stddev";
}

std::string metrics_csv_row(std::string_view dataset, Strategy s, std::uint64_t num_partitions,
                            const PartitionMetrics& m) {
  return fmt::format("{},{},{},{},{},{},{},{}", dataset, to_string(s), num_partitions, m.balance, m.non_cut,
                     m.cut, m.comm_cost, m.part_stddev);
}

}  // namespace cutfit
