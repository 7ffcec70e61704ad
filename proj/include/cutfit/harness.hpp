// Benchmark harness: runs the dataset x strategy x partition-count x
// algorithm x repetition matrix, records counters, and correlates partition
// metrics with execution cost.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutfit/algorithms.hpp"
#include "cutfit/graph.hpp"
#include "cutfit/partition.hpp"

namespace cutfit {

struct DatasetSpec {
  std::string name;
  std::filesystem::path path;
};

struct ExperimentManifest {
  std::vector<DatasetSpec> datasets;
  std::vector<Strategy> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  std::vector<std::uint64_t> partition_counts{128, 256};
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  std::size_t repetitions = 5;
  std::size_t pr_iterations = 10;
  std::size_t max_supersteps = kDefaultMaxSupersteps;
  std::size_t landmarks = 5;
  std::uint64_t seed = 0;
  int workers = 0;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// key=value lines ('#' comments allowed). Keys: strategies, partitions,
/// algorithms, repetitions, pr_iterations, max_supersteps, landmarks, seed,
/// workers, and repeated dataset=<name>,<path>. Relative dataset paths are
/// resolved against base_dir.
ExperimentManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentManifest load_manifest(const std::filesystem::path& path);

/// SplitMix64 stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    const std::uint64_t out = mix64(state_);
    state_ += 0x9E3779B97F4A7C15ULL;
    return out;
  }
  /// Value in [0, bound) by modulo reduction; bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Seed for the landmark draw of one (dataset, repetition) cell. Every
/// strategy and partition count sees the same landmarks for that cell.
std::uint64_t landmark_seed(std::uint64_t manifest_seed, std::size_t dataset_index, std::size_t repetition) noexcept;

/// k distinct vertex ids drawn uniformly (all of them when k >= |V|), sorted.
std::vector<VertexId> draw_landmarks(std::span<const VertexId> vertices, std::size_t k, std::uint64_t seed);

struct RunRecord {
  std::string dataset;
  Strategy strategy = Strategy::kRvc;
  std::uint64_t num_partitions = 1;
  Algorithm algorithm = Algorithm::kPageRank;
  std::size_t repetition = 0;
  double wall_time_s = 0.0;
  std::size_t supersteps = 0;
  std::uint64_t gather_msgs = 0;
  std::uint64_t scatter_msgs = 0;
  bool converged = false;
  std::uint64_t seed = 0;

  std::uint64_t total_msgs() const noexcept { return gather_msgs + scatter_msgs; }
};

struct MetricsRecord {
  std::string dataset;
  Strategy strategy = Strategy::kRvc;
  std::uint64_t num_partitions = 1;
  PartitionMetrics metrics;
};

struct AlgorithmSettings {
  std::size_t pr_iterations = 10;
  double reset_prob = kDefaultResetProb;
  std::size_t max_supersteps = kDefaultMaxSupersteps;
  int workers = 0;
};

/// Runs one algorithm and returns its counters. SSSP needs landmarks; TR
/// needs a simple undirected partitioned graph.
RunCounters run_algorithm(const VertexCutGraph& g, Algorithm algorithm, const AlgorithmSettings& settings,
                          std::span<const VertexId> landmarks = {});

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<MetricsRecord> metrics;
  std::vector<std::string> warnings;
};

/// Suffix of the dataset name used for the simple undirected variant that
/// triangle counting runs on.
inline constexpr std::string_view kUndirectedSuffix = "/undirected";

/// When incremental_dir is set, runs.csv and metrics.csv there are rewritten
/// with headers up front and then appended to (and flushed) as rows arrive.
ExperimentResult run_experiment(const ExperimentManifest& m,
                                const std::optional<std::filesystem::path>& incremental_dir = std::nullopt);

class UndefinedCorrelationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pearson product-moment coefficient. Throws std::invalid_argument unless
/// |xs| == |ys| >= 3, and UndefinedCorrelationError on zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

enum class Grouping { kPooled, kPerDataset };
enum class CorrelationTarget { kWallTime, kMessages };

std::string_view to_string(Grouping g) noexcept;
std::string_view to_string(CorrelationTarget t) noexcept;

inline constexpr std::array<std::string_view, 5> kMetricNames = {"balance", "non_cut", "cut", "comm_cost",
                                                                   "part_stddev"};
double metric_value(const PartitionMetrics& m, std::string_view name);

struct CorrelationReport {
  Algorithm algorithm = Algorithm::kPageRank;
  std::uint64_t num_partitions = 0;
  std::string metric;
  CorrelationTarget target = CorrelationTarget::kWallTime;
  Grouping grouping = Grouping::kPooled;
  std::string dataset;              // "*" for pooled
  std::optional<double> pearson_r;  // nullopt: undefined (zero variance)
  std::size_t sample_count = 0;
};

struct CorrelationResult {
  std::vector<CorrelationReport> reports;
  std::vector<std::string> notices;  // omitted groups and join failures
};

/// Joins records with metrics on (dataset, strategy, N) and correlates each
/// metric with the per-point mean wall time and mean message count.
CorrelationResult correlate(std::span<const RunRecord> records, std::span<const MetricsRecord> metrics);

struct BestStrategy {
  std::string dataset;
  Algorithm algorithm = Algorithm::kPageRank;
  std::uint64_t num_partitions = 0;
  Strategy by_time = Strategy::kRvc;
  double mean_wall_time_s = 0.0;
  Strategy by_messages = Strategy::kRvc;
  double mean_messages = 0.0;
};

/// Lowest mean per (dataset, algorithm, N); ties go to the earlier strategy
/// in kAllStrategies order.
std::vector<BestStrategy> best_strategies(std::span<const RunRecord> records);

std::string runs_csv_header();
std::string run_record_csv_row(const RunRecord& r);
std::string correlations_csv_header();
std::string correlation_csv_row(const CorrelationReport& r);

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);
std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path);

/// Writes runs.csv, metrics.csv, correlations.csv and summary.txt into dir.
/// Output is a pure function of the inputs.
void emit_report(std::span<const RunRecord> records, std::span<const MetricsRecord> metrics,
                 const CorrelationResult& correlations, const std::filesystem::path& dir);

}  // namespace cutfit
