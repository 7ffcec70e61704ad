// Command-line front end: profile, partition, metrics, run, bench, correlate.
#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "cutfit/algorithms.hpp"
#include "cutfit/harness.hpp"
#include "cutfit/partition.hpp"
#include "cutfit/profile.hpp"
#include "cutfit/vertex_cut.hpp"

namespace {

cutfit::Strategy strategy_arg(const std::string& name) {
  auto s = cutfit::parse_strategy(name);
  if (!s) throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "' (RVC, 1D, 2D, CRVC, SC, DC)");
  return *s;
}

std::string dataset_name(const std::filesystem::path& p) { return p.stem().string(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-cut partitioning toolkit and BSP benchmark harness"};
  app.require_subcommand(1);

  std::string edgelist;
  std::string strategy_name;
  std::uint64_t num_partitions = 0;
  bool drop_self_loops = false;

  auto* profile_cmd = app.add_subcommand("profile", "Characterize a dataset");
  std::size_t exact_threshold = cutfit::kDefaultExactDiameterThreshold;
  bool profile_csv = false;
  profile_cmd->add_option("edgelist", edgelist, "SNAP edge list")->required()->check(CLI::ExistingFile);
  profile_cmd->add_option("--exact-threshold", exact_threshold, "Max vertices for exact diameter");
  profile_cmd->add_flag("--csv", profile_csv, "Print a CSV header and row instead of key=value");
  profile_cmd->add_flag("--drop-self-loops", drop_self_loops, "Drop self-loops while loading");

  auto* partition_cmd = app.add_subcommand("partition", "Assign edges to partitions");
  std::string out_file;
  partition_cmd->add_option("edgelist", edgelist, "SNAP edge list")->required()->check(CLI::ExistingFile);
  partition_cmd->add_option("--strategy", strategy_name, "RVC, 1D, 2D, CRVC, SC or DC")->required();
  partition_cmd->add_option("--num-partitions", num_partitions)->required()->check(CLI::PositiveNumber);
  partition_cmd->add_option("--out", out_file, "Output CSV (default: stdout)");

  auto* metrics_cmd = app.add_subcommand("metrics", "Partition quality metrics");
  metrics_cmd->add_option("edgelist", edgelist, "SNAP edge list")->required()->check(CLI::ExistingFile);
  metrics_cmd->add_option("--strategy", strategy_name)->required();
  metrics_cmd->add_option("--num-partitions", num_partitions)->required()->check(CLI::PositiveNumber);

  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on the partitioned graph");
  std::string algorithm_name;
  std::size_t iterations = 10;
  std::size_t landmark_count = 5;
  std::uint64_t seed = 0;
  std::size_t max_supersteps = cutfit::kDefaultMaxSupersteps;
  std::string values_out;
  run_cmd->add_option("edgelist", edgelist, "SNAP edge list")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--algorithm", algorithm_name, "PR, CC, TR or SSSP")->required();
  run_cmd->add_option("--strategy", strategy_name)->required();
  run_cmd->add_option("--num-partitions", num_partitions)->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("--iterations", iterations, "PageRank iterations")->check(CLI::PositiveNumber);
  run_cmd->add_option("--landmarks", landmark_count, "SSSP landmark count")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", seed, "Seed for the landmark draw");
  run_cmd->add_option("--max-supersteps", max_supersteps)->check(CLI::PositiveNumber);
  run_cmd->add_option("--values", values_out, "Write per-vertex results as vertex,value CSV");

  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment manifest");
  std::string manifest_path;
  std::string out_dir;
  bench_cmd->add_option("--manifest", manifest_path)->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--out", out_dir)->required();

  auto* correlate_cmd = app.add_subcommand("correlate", "Correlate metrics with recorded runs");
  std::string runs_path;
  std::string metrics_path;
  correlate_cmd->add_option("--runs", runs_path)->required()->check(CLI::ExistingFile);
  correlate_cmd->add_option("--metrics", metrics_path)->required()->check(CLI::ExistingFile);
  correlate_cmd->add_option("--out", out_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (profile_cmd->parsed()) {
      const auto loaded = cutfit::load_edge_list(edgelist, !drop_self_loops);
      const auto p = cutfit::profile(loaded.graph, exact_threshold);
      if (profile_csv) {
        std::cout << cutfit::profile_csv_header() << '\n' << cutfit::profile_csv_row(dataset_name(edgelist), p) << '\n';
      } else {
        cutfit::write_profile_key_value(std::cout, dataset_name(edgelist), p);
        if (drop_self_loops) std::cout << "dropped_self_loops=" << loaded.dropped_self_loops << '\n';
      }
    } else if (partition_cmd->parsed()) {
      const auto g = cutfit::load_edge_list(edgelist).graph;
      const auto a = cutfit::partition_edges(g, strategy_arg(strategy_name), num_partitions);
      if (out_file.empty()) {
        cutfit::write_assignment_csv(std::cout, g, a);
      } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_file);
        cutfit::write_assignment_csv(out, g, a);
      }
    } else if (metrics_cmd->parsed()) {
      const auto g = cutfit::load_edge_list(edgelist).graph;
      const auto s = strategy_arg(strategy_name);
      const auto m = cutfit::compute_metrics(g, cutfit::partition_edges(g, s, num_partitions));
      std::cout << cutfit::metrics_csv_header() << '\n'
                << cutfit::metrics_csv_row(dataset_name(edgelist), s, num_partitions, m) << '\n';
    } else if (run_cmd->parsed()) {
      const auto alg = cutfit::parse_algorithm(algorithm_name);
      if (!alg) throw CLI::ValidationError("--algorithm", "unknown algorithm '" + algorithm_name + "'");
      const auto s = strategy_arg(strategy_name);
      cutfit::Graph g = cutfit::load_edge_list(edgelist).graph;
      if (*alg == cutfit::Algorithm::kTriangles) g = cutfit::canonicalize_undirected(g);
      const auto vcg = cutfit::build_vertex_cut(g, cutfit::partition_edges(g, s, num_partitions));

      cutfit::PregelOptions opt;
      opt.max_supersteps = max_supersteps;
      cutfit::RunCounters counters;
      std::ofstream values;
      if (!values_out.empty()) {
        values.open(values_out, std::ios::binary);
        if (!values) throw std::runtime_error("cannot write " + values_out);
      }
      switch (*alg) {
        case cutfit::Algorithm::kPageRank: {
          auto r = cutfit::pagerank(vcg, iterations, cutfit::kDefaultResetProb, opt);
          if (values.is_open()) cutfit::write_ranks_csv(values, vcg.vertex_ids(), r.ranks);
          counters = std::move(r.counters);
          break;
        }
        case cutfit::Algorithm::kConnectedComponents: {
          auto r = cutfit::connected_components(vcg, opt);
          if (values.is_open()) cutfit::write_labels_csv(values, vcg.vertex_ids(), r.labels);
          std::cerr << "components=" << r.count << '\n';
          counters = std::move(r.counters);
          break;
        }
        case cutfit::Algorithm::kTriangles: {
          auto r = cutfit::triangle_count(vcg, opt);
          if (values.is_open()) cutfit::write_triangles_csv(values, vcg.vertex_ids(), r.per_vertex);
          std::cerr << "triangles=" << r.total << '\n';
          counters = std::move(r.counters);
          break;
        }
        case cutfit::Algorithm::kShortestPaths: {
          const auto landmarks = cutfit::draw_landmarks(vcg.vertex_ids(), landmark_count, seed);
          auto r = cutfit::shortest_paths(vcg, landmarks, opt);
          if (values.is_open()) cutfit::write_distances_csv(values, vcg.vertex_ids(), r.distances);
          counters = std::move(r.counters);
          break;
        }
      }
      std::cout << cutfit::run_counters_csv_header() << '\n'
                << cutfit::run_counters_csv_row(cutfit::to_string(*alg), dataset_name(edgelist), s, num_partitions,
                                                counters)
                << '\n';
    } else if (bench_cmd->parsed()) {
      const auto manifest = cutfit::load_manifest(manifest_path);
      std::filesystem::create_directories(out_dir);
      // Timestamps go to the log so the data files stay reproducible.
      std::ofstream log(std::filesystem::path(out_dir) / "bench.log", std::ios::app);
      const auto started = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      log << "started " << std::ctime(&started);

      const auto result = cutfit::run_experiment(manifest, std::filesystem::path(out_dir));
      for (const auto& w : result.warnings) {
        std::cerr << "warning: " << w << '\n';
        log << "warning: " << w << '\n';
      }
      const auto corr = cutfit::correlate(result.records, result.metrics);
      cutfit::emit_report(result.records, result.metrics, corr, out_dir);
      const auto finished = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      log << "finished " << std::ctime(&finished);
      std::cout << result.records.size() << " runs, " << result.metrics.size() << " metric rows, "
                << corr.reports.size() << " correlations written to " << out_dir << '\n';
    } else if (correlate_cmd->parsed()) {
      const auto runs = cutfit::read_runs_csv(runs_path);
      const auto metrics = cutfit::read_metrics_csv(metrics_path);
      const auto corr = cutfit::correlate(runs, metrics);
      cutfit::emit_report(runs, metrics, corr, out_dir);
      std::cout << corr.reports.size() << " correlations written to " << out_dir << '\n';
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
