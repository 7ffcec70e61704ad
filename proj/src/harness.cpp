#include "cutfit/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <new>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cutfit/csv.hpp"

namespace cutfit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t manifest_uint(std::string_view key, std::string_view value, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ManifestError(fmt::format("manifest line {}: {} expects an unsigned integer, got '{}'", line, key, value));
  }
  return v;
}

template <class T, class Parse>
std::vector<T> manifest_list(std::string_view key, std::string_view value, std::size_t line, Parse&& parse) {
  std::vector<T> out;
  for (std::string_view item : csv::split(value)) {
    item = trim(item);
    if (item.empty()) continue;
    auto parsed = parse(item);
    if (!parsed) throw ManifestError(fmt::format("manifest line {}: unknown {} '{}'", line, key, item));
    if (std::find(out.begin(), out.end(), *parsed) == out.end()) out.push_back(*parsed);
  }
  if (out.empty()) throw ManifestError(fmt::format("manifest line {}: {} must not be empty", line, key));
  return out;
}

std::string format_double(double v) { return fmt::format("{}", v); }

}  // namespace

ExperimentManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  ExperimentManifest m;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ManifestError(fmt::format("manifest line {}: expected key=value", line_no));
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "dataset") {
      const std::size_t comma = value.find(',');
      if (comma == std::string_view::npos) {
        throw ManifestError(fmt::format("manifest line {}: dataset expects <name>,<path>", line_no));
      }
      DatasetSpec ds{std::string(trim(value.substr(0, comma))), std::filesystem::path(trim(value.substr(comma + 1)))};
      if (ds.name.empty()) throw ManifestError(fmt::format("manifest line {}: empty dataset name", line_no));
      if (ds.path.is_relative() && !base_dir.empty()) ds.path = base_dir / ds.path;
      m.datasets.push_back(std::move(ds));
    } else if (key == "strategies") {
      m.strategies = manifest_list<Strategy>(key, value, line_no, parse_strategy);
    } else if (key == "algorithms") {
      m.algorithms = manifest_list<Algorithm>(key, value, line_no, parse_algorithm);
    } else if (key == "partitions" || key == "partition_counts") {
      m.partition_counts = manifest_list<std::uint64_t>(key, value, line_no, [&](std::string_view item) {
        const std::uint64_t n = manifest_uint(key, item, line_no);
        return n == 0 ? std::nullopt : std::optional<std::uint64_t>(n);
      });
    } else if (key == "repetitions") {
      m.repetitions = manifest_uint(key, value, line_no);
    } else if (key == "pr_iterations") {
      m.pr_iterations = manifest_uint(key, value, line_no);
    } else if (key == "max_supersteps") {
      m.max_supersteps = manifest_uint(key, value, line_no);
    } else if (key == "landmarks") {
      m.landmarks = manifest_uint(key, value, line_no);
    } else if (key == "seed") {
      m.seed = manifest_uint(key, value, line_no);
    } else if (key == "workers") {
      m.workers = static_cast<int>(manifest_uint(key, value, line_no));
    } else {
      throw ManifestError(fmt::format("manifest line {}: unknown key '{}'", line_no, key));
    }
  }
  if (m.repetitions == 0) throw ManifestError("manifest: repetitions must be >= 1");
  if (m.pr_iterations == 0) throw ManifestError("manifest: pr_iterations must be >= 1");
  if (m.max_supersteps == 0) throw ManifestError("manifest: max_supersteps must be >= 1");
  if (m.landmarks == 0) throw ManifestError("manifest: landmarks must be >= 1");
  for (const DatasetSpec& ds : m.datasets) {
    if (ds.name.find_first_of(",\n") != std::string::npos) {
      throw ManifestError("manifest: dataset name must not contain commas: " + ds.name);
    }
  }
  return m;
}

ExperimentManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

std::uint64_t landmark_seed(std::uint64_t manifest_seed, std::size_t dataset_index, std::size_t repetition) noexcept {
  // Element (dataset_index << 32) + repetition of the manifest seed's SplitMix64 stream.
  const std::uint64_t position = (static_cast<std::uint64_t>(dataset_index) << 32) + repetition;
  return mix64(manifest_seed + position * 0x9E3779B97F4A7C15ULL);
}

std::vector<VertexId> draw_landmarks(std::span<const VertexId> vertices, std::size_t k, std::uint64_t seed) {
  std::vector<VertexId> pool(vertices.begin(), vertices.end());
  k = std::min(k, pool.size());
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

RunCounters run_algorithm(const VertexCutGraph& g, Algorithm algorithm, const AlgorithmSettings& settings,
                          std::span<const VertexId> landmarks) {
  PregelOptions opt;
  opt.max_supersteps = settings.max_supersteps;
  opt.workers = settings.workers;
  switch (algorithm) {
    case Algorithm::kPageRank:
      return pagerank(g, settings.pr_iterations, settings.reset_prob, opt).counters;
    case Algorithm::kConnectedComponents:
      return connected_components(g, opt).counters;
    case Algorithm::kTriangles:
      return triangle_count(g, opt).counters;
    case Algorithm::kShortestPaths:
      return shortest_paths(g, landmarks, opt).counters;
  }
  throw std::logic_error("unknown algorithm");
}

std::string runs_csv_header() {
  return "algorithm,dataset,strategy,num_partitions,supersteps,gather_msgs,scatter_msgs,wall_time_s,converged,"
         "repetition,seed";
}

std::string run_record_csv_row(const RunRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", to_string(r.algorithm), r.dataset, to_string(r.strategy),
                     r.num_partitions, r.supersteps, r.gather_msgs, r.scatter_msgs, format_double(r.wall_time_s),
                     r.converged ? "true" : "false", r.repetition, r.seed);
}

ExperimentResult run_experiment(const ExperimentManifest& m, const std::optional<std::filesystem::path>& incremental_dir) {
  ExperimentResult result;

  std::ofstream runs_out;
  std::ofstream metrics_out;
  if (incremental_dir) {
    std::filesystem::create_directories(*incremental_dir);
    runs_out.open(*incremental_dir / "runs.csv", std::ios::binary | std::ios::trunc);
    metrics_out.open(*incremental_dir / "metrics.csv", std::ios::binary | std::ios::trunc);
    if (!runs_out || !metrics_out) {
      throw std::runtime_error("cannot write results into " + incremental_dir->string());
    }
    runs_out << runs_csv_header() << '\n' << std::flush;
    metrics_out << metrics_csv_header() << '\n' << std::flush;
  }
  auto add_record = [&](RunRecord r) {
    if (runs_out.is_open()) runs_out << run_record_csv_row(r) << '\n' << std::flush;
    result.records.push_back(std::move(r));
  };
  auto add_metrics = [&](MetricsRecord r) {
    if (metrics_out.is_open()) {
      metrics_out << metrics_csv_row(r.dataset, r.strategy, r.num_partitions, r.metrics) << '\n' << std::flush;
    }
    result.metrics.push_back(std::move(r));
  };

  AlgorithmSettings settings;
  settings.pr_iterations = m.pr_iterations;
  settings.max_supersteps = m.max_supersteps;
  settings.workers = m.workers;

  const bool wants_tr = std::find(m.algorithms.begin(), m.algorithms.end(), Algorithm::kTriangles) != m.algorithms.end();
  const bool wants_directed = std::any_of(m.algorithms.begin(), m.algorithms.end(),
                                          [](Algorithm a) { return a != Algorithm::kTriangles; });

  for (std::size_t di = 0; di < m.datasets.size(); ++di) {
    const DatasetSpec& ds = m.datasets[di];
    Graph graph;
    try {
      graph = load_edge_list(ds.path).graph;
      if (graph.empty()) throw EmptyGraphError("no edges after loading");
    } catch (const std::exception& e) {
      result.warnings.push_back(fmt::format("skipping dataset {}: {}", ds.name, e.what()));
      continue;
    }

    // Landmarks depend only on (dataset, repetition) so strategies stay comparable.
    std::vector<std::pair<std::uint64_t, std::vector<VertexId>>> landmark_sets;
    for (std::size_t rep = 0; rep < m.repetitions; ++rep) {
      const std::uint64_t seed = landmark_seed(m.seed, di, rep);
      landmark_sets.emplace_back(seed, draw_landmarks(graph.vertices(), m.landmarks, seed));
    }

    std::optional<Graph> undirected;
    if (wants_tr) undirected = canonicalize_undirected(graph);
    const std::string undirected_name = ds.name + std::string(kUndirectedSuffix);

    for (Strategy s : m.strategies) {
      for (std::uint64_t n : m.partition_counts) {
        auto run_cells = [&](const Graph& g, const std::string& name, bool triangles) {
          const PartitionAssignment a = partition_edges(g, s, n);
          add_metrics({name, s, n, compute_metrics(g, a)});
          const VertexCutGraph vcg = build_vertex_cut(g, a);
          for (Algorithm alg : m.algorithms) {
            if ((alg == Algorithm::kTriangles) != triangles) continue;
            for (std::size_t rep = 0; rep < m.repetitions; ++rep) {
              const bool sssp = alg == Algorithm::kShortestPaths;
              const RunCounters c = run_algorithm(vcg, alg, settings,
                                                  sssp ? std::span<const VertexId>(landmark_sets[rep].second)
                                                       : std::span<const VertexId>{});
              RunRecord r;
              r.dataset = name;
              r.strategy = s;
              r.num_partitions = n;
              r.algorithm = alg;
              r.repetition = rep;
              r.wall_time_s = c.wall_time_s;
              r.supersteps = c.supersteps;
              r.gather_msgs = c.gather_msgs;
              r.scatter_msgs = c.scatter_msgs;
              r.converged = c.converged;
              r.seed = sssp ? landmark_sets[rep].first : m.seed;
              add_record(std::move(r));
            }
          }
        };
        try {
          if (wants_directed) run_cells(graph, ds.name, false);
          if (wants_tr) run_cells(*undirected, undirected_name, true);
        } catch (const std::bad_alloc&) {
          result.warnings.push_back(
              fmt::format("out of memory on dataset {} strategy {} N={}; combination aborted", ds.name, to_string(s), n));
        }
      }
    }
  }
  return result;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: sequences differ in length");
  if (xs.size() < 3) throw std::invalid_argument("pearson: at least 3 points are required");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelationError("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string_view to_string(Grouping g) noexcept { return g == Grouping::kPooled ? "pooled" : "per_dataset"; }

std::string_view to_string(CorrelationTarget t) noexcept {
  return t == CorrelationTarget::kWallTime ? "wall_time" : "messages";
}

double metric_value(const PartitionMetrics& m, std::string_view name) {
  if (name == "balance") return m.balance;
  if (name == "non_cut") return static_cast<double>(m.non_cut);
  if (name == "cut") return static_cast<double>(m.cut);
  if (name == "comm_cost") return static_cast<double>(m.comm_cost);
  if (name == "part_stddev") return m.part_stddev;
  throw std::invalid_argument("unknown metric " + std::string(name));
}

namespace {

using PointKey = std::tuple<std::string, int, std::uint64_t>;  // dataset, strategy, N

struct Point {
  std::string dataset;
  Strategy strategy;
  double mean_wall = 0.0;
  double mean_msgs = 0.0;
  const PartitionMetrics* metrics = nullptr;
};

struct Accumulator {
  double wall = 0.0;
  double msgs = 0.0;
  std::size_t count = 0;
};

}  // namespace

CorrelationResult correlate(std::span<const RunRecord> records, std::span<const MetricsRecord> metrics) {
  CorrelationResult out;
  std::map<PointKey, const PartitionMetrics*> metric_index;
  for (const MetricsRecord& m : metrics) {
    metric_index[{m.dataset, static_cast<int>(m.strategy), m.num_partitions}] = &m.metrics;
  }

  // (algorithm, N) -> (dataset, strategy, N) -> repetition sums
  std::map<std::pair<int, std::uint64_t>, std::map<PointKey, Accumulator>> groups;
  for (const RunRecord& r : records) {
    auto& acc = groups[{static_cast<int>(r.algorithm), r.num_partitions}]
                      [{r.dataset, static_cast<int>(r.strategy), r.num_partitions}];
    acc.wall += r.wall_time_s;
    acc.msgs += static_cast<double>(r.total_msgs());
    ++acc.count;
  }

  for (const auto& [group_key, cells] : groups) {
    const auto algorithm = static_cast<Algorithm>(group_key.first);
    const std::uint64_t n = group_key.second;

    std::vector<Point> points;
    for (const auto& [key, acc] : cells) {
      auto it = metric_index.find(key);
      if (it == metric_index.end()) {
        out.notices.push_back(fmt::format("no metrics row for dataset={} strategy={} N={}; runs excluded",
                                          std::get<0>(key), to_string(static_cast<Strategy>(std::get<1>(key))),
                                          std::get<2>(key)));
        continue;
      }
      const double c = static_cast<double>(acc.count);
      points.push_back({std::get<0>(key), static_cast<Strategy>(std::get<1>(key)), acc.wall / c, acc.msgs / c,
                        it->second});
    }

    auto emit = [&](Grouping grouping, const std::string& dataset, const std::vector<const Point*>& pts) {
      for (CorrelationTarget target : {CorrelationTarget::kWallTime, CorrelationTarget::kMessages}) {
        for (std::string_view metric : kMetricNames) {
          if (pts.size() < 3) {
            out.notices.push_back(fmt::format("{} {} N={} {} {} vs {}: only {} points, omitted", to_string(algorithm),
                                              to_string(grouping), n, dataset, metric, to_string(target), pts.size()));
            continue;
          }
          std::vector<double> xs, ys;
          for (const Point* p : pts) {
            xs.push_back(metric_value(*p->metrics, metric));
            ys.push_back(target == CorrelationTarget::kWallTime ? p->mean_wall : p->mean_msgs);
          }
          CorrelationReport rep;
          rep.algorithm = algorithm;
          rep.num_partitions = n;
          rep.metric = std::string(metric);
          rep.target = target;
          rep.grouping = grouping;
          rep.dataset = dataset;
          rep.sample_count = pts.size();
          try {
            rep.pearson_r = pearson(xs, ys);
          } catch (const UndefinedCorrelationError&) {
            rep.pearson_r.reset();
          }
          out.reports.push_back(std::move(rep));
        }
      }
    };

    std::vector<const Point*> all;
    std::map<std::string, std::vector<const Point*>> by_dataset;
    for (const Point& p : points) {
      all.push_back(&p);
      by_dataset[p.dataset].push_back(&p);
    }
    emit(Grouping::kPooled, "*", all);
    for (const auto& [dataset, pts] : by_dataset) emit(Grouping::kPerDataset, dataset, pts);
  }
  return out;
}

std::vector<BestStrategy> best_strategies(std::span<const RunRecord> records) {
  // (dataset, algorithm, N) -> strategy -> sums
  std::map<std::tuple<std::string, int, std::uint64_t>, std::map<int, Accumulator>> cells;
  for (const RunRecord& r : records) {
    auto& acc = cells[{r.dataset, static_cast<int>(r.algorithm), r.num_partitions}][static_cast<int>(r.strategy)];
    acc.wall += r.wall_time_s;
    acc.msgs += static_cast<double>(r.total_msgs());
    ++acc.count;
  }
  std::vector<BestStrategy> out;
  for (const auto& [key, per_strategy] : cells) {
    BestStrategy best;
    best.dataset = std::get<0>(key);
    best.algorithm = static_cast<Algorithm>(std::get<1>(key));
    best.num_partitions = std::get<2>(key);
    bool first = true;
    // std::map iterates strategies in enum order, so strict < keeps the earliest on ties.
    for (const auto& [strategy, acc] : per_strategy) {
      const double wall = acc.wall / static_cast<double>(acc.count);
      const double msgs = acc.msgs / static_cast<double>(acc.count);
      if (first || wall < best.mean_wall_time_s) {
        best.by_time = static_cast<Strategy>(strategy);
        best.mean_wall_time_s = wall;
      }
      if (first || msgs < best.mean_messages) {
        best.by_messages = static_cast<Strategy>(strategy);
        best.mean_messages = msgs;
      }
      first = false;
    }
    out.push_back(std::move(best));
  }
  return out;
}

std::string correlations_csv_header() {
  return "algorithm,num_partitions,metric,target,grouping,dataset,pearson_r,sample_count";
}

std::string correlation_csv_row(const CorrelationReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", to_string(r.algorithm), r.num_partitions, r.metric,
                     to_string(r.target), to_string(r.grouping), r.dataset,
                     r.pearson_r ? format_double(*r.pearson_r) : std::string("n/a"), r.sample_count);
}

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path) {
  const csv::Table t = csv::read_file(path);
  const std::size_t c_alg = t.column("algorithm"), c_ds = t.column("dataset"), c_s = t.column("strategy"),
                    c_n = t.column("num_partitions"), c_ss = t.column("supersteps"), c_g = t.column("gather_msgs"),
                    c_sc = t.column("scatter_msgs"), c_w = t.column("wall_time_s"), c_cv = t.column("converged"),
                    c_rep = t.column("repetition"), c_seed = t.column("seed");
  std::vector<RunRecord> out;
  for (const auto& row : t.rows) {
    RunRecord r;
    const auto alg = parse_algorithm(row[c_alg]);
    const auto s = parse_strategy(row[c_s]);
    if (!alg || !s) throw std::runtime_error(path.string() + ": unknown algorithm or strategy in row");
    r.algorithm = *alg;
    r.strategy = *s;
    r.dataset = row[c_ds];
    r.num_partitions = csv::to_uint(row[c_n]);
    r.supersteps = csv::to_uint(row[c_ss]);
    r.gather_msgs = csv::to_uint(row[c_g]);
    r.scatter_msgs = csv::to_uint(row[c_sc]);
    r.wall_time_s = csv::to_double(row[c_w]);
    r.converged = csv::to_bool(row[c_cv]);
    r.repetition = csv::to_uint(row[c_rep]);
    r.seed = csv::to_uint(row[c_seed]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path) {
  const csv::Table t = csv::read_file(path);
  const std::size_t c_ds = t.column("dataset"), c_s = t.column("strategy"), c_n = t.column("num_partitions"),
                    c_b = t.column("balance"), c_nc = t.column("non_cut"), c_c = t.column("cut"),
                    c_cc = t.column("comm_cost"), c_sd = t.column("part_stddev");
  std::vector<MetricsRecord> out;
  for (const auto& row : t.rows) {
    MetricsRecord m;
    const auto s = parse_strategy(row[c_s]);
    if (!s) throw std::runtime_error(path.string() + ": unknown strategy '" + row[c_s] + "'");
    m.dataset = row[c_ds];
    m.strategy = *s;
    m.num_partitions = csv::to_uint(row[c_n]);
    m.metrics.balance = csv::to_double(row[c_b]);
    m.metrics.non_cut = csv::to_uint(row[c_nc]);
    m.metrics.cut = csv::to_uint(row[c_c]);
    m.metrics.comm_cost = csv::to_uint(row[c_cc]);
    m.metrics.part_stddev = csv::to_double(row[c_sd]);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

void emit_report(std::span<const RunRecord> records, std::span<const MetricsRecord> metrics,
                 const CorrelationResult& correlations, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  std::string runs = runs_csv_header() + '\n';
  for (const RunRecord& r : records) runs += run_record_csv_row(r) + '\n';
  write_file(dir / "runs.csv", runs);

  std::string mets = metrics_csv_header() + '\n';
  for (const MetricsRecord& m : metrics) mets += metrics_csv_row(m.dataset, m.strategy, m.num_partitions, m.metrics) + '\n';
  write_file(dir / "metrics.csv", mets);

  std::string corr = correlations_csv_header() + '\n';
  for (const CorrelationReport& r : correlations.reports) corr += correlation_csv_row(r) + '\n';
  write_file(dir / "correlations.csv", corr);

  std::string summary = "# best strategy per dataset, algorithm and partition count\n";
  for (const BestStrategy& b : best_strategies(records)) {
    summary += fmt::format(
        "dataset={} algorithm={} num_partitions={} best_by_time={} mean_wall_time_s={} best_by_messages={} "
        "mean_messages={}\n",
        b.dataset, to_string(b.algorithm), b.num_partitions, to_string(b.by_time), format_double(b.mean_wall_time_s),
        to_string(b.by_messages), format_double(b.mean_messages));
  }

  summary += "\n# strongest pooled predictor per algorithm, partition count and target\n";
  std::map<std::tuple<int, std::uint64_t, int>, const CorrelationReport*> strongest;
  for (const CorrelationReport& r : correlations.reports) {
    if (r.grouping != Grouping::kPooled || !r.pearson_r) continue;
    auto& slot = strongest[{static_cast<int>(r.algorithm), r.num_partitions, static_cast<int>(r.target)}];
    if (!slot || std::abs(*r.pearson_r) > std::abs(*slot->pearson_r)) slot = &r;
  }
  for (const auto& [key, r] : strongest) {
    summary += fmt::format("algorithm={} num_partitions={} target={} metric={} pearson_r={} samples={}\n",
                           to_string(r->algorithm), r->num_partitions, to_string(r->target), r->metric,
                           format_double(*r->pearson_r), r->sample_count);
  }

  if (!correlations.notices.empty()) {
    summary += "\n# notices\n";
    for (const std::string& n : correlations.notices) summary += n + '\n';
  }
  write_file(dir / "summary.txt", summary);
}

}  // namespace cutfit
