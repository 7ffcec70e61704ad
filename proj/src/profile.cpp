#include "cutfit/profile.hpp"

#include <fmt/format.h>
#include <tbb/blocked_range.h>
#include <tbb/parallel_reduce.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace cutfit {
namespace {

// Simple undirected adjacency in CSR form over dense vertex indices.
struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<VertexIndex> targets;

  std::span<const VertexIndex> neighbors(VertexIndex v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  std::size_t degree(VertexIndex v) const { return offsets[v + 1] - offsets[v]; }
};

Csr build_csr(std::size_t n, const std::vector<DenseEdge>& arcs) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (const DenseEdge& a : arcs) ++csr.offsets[a.src + 1];
  std::partial_sum(csr.offsets.begin(), csr.offsets.end(), csr.offsets.begin());
  csr.targets.resize(arcs.size());
  std::vector<std::size_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (const DenseEdge& a : arcs) csr.targets[cursor[a.src]++] = a.dst;
  return csr;
}

Csr undirected_simple(const Graph& g) {
  std::vector<DenseEdge> arcs;
  arcs.reserve(g.num_edges() * 2);
  for (const DenseEdge& e : g.dense_edges()) {
    if (e.src == e.dst) continue;
    arcs.push_back({e.src, e.dst});
    arcs.push_back({e.dst, e.src});
  }
  Csr csr = build_csr(g.num_vertices(), arcs);
  // Sort and dedup each neighbor list, then compact.
  std::vector<std::size_t> offsets(g.num_vertices() + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto first = csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[v]);
    auto last = csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[v] = write;
    for (auto it = first; it != last; ++it) csr.targets[write++] = *it;
  }
  offsets[g.num_vertices()] = write;
  csr.targets.resize(write);
  csr.offsets = std::move(offsets);
  return csr;
}

constexpr std::uint64_t kUnvisited = std::numeric_limits<std::uint64_t>::max();

// Returns (farthest vertex, eccentricity) of a BFS from source.
std::pair<VertexIndex, std::uint64_t> bfs_eccentricity(const Csr& csr, VertexIndex source,
                                                       std::vector<std::uint64_t>& dist,
                                                       std::vector<VertexIndex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnvisited);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  VertexIndex far = source;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexIndex u = queue[head];
    if (dist[u] > dist[far]) far = u;
    for (VertexIndex w : csr.neighbors(u)) {
      if (dist[w] == kUnvisited) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return {far, dist[far]};
}

double pct(std::uint64_t part, std::uint64_t whole) {
  return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

double symmetry_pct(const Graph& g) {
  if (g.empty()) throw UndefinedMetricError("symmetry of an empty graph is undefined");
  std::vector<std::uint64_t> keys;
  keys.reserve(g.num_edges());
  for (const DenseEdge& e : g.dense_edges()) {
    keys.push_back((std::uint64_t{e.src} << 32) | e.dst);
  }
  std::sort(keys.begin(), keys.end());
  std::uint64_t reciprocated = 0;
  for (const DenseEdge& e : g.dense_edges()) {
    const std::uint64_t rev = (std::uint64_t{e.dst} << 32) | e.src;
    if (std::binary_search(keys.begin(), keys.end(), rev)) ++reciprocated;
  }
  return pct(reciprocated, g.num_edges());
}

ZeroDegreePcts zero_degree_pcts(const Graph& g) {
  if (g.empty()) throw UndefinedMetricError("zero-degree percentages of an empty graph are undefined");
  const auto zero_in = std::count(g.in_degrees().begin(), g.in_degrees().end(), 0u);
  const auto zero_out = std::count(g.out_degrees().begin(), g.out_degrees().end(), 0u);
  return {pct(static_cast<std::uint64_t>(zero_in), g.num_vertices()),
          pct(static_cast<std::uint64_t>(zero_out), g.num_vertices())};
}

DegreeHistograms degree_histograms(const Graph& g) {
  DegreeHistograms h;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    ++h.in[g.in_degrees()[v]];
    ++h.out[g.out_degrees()[v]];
  }
  return h;
}

RatioCdf out_in_ratio_cdf(const Graph& g) {
  RatioCdf cdf;
  std::vector<double> ratios;
  ratios.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto in = g.in_degrees()[v];
    if (in == 0) {
      ++cdf.zero_in_vertices;
      continue;
    }
    ratios.push_back(static_cast<double>(g.out_degrees()[v]) / static_cast<double>(in));
  }
  std::sort(ratios.begin(), ratios.end());
  const double total = static_cast<double>(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (i + 1 < ratios.size() && ratios[i + 1] == ratios[i]) continue;
    cdf.points.emplace_back(ratios[i], static_cast<double>(i + 1) / total);
  }
  return cdf;
}

TriangleCounts triangle_count_exact(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const Csr adj = undirected_simple(g);

  // Orient each edge from lower to higher (degree, index) rank; every triangle
  // is then found exactly once from its lowest-ranked vertex.
  auto before = [&](VertexIndex a, VertexIndex b) {
    const auto da = adj.degree(a), db = adj.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<DenseEdge> arcs;
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex w : adj.neighbors(u)) {
      if (before(u, w)) arcs.push_back({u, w});
    }
  }
  const Csr fwd = build_csr(n, arcs);

  TriangleCounts out;
  out.per_vertex.assign(n, 0);
  std::vector<VertexIndex> mark(n, std::numeric_limits<VertexIndex>::max());
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex w : fwd.neighbors(u)) mark[w] = u;
    for (VertexIndex v : fwd.neighbors(u)) {
      for (VertexIndex w : fwd.neighbors(v)) {
        if (mark[w] == u) {
          ++out.per_vertex[u];
          ++out.per_vertex[v];
          ++out.per_vertex[w];
          ++out.total;
        }
      }
    }
  }
  return out;
}

ComponentLabels weak_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexIndex> parent(n);
  std::iota(parent.begin(), parent.end(), VertexIndex{0});
  auto find = [&](VertexIndex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const DenseEdge& e : g.dense_edges()) {
    VertexIndex a = find(e.src), b = find(e.dst);
    if (a == b) continue;
    // Keep the smaller index as root so the root is the component minimum.
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
  ComponentLabels out;
  out.labels.resize(n);
  for (VertexIndex v = 0; v < n; ++v) {
    const VertexIndex root = find(v);
    if (root == v) ++out.count;
    out.labels[v] = g.id_of(root);
  }
  return out;
}

std::size_t strong_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const Csr out = build_csr(n, {g.dense_edges().begin(), g.dense_edges().end()});

  constexpr VertexIndex kNone = std::numeric_limits<VertexIndex>::max();
  std::vector<VertexIndex> index(n, kNone), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexIndex> stack;
  struct Frame {
    VertexIndex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  VertexIndex counter = 0;
  std::size_t components = 0;

  for (VertexIndex root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto nbrs = out.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const VertexIndex w = nbrs[f.next++];
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexIndex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
        } while (w != v);
        ++components;
      }
    }
  }
  return components;
}

std::string to_string(const Diameter& d) {
  switch (d.kind) {
    case Diameter::Kind::kFinite:
      return std::to_string(d.hops);
    case Diameter::Kind::kInfinite:
      return "inf";
    case Diameter::Kind::kLowerBound:
      return ">=" + std::to_string(d.hops);
  }
  return {};
}

Diameter diameter(const Graph& g, std::size_t exact_threshold) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return Diameter::finite(0);
  if (weak_components(g).count > 1) return Diameter::infinite();

  const Csr adj = undirected_simple(g);
  if (n <= exact_threshold) {
    const std::uint64_t best = tbb::parallel_reduce(
        tbb::blocked_range<VertexIndex>(0, static_cast<VertexIndex>(n)), std::uint64_t{0},
        [&](const tbb::blocked_range<VertexIndex>& r, std::uint64_t acc) {
          std::vector<std::uint64_t> dist(n);
          std::vector<VertexIndex> queue;
          queue.reserve(n);
          for (VertexIndex s = r.begin(); s != r.end(); ++s) {
            acc = std::max(acc, bfs_eccentricity(adj, s, dist, queue).second);
          }
          return acc;
        },
        [](std::uint64_t a, std::uint64_t b) { return std::max(a, b); });
    return Diameter::finite(best);
  }

  std::vector<std::uint64_t> dist(n);
  std::vector<VertexIndex> queue;
  queue.reserve(n);
  VertexIndex start = 0;
  for (VertexIndex v = 1; v < n; ++v) {
    if (adj.degree(v) > adj.degree(start)) start = v;
  }
  const auto [far, ecc0] = bfs_eccentricity(adj, start, dist, queue);
  const auto ecc1 = bfs_eccentricity(adj, far, dist, queue).second;
  return Diameter::lower_bound(std::max(ecc0, ecc1));
}

DatasetProfile profile(const Graph& g, std::size_t exact_threshold) {
  if (g.empty()) throw UndefinedMetricError("cannot profile an empty graph");
  DatasetProfile p;
  p.vertices = g.num_vertices();
  p.edges = g.num_edges();
  p.symmetry_pct = symmetry_pct(g);
  const ZeroDegreePcts z = zero_degree_pcts(g);
  p.zero_in_pct = z.zero_in;
  p.zero_out_pct = z.zero_out;
  p.triangles = triangle_count_exact(g).total;
  p.weak_components = weak_components(g).count;
  p.strong_components = strong_components(g);
  p.diameter = p.weak_components > 1 ? Diameter::infinite() : diameter(g, exact_threshold);
  DegreeHistograms h = degree_histograms(g);
  p.in_degree_hist = std::move(h.in);
  p.out_degree_hist = std::move(h.out);
  p.out_to_in_ratio_cdf = out_in_ratio_cdf(g);
  return p;
}

void write_profile_key_value(std::ostream& out, const std::string& dataset, const DatasetProfile& p) {
  out << fmt::format(
      "dataset={}\nvertices={}\nedges={}\nsymmetry_pct={:.2f}\nzero_in_pct={:.2f}\n"
      "zero_out_pct={:.2f}\ntriangles={}\nweak_cc={}\nstrong_cc={}\ndiameter={}\n"
      "zero_in_ratio_excluded={}\n",
      dataset, p.vertices, p.edges, p.symmetry_pct, p.zero_in_pct, p.zero_out_pct, p.triangles,
      p.weak_components, p.strong_components, to_string(p.diameter),
      p.out_to_in_ratio_cdf.zero_in_vertices);
}

std::string profile_csv_header() {
  return "dataset,vertices,edges,symmetry_pct,zero_in_pct,zero_out_pct,triangles,weak_cc,strong_cc,diameter";
}

std::string profile_csv_row(const std::string& dataset, const DatasetProfile& p) {
  return fmt::format("{},{},{},{:.2f},{:.2f},{:.2f},{},{},{},{}", dataset, p.vertices, p.edges,
                     p.symmetry_pct, p.zero_in_pct, p.zero_out_pct, p.triangles, p.weak_components,
                     p.strong_components, to_string(p.diameter));
}

}  // namespace cutfit
