#include "cutfit/vertex_cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutfit {

VertexCutGraph build_vertex_cut(const Graph& g, const PartitionAssignment& a) {
  if (a.per_edge.size() != g.num_edges()) {
    throw std::invalid_argument("partition assignment is not aligned with the graph");
  }
  if (a.num_partitions == 0) throw std::invalid_argument("number of partitions must be >= 1");

  VertexCutGraph vcg;
  vcg.strategy_ = a.strategy;
  vcg.num_edges_ = g.num_edges();
  vcg.ids_.assign(g.vertices().begin(), g.vertices().end());
  vcg.out_degree_.assign(g.out_degrees().begin(), g.out_degrees().end());
  vcg.in_degree_.assign(g.in_degrees().begin(), g.in_degrees().end());
  vcg.replicas_ = replication_table(g, a);
  vcg.partitions_.resize(a.num_partitions);

  vcg.master_.resize(g.num_vertices());
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    const auto reps = vcg.replicas_.replicas(v);
    vcg.master_[v] = reps.front();
  }

  const auto dense = g.dense_edges();
  std::vector<std::size_t> per_part(a.num_partitions, 0);
  for (PartitionId p : a.per_edge) ++per_part[p];
  for (PartitionId p = 0; p < a.num_partitions; ++p) {
    vcg.partitions_[p].edges.reserve(per_part[p]);
    vcg.partitions_[p].edge_index.reserve(per_part[p]);
  }

  // Mirrors: vertex v is mirrored in every partition of its replica set.
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
    for (PartitionId p : vcg.replicas_.replicas(v)) vcg.partitions_[p].mirrors.push_back(v);
  }

  auto local = [](const EdgePartition& part, VertexIndex v) {
    return static_cast<std::uint32_t>(std::lower_bound(part.mirrors.begin(), part.mirrors.end(), v) -
                                      part.mirrors.begin());
  };
  for (std::size_t i = 0; i < dense.size(); ++i) {
    EdgePartition& part = vcg.partitions_[a.per_edge[i]];
    part.edges.push_back({local(part, dense[i].src), local(part, dense[i].dst)});
    part.edge_index.push_back(i);
  }
  return vcg;
}

std::vector<Edge> VertexCutGraph::edges() const {
  std::vector<Edge> out(num_edges_);
  for (const EdgePartition& part : partitions_) {
    for (std::size_t k = 0; k < part.edges.size(); ++k) {
      out[part.edge_index[k]] = {ids_[part.mirrors[part.edges[k].src]], ids_[part.mirrors[part.edges[k].dst]]};
    }
  }
  return out;
}

}  // namespace cutfit
