// Pregel-style superstep engine over a VertexCutGraph.
//
// Every partition keeps a replica ("mirror") of each vertex incident to its
// local edges; one replica per vertex is the master. A superstep runs four
// phases separated by barriers:
//
//   1. edge messages: each partition evaluates the program on its local edges
//      whose endpoints are active, merging messages per target vertex locally;
//   2. gather: every non-master partition holding a partial for v sends it to
//      v's master (one gather message each), merged in ascending partition id;
//   3. apply: masters fold the merged message into the vertex state;
//   4. scatter: masters of changed vertices broadcast the new state to each
//      non-master replica (one scatter message each).
//
// A vertex is active in superstep 0 and afterwards only if it changed in the
// previous superstep. The run halts when nothing changes or the superstep
// budget is exhausted.
#pragma once

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <chrono>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutfit/vertex_cut.hpp"

namespace cutfit {

/// Which endpoint must be active for an edge to be evaluated.
enum class ActiveDirection { kOut, kIn, kEither };

struct SuperstepContext {
  std::size_t superstep = 0;
};

template <class State>
struct EdgeTriplet {
  VertexIndex src;
  VertexIndex dst;
  VertexId src_id;
  VertexId dst_id;
  const State& src_state;
  const State& dst_state;
};

/// A vertex program supplies State and Message types plus:
///   State initial_state(VertexIndex, VertexId) const;
///   void edge_message(const SuperstepContext&, const EdgeTriplet<State>&, Sink&) const;
///   void merge(Message& into, const Message& other) const;   // commutative, associative
///   bool apply(VertexIndex, State&, const Message* merged) const;  // true if changed
/// kApplyToAll makes apply() run on every vertex each superstep, with a null
/// message for vertices that received nothing.
template <class P>
concept VertexProgram = requires(const P& p, typename P::State& s, typename P::Message& acc,
                                 const typename P::Message& m, VertexIndex v, VertexId id) {
  typename P::State;
  typename P::Message;
  { P::kActiveDirection } -> std::convertible_to<ActiveDirection>;
  { P::kApplyToAll } -> std::convertible_to<bool>;
  { p.initial_state(v, id) } -> std::convertible_to<typename P::State>;
  p.merge(acc, m);
  { p.apply(v, s, &m) } -> std::convertible_to<bool>;
};

struct PregelOptions {
  std::size_t max_supersteps = 100;
  int workers = 0;  // 0: TBB default concurrency; 1: sequential
  bool validate_coherence = false;
};

struct RunCounters {
  std::size_t supersteps = 0;
  std::uint64_t gather_msgs = 0;
  std::uint64_t scatter_msgs = 0;
  std::vector<std::uint64_t> active_vertices;
  std::vector<std::uint64_t> gather_per_superstep;
  std::vector<std::uint64_t> scatter_per_superstep;
  double wall_time_s = 0.0;
  bool converged = false;

  std::uint64_t total_msgs() const noexcept { return gather_msgs + scatter_msgs; }
};

template <class State>
struct PregelResult {
  std::vector<State> states;  // master states, aligned with VertexCutGraph::vertex_ids()
  RunCounters counters;
};

class CoherenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class P>
class MessageSink {
 public:
  using Message = typename P::Message;

  MessageSink(const P& prog, std::vector<std::optional<Message>>& partial, std::uint32_t src, std::uint32_t dst,
              bool& sent)
      : prog_(prog), partial_(partial), src_(src), dst_(dst), sent_(sent) {}

  void send_to_src(Message m) { deliver(src_, std::move(m)); }
  void send_to_dst(Message m) { deliver(dst_, std::move(m)); }

 private:
  void deliver(std::uint32_t local, Message&& m) {
    auto& slot = partial_[local];
    if (slot) {
      prog_.merge(*slot, m);
    } else {
      slot.emplace(std::move(m));
    }
    sent_ = true;
  }

  const P& prog_;
  std::vector<std::optional<Message>>& partial_;
  std::uint32_t src_;
  std::uint32_t dst_;
  bool& sent_;
};

template <VertexProgram P>
PregelResult<typename P::State> run_pregel(const VertexCutGraph& g, const P& prog, const PregelOptions& opt = {}) {
  using State = typename P::State;
  using Message = typename P::Message;

  if (opt.max_supersteps == 0) throw std::invalid_argument("max_supersteps must be >= 1");

  const PartitionId num_parts = g.num_partitions();
  const std::size_t n = g.num_vertices();
  PregelResult<State> out;
  RunCounters& c = out.counters;

  tbb::task_arena arena(opt.workers > 0 ? opt.workers : tbb::task_arena::automatic);
  const auto start = std::chrono::steady_clock::now();

  arena.execute([&] {
    std::vector<State> master;
    master.reserve(n);
    for (VertexIndex v = 0; v < n; ++v) master.push_back(prog.initial_state(v, g.id_of(v)));

    // Replica states start from the same pure initializer, so no messages are needed.
    std::vector<std::vector<State>> mirror(num_parts);
    std::vector<std::vector<std::optional<Message>>> partial(num_parts);
    for (PartitionId p = 0; p < num_parts; ++p) {
      const auto& mirrors = g.partition(p).mirrors;
      mirror[p].reserve(mirrors.size());
      for (VertexIndex v : mirrors) mirror[p].push_back(master[v]);
      partial[p].resize(mirrors.size());
    }

    std::vector<char> active(n, 1);
    std::vector<char> changed(n, 0);
    std::vector<std::optional<Message>> merged(n);
    std::vector<char> sent(num_parts, 0);

    const auto each_partition = [&](auto&& fn) {
      tbb::parallel_for(tbb::blocked_range<PartitionId>(0, num_parts, 1),
                        [&](const tbb::blocked_range<PartitionId>& r) {
                          for (PartitionId p = r.begin(); p != r.end(); ++p) fn(p);
                        });
    };
    const auto each_vertex = [&](auto&& fn) {
      tbb::parallel_for(tbb::blocked_range<VertexIndex>(0, static_cast<VertexIndex>(n), 4096),
                        [&](const tbb::blocked_range<VertexIndex>& r) {
                          for (VertexIndex v = r.begin(); v != r.end(); ++v) fn(v);
                        });
    };

    for (std::size_t step = 0; step < opt.max_supersteps; ++step) {
      const SuperstepContext ctx{step};
      std::uint64_t num_active = 0;
      for (char a : active) num_active += static_cast<std::uint64_t>(a != 0);
      c.active_vertices.push_back(num_active);

      // 1. edge messages with per-partition merge in local edge order
      each_partition([&](PartitionId p) {
        const EdgePartition& part = g.partition(p);
        auto& slots = partial[p];
        for (auto& s : slots) s.reset();
        bool any = false;
        for (const LocalEdge& e : part.edges) {
          const VertexIndex gs = part.mirrors[e.src];
          const VertexIndex gd = part.mirrors[e.dst];
          bool eval = false;
          if constexpr (P::kActiveDirection == ActiveDirection::kOut) {
            eval = active[gs];
          } else if constexpr (P::kActiveDirection == ActiveDirection::kIn) {
            eval = active[gd];
          } else {
            eval = active[gs] || active[gd];
          }
          if (!eval) continue;
          MessageSink<P> sink(prog, slots, e.src, e.dst, any);
          const EdgeTriplet<State> t{gs, gd, g.id_of(gs), g.id_of(gd), mirror[p][e.src], mirror[p][e.dst]};
          prog.edge_message(ctx, t, sink);
        }
        sent[p] = any;
      });

      bool any_message = false;
      for (char s : sent) any_message = any_message || s;
      if (!any_message && !P::kApplyToAll) {
        ++c.supersteps;
        c.gather_per_superstep.push_back(0);
        c.scatter_per_superstep.push_back(0);
        c.converged = true;
        break;
      }

      // 2. gather, merged at the master in ascending partition order
      std::uint64_t gathered = 0;
      for (PartitionId p = 0; p < num_parts; ++p) {
        const auto& mirrors = g.partition(p).mirrors;
        auto& slots = partial[p];
        for (std::size_t l = 0; l < slots.size(); ++l) {
          if (!slots[l]) continue;
          const VertexIndex v = mirrors[l];
          if (g.master_of(v) != p) ++gathered;
          if (merged[v]) {
            prog.merge(*merged[v], *slots[l]);
          } else {
            merged[v] = std::move(slots[l]);
          }
          slots[l].reset();
        }
      }

      // 3. apply
      each_vertex([&](VertexIndex v) {
        if (merged[v] || P::kApplyToAll) {
          changed[v] = prog.apply(v, master[v], merged[v] ? &*merged[v] : nullptr) ? 1 : 0;
          merged[v].reset();
        } else {
          changed[v] = 0;
        }
      });

      // 4. scatter
      std::uint64_t scattered = 0;
      bool any_changed = false;
      for (VertexIndex v = 0; v < n; ++v) {
        if (!changed[v]) continue;
        any_changed = true;
        scattered += g.replica_count(v) - 1;
      }
      each_partition([&](PartitionId p) {
        const auto& mirrors = g.partition(p).mirrors;
        for (std::size_t l = 0; l < mirrors.size(); ++l) {
          if (changed[mirrors[l]]) mirror[p][l] = master[mirrors[l]];
        }
      });

      if constexpr (std::equality_comparable<State>) {
        if (opt.validate_coherence) {
          for (PartitionId p = 0; p < num_parts; ++p) {
            const auto& mirrors = g.partition(p).mirrors;
            for (std::size_t l = 0; l < mirrors.size(); ++l) {
              if (!(mirror[p][l] == master[mirrors[l]])) {
                throw CoherenceError("replica of vertex " + std::to_string(g.id_of(mirrors[l])) +
                                     " in partition " + std::to_string(p) + " diverged from its master");
              }
            }
          }
        }
      }

      ++c.supersteps;
      c.gather_msgs += gathered;
      c.scatter_msgs += scattered;
      c.gather_per_superstep.push_back(gathered);
      c.scatter_per_superstep.push_back(scattered);
      active.swap(changed);
      if (!any_changed) {
        c.converged = true;
        break;
      }
    }
    out.states = std::move(master);
  });

  c.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// CSV "algorithm,dataset,strategy,num_partitions,supersteps,gather_msgs,scatter_msgs,wall_time_s,converged".
std::string run_counters_csv_header();
std::string run_counters_csv_row(std::string_view algorithm, std::string_view dataset, Strategy strategy,
                                 std::uint64_t num_partitions, const RunCounters& c);

}  // namespace cutfit
