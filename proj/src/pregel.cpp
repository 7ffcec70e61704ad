#include "cutfit/pregel.hpp"

#include <fmt/format.h>

namespace cutfit {

std::string run_counters_csv_header() {
  return "algorithm,dataset,strategy,num_partitions,supersteps,gather_msgs,scatter_msgs,wall_time_s,converged";
}

std::string run_counters_csv_row(std::string_view algorithm, std::string_view dataset, Strategy strategy,
                                 std::uint64_t num_partitions, const RunCounters& c) {
  return fmt::format("{},{},{},{},{},{},{},{},{}", algorithm, dataset, to_string(strategy), num_partitions,
                     c.supersteps, c.gather_msgs, c.scatter_msgs, c.wall_time_s, c.converged ? "true" : "false");
}

}  // namespace cutfit
