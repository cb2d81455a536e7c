#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mgsize/optimize/grid_search.hpp"

namespace mgsize {

// pv_kw,wt_kw,dg_kw,bess_kwh,converter_kw,grid_cap_kw followed by the
// metric fields and a 0/1 feasible flag.
std::vector<std::string> results_header();

void write_results_csv(std::ostream& out, std::span<const EvaluatedDesign> designs);
void write_results_csv(const std::filesystem::path& path,
                       std::span<const EvaluatedDesign> designs);

// The results schema plus a trailing rank column (1 = best).
void write_pareto_csv(std::ostream& out, std::span<const EvaluatedDesign> designs,
                      std::span<const std::size_t> ranks);
void write_pareto_csv(const std::filesystem::path& path, std::span<const EvaluatedDesign> designs,
                      std::span<const std::size_t> ranks);

// Reads a results or Pareto file back. Throws FileNotFound or ParseError.
std::vector<EvaluatedDesign> read_results_csv(const std::filesystem::path& path);

}  // namespace mgsize
