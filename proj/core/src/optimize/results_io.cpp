#include "mgsize/optimize/results_io.hpp"

#include <fstream>
#include <ostream>

#include "mgsize/csv.hpp"
#include "mgsize/error.hpp"

namespace mgsize {

namespace {

constexpr std::array<std::string_view, 6> kDesignFields = {
    "pv_kw", "wt_kw", "dg_kw", "bess_kwh", "converter_kw", "grid_cap_kw"};

void write_header(std::ostream& out, bool with_rank) {
  bool first = true;
  for (const auto& h : results_header()) {
    out << (first ? "" : ",") << h;
    first = false;
  }
  if (with_rank) out << ",rank";
  out << '\n';
}

void write_row(std::ostream& out, const EvaluatedDesign& e) {
  const Design& d = e.design;
  out << csv_number(d.pv_kw) << ',' << csv_number(d.wt_kw) << ',' << csv_number(d.dg_kw) << ','
      << csv_number(d.bess_kwh) << ',' << csv_number(d.converter_kw) << ','
      << csv_number(d.grid_cap_kw);
  for (double v : metric_field_values(e.metrics)) out << ',' << csv_number(v);
  out << ',' << (e.feasible ? 1 : 0);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

std::vector<std::string> results_header() {
  std::vector<std::string> h(kDesignFields.begin(), kDesignFields.end());
  for (auto name : metric_field_names()) h.emplace_back(name);
  h.emplace_back("feasible");
  return h;
}

void write_results_csv(std::ostream& out, std::span<const EvaluatedDesign> designs) {
  write_header(out, false);
  for (const auto& e : designs) {
    write_row(out, e);
    out << '\n';
  }
}

void write_results_csv(const std::filesystem::path& path,
                       std::span<const EvaluatedDesign> designs) {
  auto out = open_for_write(path);
  write_results_csv(out, designs);
}

void write_pareto_csv(std::ostream& out, std::span<const EvaluatedDesign> designs,
                      std::span<const std::size_t> ranks) {
  if (ranks.size() != designs.size()) throw LengthMismatch(designs.size(), ranks.size());
  write_header(out, true);
  for (std::size_t i = 0; i < designs.size(); ++i) {
    write_row(out, designs[i]);
    out << ',' << ranks[i] << '\n';
  }
}

void write_pareto_csv(const std::filesystem::path& path, std::span<const EvaluatedDesign> designs,
                      std::span<const std::size_t> ranks) {
  auto out = open_for_write(path);
  write_pareto_csv(out, designs, ranks);
}

std::vector<EvaluatedDesign> read_results_csv(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  std::vector<EvaluatedDesign> out;
  out.reserve(table.rows.size());
  const auto names = metric_field_names();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    EvaluatedDesign e;
    e.design = Design::with_capacities(
        table.number(r, "pv_kw"), table.number(r, "wt_kw"), table.number(r, "dg_kw"),
        table.number(r, "bess_kwh"), table.number(r, "converter_kw"),
        table.number(r, "grid_cap_kw"));
    std::vector<double> values;
    values.reserve(names.size());
    for (auto name : names) values.push_back(table.number(r, name));
    e.metrics = metric_from_values(values);
    e.feasible = table.number(r, "feasible") != 0.0;
    e.lattice_index = r;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace mgsize
