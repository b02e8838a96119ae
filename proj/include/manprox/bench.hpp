#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "manprox/solver.hpp"

namespace manprox {

enum class ProblemKind { Ssc, Spca };
enum class DataSource { SyntheticCircle, SyntheticMixture, File, SpcaRandom };
enum class SubsolverKind { Apg, Ssn };
enum class TableFormat { Csv, Markdown };

struct ExperimentConfig {
  ProblemKind problem = ProblemKind::Ssc;
  DataSource data = DataSource::SyntheticMixture;
  std::string data_path;    // feature CSV or similarity .mtx when data == File
  std::string labels_path;  // optional single-column ground-truth CSV

  std::vector<double> u_grid{1e-3};
  InexactType it = InexactType::Lacc;
  double rho = 0.2;
  SubsolverKind subsolver = SubsolverKind::Apg;
  StepSchedule schedule = StepSchedule::HalvingDoubling;
  double v = 1.01;
  std::optional<double> t0;  // problem-derived default when unset

  std::uint64_t seed = 1;
  int reps = 1;
  int clusters = 5;  // r
  Eigen::Index spca_rows = 500, spca_cols = 1000;
  int kmeans_repeats = 10;

  int max_outer = 1000;
  std::optional<double> tol_decrease = 1e-5;
  std::optional<double> target_objective;
  int max_subiter = 5000;
};

// One record per (dataset, algorithm variant, u, seed); mirrors the
// results-CSV schema, plus a trailing status column ("ok" or error text).
struct ResultRow {
  std::string dataset;
  std::string algorithm;
  double u = 0.0;
  std::string it_type;
  std::uint64_t seed = 0;
  double nmi_mean = 0.0;  // NaN when no ground truth applies
  double nmi_std = 0.0;
  double cpu_seconds = 0.0;  // solve only; setup and scoring excluded
  long outer_iters = 0;
  long total_subiters = 0;
  double final_objective = 0.0;
  std::string status = "ok";
};

std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

struct BestU {
  std::string dataset;
  std::string algorithm;
  double u = 0.0;
  double nmi_mean = 0.0;
};

// Per (dataset, algorithm): the u maximizing mean NMI over seeds, ties
// broken toward larger u. Missing grid cells raise an incomplete-sweep
// error.
std::vector<BestU> sweep_and_select(const std::vector<ResultRow>& rows,
                                    const std::vector<double>& grid);

std::string render_results_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_results_csv(const std::string& text);
// Paper-style comparison tables aggregated over seeds: NMI "mean (std)"
// with 3 decimals, CPU seconds with 4.
std::string render_results_markdown(const std::vector<ResultRow>& rows);

void emit_tables(const std::vector<ResultRow>& rows, const std::string& path,
                 TableFormat format);

}  // namespace manprox
