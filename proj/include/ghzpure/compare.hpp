#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghzpure/bipartite.hpp"
#include "ghzpure/multipartite.hpp"

// Sweep machinery behind the CLI: protocol cost comparisons, threshold
// tables, trajectory dumps, and their CSV/JSON serialization.
namespace ghzpure::compare {

// Multipartite cost metric selected by --cost-model:
//   inverse_norm  ("paper")    1/(q+r+s) of the final unnormalized state;
//   expected_tree ("expected") 2^k / prod of per-round success rates.
// The two differ by exactly 2 at k = 1.
enum class CostModel { inverse_norm, expected_tree };

struct ComparisonRecord {
  int n = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  std::optional<int> k_bi;
  std::optional<double> cost_bi;
  std::optional<int> k_multi;
  std::optional<double> cost_multi;
  std::optional<double> log2_ratio;
  std::string status;  // "ok" or per-protocol markers, e.g. "bi:unreachable"
};

struct NSweepSpec {
  int n_min = 3;
  int n_max = 20;
  double delta = 0.2;
  double epsilon = 0.01;
  CostModel model = CostModel::inverse_norm;
  int k_max = 64;
};

struct DeltaSweepSpec {
  int n = 10;
  double delta_min = 0.01;
  double delta_max = 0.9;
  int delta_points = 30;
  double epsilon = 0.01;
  CostModel model = CostModel::inverse_norm;
  int k_max = 64;
};

ComparisonRecord evaluate_point(int n, double delta, double epsilon,
                                CostModel model, int k_max = 64);
std::vector<ComparisonRecord> run_compare(const NSweepSpec& spec);
std::vector<ComparisonRecord> run_compare(const DeltaSweepSpec& spec);

struct ThresholdRow {
  int n = 0;
  double closed_form = 0.0;
  double numeric = 0.0;
  double abs_diff = 0.0;
};

std::vector<ThresholdRow> threshold_table(int n_min, int n_max, double tol);

struct BipartiteTrajRow {
  int round = 0;
  double q = 0.0;
  std::optional<double> p_success;    // of the step that produced this row
  std::optional<double> cost_factor;
  double teleport_fidelity = 0.0;
};

struct MultiTrajRow {
  int round = 0;
  double q = 0.0, r = 0.0, s = 0.0;
  double trace = 0.0;
  double fidelity = 0.0;
  std::optional<double> p_success;
};

std::vector<BipartiteTrajRow> bipartite_trajectory(int n, double q0, int k);
std::vector<MultiTrajRow> multipartite_trajectory(int n, double q0, int k);

// 17 significant digits, locale-independent; rejects non-finite values.
std::string format_double(double v);

std::string to_csv(const std::vector<ComparisonRecord>& rows);
std::string to_json(const std::vector<ComparisonRecord>& rows);
std::string to_csv(const std::vector<ThresholdRow>& rows);
std::string to_json(const std::vector<ThresholdRow>& rows);
std::string to_csv(const std::vector<BipartiteTrajRow>& rows);
std::string to_json(const std::vector<BipartiteTrajRow>& rows);
std::string to_csv(const std::vector<MultiTrajRow>& rows);
std::string to_json(const std::vector<MultiTrajRow>& rows);

}  // namespace ghzpure::compare
