#include "ghzpure/compare.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ghzpure/errors.hpp"

namespace ghzpure::compare {

namespace {

const char* bi_marker(PlanFailure f) {
  switch (f) {
    case PlanFailure::unreachable:
      return "bi:unreachable";
    case PlanFailure::cap_exceeded:
      return "bi:cap_exceeded";
    case PlanFailure::below_threshold:
      return "bi:below_threshold";
  }
  return "bi:error";
}

const char* multi_marker(PlanFailure f) {
  switch (f) {
    case PlanFailure::unreachable:
      return "multi:unreachable";
    case PlanFailure::cap_exceeded:
      return "multi:cap_exceeded";
    case PlanFailure::below_threshold:
      return "multi:below_threshold";
  }
  return "multi:error";
}

}  // namespace

ComparisonRecord evaluate_point(int n, double delta, double epsilon, CostModel model,
                                int k_max) {
  ComparisonRecord rec;
  rec.n = n;
  rec.delta = delta;
  rec.epsilon = epsilon;

  const double q0 = noise_from_delta(n, delta).q;
  std::string status;

  try {
    const auto plan = bipartite::plan_bipartite(n, q0, epsilon, k_max);
    rec.k_bi = plan.k;
    rec.cost_bi = plan.expected_cost;
  } catch (const plan_error& e) {
    status = bi_marker(e.code());
  }

  try {
    const auto res = multipartite::plan_multipartite(n, q0, epsilon, k_max);
    rec.k_multi = res.plan.k;
    rec.cost_multi = model == CostModel::inverse_norm ? res.plan.cost_inverse_norm
                                                      : res.plan.cost_expected;
  } catch (const plan_error& e) {
    if (!status.empty()) status += "+";
    status += multi_marker(e.code());
  }

  if (rec.cost_bi && rec.cost_multi) {
    rec.log2_ratio = std::log2(*rec.cost_bi / *rec.cost_multi);
  }
  rec.status = status.empty() ? "ok" : status;
  return rec;
}

std::vector<ComparisonRecord> run_compare(const NSweepSpec& spec) {
  if (spec.n_min < kMinParties || spec.n_max < spec.n_min || spec.n_max > kMaxParties) {
    throw std::domain_error("bad n range");
  }
  std::vector<ComparisonRecord> rows(spec.n_max - spec.n_min + 1);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < int(rows.size()); ++i) {
    rows[i] = evaluate_point(spec.n_min + i, spec.delta, spec.epsilon, spec.model,
                             spec.k_max);
  }
  return rows;
}

std::vector<ComparisonRecord> run_compare(const DeltaSweepSpec& spec) {
  if (spec.delta_points < 2 || !(spec.delta_min > 0.0) ||
      !(spec.delta_max > spec.delta_min)) {
    throw std::domain_error("bad delta grid");
  }
  const double lmin = std::log(spec.delta_min);
  const double lmax = std::log(spec.delta_max);
  std::vector<ComparisonRecord> rows(spec.delta_points);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < spec.delta_points; ++i) {
    const double delta =
        std::exp(lmin + (lmax - lmin) * double(i) / double(spec.delta_points - 1));
    rows[i] = evaluate_point(spec.n, delta, spec.epsilon, spec.model, spec.k_max);
  }
  return rows;
}

std::vector<ThresholdRow> threshold_table(int n_min, int n_max, double tol) {
  if (n_min < kMinParties || n_max < n_min || n_max > kMaxParties) {
    throw std::domain_error("bad n range");
  }
  std::vector<ThresholdRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const auto res = multipartite::distillability_threshold(n, tol);
    rows.push_back({n, res.closed_form, res.numeric,
                    std::abs(res.numeric - res.closed_form)});
  }
  return rows;
}

std::vector<BipartiteTrajRow> bipartite_trajectory(int n, double q0, int k) {
  std::vector<BipartiteTrajRow> rows;
  rows.push_back({0, q0, std::nullopt, std::nullopt, bipartite::teleport_fidelity(q0, n)});
  for (int round = 1; round <= k; ++round) {
    const auto step = bipartite::bbpssw_step(rows.back().q);
    rows.push_back({round, step.q_next, step.p_success, step.cost_factor,
                    bipartite::teleport_fidelity(step.q_next, n)});
  }
  return rows;
}

std::vector<MultiTrajRow> multipartite_trajectory(int n, double q0, int k) {
  std::vector<MultiTrajRow> rows;
  IterationState st = input_state(n, q0);
  double prev_trace = st.trace();
  for (int round = 0; round <= k; ++round) {
    MultiTrajRow row;
    if (round > 0) {
      const IterationState next = multipartite::purify_step(st);
      row.p_success = next.trace() / (prev_trace * prev_trace);
      prev_trace = next.trace();
      st = next;
      if (!(st.trace() > 0.0) || st.trace() < 1e-300) {
        break;  // weights underflowed; stop the dump here
      }
    }
    row.round = round;
    row.q = st.q;
    row.r = st.r;
    row.s = st.s;
    row.trace = st.trace();
    row.fidelity = fidelity_ghz(st);
    rows.push_back(row);
  }
  return rows;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) {
    throw std::logic_error("refusing to serialize a non-finite value");
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string opt_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string opt_double(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

nlohmann::ordered_json json_or_null_i(const std::optional<int>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json json_or_null_d(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string to_csv(const std::vector<ComparisonRecord>& rows) {
  std::string out = "n,delta,epsilon,k_bi,cost_bi,k_multi,cost_multi,log2_ratio,status\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_double(r.delta) + "," +
           format_double(r.epsilon) + "," + opt_int(r.k_bi) + "," +
           opt_double(r.cost_bi) + "," + opt_int(r.k_multi) + "," +
           opt_double(r.cost_multi) + "," + opt_double(r.log2_ratio) + "," + r.status +
           "\n";
  }
  return out;
}

std::string to_json(const std::vector<ComparisonRecord>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"delta", r.delta},
                   {"epsilon", r.epsilon},
                   {"k_bi", json_or_null_i(r.k_bi)},
                   {"cost_bi", json_or_null_d(r.cost_bi)},
                   {"k_multi", json_or_null_i(r.k_multi)},
                   {"cost_multi", json_or_null_d(r.cost_multi)},
                   {"log2_ratio", json_or_null_d(r.log2_ratio)},
                   {"status", r.status}});
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<ThresholdRow>& rows) {
  std::string out = "n,closed_form,numeric,abs_diff\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_double(r.closed_form) + "," +
           format_double(r.numeric) + "," + format_double(r.abs_diff) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<ThresholdRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"closed_form", r.closed_form},
                   {"numeric", r.numeric},
                   {"abs_diff", r.abs_diff}});
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<BipartiteTrajRow>& rows) {
  std::string out = "round,q,p_success,cost_factor,teleport_fidelity\n";
  for (const auto& r : rows) {
    out += std::to_string(r.round) + "," + format_double(r.q) + "," +
           opt_double(r.p_success) + "," + opt_double(r.cost_factor) + "," +
           format_double(r.teleport_fidelity) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<BipartiteTrajRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"round", r.round},
                   {"q", r.q},
                   {"p_success", json_or_null_d(r.p_success)},
                   {"cost_factor", json_or_null_d(r.cost_factor)},
                   {"teleport_fidelity", r.teleport_fidelity}});
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<MultiTrajRow>& rows) {
  std::string out = "round,q,r,s,trace,fidelity,p_success\n";
  for (const auto& r : rows) {
    out += std::to_string(r.round) + "," + format_double(r.q) + "," +
           format_double(r.r) + "," + format_double(r.s) + "," +
           format_double(r.trace) + "," + format_double(r.fidelity) + "," +
           opt_double(r.p_success) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<MultiTrajRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"round", r.round},
                   {"q", r.q},
                   {"r", r.r},
                   {"s", r.s},
                   {"trace", r.trace},
                   {"fidelity", r.fidelity},
                   {"p_success", json_or_null_d(r.p_success)}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace ghzpure::compare
