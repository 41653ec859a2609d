#pragma once

#include <optional>
#include <vector>

#include "ghzpure/states.hpp"

namespace ghzpure::bipartite {

// Success accounting for one distillation round (two pairs in, one out).
//   standard:         post-select the single all-zero outcome; the dealer
//                     side reads 0 with rate 1/2 and the partner side is
//                     modeled at (1+q)/2, giving p = (1+q)/4.
//   parity_symmetric: keep both equal-parity outcomes, p = (1+q^2)/2.
// The dense simulator measures the all-zero rule's joint rate as (1+q^2)/4;
// see oracle::bbpssw_step_oracle.  The planner default is `standard`.
enum class SuccessRule { standard, parity_symmetric };

struct StepResult {
  double q_next = 0.0;
  double p_success = 0.0;
  double cost_factor = 0.0;  // expected input pairs per surviving pair, 2/p
};

// One two-pair distillation round on isotropic weight q:
//   q -> (4q^2 + 2q) / (3(q^2 + 1)).
// Near q = 1 the update is evaluated in delta = 1 - q to avoid cancellation.
StepResult bbpssw_step(double q, SuccessRule rule = SuccessRule::standard);

// The same update written in delta = 1 - q:
//   delta -> delta(4 - delta) / (3(2 - 2 delta + delta^2)).
double bbpssw_delta_step(double delta);

// Measuring all parties but two of the n-party input in the |+/-> basis and
// correcting the sign on odd parity leaves an isotropic pair of the same q.
// One n-party source state is consumed per prepared pair.
BipartitePair reduce_to_pair(int n, double q);

// GHZ fidelity after teleporting n-1 qubits of a locally perfect GHZ state
// through n-1 independent isotropic pairs of weight q:
//   F = [q^(n-1) + ((1+q)/2)^(n-1)] / 2.
double teleport_fidelity(double q, int n);

struct PlanRequest {
  int n = 0;
  double q0 = 0.0;
  double epsilon = 0.0;
  int k_max = 64;
  SuccessRule rule = SuccessRule::standard;
  bool with_closed_form = true;
};

struct PurificationPlan {
  int k = 0;
  std::vector<double> trajectory;  // q_0 .. q_k
  double expected_cost = 0.0;      // (n-1) * prod_i cost_factor(q_i)
  double lower_bound_cost = 0.0;   // 4^k (n-1)
  std::optional<long long> closed_form_k;
  double asymptotic_cost = 0.0;    // 4 n^4.42 (delta/epsilon)^3.42
  double final_fidelity = 0.0;
};

// Smallest k with teleport_fidelity(q_k, n) >= 1 - epsilon under exact
// iteration of the distillation update.  Throws plan_error(unreachable)
// when q0 <= 1/3 and the target is not already met, plan_error(cap_exceeded)
// when k_max rounds do not suffice.
PurificationPlan plan_bipartite(const PlanRequest& request);
PurificationPlan plan_bipartite(int n, double q0, double epsilon, int k_max = 64);

}  // namespace ghzpure::bipartite
