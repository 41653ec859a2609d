#include "ghzpure/bipartite.hpp"

#include <cmath>
#include <stdexcept>

#include "ghzpure/errors.hpp"

namespace ghzpure::bipartite {

namespace {

// Below this distance from q = 1 the update runs in delta = 1 - q.
constexpr double kDeltaSwitch = 1e-6;

void check_q(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("q must lie in [0, 1]");
  }
}

void check_n(int n, int lo) {
  if (n < lo || n > kMaxParties) {
    throw std::domain_error("party count out of range");
  }
}

}  // namespace

double bbpssw_delta_step(double delta) {
  return delta * (4.0 - delta) / (3.0 * (2.0 - 2.0 * delta + delta * delta));
}

StepResult bbpssw_step(double q, SuccessRule rule) {
  check_q(q);
  StepResult out;
  const double delta = 1.0 - q;
  if (delta < kDeltaSwitch) {
    out.q_next = 1.0 - bbpssw_delta_step(delta);
  } else {
    out.q_next = (4.0 * q * q + 2.0 * q) / (3.0 * (q * q + 1.0));
  }
  switch (rule) {
    case SuccessRule::standard:
      out.p_success = (1.0 + q) / 4.0;
      break;
    case SuccessRule::parity_symmetric:
      out.p_success = (1.0 + q * q) / 2.0;
      break;
  }
  out.cost_factor = 2.0 / out.p_success;
  return out;
}

BipartitePair reduce_to_pair(int n, double q) {
  check_n(n, 3);
  check_q(q);
  return BipartitePair{q};
}

double teleport_fidelity(double q, int n) {
  check_n(n, 2);
  check_q(q);
  return 0.5 * (std::pow(q, n - 1) + std::pow((1.0 + q) / 2.0, n - 1));
}

PurificationPlan plan_bipartite(const PlanRequest& req) {
  check_n(req.n, 2);
  check_q(req.q0);
  if (!(req.epsilon > 0.0 && req.epsilon < 1.0)) {
    throw std::domain_error("epsilon must lie in (0, 1)");
  }
  if (req.k_max < 0) {
    throw std::domain_error("k_max must be nonnegative");
  }

  const double target = 1.0 - req.epsilon;
  PurificationPlan plan;
  plan.trajectory.push_back(req.q0);

  double q = req.q0;
  double cost_product = 1.0;
  while (teleport_fidelity(q, req.n) < target) {
    if (q <= 1.0 / 3.0) {
      // 1/3 is the unstable fixed point of the update; no growth from here.
      throw plan_error(PlanFailure::unreachable,
                       "q0 <= 1/3: distillation cannot raise the pair weight");
    }
    if (plan.k >= req.k_max) {
      throw plan_error(PlanFailure::cap_exceeded,
                       "round cap exceeded before reaching the target fidelity");
    }
    const StepResult step = bbpssw_step(q, req.rule);
    cost_product *= step.cost_factor;
    q = step.q_next;
    plan.trajectory.push_back(q);
    ++plan.k;
  }

  plan.expected_cost = (req.n - 1) * cost_product;
  plan.lower_bound_cost = std::pow(4.0, plan.k) * (req.n - 1);
  plan.final_fidelity = teleport_fidelity(q, req.n);

  const NoiseSpec noise = noise_from_q(req.n, req.q0);
  plan.asymptotic_cost =
      4.0 * std::pow(double(req.n), 4.42) * std::pow(noise.delta / req.epsilon, 3.42);
  if (req.with_closed_form) {
    // Round-count bound from the small-error analysis,
    //   k >= 1 + log2[(2^n/(2^n-1)) (delta/eps) (n-1)] / log2(3/2),
    // reported as its integer part.  The bound's constant is conservative by
    // about a factor 2 (about 1.7 rounds); truncation keeps the report within
    // one round of the exact search in the small-error regime.
    const double d = pow2d(req.n);
    const double x = d / (d - 1.0) * (noise.delta / req.epsilon) * (req.n - 1);
    if (x > 0.0) {
      const double bound = 1.0 + std::log2(x) / std::log2(1.5);
      plan.closed_form_k =
          std::max<long long>(0, static_cast<long long>(std::floor(bound)));
    } else {
      plan.closed_form_k = 0;
    }
  }
  return plan;
}

PurificationPlan plan_bipartite(int n, double q0, double epsilon, int k_max) {
  return plan_bipartite(PlanRequest{n, q0, epsilon, k_max});
}

}  // namespace ghzpure::bipartite
