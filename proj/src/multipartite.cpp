#include "ghzpure/multipartite.hpp"

#include <cmath>
#include <stdexcept>

#include "ghzpure/errors.hpp"

namespace ghzpure::multipartite {

namespace {

// Iterated traces square every round; below this the run is abandoned
// rather than letting the cost metric overflow.
constexpr double kTraceFloor = 1e-300;

}  // namespace

IterationState purify_step(const IterationState& state) {
  if (!(state.q >= 0.0) || !(state.r >= 0.0) || !(state.s >= 0.0)) {
    throw std::domain_error("purify_step requires nonnegative weights");
  }
  const double d = pow2d(state.n);
  const double q = state.q, r = state.r, s = state.s;
  IterationState out = state;
  out.q = q * q / 2.0;
  out.r = r * r / d;
  out.s = s * s / 2.0 + q * s + (2.0 * q * r + 2.0 * s * r) / d;
  out.normalized = std::abs(out.trace() - 1.0) <= kNormalizedTol;
  return out;
}

double success_probability(const IterationState& state) {
  if (std::abs(state.trace() - 1.0) > kNormalizedTol) {
    throw std::domain_error("success_probability requires a normalized state");
  }
  return purify_step(state).trace();
}

double threshold_closed_form(int n) {
  if (n < 2 || n > kMaxParties) {
    throw std::domain_error("threshold requires 2 <= n <= 64");
  }
  return 2.0 / (pow2d(n) - 2.0);
}

namespace {

// Sign of the one-round change of the normalized GHZ weight on the
// (q, 1-q, 0) input: positive above the threshold, negative below.
double ghz_weight_gain(int n, double q) {
  const IterationState next = purify_step(input_state(n, q));
  const double t = next.trace();
  return next.q / t - q;
}

}  // namespace

ThresholdResult distillability_threshold(int n, double tol) {
  if (!(tol > 0.0)) {
    throw std::domain_error("tol must be positive");
  }
  ThresholdResult out;
  out.closed_form = threshold_closed_form(n);

  // The gain has a single sign change in (0, 1]; at n = 2 it sits exactly at
  // the q = 1 endpoint, which is why the bracket extends to 1.
  double lo = 1e-12;
  double hi = 1.0;
  double glo = ghz_weight_gain(n, lo);
  if (glo > 0.0) {
    throw std::domain_error("threshold bracket does not straddle a sign change");
  }
  for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ghz_weight_gain(n, mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.numeric = 0.5 * (lo + hi);
  return out;
}

MultiResult plan_multipartite(int n, double q0, double epsilon, int k_max) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::domain_error("epsilon must lie in (0, 1)");
  }
  if (k_max < 0) {
    throw std::domain_error("k_max must be nonnegative");
  }

  MultiResult res;
  IterationState st = input_state(n, q0);
  res.trajectory.states.push_back(st);

  const double target = 1.0 - epsilon;
  if (fidelity_ghz(st) >= target) {
    res.plan = MultiPlan{0, 1.0, 1.0, fidelity_ghz(st)};
    return res;
  }
  if (q0 <= threshold_closed_form(n)) {
    throw plan_error(PlanFailure::below_threshold,
                     "q0 at or below the distillability threshold 2/(2^n - 2)");
  }

  double succ_product = 1.0;
  while (true) {
    if (res.trajectory.k >= k_max) {
      throw plan_error(PlanFailure::cap_exceeded,
                       "round cap exceeded before reaching the target fidelity");
    }
    const double prev_trace = st.trace();
    st = purify_step(st);
    // trace law: trace' = trace^2 * p, with p the success rate of a round
    // fed by the normalized previous state
    const double p = st.trace() / (prev_trace * prev_trace);
    res.trajectory.states.push_back(st);
    res.trajectory.success_probs.push_back(p);
    succ_product *= p;
    ++res.trajectory.k;

    if (st.trace() < kTraceFloor) {
      throw plan_error(PlanFailure::cap_exceeded,
                       "iterated weights underflowed before reaching the target");
    }
    if (fidelity_ghz(st) >= target) {
      break;
    }
  }

  res.plan.k = res.trajectory.k;
  res.plan.cost_inverse_norm = 1.0 / st.trace();
  res.plan.cost_expected = std::ldexp(1.0, res.plan.k) / succ_product;
  res.plan.final_fidelity = fidelity_ghz(st);
  return res;
}

}  // namespace ghzpure::multipartite
