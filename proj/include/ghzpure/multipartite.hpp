#pragma once

#include <vector>

#include "ghzpure/states.hpp"

namespace ghzpure::multipartite {

// One round of the direct multipartite protocol on the (q, r, s) family:
// every party CNOTs its copy-1 qubit onto its copy-2 qubit, measures the
// copy-2 qubit, and the round is kept only on the all-zero outcome.  The
// family is closed under this map; the post-selected (unnormalized) weights
// are
//   q' = q^2 / 2
//   r' = r^2 / 2^n
//   s' = s^2/2 + q s + (2 q r + 2 s r) / 2^n.
// Applied to a normalized state, the output trace is the round's success
// probability.
IterationState purify_step(const IterationState& state);

// Trace of purify_step on a normalized state.  For the (q, 1-q, 0) input
// this is q^2/2 + 2q(1-q)/2^n + (1-q)^2/2^n.
double success_probability(const IterationState& state);

struct MultiTrajectory {
  std::vector<IterationState> states;  // states[0] normalized, rest raw
  std::vector<double> success_probs;   // success_probs[i] feeds states[i+1]
  int k = 0;
};

struct MultiPlan {
  int k = 0;
  double cost_inverse_norm = 0.0;  // 1/(q+r+s) of the final raw state
  double cost_expected = 0.0;      // 2^k / prod_i success_probs[i]
  double final_fidelity = 0.0;
};

struct MultiResult {
  MultiPlan plan;
  MultiTrajectory trajectory;
};

// Iterates purify_step from input_state(n, q0) until the normalized GHZ
// fidelity reaches 1 - epsilon.  Throws plan_error(below_threshold) when
// q0 <= 2/(2^n - 2) and the target is not already met, plan_error(
// cap_exceeded) when k_max rounds do not suffice or the weights underflow.
MultiResult plan_multipartite(int n, double q0, double epsilon, int k_max = 64);

struct ThresholdResult {
  double closed_form = 0.0;
  double numeric = 0.0;
};

// q* = 2/(2^n - 2): below this GHZ weight the normalized GHZ component can
// no longer grow from the (q, 1-q, 0) input.
double threshold_closed_form(int n);

// closed_form plus the bisection fixed point of the one-round normalized
// GHZ-weight map on (q, 1-q, 0) inputs, bracketed on [1e-12, 1].
ThresholdResult distillability_threshold(int n, double tol);

}  // namespace ghzpure::multipartite
