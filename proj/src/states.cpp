#include "ghzpure/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ghzpure {

namespace {

void check_parties(int n) {
  if (n < kMinParties || n > kMaxParties) {
    throw std::domain_error("party count must be in [" + std::to_string(kMinParties) +
                            ", " + std::to_string(kMaxParties) + "], got " +
                            std::to_string(n));
  }
}

void check_unit_interval(double q, const char* name) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

IterationState make_state(int n, double q, double r, double s) {
  check_parties(n);
  if (!(q >= 0.0) || !(r >= 0.0) || !(s >= 0.0)) {
    throw std::domain_error("state weights must be nonnegative");
  }
  IterationState st{n, q, r, s, false};
  // sub-normalized states are fine (post-selection), super-normalized are not
  if (st.trace() > 1.0 + 1e-9) {
    throw std::domain_error("state weights must sum to at most 1");
  }
  st.normalized = std::abs(st.trace() - 1.0) <= kNormalizedTol;
  return st;
}

IterationState input_state(int n, double q) {
  check_unit_interval(q, "q");
  return make_state(n, q, 1.0 - q, 0.0);
}

double fidelity_ghz(const IterationState& state) {
  check_parties(state.n);
  const double t = state.trace();
  if (!(t > 0.0)) {
    throw std::domain_error("fidelity_ghz requires a state with positive trace");
  }
  return (state.q + state.r / pow2d(state.n) + state.s / 2.0) / t;
}

NoiseSpec noise_from_q(int n, double q) {
  check_parties(n);
  check_unit_interval(q, "q");
  const double d = pow2d(n);
  return NoiseSpec{n, q, (d - 1.0) / d * (1.0 - q)};
}

NoiseSpec noise_from_delta(int n, double delta) {
  check_parties(n);
  const double d = pow2d(n);
  const double delta_max = (d - 1.0) / d;
  if (!(delta >= 0.0 && delta <= delta_max)) {
    throw std::domain_error("delta must lie in [0, (2^n - 1)/2^n]");
  }
  return NoiseSpec{n, 1.0 - delta * d / (d - 1.0), delta};
}

NoiseSpec convert_noise(const NoiseQuery& query) {
  if (query.q.has_value() == query.delta.has_value()) {
    throw std::domain_error("exactly one of q, delta must be given");
  }
  return query.q ? noise_from_q(query.n, *query.q)
                 : noise_from_delta(query.n, *query.delta);
}

}  // namespace ghzpure
