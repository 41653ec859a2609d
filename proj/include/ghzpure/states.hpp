#pragma once

#include <cmath>
#include <optional>

namespace ghzpure {

// Party counts are capped so 2^n stays exactly representable in a double.
inline constexpr int kMinParties = 2;
inline constexpr int kMaxParties = 64;
inline constexpr double kNormalizedTol = 1e-12;

inline double pow2d(int n) { return std::ldexp(1.0, n); }

// Mixture q*|GHZ><GHZ| + (r/2^n)*I + s*rho_diag on n parties, where rho_diag
// is the classical mixture (|0..0><0..0| + |1..1><1..1|)/2.  Weights are kept
// unnormalized: post-selection shrinks the trace and the cost accounting
// reads that trace directly.
struct IterationState {
  int n = 0;
  double q = 0.0;
  double r = 0.0;
  double s = 0.0;
  bool normalized = false;

  double trace() const { return q + r + s; }
};

// Isotropic two-qubit state q*|Phi+><Phi+| + ((1-q)/4)*I.
struct BipartitePair {
  double q = 0.0;
};

// Input noise level, carried both as GHZ weight q and as in-fidelity delta.
// The two are linked by delta = ((2^n - 1)/2^n) * (1 - q).
struct NoiseSpec {
  int n = 0;
  double q = 0.0;
  double delta = 0.0;
};

struct NoiseQuery {
  int n = 0;
  std::optional<double> q;
  std::optional<double> delta;
};

IterationState make_state(int n, double q, double r, double s);

// The protocol input: q*|GHZ><GHZ| + ((1-q)/2^n)*I, i.e. (q, 1-q, 0).
IterationState input_state(int n, double q);

// GHZ fidelity of the normalized state: (q + r/2^n + s/2) / (q + r + s).
double fidelity_ghz(const IterationState& state);

NoiseSpec noise_from_q(int n, double q);
NoiseSpec noise_from_delta(int n, double delta);

// Fills the missing half of (q, delta); exactly one must be present.
NoiseSpec convert_noise(const NoiseQuery& query);

}  // namespace ghzpure
