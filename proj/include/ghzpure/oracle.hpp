#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghzpure/dense/matrix.hpp"
#include "ghzpure/states.hpp"

// Brute-force dense ground truth for every closed-form formula in the
// parametric modules, at small party counts.
//
// Conventions (pinned by tests):
//  - party p maps to qubit p, most significant bit first;
//  - in purify_round the two copies are laid out copy-1 parties 0..n-1 then
//    copy-2 parties 0..n-1, each CNOT uses control = copy-1 qubit and
//    target = copy-2 qubit, and all targets are post-selected on |0>;
//  - party 0 is the dealer, party 1 the partner kept in pair preparation.
namespace ghzpure::oracle {

struct Limits {
  // Total qubits a single dense operation may touch.  purify_round on n
  // parties needs 2n; raising the cap to 12 admits n = 6 at ~quarter-GB
  // working sets.
  int qubit_cap = 10;
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

// q*|GHZ><GHZ| + (r/2^n)*I + s*rho_diag as an explicit matrix.
dense::DensityMatrix build_state(int n, double q, double r, double s,
                                 const Limits& limits = {});

dense::DensityMatrix isotropic_pair(double q);

struct PurifyRound {
  dense::DensityMatrix state;  // unnormalized post-selected n-party state
  double trace = 0.0;
};

// One round of the multipartite protocol on rho (x) rho: pairwise CNOTs,
// projection of every target onto |0>, partial trace over the targets.
PurifyRound purify_round(const dense::DensityMatrix& rho, const Limits& limits = {});

struct FamilyWeights {
  double q = 0.0, r = 0.0, s = 0.0;
  double residual = 0.0;  // max |rho - rebuild(q, r, s)|
};

FamilyWeights extract_family_weights(const dense::DensityMatrix& rho);

// Enumerates all 2^(n-2) |+/-> measurement branches on parties 2..n-1 of
// input_state(n, q), applies the parity phase correction to the dealer
// qubit, and returns the branch sum.  Every corrected branch equals the
// same isotropic pair; branch_spread reports their max pairwise distance.
dense::DensityMatrix prepare_pair_oracle(int n, double q, const Limits& limits = {});
double prepare_pair_branch_spread(int n, double q, const Limits& limits = {});

struct BbpsswOracle {
  double fidelity_next = 0.0;       // Phi+ fidelity of the kept pair
  double p_success = 0.0;           // joint rate of the all-zero outcome
  double dealer_p0 = 0.0;           // dealer-side marginal rate of outcome 0
  double partner_p0_given_dealer0 = 0.0;
};

// Two isotropic pairs, bilateral CNOT, both targets post-selected on |0>.
BbpsswOracle bbpssw_step_oracle(double q);

// GHZ fidelity after the teleport stage, via the depolarizing-channel form
// of isotropic-pair teleportation (equivalence validated by the Bell-
// measurement simulation below at n <= 3).
double teleport_oracle(int n, double q, const Limits& limits = {});
dense::DensityMatrix teleport_channel_output(int n, double q, const Limits& limits = {});

// Explicit sequential teleportation of qubits 1..n-1: per qubit, Bell
// measurement over all four outcomes with X/Z corrections on the far half.
dense::DensityMatrix teleport_bell_sim(int n, double q, const Limits& limits = {});

double fidelity(const dense::DensityMatrix& rho, const dense::PureState& psi);

struct Check {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool overall_pass = true;

  void add(const std::string& name, double max_error, double tolerance);
  void merge(const VerificationReport& other);
};

// The six purification-map identities (both operand orders where they have
// two), elementwise at `tol`, plus hermiticity/eigenvalue-floor checks on
// the outputs.
VerificationReport verify_purify_identities(int n, double tol, const Limits& limits = {});

// Parametric recurrence vs dense weight extraction on random family states,
// family-closure residual, the success-probability grid, and the trace law.
VerificationReport verify_purify_recurrence(int n, double tol, int samples,
                                            std::uint64_t seed, const Limits& limits = {});

VerificationReport verify_bipartite_step(double tol);
VerificationReport verify_pair_preparation(double tol, const Limits& limits = {});
VerificationReport verify_teleportation(double tol, const Limits& limits = {});
VerificationReport verify_threshold(double tol);

struct VerifyOptions {
  int n_min = 2;
  int n_max = 5;
  double tol = 1e-10;
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;
  Limits limits;
};

VerificationReport run_full_verification(const VerifyOptions& options);

}  // namespace ghzpure::oracle
