#include "ghzpure/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "ghzpure/bipartite.hpp"
#include "ghzpure/dense/eig.hpp"
#include "ghzpure/dense/ops.hpp"
#include "ghzpure/multipartite.hpp"

namespace ghzpure::oracle {

using dense::cx;
using dense::DensityMatrix;
using dense::PureState;

namespace {

void check_cap(int qubits, const Limits& limits, const char* op) {
  if (qubits > limits.qubit_cap) {
    throw std::domain_error(std::string(op) + " needs " + std::to_string(qubits) +
                            " qubits, above the cap of " +
                            std::to_string(limits.qubit_cap));
  }
}

// xorshift64 uniform in [0, 1); sampled states are identical across
// standard libraries
double uniform01(std::uint64_t& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return double(state >> 11) * 0x1.0p-53;
}

}  // namespace

DensityMatrix build_state(int n, double q, double r, double s, const Limits& limits) {
  if (n < kMinParties) {
    throw std::domain_error("build_state requires n >= 2");
  }
  check_cap(n, limits, "build_state");
  if (!(q >= 0.0) || !(r >= 0.0) || !(s >= 0.0)) {
    throw std::domain_error("build_state requires nonnegative weights");
  }
  DensityMatrix m(n);
  const std::size_t d = m.dim();
  const double unit = r / double(d);
  for (std::size_t i = 0; i < d; ++i) {
    m.at(i, i) += unit;
  }
  m.at(0, 0) += q / 2.0 + s / 2.0;
  m.at(d - 1, d - 1) += q / 2.0 + s / 2.0;
  m.at(0, d - 1) += q / 2.0;
  m.at(d - 1, 0) += q / 2.0;
  return m;
}

DensityMatrix isotropic_pair(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("q must lie in [0, 1]");
  }
  DensityMatrix m = DensityMatrix::identity(2, (1.0 - q) / 4.0);
  const DensityMatrix bell = dense::outer(dense::phi_plus());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      m.at(i, j) += q * bell.at(i, j);
    }
  }
  return m;
}

PurifyRound purify_round(const DensityMatrix& rho, const Limits& limits) {
  const int n = rho.num_qubits();
  check_cap(2 * n, limits, "purify_round");
  DensityMatrix big = dense::kron(rho, rho);
  for (int p = 0; p < n; ++p) {
    dense::apply_cnot(big, /*control=*/p, /*target=*/n + p);
  }
  for (int p = 0; p < n; ++p) {
    dense::project_qubit(big, n + p, 0);
  }
  std::vector<int> targets(n);
  for (int p = 0; p < n; ++p) {
    targets[p] = n + p;
  }
  PurifyRound out{dense::partial_trace(big, targets), 0.0};
  out.trace = out.state.trace_real();
  return out;
}

FamilyWeights extract_family_weights(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  FamilyWeights w;
  w.q = 2.0 * rho.at(0, d - 1).real();
  double mid = 0.0;
  for (std::size_t i = 1; i + 1 < d; ++i) {
    mid += rho.at(i, i).real();
  }
  const double unit = mid / double(d - 2);
  w.r = unit * double(d);
  w.s = 2.0 * (rho.at(0, 0).real() - unit - w.q / 2.0);
  const DensityMatrix rebuilt =
      build_state(rho.num_qubits(), std::max(w.q, 0.0), std::max(w.r, 0.0),
                  std::max(w.s, 0.0), Limits{rho.num_qubits()});
  w.residual = dense::max_abs_diff(rho, rebuilt);
  return w;
}

DensityMatrix prepare_pair_oracle(int n, double q, const Limits& limits) {
  if (n < 3) {
    throw std::domain_error("pair preparation requires n >= 3");
  }
  check_cap(n, limits, "prepare_pair_oracle");
  const DensityMatrix rho = build_state(n, q, 1.0 - q, 0.0, limits);

  DensityMatrix sum(2);
  const int measured = n - 2;
  for (std::size_t branch = 0; branch < (std::size_t{1} << measured); ++branch) {
    DensityMatrix b = rho;
    int parity = 0;
    for (int m = 0; m < measured; ++m) {
      const int outcome = int((branch >> m) & 1u);  // 0 -> |+>, 1 -> |->
      parity ^= outcome;
      dense::apply_1q(b, 2 + m, dense::kGateH);
      dense::project_qubit(b, 2 + m, outcome);
    }
    std::vector<int> drop(measured);
    for (int m = 0; m < measured; ++m) {
      drop[m] = 2 + m;
    }
    DensityMatrix pair = dense::partial_trace(b, drop);
    if (parity) {
      dense::apply_1q(pair, 0, dense::kGateZ);  // dealer fixes the sign
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        sum.at(i, j) += pair.at(i, j);
      }
    }
  }
  return sum;
}

double prepare_pair_branch_spread(int n, double q, const Limits& limits) {
  if (n < 3) {
    throw std::domain_error("pair preparation requires n >= 3");
  }
  check_cap(n, limits, "prepare_pair_branch_spread");
  const DensityMatrix rho = build_state(n, q, 1.0 - q, 0.0, limits);
  const int measured = n - 2;
  const double branches = std::ldexp(1.0, measured);

  std::vector<DensityMatrix> corrected;
  for (std::size_t branch = 0; branch < (std::size_t{1} << measured); ++branch) {
    DensityMatrix b = rho;
    int parity = 0;
    for (int m = 0; m < measured; ++m) {
      const int outcome = int((branch >> m) & 1u);
      parity ^= outcome;
      dense::apply_1q(b, 2 + m, dense::kGateH);
      dense::project_qubit(b, 2 + m, outcome);
    }
    std::vector<int> drop(measured);
    for (int m = 0; m < measured; ++m) {
      drop[m] = 2 + m;
    }
    DensityMatrix pair = dense::partial_trace(b, drop);
    if (parity) {
      dense::apply_1q(pair, 0, dense::kGateZ);
    }
    // scale each branch back to unit trace before comparing
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        pair.at(i, j) *= branches;
      }
    }
    corrected.push_back(std::move(pair));
  }
  double spread = 0.0;
  for (std::size_t i = 1; i < corrected.size(); ++i) {
    spread = std::max(spread, dense::max_abs_diff(corrected[0], corrected[i]));
  }
  return spread;
}

BbpsswOracle bbpssw_step_oracle(double q) {
  // qubits: 0 = dealer keep, 1 = partner keep, 2 = dealer target, 3 = partner
  // target
  const DensityMatrix pair = isotropic_pair(q);
  DensityMatrix two = dense::kron(pair, pair);
  dense::apply_cnot(two, 0, 2);
  dense::apply_cnot(two, 1, 3);

  BbpsswOracle out;
  DensityMatrix dealer = two;
  dense::project_qubit(dealer, 2, 0);
  out.dealer_p0 = dealer.trace_real();

  dense::project_qubit(dealer, 3, 0);
  out.p_success = dealer.trace_real();
  out.partner_p0_given_dealer0 = out.p_success / out.dealer_p0;

  DensityMatrix kept = dense::partial_trace(dealer, {2, 3});
  const double t = kept.trace_real();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      kept.at(i, j) /= t;
    }
  }
  out.fidelity_next = dense::fidelity(kept, dense::phi_plus());
  return out;
}

DensityMatrix teleport_channel_output(int n, double q, const Limits& limits) {
  if (n < kMinParties) {
    throw std::domain_error("teleportation requires n >= 2");
  }
  check_cap(n, limits, "teleport_channel_output");
  DensityMatrix rho = dense::outer(dense::ghz_state(n));
  for (int p = 1; p < n; ++p) {
    rho = dense::depolarize_qubit(rho, p, q);
  }
  return rho;
}

double teleport_oracle(int n, double q, const Limits& limits) {
  return dense::fidelity(teleport_channel_output(n, q, limits), dense::ghz_state(n));
}

DensityMatrix teleport_bell_sim(int n, double q, const Limits& limits) {
  if (n < kMinParties) {
    throw std::domain_error("teleportation requires n >= 2");
  }
  check_cap(n + 2, limits, "teleport_bell_sim");

  DensityMatrix current = dense::outer(dense::ghz_state(n));
  for (int p = 1; p < n; ++p) {
    const DensityMatrix ext = dense::kron(current, isotropic_pair(q));
    const int near = n, far = n + 1;
    DensityMatrix accum(n + 2);
    for (int z = 0; z < 2; ++z) {
      for (int x = 0; x < 2; ++x) {
        DensityMatrix b = ext;
        // Bell decode: CNOT then H maps the Bell basis to |z>|x>
        dense::apply_cnot(b, p, near);
        dense::apply_1q(b, p, dense::kGateH);
        dense::project_qubit(b, p, z);
        dense::project_qubit(b, near, x);
        if (x) dense::apply_1q(b, far, dense::kGateX);
        if (z) dense::apply_1q(b, far, dense::kGateZ);
        for (std::size_t i = 0; i < accum.dim(); ++i) {
          for (std::size_t j = 0; j < accum.dim(); ++j) {
            accum.at(i, j) += b.at(i, j);
          }
        }
      }
    }
    DensityMatrix traced = dense::partial_trace(accum, {p, near});
    // the teleported qubit sits last; move it back to slot p
    std::vector<int> order;
    for (int k = 0; k < p; ++k) order.push_back(k);
    order.push_back(n - 1);
    for (int k = p; k < n - 1; ++k) order.push_back(k);
    current = dense::permute_qubits(traced, order);
  }
  return current;
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  return dense::fidelity(rho, psi);
}

void VerificationReport::add(const std::string& name, double max_error, double tolerance) {
  const bool pass = max_error <= tolerance;
  checks.push_back(Check{name, max_error, tolerance, pass});
  overall_pass = overall_pass && pass;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const Check& c : other.checks) {
    checks.push_back(c);
    overall_pass = overall_pass && c.pass;
  }
}

namespace {

DensityMatrix scaled(const DensityMatrix& m, double f) {
  DensityMatrix out = m;
  for (std::size_t i = 0; i < out.dim(); ++i) {
    for (std::size_t j = 0; j < out.dim(); ++j) {
      out.at(i, j) *= f;
    }
  }
  return out;
}

double output_health(const DensityMatrix& m, double* psd_violation) {
  // hermiticity error plus eigenvalue floor, both on the raw output
  *psd_violation = std::max(0.0, -dense::min_eigenvalue(m));
  return m.hermiticity_error();
}

}  // namespace

VerificationReport verify_purify_identities(int n, double tol, const Limits& limits) {
  VerificationReport rep;
  const std::string suffix = "_n" + std::to_string(n);

  const DensityMatrix unit = DensityMatrix::identity(n, 1.0);
  const DensityMatrix ghz = dense::outer(dense::ghz_state(n));
  const DensityMatrix diag = build_state(n, 0.0, 0.0, 1.0, limits);

  struct Case {
    const char* name;
    const DensityMatrix* left;
    const DensityMatrix* right;
    const DensityMatrix* expect;
    double factor;
  };
  const Case cases[] = {
      {"identity_unit_unit", &unit, &unit, &unit, 1.0},
      {"identity_ghz_ghz", &ghz, &ghz, &ghz, 0.5},
      {"identity_ghz_unit", &ghz, &unit, &diag, 1.0},
      {"identity_unit_ghz", &unit, &ghz, &diag, 1.0},
      {"identity_unit_diag", &unit, &diag, &diag, 1.0},
      {"identity_diag_unit", &diag, &unit, &diag, 1.0},
      {"identity_ghz_diag", &ghz, &diag, &diag, 0.5},
      {"identity_diag_ghz", &diag, &ghz, &diag, 0.5},
      {"identity_diag_diag", &diag, &diag, &diag, 0.5},
  };

  double herm = 0.0, psd = 0.0;
  for (const Case& c : cases) {
    // run the raw round circuit on the explicit A (x) B product
    const int total = 2 * n;
    check_cap(total, limits, "verify_purify_identities");
    DensityMatrix big = dense::kron(*c.left, *c.right);
    for (int p = 0; p < n; ++p) {
      dense::apply_cnot(big, p, n + p);
    }
    for (int p = 0; p < n; ++p) {
      dense::project_qubit(big, n + p, 0);
    }
    std::vector<int> targets(n);
    for (int p = 0; p < n; ++p) {
      targets[p] = n + p;
    }
    const DensityMatrix got = dense::partial_trace(big, targets);
    rep.add(std::string(c.name) + suffix,
            dense::max_abs_diff(got, scaled(*c.expect, c.factor)), tol);
    double v = 0.0;
    herm = std::max(herm, output_health(got, &v));
    psd = std::max(psd, v);
  }
  rep.add("identity_outputs_hermitian" + suffix, herm, 1e-10);
  rep.add("identity_outputs_psd_floor" + suffix, psd, 1e-10);
  return rep;
}

VerificationReport verify_purify_recurrence(int n, double tol, int samples,
                                            std::uint64_t seed, const Limits& limits) {
  VerificationReport rep;
  const std::string suffix = "_n" + std::to_string(n);
  std::uint64_t rng = seed ? seed : kDefaultSeed;

  double weight_err = 0.0, closure = 0.0, trace_err = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double total = 0.3 + 0.7 * uniform01(rng);
    double w[3] = {-std::log(1.0 - uniform01(rng)), -std::log(1.0 - uniform01(rng)),
                   -std::log(1.0 - uniform01(rng))};
    const double wsum = w[0] + w[1] + w[2];
    const double q = total * w[0] / wsum;
    const double r = total * w[1] / wsum;
    const double s = total * w[2] / wsum;

    const PurifyRound round = purify_round(build_state(n, q, r, s, limits), limits);
    const FamilyWeights got = extract_family_weights(round.state);
    const IterationState predicted = multipartite::purify_step(make_state(n, q, r, s));

    weight_err = std::max({weight_err, std::abs(got.q - predicted.q),
                           std::abs(got.r - predicted.r), std::abs(got.s - predicted.s)});
    closure = std::max(closure, got.residual);

    const IterationState unit_input = make_state(
        n, q / total, r / total, s / total);
    const double p = multipartite::success_probability(unit_input);
    trace_err = std::max(trace_err, std::abs(round.trace - total * total * p) /
                                        std::max(1e-30, round.trace));
  }
  rep.add("recurrence_weights" + suffix, weight_err, tol);
  rep.add("family_closure_residual" + suffix, closure, tol);
  rep.add("trace_law_relative" + suffix, trace_err, 1e-12);

  double psucc_err = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double q = 0.1 * i;
    const PurifyRound round = purify_round(build_state(n, q, 1.0 - q, 0.0, limits), limits);
    const double d = pow2d(n);
    const double expected =
        q * q / 2.0 + 2.0 * q * (1.0 - q) / d + (1.0 - q) * (1.0 - q) / d;
    psucc_err = std::max(psucc_err, std::abs(round.trace - expected));
  }
  rep.add("success_probability_grid" + suffix, psucc_err, 1e-12);
  return rep;
}

VerificationReport verify_bipartite_step(double tol) {
  VerificationReport rep;
  double fid_err = 0.0, joint_err = 0.0, dealer_err = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double q = i / 20.0;
    const BbpsswOracle got = bbpssw_step_oracle(q);
    const double q_next = bipartite::bbpssw_step(q).q_next;
    fid_err = std::max(fid_err, std::abs(got.fidelity_next - (1.0 + 3.0 * q_next) / 4.0));
    joint_err = std::max(joint_err, std::abs(got.p_success - (1.0 + q * q) / 4.0));
    dealer_err = std::max(dealer_err, std::abs(got.dealer_p0 - 0.5));
  }
  rep.add("bbpssw_fidelity_vs_recurrence", fid_err, tol);
  rep.add("bbpssw_joint_rate_quadratic", joint_err, tol);
  rep.add("bbpssw_dealer_marginal_half", dealer_err, 1e-12);

  double fp_err = 0.0;
  for (double q : {0.0, 1.0 / 3.0, 1.0}) {
    const BbpsswOracle got = bbpssw_step_oracle(q);
    const double q_next = (4.0 * got.fidelity_next - 1.0) / 3.0;
    fp_err = std::max(fp_err, std::abs(q_next - q));
  }
  rep.add("bbpssw_fixed_points", fp_err, 1e-12);
  return rep;
}

VerificationReport verify_pair_preparation(double tol, const Limits& limits) {
  VerificationReport rep;
  for (int n = 3; n <= std::min(5, limits.qubit_cap); ++n) {
    double err = 0.0, spread = 0.0;
    for (double q : {0.0, 0.3, 0.7, 1.0}) {
      const DensityMatrix got = prepare_pair_oracle(n, q, limits);
      err = std::max(err, dense::max_abs_diff(got, isotropic_pair(q)));
      spread = std::max(spread, prepare_pair_branch_spread(n, q, limits));
    }
    rep.add("prepare_pair_isotropic_n" + std::to_string(n), err, tol);
    rep.add("prepare_pair_branch_spread_n" + std::to_string(n), spread, tol);
  }
  return rep;
}

VerificationReport verify_teleportation(double tol, const Limits& limits) {
  VerificationReport rep;
  for (int n = 2; n <= 4; ++n) {
    double err = 0.0;
    for (double q : {0.0, 0.5, 0.9, 1.0}) {
      const double got = teleport_oracle(n, q, limits);
      err = std::max(err, std::abs(got - bipartite::teleport_fidelity(q, n)));
    }
    rep.add("teleport_fidelity_closed_form_n" + std::to_string(n), err, tol);
  }
  for (int n = 2; n <= 3; ++n) {
    double err = 0.0;
    for (double q : {0.0, 0.5, 0.9, 1.0}) {
      err = std::max(err, dense::max_abs_diff(teleport_bell_sim(n, q, limits),
                                              teleport_channel_output(n, q, limits)));
    }
    rep.add("teleport_channel_vs_bell_sim_n" + std::to_string(n), err, 1e-12);
  }
  return rep;
}

VerificationReport verify_threshold(double tol) {
  VerificationReport rep;
  double err = 0.0;
  for (int n = 3; n <= 10; ++n) {
    const auto res = multipartite::distillability_threshold(n, 1e-12);
    err = std::max(err, std::abs(res.numeric - res.closed_form));
  }
  rep.add("threshold_bisection_vs_closed_form", err, std::max(tol, 1e-9));
  return rep;
}

VerificationReport run_full_verification(const VerifyOptions& options) {
  if (options.n_min < kMinParties || options.n_max < options.n_min) {
    throw std::domain_error("bad n range");
  }
  if (2 * options.n_max > options.limits.qubit_cap) {
    throw std::domain_error("2*n_max exceeds the oracle qubit cap; raise --oracle-cap");
  }
  VerificationReport rep;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    rep.merge(verify_purify_identities(n, options.tol, options.limits));
    rep.merge(verify_purify_recurrence(n, options.tol, options.samples, options.seed,
                                       options.limits));
  }
  rep.merge(verify_bipartite_step(options.tol));
  rep.merge(verify_pair_preparation(std::max(options.tol, 1e-12), options.limits));
  rep.merge(verify_teleportation(options.tol, options.limits));
  rep.merge(verify_threshold(options.tol));
  return rep;
}

}  // namespace ghzpure::oracle
