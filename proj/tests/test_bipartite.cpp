#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ghzpure/bipartite.hpp"
#include "ghzpure/errors.hpp"

using namespace ghzpure;
using namespace ghzpure::bipartite;

TEST_CASE("distillation step pins the worked values") {
  const StepResult at1 = bbpssw_step(1.0);
  CHECK(at1.q_next == 1.0);
  CHECK(at1.p_success == 0.5);
  CHECK(at1.cost_factor == 4.0);

  const StepResult third = bbpssw_step(1.0 / 3.0);
  CHECK(third.q_next == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const StepResult s = bbpssw_step(0.8);
  CHECK(s.q_next == doctest::Approx(4.16 / 4.92).epsilon(1e-15));
  CHECK(s.p_success == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(s.cost_factor == doctest::Approx(8.0 / 1.8).epsilon(1e-15));

  CHECK_THROWS_AS(bbpssw_step(-0.01), std::domain_error);
  CHECK_THROWS_AS(bbpssw_step(1.01), std::domain_error);
}

TEST_CASE("parity_symmetric rule halves the cost at q = 1") {
  const StepResult s = bbpssw_step(1.0, SuccessRule::parity_symmetric);
  CHECK(s.p_success == 1.0);
  CHECK(s.cost_factor == 2.0);
  CHECK(bbpssw_step(0.5, SuccessRule::parity_symmetric).p_success ==
        doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("fixed points are exactly {0, 1/3, 1}") {
  for (double q : {0.0, 1.0 / 3.0, 1.0}) {
    CHECK(std::abs(bbpssw_step(q).q_next - q) <= 1e-15);
  }
  // sign structure between the fixed points: down on (0, 1/3), up on (1/3, 1)
  for (int i = 1; i < 33; ++i) {
    const double q = i / 100.0;
    CHECK(bbpssw_step(q).q_next < q);
  }
  for (int i = 34; i < 100; ++i) {
    const double q = i / 100.0;
    CHECK(bbpssw_step(q).q_next > q);
  }
}

TEST_CASE("monotone convergence to 1 from (1/3, 1]") {
  for (double q0 : {0.335, 0.4, 0.6, 0.9, 0.999}) {
    double q = q0;
    for (int k = 0; k < 200; ++k) {
      const double next = bbpssw_step(q).q_next;
      CHECK(next >= q);
      q = next;
    }
    CHECK(1.0 - q <= 1e-9);
  }
}

TEST_CASE("delta form and rational form agree to 1e-15 relative") {
  for (double q : {0.9, 0.99, 0.999999, 1.0 - 1e-9, 1.0 - 1e-12}) {
    const double rational = (4.0 * q * q + 2.0 * q) / (3.0 * (q * q + 1.0));
    const double via_delta = 1.0 - bbpssw_delta_step(1.0 - q);
    CHECK(std::abs(rational - via_delta) <= 1e-15 * rational);
  }
}

TEST_CASE("small-error contraction: |delta' - (2/3)delta| <= 2 delta^2") {
  for (double delta : {1e-3, 1e-4, 1e-6, 1e-9}) {
    const double next = bbpssw_delta_step(delta);
    CHECK(std::abs(next - 2.0 / 3.0 * delta) <= 2.0 * delta * delta);
  }
}

TEST_CASE("closed-form trajectory tracks iteration to 10 k delta0^2") {
  for (double delta0 : {1e-3, 1e-4}) {
    double q = 1.0 - delta0;
    for (int k = 1; k <= 20; ++k) {
      q = bbpssw_step(q).q_next;
      const double approx = 1.0 - std::pow(2.0 / 3.0, k) * delta0;
      CHECK(std::abs(q - approx) <= 10.0 * k * delta0 * delta0);
    }
  }
}

TEST_CASE("reduce_to_pair keeps q and rejects n < 3") {
  CHECK(reduce_to_pair(5, 0.7).q == 0.7);
  CHECK(reduce_to_pair(3, 1.0).q == 1.0);
  CHECK_THROWS_AS(reduce_to_pair(2, 0.5), std::domain_error);
}

TEST_CASE("teleport_fidelity pins the worked values") {
  CHECK(teleport_fidelity(1.0, 3) == 1.0);
  CHECK(teleport_fidelity(1.0, 17) == 1.0);
  CHECK(teleport_fidelity(0.0, 3) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(teleport_fidelity(0.9, 3) == doctest::Approx(0.85625).epsilon(1e-15));
  CHECK(teleport_fidelity(0.9, 4) == doctest::Approx(0.7931875).epsilon(1e-15));
}

TEST_CASE("teleport_fidelity monotone in q, antitone in n") {
  for (int n : {2, 3, 5, 10}) {
    for (int i = 0; i < 40; ++i) {
      const double q = i / 40.0;
      CHECK(teleport_fidelity(q + 1.0 / 40.0, n) > teleport_fidelity(q, n));
    }
  }
  for (double q : {0.1, 0.5, 0.9}) {
    for (int n = 2; n < 12; ++n) {
      CHECK(teleport_fidelity(q, n + 1) < teleport_fidelity(q, n));
    }
  }
}

TEST_CASE("plan: already sufficient input") {
  const PurificationPlan plan = plan_bipartite(3, 1.0, 0.01);
  CHECK(plan.k == 0);
  CHECK(plan.expected_cost == 2.0);
  CHECK(plan.lower_bound_cost == 2.0);
  CHECK(plan.final_fidelity == 1.0);
  CHECK(plan.trajectory.size() == 1);
}

TEST_CASE("plan: unreachable below the fixed point") {
  CHECK_THROWS_AS(plan_bipartite(3, 0.2, 0.01), plan_error);
  try {
    plan_bipartite(3, 0.2, 0.01);
  } catch (const plan_error& e) {
    CHECK(e.code() == PlanFailure::unreachable);
  }
}

TEST_CASE("plan: cap exceeded with a tiny cap") {
  try {
    plan_bipartite(10, 0.8, 0.001, /*k_max=*/2);
    FAIL("expected plan_error");
  } catch (const plan_error& e) {
    CHECK(e.code() == PlanFailure::cap_exceeded);
  }
}

TEST_CASE("plan accounting invariants") {
  for (double q0 : {0.5, 0.7, 0.9}) {
    for (int n : {3, 5, 10}) {
      const PurificationPlan plan = plan_bipartite(n, q0, 0.01);
      CHECK(plan.expected_cost >= plan.lower_bound_cost);
      CHECK(plan.final_fidelity >= 0.99);
      CHECK(int(plan.trajectory.size()) == plan.k + 1);
      for (std::size_t i = 1; i < plan.trajectory.size(); ++i) {
        CHECK(plan.trajectory[i] >= plan.trajectory[i - 1]);
      }
      // one distillation round short must miss the target
      if (plan.k > 0) {
        CHECK(teleport_fidelity(plan.trajectory[plan.k - 1], n) < 0.99);
      }
    }
  }
  // equality of cost and bound only at q = 1
  const PurificationPlan perfect = plan_bipartite(4, 1.0, 0.5);
  CHECK(perfect.expected_cost == perfect.lower_bound_cost);
}

TEST_CASE("plan reports the round-bound and asymptotic cost") {
  const double q0 = noise_from_delta(10, 0.2).q;
  const PurificationPlan plan = plan_bipartite(10, q0, 0.01);
  REQUIRE(plan.closed_form_k.has_value());
  CHECK(std::abs(double(*plan.closed_form_k) - plan.k) <= 1.0);
  const double expected_asym = 4.0 * std::pow(10.0, 4.42) * std::pow(0.2 / 0.01, 3.42);
  CHECK(plan.asymptotic_cost == doctest::Approx(expected_asym).epsilon(1e-9));
}
