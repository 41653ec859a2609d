#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ghzpure/states.hpp"

using namespace ghzpure;

namespace {

// deterministic uniform, independent of <random> implementations
double next_uniform(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return double(s >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("input_state matches its definition") {
  const IterationState a = input_state(3, 1.0);
  CHECK(a.q == 1.0);
  CHECK(a.r == 0.0);
  CHECK(a.s == 0.0);
  CHECK(a.normalized);

  const IterationState b = input_state(3, 0.0);
  CHECK(b.q == 0.0);
  CHECK(b.r == 1.0);

  const IterationState c = input_state(4, 0.6);
  CHECK(c.q == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(c.r == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(c.s == 0.0);

  CHECK_THROWS_AS(input_state(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(input_state(3, 1.5), std::domain_error);
  CHECK_THROWS_AS(input_state(3, -0.1), std::domain_error);
}

TEST_CASE("fidelity_ghz on the three basis weights") {
  CHECK(fidelity_ghz(make_state(3, 1, 0, 0)) == 1.0);
  CHECK(fidelity_ghz(make_state(3, 0, 1, 0)) == doctest::Approx(1.0 / 8).epsilon(1e-15));
  // the diagonal mixture overlaps GHZ at exactly 1/2, independent of n
  CHECK(fidelity_ghz(make_state(3, 0, 0, 1)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fidelity_ghz(make_state(7, 0, 0, 1)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(fidelity_ghz(make_state(3, 0, 0, 0)), std::domain_error);
}

TEST_CASE("input fidelity equals ((2^n-1)q + 1)/2^n") {
  for (int n : {2, 3, 5, 10, 30, 64}) {
    for (int i = 0; i <= 20; ++i) {
      const double q = i / 20.0;
      const double d = pow2d(n);
      const double expected = ((d - 1.0) * q + 1.0) / d;
      CHECK(std::abs(fidelity_ghz(input_state(n, q)) - expected) <= 1e-14);
    }
  }
}

TEST_CASE("fidelity_ghz is scale invariant") {
  const IterationState st = make_state(4, 0.03, 0.05, 0.01);
  const double f = fidelity_ghz(st);
  for (double scale : {1e-6, 0.25, 3.0, 10.0}) {
    const IterationState scaled_state =
        make_state(4, st.q * scale, st.r * scale, st.s * scale);
    CHECK(fidelity_ghz(scaled_state) == doctest::Approx(f).epsilon(1e-13));
  }
}

TEST_CASE("super-normalized states are rejected") {
  CHECK_THROWS_AS(make_state(3, 0.8, 0.8, 0.0), std::domain_error);
}

TEST_CASE("noise conversion pins both directions") {
  CHECK(noise_from_q(3, 1.0).delta == 0.0);
  CHECK(noise_from_delta(3, 0.2).q == doctest::Approx(1.0 - 0.2 * 8.0 / 7.0).epsilon(1e-15));
  CHECK(noise_from_q(10, 0.0).delta == doctest::Approx(1023.0 / 1024.0).epsilon(1e-16));

  // no q in [0,1] exists above the cap
  CHECK_THROWS_AS(noise_from_delta(3, 0.9), std::domain_error);

  NoiseQuery query;
  query.n = 5;
  query.delta = 0.3;
  const NoiseSpec spec = convert_noise(query);
  CHECK(spec.q == doctest::Approx(1.0 - 0.3 * 32.0 / 31.0).epsilon(1e-15));

  NoiseQuery bad;
  bad.n = 5;
  CHECK_THROWS_AS(convert_noise(bad), std::domain_error);
  bad.q = 0.5;
  bad.delta = 0.5;
  CHECK_THROWS_AS(convert_noise(bad), std::domain_error);
}

TEST_CASE("noise conversion round-trips to 1e-14") {
  std::uint64_t rng = 99;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + int(next_uniform(rng) * 63.0);
    const double q = next_uniform(rng);
    const NoiseSpec there = noise_from_q(n, q);
    const NoiseSpec back = noise_from_delta(n, there.delta);
    CHECK(std::abs(back.q - q) <= 1e-14);
    CHECK(std::abs(noise_from_q(n, back.q).delta - there.delta) <= 1e-14);
  }
}

TEST_CASE("normalized flag tracks the trace") {
  CHECK(make_state(3, 0.5, 0.5, 0.0).normalized);
  CHECK_FALSE(make_state(3, 0.5, 0.25, 0.0).normalized);
  CHECK_THROWS_AS(make_state(3, -0.1, 0.5, 0.0), std::domain_error);
}
