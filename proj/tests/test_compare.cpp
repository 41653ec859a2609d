#include <cmath>

#include <doctest.h>

#include "ghzpure/compare.hpp"

using namespace ghzpure;
using namespace ghzpure::compare;

TEST_CASE("degenerate sweep point: delta = 0") {
  const ComparisonRecord rec = evaluate_point(6, 0.0, 0.01, CostModel::inverse_norm);
  CHECK(rec.status == "ok");
  CHECK(*rec.k_bi == 0);
  CHECK(*rec.cost_bi == 5.0);
  CHECK(*rec.k_multi == 0);
  CHECK(*rec.cost_multi == 1.0);
  CHECK(*rec.log2_ratio == doctest::Approx(std::log2(5.0)).epsilon(1e-15));
}

TEST_CASE("log2_ratio is exactly the log of the cost quotient") {
  const ComparisonRecord rec = evaluate_point(10, 0.2, 0.01, CostModel::inverse_norm);
  REQUIRE(rec.status == "ok");
  CHECK(std::abs(*rec.log2_ratio - std::log2(*rec.cost_bi / *rec.cost_multi)) <= 1e-12);
}

TEST_CASE("cost model switch doubles k = 1 multipartite cost") {
  const ComparisonRecord paper = evaluate_point(10, 0.5, 0.01, CostModel::inverse_norm);
  const ComparisonRecord expected = evaluate_point(10, 0.5, 0.01, CostModel::expected_tree);
  REQUIRE(*paper.k_multi == 1);
  CHECK(*expected.cost_multi == doctest::Approx(2.0 * *paper.cost_multi).epsilon(1e-14));
}

TEST_CASE("infeasible cells carry markers, never numbers") {
  // bipartite dies below the 1/3 fixed point; at n = 10 that is delta ~ 0.666
  const ComparisonRecord rec = evaluate_point(10, 0.8, 0.01, CostModel::inverse_norm);
  CHECK_FALSE(rec.k_bi.has_value());
  CHECK_FALSE(rec.cost_bi.has_value());
  CHECK_FALSE(rec.log2_ratio.has_value());
  CHECK(rec.status.find("bi:unreachable") != std::string::npos);

  // small n at delta = 0.2 cannot reach 0.99: diagonal noise survives
  const ComparisonRecord small = evaluate_point(3, 0.2, 0.01, CostModel::inverse_norm);
  CHECK_FALSE(small.cost_multi.has_value());
  CHECK(small.status.find("multi:cap_exceeded") != std::string::npos);
  CHECK(small.k_bi.has_value());
}

TEST_CASE("figure-one sweep: defaults, statuses, monotone feasible suffix") {
  NSweepSpec spec;
  const auto rows = run_compare(spec);
  REQUIRE(rows.size() == 18);
  bool seen_feasible = false;
  double prev = 0.0;
  for (const auto& row : rows) {
    if (row.log2_ratio) {
      if (seen_feasible) {
        CHECK(*row.log2_ratio > prev);
      }
      prev = *row.log2_ratio;
      seen_feasible = true;
    } else {
      CHECK_FALSE(seen_feasible);  // infeasible cells only at the small-n head
      CHECK(row.status != "ok");
    }
  }
  CHECK(seen_feasible);
  CHECK(prev > std::log2(1e6));
}

TEST_CASE("figure-two sweep: bipartite feasibility ends at q0 = 1/3") {
  DeltaSweepSpec spec;
  const auto rows = run_compare(spec);
  REQUIRE(rows.size() == 30);
  for (const auto& row : rows) {
    const double q0 = noise_from_delta(10, row.delta).q;
    if (q0 <= 1.0 / 3.0) {
      CHECK_FALSE(row.cost_bi.has_value());
      CHECK(row.status.find("bi:") != std::string::npos);
    }
    // no silent gaps: a row without numbers always explains itself
    if (!row.cost_bi || !row.cost_multi) {
      CHECK(row.status != "ok");
    }
  }
  CHECK(rows.front().status == "ok");
}

TEST_CASE("n-sweep regression baseline rows stay pinned") {
  // frozen from this artifact's own deterministic sweep (delta = 0.2,
  // epsilon = 0.01, inverse-norm cost model)
  NSweepSpec spec;
  const auto rows = run_compare(spec);
  const auto& r10 = rows[7];
  REQUIRE(r10.n == 10);
  CHECK(*r10.k_bi == 14);
  CHECK(*r10.cost_bi == doctest::Approx(3540050619.7618222).epsilon(1e-12));
  CHECK(*r10.k_multi == 1);
  CHECK(*r10.cost_multi == doctest::Approx(3.1230921390203923).epsilon(1e-12));
  CHECK(*r10.log2_ratio == doctest::Approx(30.078147710679687).epsilon(1e-12));

  const auto& r20 = rows[17];
  REQUIRE(r20.n == 20);
  CHECK(*r20.k_bi == 16);
  CHECK(*r20.cost_bi == doctest::Approx(119635960145.1658).epsilon(1e-12));
  CHECK(*r20.log2_ratio == doctest::Approx(35.156004813514215).epsilon(1e-12));

  const auto& r6 = rows[3];
  REQUIRE(r6.n == 6);
  CHECK(*r6.k_multi == 1);
  CHECK(*r6.cost_multi == doctest::Approx(3.0943508022390969).epsilon(1e-12));
}

TEST_CASE("csv output is deterministic and schema-stable") {
  NSweepSpec spec;
  const std::string a = to_csv(run_compare(spec));
  const std::string b = to_csv(run_compare(spec));
  CHECK(a == b);
  CHECK(a.rfind("n,delta,epsilon,k_bi,cost_bi,k_multi,cost_multi,log2_ratio,status\n",
                0) == 0);

  DeltaSweepSpec f2;
  const std::string c = to_csv(run_compare(f2));
  const std::string d = to_csv(run_compare(f2));
  CHECK(c == d);
}

TEST_CASE("json output carries nulls for infeasible cells") {
  NSweepSpec spec;
  spec.n_min = 3;
  spec.n_max = 6;
  const std::string body = to_json(run_compare(spec));
  CHECK(body.find("\"k_multi\": null") != std::string::npos);
  CHECK(body.find("\"status\": \"ok\"") != std::string::npos);
}

TEST_CASE("threshold table rows") {
  const auto rows = threshold_table(3, 5, 1e-10);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].closed_form == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rows[1].closed_form == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  for (const auto& row : rows) {
    CHECK(row.abs_diff <= 1e-9);
  }
}

TEST_CASE("trajectory dumps") {
  const auto bi = bipartite_trajectory(3, 0.8, 3);
  REQUIRE(bi.size() == 4);
  CHECK(bi[0].q == 0.8);
  CHECK_FALSE(bi[0].p_success.has_value());
  CHECK(bi[1].q == doctest::Approx(4.16 / 4.92).epsilon(1e-14));
  CHECK(*bi[1].p_success == doctest::Approx(0.45).epsilon(1e-14));

  const auto multi = multipartite_trajectory(10, 0.8, 2);
  REQUIRE(multi.size() == 3);
  CHECK(multi[0].trace == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(multi[1].trace ==
        doctest::Approx(*multi[1].p_success).epsilon(1e-13));

  // serialization smoke: headers and determinism
  CHECK(to_csv(bi).rfind("round,q,p_success,cost_factor,teleport_fidelity\n", 0) == 0);
  CHECK(to_csv(multi).rfind("round,q,r,s,trace,fidelity,p_success\n", 0) == 0);
  CHECK(to_csv(multi) == to_csv(multipartite_trajectory(10, 0.8, 2)));
}

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK_THROWS(format_double(std::nan("")));
}
