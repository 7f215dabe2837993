#include <gtest/gtest.h>

#include <cmath>

#include "cube_spectra/lp_witness.hpp"
#include "oracles.hpp"

namespace cs = cube_spectra;
using cs::Point;

namespace {

cs::Code code(int n, std::vector<Point> pts) { return cs::Code(n, std::move(pts)); }

bool has_failure(const cs::PropositionReport& rep, const std::string& name) {
  return std::find(rep.failures.begin(), rep.failures.end(), name) != rep.failures.end();
}

}  // namespace

TEST(CoveringWitness, Examples) {
  const int n = 4;
  const cs::CubeFunction F0 = cs::build_covering_witness(code(n, {0}), cs::CubeFunction::delta(n, 0));
  for (std::size_t x = 0; x < F0.size(); ++x) EXPECT_DOUBLE_EQ(F0[static_cast<Point>(x)], x == 0 ? 1.0 / 16 : 0.0);

  const auto w = cs::lambda_for_radius_recurrence(n, 1);
  const cs::CubeFunction F = cs::build_covering_witness(code(n, {0b0000, 0b1111}), w);
  EXPECT_EQ(cs::support_size(F), 10u);
  for (double v : F.values()) EXPECT_GE(v, 0.0);

  const cs::CubeFunction f = w.lift();
  const double mean = cs::moments(f).mean;
  const auto whole = cs::build_covering_witness(cs::Code::whole_cube(n), f);
  for (double v : whole.values()) EXPECT_NEAR(v, mean, 1e-15);
  EXPECT_THROW(cs::build_covering_witness(code(3, {0}), f), std::invalid_argument);
}

TEST(CheckCovering, RepetitionCodeBall) {
  const auto rep = cs::check_covering(code(4, {0b0000, 0b1111}), 1);
  EXPECT_EQ(rep.d, 2);
  EXPECT_TRUE(rep.premise_ok);
  ASSERT_TRUE(rep.covered);
  EXPECT_EQ(*rep.covered, 10u);
  EXPECT_EQ(rep.bound_rhs, 4.0);
  EXPECT_EQ(rep.verdict, cs::Verdict::holds) << rep.to_json().dump();
}

TEST(CheckCovering, RepetitionCodeEdgeIsTight) {
  const auto rep = cs::check_covering(code(4, {0b0000, 0b1111}), cs::SubsetGraph(4, {0b0000, 0b0001}));
  EXPECT_NEAR(rep.lambda, 1.0, 1e-9);
  EXPECT_TRUE(rep.premise_ok);
  EXPECT_EQ(*rep.covered, 4u);
  EXPECT_EQ(rep.bound_rhs, 4.0);
  EXPECT_EQ(rep.verdict, cs::Verdict::holds) << rep.to_json().dump();
}

TEST(CheckCovering, WholeCube) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto rep = cs::check_covering(cs::Code::whole_cube(n), r);
      EXPECT_EQ(rep.d, n + 1);
      EXPECT_TRUE(rep.premise_ok);
      EXPECT_EQ(*rep.covered, cs::cube_size(n));
      EXPECT_EQ(rep.verdict, cs::Verdict::holds);
    }
  }
}

TEST(CheckCovering, PremiseUnmetIsReported) {
  // The length-6 repetition code has dual distance 2, so the premise needs
  // lambda >= 3; a single point has lambda 0.
  const auto rep = cs::check_covering(code(6, {0, 63}), 0);
  EXPECT_EQ(rep.d, 2);
  EXPECT_FALSE(rep.premise_ok);
  EXPECT_EQ(rep.verdict, cs::Verdict::premise_unmet);
  EXPECT_TRUE(rep.failures.empty());
}

TEST(Phi, Examples) {
  const cs::CubeFunction phi = cs::phi_from_code(code(2, {0b00, 0b11}));
  const double s = std::sqrt(2.0);
  const std::vector<double> expected{s, 0, 0, s};
  for (std::size_t x = 0; x < 4; ++x) EXPECT_NEAR(phi[static_cast<Point>(x)], expected[x], 1e-12);
  const auto m = cs::moments(phi);
  EXPECT_NEAR(m.second_moment / (m.mean * m.mean), 2.0, 1e-12);

  const auto single = cs::moments(cs::phi_from_code(code(5, {9})));
  EXPECT_NEAR(single.second_moment / (single.mean * single.mean), 1.0, 1e-12);
}

TEST(Phi, LinearCodesGiveMultipleOfDualIndicator) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      cs::for_each_linear_code(n, k, [&](const cs::LinearCode& c) {
        const cs::CubeFunction phi = cs::phi_from_code(c.expand());
        const cs::Code dual = cs::dual_code(c).expand();
        const double scale = phi[0];
        ASSERT_GT(scale, 0.0);
        for (std::size_t x = 0; x < phi.size(); ++x) {
          ASSERT_NEAR(phi[static_cast<Point>(x)], dual.contains(static_cast<Point>(x)) ? scale : 0.0, 1e-9 * scale);
        }
      });
    }
  }
}

TEST(Phi, RandomCodesCertificate) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    const cs::Code c(n, oracle::random_subset(n, rng));
    const cs::CubeFunction phi = cs::phi_from_code(c);
    const auto m = cs::moments(phi);
    EXPECT_NEAR(m.second_moment / (m.mean * m.mean), static_cast<double>(c.size()), 1e-9 * c.size());
    const auto pp = cs::convolve(phi, phi);
    for (double v : pp.values()) EXPECT_GE(v, -1e-12);
  }
}

TEST(CheckPropIneq, EvenWeightEdgeIsTight) {
  const auto rep = cs::check_prop_ineq(code(4, oracle::even_weight(4)), cs::SubsetGraph(4, {0b0000, 0b0001}));
  EXPECT_EQ(rep.d, 2);
  EXPECT_TRUE(rep.premise_ok);
  EXPECT_EQ(rep.bound_lhs, 8.0);
  EXPECT_EQ(rep.bound_rhs, 8.0);
  EXPECT_EQ(rep.verdict, cs::Verdict::holds) << rep.to_json().dump();
}

TEST(CheckPropIneq, RepetitionCodeSinglePoint) {
  for (int n = 2; n <= 8; ++n) {
    const auto rep = cs::check_prop_ineq(code(n, {0, (Point{1} << n) - 1}), 0);
    EXPECT_EQ(rep.d, n);
    EXPECT_TRUE(rep.premise_ok);
    EXPECT_LE(rep.bound_lhs, rep.bound_rhs);
    EXPECT_EQ(rep.verdict, cs::Verdict::holds) << rep.to_json().dump();
  }
}

TEST(CheckPropIneq, Hamming74) {
  const auto rep = cs::check_prop_ineq(code(7, oracle::hamming74()), 1);
  EXPECT_EQ(rep.d, 3);
  EXPECT_NEAR(rep.lambda, std::sqrt(7.0), 1e-9);
  EXPECT_TRUE(rep.premise_ok);
  EXPECT_EQ(rep.bound_lhs, 16.0);
  EXPECT_EQ(rep.bound_rhs, 56.0);
  EXPECT_EQ(rep.verdict, cs::Verdict::holds);
}

TEST(CheckPropIneq, ClaimedDistance) {
  const cs::PreparedCode prepared(code(7, oracle::hamming74()));
  const auto ball = cs::SpectralWitness::for_ball(7, 1);
  const auto rep = cs::check_prop_ineq(prepared, ball, {}, 2);
  EXPECT_EQ(rep.d, 2);
  EXPECT_EQ(rep.verdict, cs::Verdict::premise_unmet);  // needs lambda >= 4
  EXPECT_THROW(cs::check_prop_ineq(prepared, ball, {}, 4), std::invalid_argument);
}

// For 2d > n the size bound n|B| is false; the checks use 2d / (lambda - n + 2d).
TEST(LargeDistance, MultiplierReplacesN) {
  const auto whole = cs::check_prop_ineq(cs::Code::whole_cube(1), 0);
  EXPECT_EQ(whole.bound_lhs, 2.0);
  EXPECT_NEAR(whole.multiplier, 2.0, 1e-9);
  EXPECT_EQ(whole.verdict, cs::Verdict::holds) << whole.to_json().dump();

  const auto even3 = cs::check_prop_ineq(code(3, oracle::even_weight(3)), 0);
  EXPECT_EQ(even3.d, 2);
  EXPECT_EQ(even3.bound_lhs, 4.0);  // exceeds n |B| = 3
  EXPECT_NEAR(even3.bound_rhs, 4.0, 1e-9);
  EXPECT_EQ(even3.verdict, cs::Verdict::holds) << even3.to_json().dump();

  const auto point = cs::check_covering(code(1, {0}), 0);
  EXPECT_EQ(point.d, 1);
  EXPECT_EQ(*point.covered, 1u);  // below 2^n / n = 2
  EXPECT_NEAR(point.bound_rhs, 1.0, 1e-9);
  EXPECT_EQ(point.verdict, cs::Verdict::holds) << point.to_json().dump();

  EXPECT_EQ(cs::size_multiplier(8, 4, 0.5), 8.0);
  EXPECT_NEAR(cs::size_multiplier(8, 5, 0.0), 5.0, 1e-15);
  EXPECT_NEAR(cs::size_multiplier(8, 5, 1.0), 10.0 / 3.0, 1e-15);
}

TEST(FaultInjection, OverstatedLambdaIsCaught) {
  auto ball = cs::SpectralWitness::for_ball(4, 1);
  ball.witness_lambda = 3.5;
  ball.region_lambda = 3.5;
  const cs::PreparedCode even(code(4, oracle::even_weight(4)));
  const auto cover = cs::check_covering(even, ball);
  EXPECT_EQ(cover.verdict, cs::Verdict::violated);
  EXPECT_TRUE(has_failure(cover, "pointwise_AF_ge_lambda_F"));
  const auto size = cs::check_prop_ineq(even, ball);
  EXPECT_EQ(size.verdict, cs::Verdict::violated);
  EXPECT_TRUE(has_failure(size, "rayleigh_lower_bound"));
}

TEST(FaultInjection, WrongDualDistanceIsCaught) {
  // Pretend the repetition code has dual distance 3: the spectrum check fails.
  cs::PreparedCode rep(code(4, {0, 15}));
  rep.dual_distance = 3;
  const auto report = cs::check_covering(rep, cs::SpectralWitness::for_ball(4, 1));
  EXPECT_EQ(report.verdict, cs::Verdict::violated);
  EXPECT_TRUE(has_failure(report, "spectrum_vanishes_below_dual_distance"));
}

TEST(CoveredFraction, Examples) {
  EXPECT_DOUBLE_EQ(cs::covered_fraction(code(4, {0, 15}), 1), 0.625);
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 10;
    const cs::Code c(n, oracle::random_subset(n, rng));
    EXPECT_DOUBLE_EQ(cs::covered_fraction(c, 0), static_cast<double>(c.size()) / cs::cube_size(n));
    EXPECT_DOUBLE_EQ(cs::covered_fraction(c, n), 1.0);
    for (int r = 0; r <= n; ++r) {
      // Oracle: scan every point for a codeword within r.
      std::uint64_t count = 0;
      for (Point x = 0; x < (Point{1} << n); ++x) {
        bool hit = false;
        for (Point z : c.points()) hit = hit || oracle::weight(x ^ z) <= r;
        count += hit;
      }
      ASSERT_EQ(cs::covered_count(c, r), count) << n << "," << r;
    }
  }
}

TEST(CoveredFraction, LargeNBitsetSweep) {
  // Exercises the word-swap branch (bits >= 6) against the ball size.
  const int n = 20;
  EXPECT_EQ(cs::covered_count(code(n, {0}), 3), 1u + 20 + 190 + 1140);
  EXPECT_EQ(cs::covered_count(code(n, {0, (Point{1} << n) - 1}), 3), 2u * (1 + 20 + 190 + 1140));
}

TEST(EssentialCoveringRadius, SmallestRadiusCoveringFraction) {
  EXPECT_EQ(cs::essential_covering_radius(code(4, {0, 15})), 1);
  EXPECT_EQ(cs::essential_covering_radius(cs::Code::whole_cube(3)), 0);
  EXPECT_EQ(cs::essential_covering_radius(code(8, {0})), 2);  // |B(2)| = 37 >= 256 / 8
}

TEST(ReportJson, StableFieldNames) {
  const auto j = cs::check_covering(code(4, {0, 15}), 1).to_json();
  for (const char* key : {"proposition", "n", "d", "r", "lambda", "premise_ok", "ef2", "ef_sq", "covered", "bound_lhs",
                          "bound_rhs", "verdict"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "holds");
  EXPECT_EQ(j["proposition"], "dual_covering");
  EXPECT_TRUE(cs::check_prop_ineq(code(2, {0, 3}), cs::SubsetGraph(2, {0}), {}).to_json()["r"].is_null());
}

TEST(ExhaustiveVerify, SmallFamilies) {
  const auto s1 = cs::exhaustive_verify(1, cs::VerifyMode::all_linear);
  EXPECT_EQ(s1.codes, 1u);
  EXPECT_EQ(s1.violations, 0u);
  const auto s4 = cs::exhaustive_verify(4, cs::VerifyMode::all_linear);
  EXPECT_EQ(s4.codes, 15u + 35 + 15 + 1);
  EXPECT_EQ(s4.checks, s4.codes * 2 * 5);
  EXPECT_EQ(s4.holds + s4.premise_unmet, s4.checks);
  const auto s6 = cs::exhaustive_verify(6, cs::VerifyMode::random_general, 1000, 5);
  EXPECT_EQ(s6.codes, 1000u);
  EXPECT_EQ(s6.violations, 0u);
}

TEST(ExhaustiveVerify, ThreadCountDoesNotChangeSummary) {
  const auto a = cs::exhaustive_verify(8, cs::VerifyMode::random_general, 60, 3, 1);
  const auto b = cs::exhaustive_verify(8, cs::VerifyMode::random_general, 60, 3, 3);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(ExhaustiveVerify, Ranges) {
  EXPECT_THROW(cs::exhaustive_verify(8, cs::VerifyMode::all_linear), std::out_of_range);
  EXPECT_THROW(cs::exhaustive_verify(13, cs::VerifyMode::random_general, 1), std::out_of_range);
  EXPECT_THROW(cs::exhaustive_verify(0, cs::VerifyMode::all_linear), std::out_of_range);
}
