#include <gtest/gtest.h>

#include "jetgeo/error.hpp"
#include "jetgeo/poly/seagull.hpp"
#include "oracles.hpp"

using namespace jetgeo;

namespace {
// t = x^2 / 3 as a polynomial in x
Polynomial t_poly() { return Polynomial{0.0, 0.0, 1.0 / 3.0}; }
}  // namespace

TEST(Seagull, ExtremeMembersMatchClosedForms) {
  const Polynomial F0 = build_specific_seagull(scaled_power(14));
  const Polynomial F1 = build_specific_seagull(Polynomial::constant(1.0));
  EXPECT_EQ(F0, seagull_F0());
  EXPECT_EQ(F1, seagull_F1());
  for (double x = -4.0; x <= 4.0; x += 0.01) {
    EXPECT_NEAR(F0(x), oracle::F0(x), 1e-12 * std::max(1.0, std::abs(oracle::F0(x))));
    EXPECT_NEAR(F1(x), oracle::F1(x), 1e-12 * std::max(1.0, std::abs(oracle::F1(x))));
  }
  EXPECT_EQ(F0.degree(), 18);
}

TEST(Seagull, NormalizationAtOneAndSqrt3) {
  for (const Polynomial& P : {scaled_power(14), Polynomial::constant(1.0), scaled_power(2), scaled_power(12)}) {
    const Polynomial F = build_specific_seagull(P);
    EXPECT_NEAR(F(1.0), 1.0, 1e-12);
    EXPECT_NEAR(F(-1.0), 1.0, 1e-12);
    EXPECT_NEAR(F(oracle::kSqrt3), -1.0, 1e-12);
    EXPECT_NEAR(F(-oracle::kSqrt3), -1.0, 1e-12);
  }
}

TEST(Seagull, ClassConditionsDetected) {
  EXPECT_TRUE(check_specific_class(scaled_power(2)).ok());
  // P(sqrt3) != 1
  EXPECT_EQ(check_specific_class(Polynomial::constant(1.1)).failed, SpecificClassCondition::PeakNormalization);
  // 2t - 1 drops below t^7 near t = 1/2
  EXPECT_EQ(check_specific_class(2.0 * t_poly() - 1.0).failed, SpecificClassCondition::InnerBand);
  // 2 - t exceeds 1 inside and drops below 1 outside
  EXPECT_FALSE(check_specific_class(2.0 - t_poly()).ok());
  // 1 - (t-1)^2/2 drops below 1 outside
  const Polynomial d = t_poly() - 1.0;
  EXPECT_EQ(check_specific_class(1.0 - 0.5 * d * d).failed, SpecificClassCondition::OuterBand);
  EXPECT_EQ(check_specific_class(scaled_power(16)).failed, SpecificClassCondition::Degree);
}

TEST(Seagull, ValidatedConstructorNamesTheFailure) {
  try {
    build_specific_seagull(2.0 * t_poly() - 1.0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("inner band"), std::string::npos) << e.what();
  }
}

TEST(Seagull, ClassCheckAgreesWithBruteForceGrid) {
  // Direct sampling of the three conditions at 20001 points on [-6, 6].
  auto brute = [](const Polynomial& P) {
    const Polynomial dP = P.derivative();
    for (int i = 0; i <= 20000; ++i) {
      const double x = -6.0 + 12.0 * i / 20000;
      const double s = std::abs(x) / oracle::kSqrt3, p = P(x), tol = 1e-9 * std::max(1.0, std::pow(s, 14));
      if (std::abs(x) <= oracle::kSqrt3) {
        if (std::abs(p) > 1.0 + tol || std::abs(p) < std::pow(s, 14) - tol) return false;
      } else {
        if (p < 1.0 - tol || p > std::pow(s, 14) + tol) return false;
        if (std::abs(dP(x)) > 14.0 / oracle::kSqrt3 * std::pow(s, 13) + tol) return false;
      }
    }
    return true;
  };
  const Polynomial t = t_poly();
  for (const Polynomial& P : {scaled_power(14), Polynomial::constant(1.0), scaled_power(2), scaled_power(12),
                              0.5 * (scaled_power(14) + scaled_power(2)), 2.0 * t - 1.0, 2.0 - t}) {
    EXPECT_EQ(check_specific_class(P).ok(), brute(P)) << to_text(P);
  }
}

TEST(Seagull, RecoverP) {
  const auto P = recover_seagull_P(seagull_F0());
  ASSERT_TRUE(P.has_value());
  const Polynomial ref = scaled_power(14);
  for (std::size_t i = 0; i <= 14; ++i) EXPECT_NEAR(P->coeff(i), ref.coeff(i), 1e-12);
  EXPECT_FALSE(recover_seagull_P(Polynomial{0.0, 0.0, 1.0}).has_value());
}

TEST(Seagull, ShapeReport) {
  const SeagullReport r = is_seagull(seagull_F0());
  EXPECT_TRUE(r.passes);
  EXPECT_NEAR(r.a_peak, 1.0, 1e-9);
  EXPECT_NEAR(r.max_value, 1.0, 1e-12);
  EXPECT_EQ(r.critical_points.size(), 3u);
  EXPECT_TRUE(is_seagull(seagull_F1()).passes);
  EXPECT_TRUE(is_seagull(build_specific_seagull(scaled_power(2))).passes);
  EXPECT_FALSE(is_seagull(Polynomial{0.0, 0.0, 1.0}).passes);
  const SeagullReport q = is_seagull(Polynomial{1.0, 0.0, -2.0});
  EXPECT_FALSE(q.passes);
  EXPECT_TRUE(q.is_even);
  EXPECT_DOUBLE_EQ(q.interior_value_F0, 1.0);
}
