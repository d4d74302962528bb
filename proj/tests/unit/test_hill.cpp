#include <gtest/gtest.h>

#include <random>

#include "jetgeo/error.hpp"
#include "jetgeo/hill/hill.hpp"
#include "jetgeo/poly/seagull.hpp"
#include "jetgeo/registry.hpp"
#include "oracles.hpp"

using namespace jetgeo;

namespace {
const Polynomial kCubic{0.0, -1.5, 0.0, 0.5};
const Polynomial kWell{-1.0, 0.0, 2.0};
const Polynomial kSquare{0.0, 0.0, 1.0};

std::vector<std::pair<double, int>> summary(const std::vector<RootInfo>& r) {
  std::vector<std::pair<double, int>> out;
  for (const auto& x : r) out.emplace_back(x.value, x.multiplicity);
  return out;
}
}  // namespace

TEST(RealRoots, Examples) {
  auto r = real_roots(Polynomial{1.0, 0.0, 0.0, 0.0, -1.0}, -2.0, 2.0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value, -1.0, 1e-13);
  EXPECT_NEAR(r[1].value, 1.0, 1e-13);
  EXPECT_EQ(r[0].multiplicity, 1);
  EXPECT_EQ(r[1].multiplicity, 1);

  r = real_roots(Polynomial{0.0, 0.0, 4.0, 0.0, -4.0}, -2.0, 2.0);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0].value, -1.0, 1e-13);
  EXPECT_NEAR(r[1].value, 0.0, 1e-13);
  EXPECT_NEAR(r[2].value, 1.0, 1e-13);
  EXPECT_EQ(r[1].multiplicity, 2);
  EXPECT_EQ(r[0].multiplicity, 1);

  EXPECT_TRUE(real_roots(Polynomial{1.0, 0.0, 1.0}, -10.0, 10.0).empty());
}

TEST(RealRoots, BracketsContainValues) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 12));
    for (const auto& r : real_roots(p, -5.0, 5.0)) {
      EXPECT_LE(r.bracket_lo, r.value);
      EXPECT_GE(r.bracket_hi, r.value);
    }
  }
}

TEST(RealRoots, AgreesWithSignChangeOracle) {
  // Products of distinct linear factors: every root is simple and well separated.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<double> rs;
    Polynomial p = Polynomial::constant(1.0);
    while (static_cast<int>(rs.size()) < n) {
      const double r = u(rng);
      bool far = true;
      for (double s : rs) far = far && std::abs(s - r) > 0.05;
      if (!far) continue;
      rs.push_back(r);
      p = p * Polynomial{-r, 1.0};
    }
    std::sort(rs.begin(), rs.end());
    const auto found = real_roots(p, -5.0, 5.0);
    const auto bis = oracle::sign_change_roots([&](double x) { return p(x); }, -5.0, 5.0, 100000);
    ASSERT_EQ(found.size(), rs.size());
    ASSERT_EQ(bis.size(), rs.size());
    for (std::size_t j = 0; j < rs.size(); ++j) {
      EXPECT_NEAR(found[j].value, rs[j], 1e-9);
      EXPECT_NEAR(found[j].value, bis[j], 1e-9);
    }
  }
}

TEST(RealRoots, DoubleRootsTagged) {
  // (x - 0.3)^2 (x + 1.2)
  const Polynomial p = Polynomial{-0.3, 1.0} * Polynomial{-0.3, 1.0} * Polynomial{1.2, 1.0};
  const auto r = summary(real_roots(p, -3.0, 3.0));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].first, -1.2, 1e-12);
  EXPECT_EQ(r[0].second, 1);
  EXPECT_NEAR(r[1].first, 0.3, 1e-9);
  EXPECT_EQ(r[1].second, 2);
}

TEST(RealRoots, Preconditions) {
  EXPECT_THROW(real_roots(Polynomial{}, -1.0, 1.0), DomainError);
  EXPECT_THROW(real_roots(kSquare, 1.0, 1.0), DomainError);
}

TEST(Hill, IntervalExamples) {
  auto h = hill_intervals(kSquare);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_NEAR(h[0].lo, -1.0, 1e-12);
  EXPECT_NEAR(h[0].hi, 1.0, 1e-12);
  EXPECT_FALSE(h[0].lo_critical);
  EXPECT_FALSE(h[0].hi_critical);

  h = hill_intervals(kWell);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_NEAR(h[0].lo, -1.0, 1e-12);
  EXPECT_NEAR(h[0].hi, 0.0, 1e-12);
  EXPECT_NEAR(h[1].lo, 0.0, 1e-12);
  EXPECT_NEAR(h[1].hi, 1.0, 1e-12);
  EXPECT_TRUE(h[0].hi_critical);
  EXPECT_TRUE(h[1].lo_critical);
  EXPECT_FALSE(h[0].lo_critical);
  EXPECT_FALSE(h[1].hi_critical);

  h = hill_intervals(kCubic);
  ASSERT_EQ(h.size(), 3u);
  const double expect[3][2] = {{-2, -1}, {-1, 1}, {1, 2}};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(h[i].lo, expect[i][0], 1e-8);
    EXPECT_NEAR(h[i].hi, expect[i][1], 1e-8);
  }
  EXPECT_TRUE(h[1].lo_critical);
  EXPECT_TRUE(h[1].hi_critical);
  EXPECT_DOUBLE_EQ(h[1].G_lo, 1.0);
  EXPECT_DOUBLE_EQ(h[1].G_hi, -1.0);
}

TEST(Hill, Classification) {
  EXPECT_EQ(classify(kSquare, hill_intervals(kSquare)[0]), GeodesicClass::Periodic);
  for (const auto& I : hill_intervals(kWell)) EXPECT_EQ(classify(kWell, I), GeodesicClass::Homoclinic);
  EXPECT_EQ(classify(kCubic, hill_intervals(kCubic)[1]), GeodesicClass::HeteroclinicTurnback);
  const auto F0 = seagull_F0();
  const auto h = hill_intervals(F0);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_NEAR(h[1].lo, -1.0, 1e-9);
  EXPECT_NEAR(h[1].hi, 1.0, 1e-9);
  EXPECT_EQ(classify(F0, h[1]), GeodesicClass::HeteroclinicDirect);
  EXPECT_EQ(classify(F0, h[0]), GeodesicClass::Homoclinic);
  EXPECT_EQ(classify(Polynomial::constant(0.3), HillInterval{}), GeodesicClass::Line);
  EXPECT_EQ(to_string(GeodesicClass::HeteroclinicTurnback), "HeteroclinicTurnback");
}

TEST(Hill, InteriorScanAndSplitting) {
  for (const auto& e : example_registry()) {
    if (e.F.degree() < 1) continue;
    std::vector<HillInterval> hs;
    try {
      hs = hill_intervals(e.F);
    } catch (const UnboundedHillError&) {
      continue;
    }
    for (const auto& I : hs) {
      for (int i = 1; i < 1000; ++i) {
        const double x = I.lo + (I.hi - I.lo) * i / 1000.0;
        EXPECT_LT(e.F(x) * e.F(x), 1.0 + 1e-10) << e.name << " x=" << x;
      }
      EXPECT_NEAR(std::abs(e.F(I.lo)), 1.0, 1e-9) << e.name;
      EXPECT_NEAR(std::abs(e.F(I.hi)), 1.0, 1e-9) << e.name;
      const Polynomial q = 1.0 - e.F * e.F;
      // A root of multiplicity m is only located to about eps^(1/m).
      auto margin = [&](int mult) { return std::max(1e-7, 10.0 * std::pow(1e-16, 1.0 / mult)) * (I.hi - I.lo); };
      EXPECT_TRUE(real_roots(q, I.lo + margin(I.lo_multiplicity), I.hi - margin(I.hi_multiplicity)).empty()) << e.name;
    }
  }
}

TEST(Hill, EvenSymmetry) {
  for (const auto& e : example_registry()) {
    if (e.F.degree() < 1 || !(e.F == Polynomial(e.F).shifted(0.0))) continue;
    bool even = true;
    for (std::size_t i = 1; i < e.F.coeffs().size(); i += 2) even = even && e.F.coeff(i) == 0.0;
    if (!even) continue;
    const auto h = hill_intervals(e.F);
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& m = h[h.size() - 1 - i];
      EXPECT_NEAR(h[i].lo, -m.hi, 1e-9) << e.name;
      EXPECT_NEAR(h[i].hi, -m.lo, 1e-9) << e.name;
      EXPECT_EQ(h[i].lo_critical, m.hi_critical) << e.name;
    }
  }
}

TEST(Hill, ClassifyStableUnderToleranceChange) {
  for (const auto& e : example_registry()) {
    if (e.F.degree() < 1) continue;
    std::vector<std::string> tags[3];
    const double scales[3] = {1.0, 10.0, 0.1};
    for (int s = 0; s < 3; ++s) {
      HillOptions o;
      o.roots.zero_tol *= scales[s];
      try {
        for (const auto& I : hill_intervals(e.F, o)) tags[s].emplace_back(to_string(classify(e.F, I)));
      } catch (const UnboundedHillError&) {
        tags[s].push_back("unbounded");
      }
    }
    EXPECT_EQ(tags[0], tags[1]) << e.name;
    EXPECT_EQ(tags[0], tags[2]) << e.name;
  }
}

TEST(Hill, Errors) {
  EXPECT_THROW(hill_intervals(Polynomial::constant(0.5)), DomainError);
  // 1/(x^2+1)-like tails cannot happen for polynomials, but an odd G leaves [-1,1] on both
  // sides, while G = x^2 + 2 never enters it.
  EXPECT_TRUE(hill_intervals(Polynomial{2.0, 0.0, 1.0}).empty());
}

TEST(Hill, EndpointU) {
  EXPECT_NEAR(hill_endpoint_u(seagull_F0(), {0.0, 1.0}, -1), oracle::kSqrt3, 1e-10);
  EXPECT_NEAR(hill_endpoint_u(Polynomial{0.0, 1.0}, {0.0, 1.0}, 1), 1.0, 1e-12);
  EXPECT_THROW(hill_endpoint_u(Polynomial{0.0, 1.0}, {0.0, 1.0}, 1, 0.5), NoSolutionError);
  // Leg 3 with mu -> 0: u decreases toward sqrt 3 from above.
  const Polynomial F0 = seagull_F0();
  double prev = 1e9;
  for (double mu : {0.2, 0.1, 0.01, 0.001}) {
    const PencilPoint pt{mu, 1.0 - mu};
    const double u = hill_endpoint_u(F0, pt, -1);
    EXPECT_GT(u, oracle::kSqrt3);
    EXPECT_LT(u, prev);
    prev = u;
  }
  EXPECT_LT(prev - oracle::kSqrt3, 1e-2);
}

TEST(Hill, FirstPositiveEndpoint) {
  const auto e = first_positive_endpoint(Polynomial{0.0, 0.0, 1.0});
  EXPECT_NEAR(e.u, 1.0, 1e-12);
  EXPECT_NEAR(e.G_u, 1.0, 1e-12);
  // F0 touches 1 at x = 1; skipping the touch gives sqrt 3.
  EXPECT_NEAR(first_positive_endpoint(seagull_F0()).u, oracle::kSqrt3, 1e-10);
  EXPECT_NEAR(first_positive_endpoint(seagull_F0(), false).u, 1.0, 1e-7);
}
