#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "lmcat/rootfind.hpp"
#include "oracles.hpp"

using namespace lmcat;
constexpr double kPi = std::numbers::pi;

TEST(ScanBrackets, Examples) {
  auto sq = [](double x) { return x * x - 1; };
  const auto b = scan_brackets(sq, 0.0, 2.0, 9);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_LE(b[0].lo, 1.0);
  EXPECT_GE(b[0].hi, 1.0);

  auto g = [](double x) { return std::cos(2 * x) - x; };
  EXPECT_EQ(oracle::dense_sign_changes(g, 0, 1), 1);
  EXPECT_EQ(scan_brackets(g, 0.0, 1.0, 64).size(), 1u);

  EXPECT_TRUE(scan_brackets([](double x) { return 1 + x * x; }, -1.0, 1.0, 16).empty());
}

TEST(ScanBrackets, NonFiniteReportsAbscissa) {
  try {
    scan_brackets([](double x) { return 1.0 / x; }, 0.0, 1.0, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Evaluation);
    EXPECT_NE(std::string(e.what()).find("x = 0"), std::string::npos) << e.what();
  }
}

TEST(Bisect, Examples) {
  auto f = [](double x) { return x - 0.5; };
  EXPECT_DOUBLE_EQ(bisect(f, Bracket{0, 1, -0.5, 0.5}, 1e-15).x, 0.5);
  auto c = [](double x) { return x * x * x; };
  const RootResult r = bisect(c, Bracket{-1, 2, -1, 8}, 1e-12);
  EXPECT_NEAR(r.x, 0.0, 1e-12);
  EXPECT_LE(r.iterations, kMaxBisectIterations);
}

TEST(RefineRoot, StaysInsideBracketAndConverges) {
  auto f = [](double x) { return std::cos(6.5 * x) - x; };
  auto df = [](double x) { return -6.5 * std::sin(6.5 * x) - 1; };
  for (const auto& b : scan_brackets(f, 0.0, 1.1, 200)) {
    const RootResult r = refine_root(f, df, b);
    EXPECT_GE(r.x, b.lo);
    EXPECT_LE(r.x, b.hi);
    EXPECT_LT(std::abs(f(r.x)), 1e-14);
  }
}

TEST(SolveMonotone, Examples) {
  auto g = [](double a) { return std::sinh(a * 1.0) / a; };
  const MonotoneSolve yes = solve_monotone(g, 2.0, 1.0);
  ASSERT_TRUE(yes);
  const double ref = oracle::bisection([](double a) { return std::sinh(a) / a - 2; }, 0.1, 5);
  EXPECT_NEAR(yes.root->x, ref, 1e-12);
  EXPECT_NEAR(ref, 2.17731898, 1e-8);

  const MonotoneSolve no = solve_monotone(g, 0.5, 1.0);
  EXPECT_FALSE(no);
  EXPECT_FALSE(no.diagnostic.empty());

  const MonotoneSolve lin = solve_monotone([](double a) { return a; }, 7.0, 1.0);
  ASSERT_TRUE(lin);
  EXPECT_NEAR(lin.root->x, 7.0, 1e-14);
}

TEST(CountRoots, Examples) {
  CountConfig cfg;
  for (auto [h, expected] : {std::pair{6.0, 1}, std::pair{6.5, 3}}) {
    auto g = [h](double a) { return std::cos(h * a) - a; };
    auto dg = [h](double a) { return -h * std::sin(h * a) - 1; };
    EXPECT_EQ(oracle::dense_sign_changes(g, 1e-12, 1.1), expected);
    EXPECT_EQ(static_cast<int>(count_roots(g, dg, 0.0, 1.1, cfg).size()), expected) << h;
  }
  auto sq = [](double x) { return x * x; };
  auto dsq = [](double x) { return 2 * x; };
  const auto r = count_roots(sq, dsq, -1.0, 1.0, cfg);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].multiplicity, Multiplicity::Tangential);
  EXPECT_NEAR(r[0].x, 0.0, 1e-9);
}

TEST(CountRoots, NearTangentPairMerges) {
  // (x - 0.3)^2 - 1e-14: two roots 1e-7 apart with an extremum value of -1e-14.
  auto f = [](double x) { return (x - 0.3) * (x - 0.3) - 1e-14; };
  auto df = [](double x) { return 2 * (x - 0.3); };
  const auto r = count_roots(f, df, 0.0, 1.0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].multiplicity, Multiplicity::Tangential);
  // Well-separated pair stays two simple roots.
  auto f2 = [](double x) { return (x - 0.3) * (x - 0.3) - 1e-4; };
  auto df2 = [](double x) { return 2 * (x - 0.3); };
  const auto r2 = count_roots(f2, df2, 0.0, 1.0);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0].multiplicity, Multiplicity::Simple);
}

TEST(CountRoots, Deterministic) {
  auto g = [](double a) { return std::sin(17.3 * a) - a; };
  auto dg = [](double a) { return 17.3 * std::cos(17.3 * a) - 1; };
  const auto r1 = count_roots(g, dg, 0.0, 1.0), r2 = count_roots(g, dg, 0.0, 1.0);
  ASSERT_EQ(r1.size(), r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) EXPECT_EQ(r1[i].x, r2[i].x);
}

// Randomized oracle equivalence against a 10^6-point sign scan.
TEST(CountRoots, MatchesDenseOracle) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> H(0.05, 30.0);
  int compared = 0;
  for (int k = 0; k < 30; ++k) {
    const double h = H(rng);
    for (auto kind : {PeriodicFamily::Cos, PeriodicFamily::Sin}) {
      const PeriodicTarget g{h, kind};
      const auto pts = oracle::dense_sign_change_points(g, 1e-9, 1.0);
      bool separated = true;
      for (std::size_t i = 1; i < pts.size(); ++i) separated &= pts[i] - pts[i - 1] >= 1e-4;
      if (!separated) continue;
      CountConfig cfg;
      cfg.step = std::min(1e-3, (2 * kPi / h) / 64);
      auto roots = count_roots(g, [&](double a) { return g.derivative(a); }, 0.0, 1.0, cfg);
      std::erase_if(roots, [](const RootResult& r) { return !(r.x > 1e-9); });
      EXPECT_EQ(roots.size(), pts.size()) << "h=" << h;
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(PeriodicExtrema, ClosedFormValues) {
  const auto e = periodic_extrema(6.5, PeriodicFamily::Cos, 3);
  const double m0 = oracle::bisection([](double a) { return std::sin(6.5 * a) + 1 / 6.5; }, kPi / 6.5, 1.5 * kPi / 6.5);
  EXPECT_NEAR(e.m0, m0, 1e-14);
  const PeriodicTarget g{6.5, PeriodicFamily::Cos};
  EXPECT_NEAR(e.max_values[1], g(e.maxima[1]), 1e-12);
  EXPECT_NEAR(e.max_values[1], 0.04521, 1e-4);
  EXPECT_GT(e.max_values[1], 0);
  // the extrema are stationary points
  for (int k = 0; k <= 3; ++k) {
    EXPECT_NEAR(g.derivative(e.minima[k]), 0, 1e-12);
    EXPECT_NEAR(g.derivative(e.maxima[k]), 0, 1e-12);
  }
  const auto e2 = periodic_extrema(2.0, PeriodicFamily::Cos, 1);
  EXPECT_LT(e2.max_values[1], 0);
  EXPECT_NEAR(e2.max_values[1], -2.0138, 1e-4);
  EXPECT_THROW(periodic_extrema(1.0, PeriodicFamily::Cos, 1), Error);
}

TEST(PeriodicExtrema, ScheduleIdentityExact) {
  const PeriodicTarget g{4.3, PeriodicFamily::Cos};
  const auto e = periodic_extrema(4.3, PeriodicFamily::Cos, 4);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_NEAR(g(e.minima[k]), g(e.m0) - 2 * k * kPi / 4.3, 1e-12);
    EXPECT_NEAR(e.min_values[k], g(e.minima[k]), 1e-12);
  }
  const PeriodicTarget G{4.3, PeriodicFamily::Sin};
  const auto es = periodic_extrema(4.3, PeriodicFamily::Sin, 2);
  for (int k = 0; k <= 2; ++k) {
    EXPECT_NEAR(es.max_values[k], G(es.maxima[k]), 1e-12);
    EXPECT_NEAR(G.derivative(es.maxima[k]), 0, 1e-12);
  }
}

TEST(PeriodicTarget, ShiftIdentitiesRandomized) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> H(0.5, 30), A(-1, 1);
  std::uniform_int_distribution<int> K(-5, 5);
  for (int i = 0; i < 500; ++i) {
    const double h = H(rng), a = A(rng);
    const int k = K(rng);
    const PeriodicTarget g{h, PeriodicFamily::Cos}, G{h, PeriodicFamily::Sin};
    EXPECT_NEAR(g(a + 2 * k * kPi / h), g(a) - 2 * k * kPi / h, 1e-12 * (1 + std::abs(k)));
    EXPECT_NEAR(G(a + kPi / (2 * h)), g(a) - kPi / (2 * h), 1e-12);
  }
}

TEST(SolveTangency, CosFamily) {
  auto F = [](double a, double h) { return std::cos(a * h) - a; };
  auto dF = [](double a, double h) { return -h * std::sin(a * h) - 1; };
  auto br = [](double h) { return std::pair{1.5 * kPi / h, 2 * kPi / h}; };
  const TangencyResult t = solve_tangency(F, dF, br, 2.0, 10.0);
  EXPECT_NEAR(t.lambda, 6.202, 5e-3);
  EXPECT_NEAR(t.lambda, 6.202395286, 1e-8);
  EXPECT_LT(std::abs(F(t.x, t.lambda)), 1e-10);
  EXPECT_LT(std::abs(dF(t.x, t.lambda)), 1e-8);
}

TEST(SolveTangency, SinFamily) {
  auto F = [](double a, double h) { return std::sin(a * h) - a; };
  auto dF = [](double a, double h) { return h * std::cos(a * h) - 1; };
  auto br = [](double h) { return std::pair{2 * kPi / h, 2.5 * kPi / h}; };
  const TangencyResult t = solve_tangency(F, dF, br, 2.0, 10.0);
  EXPECT_NEAR(t.lambda, 7.790, 5e-3);
  EXPECT_NEAR(t.lambda, 7.789705767, 1e-8);
  EXPECT_LT(std::abs(t.value), 1e-10);
  EXPECT_LT(std::abs(t.slope), 1e-8);
}

TEST(SolveTangency, CatenaryMinimum) {
  auto F = [](double u, double lam) { return std::cosh(u) / u - lam; };
  auto dF = [](double u, double) { return (u * std::sinh(u) - std::cosh(u)) / (u * u); };
  const TangencyResult t = solve_tangency(F, dF, [](double) { return std::pair{1.0, 2.0}; }, 1.0, 2.0);
  const double u_ref = oracle::bisection([](double u) { return u * std::tanh(u) - 1; }, 1, 2);
  EXPECT_NEAR(t.x, u_ref, 1e-12);
  EXPECT_NEAR(u_ref, 1.19968, 1e-5);
}

TEST(SolveTangency, NoSignChangeThrows) {
  auto F = [](double a, double h) { return std::cos(a * h) - a; };
  auto dF = [](double a, double h) { return -h * std::sin(a * h) - 1; };
  auto br = [](double h) { return std::pair{1.5 * kPi / h, 2 * kPi / h}; };
  try {
    solve_tangency(F, dF, br, 2.0, 5.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSignChange);
  }
}
