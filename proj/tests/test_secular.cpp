#include "deltashell/secular.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using ds::ShellConfig;

namespace {
constexpr double kKappa0 = 1.4107196860610394;   // root of -3 + k coth k + k
constexpr double kGamma1Prime0 = 0.7468517244889498;  // gamma1'(k0), R1=1
constexpr double kCConst = 1.5094811816938820;   // k0 sqrt(2/(1+gamma1'))
}  // namespace

TEST_CASE("gamma1 limits and anchor") {
  CHECK(ds::gamma1(1e-12, 1.0, -2.0) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(ds::gamma1(1.0, 1.0, 0.0) == doctest::Approx(1.3130352854993313).epsilon(1e-14));
  CHECK(ds::gamma1(700.0, 1.0, 0.0) == 700.0);
}

TEST_CASE("gamma1_prime matches finite differences and is positive") {
  for (double r1 : {0.5, 1.0, 3.0}) {
    for (double k : {0.05, 0.7, 2.0, 10.0}) {
      double h = 1e-6 * k;
      double fd = (ds::gamma1(k + h, r1, 0.0) - ds::gamma1(k - h, r1, 0.0)) / (2 * h);
      CHECK(ds::gamma1_prime(k, r1) == doctest::Approx(fd).epsilon(1e-7));
      CHECK(ds::gamma1_prime(k, r1) > 0.0);
    }
  }
}

TEST_CASE("repulsive shells give F_d > 0 everywhere") {
  ShellConfig cfg{{1.0, 2.0}, {0.0, 0.0}};
  for (double k = 0.01; k < 20.0; k *= 1.7) {
    CHECK(ds::secular_F(k, cfg) > 0.0);
  }
}

TEST_CASE("det M + kappa F_d = 0 on random samples") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ur(0.2, 4.0), ua(-8.0, 8.0), uk(0.05, 8.0);
  for (int i = 0; i < 10000; ++i) {
    double r1 = ur(rng);
    double d = ur(rng);
    double k = uk(rng);
    if (k * d > 30.0) continue;
    ShellConfig cfg{{r1, r1 + d}, {ua(rng), ua(rng)}};
    auto m = ds::matching_matrix(k, cfg);
    double det = m[0] * m[3] - m[1] * m[2];
    double f = ds::secular_F(k, cfg);
    double scale = std::max({std::abs(det), std::abs(k * f), 1e-30});
    CHECK(std::abs(det + k * f) / scale < 1e-11);
  }
}

TEST_CASE("split form identity 2 F_d = F_inf e^{kd} + G e^{-kd}") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ur(0.2, 4.0), ua(-8.0, 8.0), uk(0.05, 8.0);
  for (int i = 0; i < 10000; ++i) {
    double r1 = ur(rng);
    double d = ur(rng);
    double k = uk(rng);
    if (k * d > 30.0) continue;
    ShellConfig cfg{{r1, r1 + d}, {ua(rng), ua(rng)}};
    ds::SplitForm sf = ds::split_form(k, cfg);
    double lhs = 2.0 * ds::secular_F(k, cfg);
    double rhs = sf.f_inf * std::exp(k * d) + sf.g * std::exp(-k * d);
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    CHECK(std::abs(lhs - rhs) / scale < 1e-11);
  }
}

TEST_CASE("S(k) has the sign of F_d(k)") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ur(0.2, 3.0), ua(-6.0, 6.0), uk(0.05, 6.0);
  for (int i = 0; i < 2000; ++i) {
    double r1 = ur(rng);
    double d = ur(rng);
    double k = uk(rng);
    ShellConfig cfg{{r1, r1 + d}, {ua(rng), ua(rng)}};
    double s = ds::split_form(k, cfg).scaled();
    double f = ds::secular_F(k, cfg);
    if (std::abs(s) > 1e-12 && std::abs(f) > 1e-12) {
      CHECK((s < 0.0) == (f < 0.0));
    }
  }
}

TEST_CASE("matching matrix structure") {
  ShellConfig cfg{{1.0, 2.5}, {-1.0, -0.8}};
  double k = 0.4;  // alpha2 = -2k makes (alpha2 + k) = -k
  ShellConfig tuned{{1.0, 2.5}, {-1.0, -0.8}};
  auto m = ds::matching_matrix(k, tuned);
  double d = 1.5;
  CHECK(m[2] == doctest::Approx((-0.8 + k) * std::cosh(k * d) + k * std::sinh(k * d)));
  CHECK(m[1] == k);
  CHECK_THROWS_AS(ds::matching_matrix(500.0, cfg), ds::Error);  // cosh overflow
}

TEST_CASE("alpha2=0 reduces S to F_inf and the one-shell problem") {
  ShellConfig cfg{{1.0, 3.0}, {-3.0, 0.0}};
  ds::SplitForm sf = ds::split_form(1.0, cfg);
  CHECK(sf.g == 0.0);
  CHECK(sf.scaled() == sf.f_inf);
  CHECK(ds::large_d_correction(cfg, ds::RootSide::In) == 0.0);
}

TEST_CASE("one_shell_roots") {
  SUBCASE("threshold alpha1 = -1/R1 gives no inner root") {
    ShellConfig cfg{{1.0, 2.0}, {-1.0, 1.0}};
    auto r = ds::one_shell_roots(cfg);
    CHECK(!r.kappa_in.has_value());
  }
  SUBCASE("kappa_out = -alpha2/2") {
    ShellConfig cfg{{1.0, 2.0}, {0.0, -2.0}};
    auto r = ds::one_shell_roots(cfg);
    CHECK(r.kappa_out == doctest::Approx(1.0));
    CHECK(r.outer_bound);  // -2 < -1/2
  }
  SUBCASE("inner root for alpha1 = -3 matches the frozen bisection value") {
    ShellConfig cfg{{1.0, 2.0}, {-3.0, 0.0}};
    auto r = ds::one_shell_roots(cfg);
    REQUIRE(r.kappa_in.has_value());
    CHECK(*r.kappa_in == doctest::Approx(kKappa0).epsilon(1e-12));
    CHECK(*r.kappa_in > 1.0);
    CHECK(*r.kappa_in < 1.5);
  }
}

TEST_CASE("tune_for_splitting") {
  auto [k0, a2] = ds::tune_for_splitting(1.0, -3.0);
  CHECK(k0 == doctest::Approx(kKappa0).epsilon(1e-12));
  CHECK(a2 == doctest::Approx(-2.0 * kKappa0).epsilon(1e-12));
  CHECK_THROWS_AS(ds::tune_for_splitting(1.0, -1.0), ds::Error);

  // kappa0 strictly increases as alpha1 decreases
  double prev = 0.0;
  for (double a1 : {-1.5, -2.0, -3.0, -5.0, -9.0}) {
    double k = ds::tune_for_splitting(1.0, a1).first;
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("tuned point: F_inf double zero, G = -4 k0") {
  double r1 = 1.0, a1 = -3.0;
  auto [k0, a2] = ds::tune_for_splitting(r1, a1);
  CHECK(std::abs(ds::f_infinity(k0, r1, a1, a2)) < 1e-9);
  double h = 1e-5;
  double fd = (ds::f_infinity(k0 + h, r1, a1, a2) -
               ds::f_infinity(k0 - h, r1, a1, a2)) / (2 * h);
  CHECK(std::abs(fd) < 1e-8);
  CHECK(ds::f_infinity_second(k0, r1, a1, a2) > 0.0);
  CHECK(ds::g_function(k0, r1, a1, a2) ==
        doctest::Approx(-4.0 * k0).epsilon(1e-10));
  // F_inf''(k0) = 4 (1 + gamma1'(k0)) / k0
  CHECK(ds::f_infinity_second(k0, r1, a1, a2) ==
        doctest::Approx(4.0 * (1.0 + ds::gamma1_prime(k0, r1)) / k0).epsilon(1e-10));
}

TEST_CASE("splitting constant") {
  double c = ds::splitting_constant(1.0, -3.0);
  CHECK(c == doctest::Approx(kCConst).epsilon(1e-10));
  CHECK(ds::gamma1_prime(kKappa0, 1.0) ==
        doctest::Approx(kGamma1Prime0).epsilon(1e-12));
  CHECK(c < kKappa0 * std::sqrt(2.0));

  // flat-interface limit: gamma1' -> 1 and C -> k0 as R1 grows
  for (double r1 : {10.0, 100.0}) {
    double k0 = ds::tune_for_splitting(r1, -3.0).first;
    double cc = ds::splitting_constant(r1, -3.0);
    CHECK(cc / k0 == doctest::Approx(1.0).epsilon(2e-2 / r1 * 10.0 + 1e-6));
    CHECK(ds::gamma1_prime(k0, r1) == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("large_d_correction") {
  SUBCASE("tuned parameters are degenerate") {
    auto [k0, a2] = ds::tune_for_splitting(1.0, -3.0);
    ShellConfig cfg{{1.0, 2.0}, {-3.0, a2}};
    (void)k0;
    CHECK_THROWS_AS(ds::large_d_correction(cfg, ds::RootSide::In), ds::Error);
  }
  SUBCASE("frozen prefactor for R=[1,2], alpha=[-3,-0.5]") {
    ShellConfig cfg{{1.0, 2.0}, {-3.0, -0.5}};
    CHECK(ds::large_d_correction(cfg, ds::RootSide::In) ==
          doctest::Approx(0.34787829907114668).epsilon(1e-10));
  }
}

TEST_CASE("double_root_residual") {
  SUBCASE("simple root: F_d = 0, F_d' != 0") {
    ShellConfig cfg{{1.0, 2.0}, {-3.0, 0.0}};
    // refine the root of F_d by bisection on [1, 1.5]
    double lo = 1.0, hi = 1.5;
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      if (ds::secular_F(mid, cfg) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    auto [f, fp] = ds::double_root_residual(0.5 * (lo + hi), cfg);
    CHECK(std::abs(f) < 1e-8);
    CHECK(std::abs(fp) > 1e-2);
  }
  SUBCASE("free configuration has no root") {
    ShellConfig cfg{{1.0, 2.0}, {0.0, 0.0}};
    for (double k = 0.05; k < 10.0; k *= 1.5) {
      CHECK(ds::double_root_residual(k, cfg).first > 0.0);
    }
  }
  SUBCASE("F_d' matches finite differences of F_d") {
    ShellConfig cfg{{1.0, 2.3}, {-2.0, -1.1}};
    for (double k : {0.3, 0.9, 2.1}) {
      double h = 1e-6;
      double fd = (ds::secular_F(k + h, cfg) - ds::secular_F(k - h, cfg)) / (2 * h);
      CHECK(ds::double_root_residual(k, cfg).second ==
            doctest::Approx(fd).epsilon(1e-6));
    }
  }
}
