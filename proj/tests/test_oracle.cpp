#include "deltashell/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "deltashell/boundary.hpp"
#include "deltashell/solver.hpp"
#include "doctest.h"

using ds::ScaledReal;
using ds::ShellConfig;

namespace {
constexpr double kOneShellRoot = 1.4107196860610394;
}  // namespace

TEST_CASE("ScaledReal round trips and arithmetic") {
  CHECK(ScaledReal::from(3.5).to_double() == 3.5);
  CHECK(ScaledReal::from(0.0).to_double() == 0.0);
  CHECK(ScaledReal::from(-2.0, 3.0).to_double() == doctest::Approx(-2.0 * std::exp(3.0)));

  ScaledReal a = ScaledReal::from(2.0, 100.0);
  ScaledReal b = ScaledReal::from(3.0, 100.0);
  CHECK((a * b).log_abs() == doctest::Approx(std::log(6.0) + 200.0));
  CHECK((a + b).log_abs() == doctest::Approx(std::log(5.0) + 100.0));
  CHECK((a - b).log_abs() == doctest::Approx(std::log(1.0) + 100.0));
  CHECK((a * 0.5).to_double() == doctest::Approx(std::exp(100.0)).epsilon(1e-13));

  // adding a term 1e300 smaller leaves the big one unchanged
  ScaledReal tiny = ScaledReal::from(1.0, -600.0);
  CHECK((a + tiny).log_abs() == a.log_abs());
  CHECK(tiny.log_abs() == doctest::Approx(-600.0));
  CHECK(ScaledReal::from(0.0).log_abs() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("mismatch vanishes at the one-shell root and changes sign there") {
  ShellConfig cfg{{1.0}, {-3.0}};
  CHECK(std::abs(ds::mismatch(cfg, 0, kOneShellRoot)) < 1e-12);
  double below = ds::mismatch(cfg, 0, kOneShellRoot - 0.05);
  double above = ds::mismatch(cfg, 0, kOneShellRoot + 0.05);
  CHECK((below < 0.0) != (above < 0.0));
}

TEST_CASE("mismatch is a normalized quantity") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ur(0.3, 2.0), ua(-5.0, 5.0), uk(0.05, 20.0);
  for (int i = 0; i < 200; ++i) {
    double r1 = ur(rng);
    ShellConfig cfg{{r1, r1 + ur(rng), r1 + 4.0}, {ua(rng), ua(rng), ua(rng)}};
    double v = ds::mismatch(cfg, i % 4, uk(rng));
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) <= 1.0);
  }
}

TEST_CASE("mismatch stays finite far into the overflow regime") {
  ShellConfig cfg{{50.0, 100.0}, {-2.0, -1.0}};
  for (double k : {10.0, 50.0, 100.0}) {
    double v = ds::mismatch(cfg, 2, k);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) <= 1.0);
  }
}

TEST_CASE("solver roots are mismatch zeros") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> ur(0.4, 1.5), ua(-7.0, -1.0);
  ds::ScanPlan plan;
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + trial % 3;
    std::vector<double> radii, alphas;
    double r = ur(rng);
    for (int j = 0; j < n; ++j) {
      radii.push_back(r);
      alphas.push_back(ua(rng));
      r += ur(rng);
    }
    ShellConfig cfg{radii, alphas};
    for (int ell : {0, 1, 3}) {
      auto scan = ds::find_channel_roots(cfg, ell, plan);
      for (const auto& root : scan.roots) {
        CHECK(std::abs(ds::mismatch(cfg, ell, root.kappa)) < 1e-9);
      }
    }
  }
}

TEST_CASE("mismatch and secular_det share sign changes") {
  ShellConfig cfg{{0.8, 1.6, 2.9}, {-4.0, -2.5, -1.0}};
  for (int ell : {0, 1, 2}) {
    double prev_m = ds::mismatch(cfg, ell, 0.01);
    double prev_d = ds::secular_det(cfg, ell, 0.01);
    for (double k = 0.02; k < 12.0; k += 0.01) {
      double m = ds::mismatch(cfg, ell, k);
      double d = ds::secular_det(cfg, ell, k);
      CHECK(((prev_m < 0) != (m < 0)) == ((prev_d < 0) != (d < 0)));
      prev_m = m;
      prev_d = d;
    }
  }
}

TEST_CASE("sinh/exp s-wave path agrees with the Bessel-basis path") {
  ShellConfig cfg{{1.0, 2.2}, {-3.0, -1.5}};
  double prev_a = ds::mismatch(cfg, 0, 0.05);
  double prev_b = ds::mismatch_swave(cfg, 0.05);
  for (double k = 0.1; k < 6.0; k += 0.05) {
    double a = ds::mismatch(cfg, 0, k);
    double b = ds::mismatch_swave(cfg, k);
    CHECK((a < 0.0) == (b < 0.0));
    CHECK(((prev_a < 0) != (a < 0)) == ((prev_b < 0) != (b < 0)));
    prev_a = a;
    prev_b = b;
  }
}

TEST_CASE("eigenfunction: continuity, derivative jump, decay") {
  ShellConfig cfg{{1.0}, {-3.0}};
  double eps = 1e-9;
  std::vector<double> grid{0.2, 0.5, 1.0 - eps, 1.0 + eps, 1.5, 2.0, 3.0, 5.0};
  auto samples = ds::eigenfunction_samples(cfg, 0, kOneShellRoot, grid);
  REQUIRE(samples.size() == grid.size());

  double umax = 0.0;
  for (const auto& s : samples) umax = std::max(umax, std::abs(s.u));
  CHECK(umax == doctest::Approx(1.0).epsilon(1e-12));

  const auto& in = samples[2];
  const auto& out = samples[3];
  CHECK(in.u == doctest::Approx(out.u).epsilon(1e-7));
  // u'(R+) - u'(R-) = alpha u(R)
  CHECK(out.du - in.du == doctest::Approx(-3.0 * in.u).epsilon(1e-6));

  // pure decay outside the shell
  for (std::size_t i = 4; i + 1 < samples.size(); ++i) {
    CHECK(std::abs(samples[i + 1].u) < std::abs(samples[i].u));
  }
  // exterior tail r k_0(kr) = e^{-kr}/k up to the r-independent coefficient
  double t1 = samples[5].u * std::exp(kOneShellRoot * samples[5].r);
  double t2 = samples[6].u * std::exp(kOneShellRoot * samples[6].r);
  CHECK(t1 == doctest::Approx(t2).epsilon(1e-9));
}

TEST_CASE("eigenfunction at l=1 vanishes like r^2 at the origin") {
  ShellConfig cfg{{1.0, 2.0}, {-8.0, -8.0}};
  auto scan = ds::find_channel_roots(cfg, 1, ds::ScanPlan{});
  REQUIRE(!scan.roots.empty());
  double k = scan.roots.back().kappa;
  std::vector<double> grid{1e-3, 2e-3, 1.5};
  auto s = ds::eigenfunction_samples(cfg, 1, k, grid);
  CHECK(s[1].u / s[0].u == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("eigenfunction_samples rejects a non-root") {
  ShellConfig cfg{{1.0}, {-3.0}};
  CHECK_THROWS_AS(ds::eigenfunction_samples(cfg, 0, 0.7, {0.5, 1.5}), ds::Error);
}
