#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "transco/analysis.hpp"

using namespace transco;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gaussian fit recovers its own model class") {
  std::vector<double> probs(81, 0.0);
  double sum = 0.0;
  for (int n = 0; n <= 80; ++n) {
    probs[n] = std::exp(-std::pow(n - 30.0, 2) / (2.0 * 19.1));
    sum += probs[n];
  }
  for (double& p : probs) p /= sum;
  const GaussianFit fit = fit_gaussian(probs);
  CHECK(std::abs(fit.mean - 30.0) / 30.0 <= 0.01);
  CHECK(std::abs(fit.variance - 19.1) / 19.1 <= 0.01);
}

TEST_CASE("gaussian fit on large recursion-built states") {
  const FieldState s = build_ground(ground_spec(0, 0, 400, {}));
  const GaussianFit fit = fit_gaussian(probabilities(s));
  const double target = 2.0 * fit.mean / kPi;
  CHECK(fit.variance / target >= 0.9);
  CHECK(fit.variance / target <= 1.1);
}

TEST_CASE("gaussian fit recovers constructed gaussian states") {
  // boundary truncation removes points but does not bend the log-parabola
  const GaussianFit fit =
      fit_gaussian(probabilities(make_gaussian(10.0, 10.0, 60)));
  CHECK(std::abs(fit.mean - 10.0) < 0.1);
  CHECK(std::abs(fit.variance - 10.0) < 0.1);
}

TEST_CASE("gaussian fit on a large Poissonian") {
  const FieldState coh = make_coherent(10.0, 0.0, coherent_min_cutoff(10.0));
  const GaussianFit fit = fit_gaussian(probabilities(coh));
  CHECK(std::abs(fit.variance - 100.0) / 100.0 <= 0.05);
  CHECK(std::abs(fit.mean - 100.0) / 100.0 <= 0.05);
}

TEST_CASE("gaussian fit needs support") {
  CHECK_THROWS_AS(fit_gaussian(std::vector<double>{0.5, 0.5}), FitError);
  CHECK_THROWS_AS(fit_gaussian(std::vector<double>(40, 0.0)), FitError);
}

TEST_CASE("gaussian fit is translation consistent") {
  std::vector<double> probs(61, 0.0);
  double sum = 0.0;
  for (int n = 0; n <= 60; ++n) {
    probs[n] = std::exp(-std::pow(n - 20.0, 2) / (2.0 * 7.3));
    sum += probs[n];
  }
  for (double& p : probs) p /= sum;
  const GaussianFit base = fit_gaussian(probs);

  std::vector<double> shifted(probs.size() + 5, 0.0);
  for (size_t n = 0; n < probs.size(); ++n) shifted[n + 5] = probs[n];
  const GaussianFit moved = fit_gaussian(shifted);
  CHECK(std::abs(moved.mean - base.mean - 5.0) <= 1e-9);
  CHECK(std::abs(moved.variance - base.variance) <= 1e-9);
}

TEST_CASE("squeezing in dB") {
  const FieldState coh = make_coherent(8.0, 0.0, coherent_min_cutoff(8.0));
  CHECK(std::abs(squeezing_db(coh)) <= 0.05);

  const FieldState g200 = build_ground(ground_spec(0, 0, 200, {}));
  CHECK(std::abs(squeezing_db(g200) - 1.96) <= 0.3);

  const FieldState e0 = build_excited(excited_spec(0, 26, 107, {}));
  CHECK(std::abs(squeezing_db(e0) - 10.0 * std::log10(3.0 * kPi / 2.0)) <= 0.5);

  CHECK(std::isinf(squeezing_db(make_fock(4, 8))));

  for (double s : {1.0, kPi / 2.0, 3.0 * kPi / 2.0}) {
    const FieldState g = make_gaussian(100.0, 100.0 / s, 240);
    CHECK(std::abs(squeezing_db(g) - 10.0 * std::log10(s)) <= 0.1);
  }
}

TEST_CASE("coherence sweep") {
  SUBCASE("truncated builder hits machine precision at the family times") {
    std::vector<double> grid;
    for (int n : {13, 9, 5, 2}) grid.push_back(kPi / std::sqrt(double(n)));
    std::sort(grid.begin(), grid.end());
    const SweepTable table =
        coherence_sweep(grid, SweepBuilder::truncated, {});
    for (double y : table.y) CHECK(y <= 1e-10);
  }
  SUBCASE("truncated builder stays below 3e-3 everywhere") {
    const SweepTable table = coherence_sweep(
        geometric_grid(kPi / std::sqrt(150.0), kPi - 1e-9, 80),
        SweepBuilder::truncated, {});
    for (double y : table.y) CHECK(y <= 3e-3);
  }
  SUBCASE("coherent failure scales with 1/alpha^2") {
    // halving t doubles alpha and divides 1-C by about 4
    const std::vector<double> grid = {kPi / 32.0, kPi / 16.0, kPi / 8.0};
    const SweepTable table = coherence_sweep(grid, SweepBuilder::coherent, {});
    for (size_t i = 1; i < table.y.size(); ++i) {
      const double ratio = table.y[i] / table.y[i - 1];
      CHECK(std::abs(ratio - 4.0) / 4.0 <= 0.25);
    }
  }
  SUBCASE("rows match the direct computation bit for bit") {
    const std::vector<double> grid = {0.3, 0.9, 1.7};
    const SweepTable table = coherence_sweep(grid, SweepBuilder::truncated, {});
    for (size_t i = 0; i < grid.size(); ++i) {
      const FieldState s = build_truncated(grid[i], {});
      const double C =
          coherence_C(reduce_atom(evolve(joint_ground(s, {}), grid[i])));
      CHECK(table.y[i] == 1.0 - C);
      CHECK(table.x[i] == grid[i]);
    }
  }
  SUBCASE("grid validation") {
    CHECK_THROWS_AS(coherence_sweep({0.5, 0.4}, SweepBuilder::truncated, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(coherence_sweep({0.0, 0.5}, SweepBuilder::truncated, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(coherence_sweep({0.5, 4.0}, SweepBuilder::truncated, {}),
                    std::invalid_argument);
  }
}

TEST_CASE("power-law fit") {
  SUBCASE("recovers an exact cubic") {
    SweepTable cubic;
    cubic.x = {0.5, 1.0, 2.0, 3.0, 5.0};
    for (double x : cubic.x) cubic.y.push_back(2.0 * x * x * x);
    const PowerLawFit fit = power_law_fit(cubic);
    CHECK(std::abs(fit.amplitude - 2.0) <= 1e-9);
    CHECK(std::abs(fit.exponent - 3.0) <= 1e-9);
  }
  SUBCASE("constant data has exponent zero") {
    SweepTable flat;
    flat.x = {1.0, 2.0, 4.0, 9.0};
    flat.y = {0.7, 0.7, 0.7, 0.7};
    const PowerLawFit fit = power_law_fit(flat);
    CHECK(std::abs(fit.exponent) <= 1e-9);
    CHECK(std::abs(fit.amplitude - 0.7) <= 1e-9);
  }
  SUBCASE("rejects nonpositive data") {
    SweepTable bad;
    bad.x = {1.0, 2.0};
    bad.y = {0.5, 0.0};
    CHECK_THROWS_AS(power_law_fit(bad), std::invalid_argument);
    bad.y = {0.5, -0.5};
    CHECK_THROWS_AS(power_law_fit(bad), std::invalid_argument);
  }
}

TEST_CASE("geometric grid") {
  const std::vector<double> grid = geometric_grid(0.1, 10.0, 5);
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == 0.1);
  CHECK(grid.back() == 10.0);
  for (size_t i = 1; i < grid.size(); ++i)
    CHECK(grid[i] / grid[i - 1] ==
          doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(geometric_grid(1.0, 0.5, 4), std::invalid_argument);
}
