#include "transco/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace transco {

namespace {

constexpr double kPi = std::numbers::pi;

// 3x3 linear solve with partial pivoting; the fit systems are tiny.
void solve3(double a[3][3], double b[3], double x[3]) {
  int piv[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[piv[r]][col]) > std::abs(a[piv[best]][col])) best = r;
    std::swap(piv[col], piv[best]);
    const double d = a[piv[col]][col];
    if (std::abs(d) < 1e-300) throw FitError("singular fit system");
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[piv[r]][col] / d;
      for (int c = col; c < 3; ++c) a[piv[r]][c] -= f * a[piv[col]][c];
      b[piv[r]] -= f * b[piv[col]];
    }
  }
  for (int col = 2; col >= 0; --col) {
    double acc = b[piv[col]];
    for (int c = col + 1; c < 3; ++c) acc -= a[piv[col]][c] * x[c];
    x[col] = acc / a[piv[col]][col];
  }
}

}  // namespace

GaussianFit fit_gaussian(const std::vector<double>& probs) {
  std::vector<int> support;
  for (size_t n = 0; n < probs.size(); ++n)
    if (probs[n] > 1e-12) support.push_back(static_cast<int>(n));
  if (support.size() < 5)
    throw FitError("gaussian fit needs at least 5 support points, got " +
                   std::to_string(support.size()));

  // center the abscissa at the weighted mean for conditioning
  double wsum = 0.0, xbar = 0.0;
  for (int n : support) {
    wsum += probs[n];
    xbar += probs[n] * n;
  }
  xbar /= wsum;

  double a[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double b[3] = {0, 0, 0};
  for (int n : support) {
    const double w = probs[n];
    const double x = double(n) - xbar;
    const double y = std::log(probs[n]);
    const double xs[3] = {1.0, x, x * x};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] += w * xs[r] * xs[c];
      b[r] += w * xs[r] * y;
    }
  }
  double coef[3];
  solve3(a, b, coef);
  if (!(coef[2] < 0.0))
    throw FitError("log-probabilities are not concave; no gaussian fit");
  const double variance = -0.5 / coef[2];
  const double mean = xbar + coef[1] * variance;
  return {mean, variance};
}

double squeezing_db(const FieldState& s) {
  const double m = mean_photon(s);
  const double v = variance_photon(s);
  if (v <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(m / v);
}

SweepTable coherence_sweep(const std::vector<double>& t_grid,
                           SweepBuilder builder, const JcmParams& p) {
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0) || t_grid[i] > kPi / p.omega0 * (1.0 + 1e-12))
      throw std::invalid_argument("sweep grid must lie in (0, pi/omega0]");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("sweep grid must be strictly increasing");
  }
  SweepTable table;
  table.x_label = "omega0_t";
  table.y_label = "one_minus_C";
  table.metadata["builder"] =
      builder == SweepBuilder::truncated ? "truncated" : "coherent";
  table.metadata["omega_ratio"] = std::to_string(p.omega / p.omega0);
  table.x.reserve(t_grid.size());
  table.y.reserve(t_grid.size());
  for (double t : t_grid) {
    FieldState field;
    if (builder == SweepBuilder::truncated) {
      field = build_truncated(t, p);
    } else {
      const double alpha = kPi / (2.0 * p.omega0 * t);
      field = make_coherent(alpha, 0.0, coherent_min_cutoff(alpha));
    }
    const double C = coherence_C(reduce_atom(evolve(joint_ground(field, p), t)));
    table.x.push_back(p.omega0 * t);
    table.y.push_back(1.0 - C);
  }
  return table;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("bad geometric grid");
  std::vector<double> grid(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo * std::exp(i * step);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

PowerLawFit power_law_fit(const SweepTable& table) {
  if (table.x.size() < 2)
    throw std::invalid_argument("power-law fit needs at least 2 rows");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(table.x.size());
  for (size_t i = 0; i < table.x.size(); ++i) {
    if (!(table.x[i] > 0.0) || !(table.y[i] > 0.0))
      throw std::invalid_argument("power-law fit needs positive data");
    const double lx = std::log(table.x[i]);
    const double ly = std::log(table.y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300)
    throw std::invalid_argument("degenerate abscissa in power-law fit");
  const double exponent = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - exponent * sx) / n;
  return {std::exp(intercept), exponent};
}

}  // namespace transco
