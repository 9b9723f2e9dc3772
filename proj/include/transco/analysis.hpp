#pragma once

#include <map>
#include <string>

#include "transco/catalysis.hpp"

namespace transco {

/// Rows of (control value, metric value) for data-file emission.
/// x must be strictly increasing and y finite.
struct SweepTable {
  std::vector<double> x, y;
  std::string x_label, y_label;
  std::map<std::string, std::string> metadata;
};

struct GaussianFit {
  double mean;
  double variance;
};

/// Probability-weighted least-squares parabola fit to log p_n. Needs at
/// least 5 support points with p > 1e-12; throws FitError otherwise.
GaussianFit fit_gaussian(const std::vector<double>& probs);

/// Number squeezing in dB: 10 log10(mean/variance) from the moments of
/// |c_n|^2. Returns +infinity for zero variance.
double squeezing_db(const FieldState& s);

enum class SweepBuilder { truncated, coherent };

/// Rows (omega0 t, 1 - C) over the grid, C from full evolution. The
/// truncated builder uses build_truncated; the coherent builder uses
/// |alpha| = pi / (2 omega0 t).
SweepTable coherence_sweep(const std::vector<double>& t_grid,
                           SweepBuilder builder, const JcmParams& p);

std::vector<double> geometric_grid(double lo, double hi, int points);

struct PowerLawFit {
  double amplitude;
  double exponent;
};

/// Least-squares line in log-log space: y = amplitude * x^exponent.
/// Requires all x, y > 0.
PowerLawFit power_law_fit(const SweepTable& table);

}  // namespace transco
