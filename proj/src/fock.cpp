#include "transco/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace transco {

double norm_squared(const FieldState& s) {
  double acc = 0.0;
  for (const cplx& a : s.amps) acc += std::norm(a);
  return acc;
}

void renormalize(FieldState& s) {
  const double n2 = norm_squared(s);
  if (n2 <= 0.0) throw std::invalid_argument("cannot renormalize a zero state");
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& a : s.amps) a *= inv;
}

FieldState renormalized(FieldState s) {
  renormalize(s);
  return s;
}

FieldState make_fock(int n, int n_cut) {
  if (n_cut < 0) throw std::invalid_argument("n_cut must be nonnegative");
  if (n < 0 || n > n_cut)
    throw std::invalid_argument("fock index outside [0, n_cut]");
  FieldState s;
  s.amps.assign(static_cast<size_t>(n_cut) + 1, cplx{0.0, 0.0});
  s.amps[static_cast<size_t>(n)] = 1.0;
  return s;
}

int coherent_min_cutoff(double magnitude) {
  const double nbar = magnitude * magnitude;
  return static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar + 1.0)));
}

FieldState make_coherent(double magnitude, double phase, int n_cut) {
  if (magnitude < 0.0) throw std::invalid_argument("|alpha| must be >= 0");
  const int required = coherent_min_cutoff(magnitude);
  if (n_cut < required)
    throw CutoffError("n_cut too small for coherent |alpha|=" +
                          std::to_string(magnitude) + "; need at least " +
                          std::to_string(required),
                      required);
  const cplx alpha = std::polar(magnitude, phase);
  FieldState s;
  s.amps.assign(static_cast<size_t>(n_cut) + 1, cplx{0.0, 0.0});
  s.amps[0] = 1.0;
  double running_max = 1.0;
  for (int n = 0; n < n_cut; ++n) {
    s.amps[n + 1] = s.amps[n] * alpha / std::sqrt(double(n) + 1.0);
    running_max = std::max(running_max, std::abs(s.amps[n + 1]));
    // keep intermediate magnitudes bounded; Poissonian amplitudes peak at
    // e^{|alpha|^2/2} relative to c_0, which overflows for large |alpha|
    if ((n & 31) == 31 && running_max > 1e100) {
      for (int j = 0; j <= n + 1; ++j) s.amps[j] /= running_max;
      running_max = 1.0;
    }
  }
  renormalize(s);
  return s;
}

FieldState make_gaussian(double mean, double variance, int n_cut) {
  if (!(variance > 0.0))
    throw std::invalid_argument("gaussian variance must be positive");
  const double sigma = std::sqrt(variance);
  const int required = static_cast<int>(std::ceil(mean + 10.0 * sigma));
  if (n_cut < required)
    throw CutoffError("n_cut too small for gaussian (mean " +
                          std::to_string(mean) + ", sigma " +
                          std::to_string(sigma) + "); need at least " +
                          std::to_string(required),
                      required);
  FieldState s;
  s.amps.assign(static_cast<size_t>(n_cut) + 1, cplx{0.0, 0.0});
  for (int n = 0; n <= n_cut; ++n) {
    const double d = double(n) - mean;
    s.amps[n] = std::exp(-d * d / (4.0 * variance));
  }
  renormalize(s);
  return s;
}

double mean_photon(const FieldState& s) {
  double acc = 0.0;
  for (size_t n = 0; n < s.amps.size(); ++n)
    acc += double(n) * std::norm(s.amps[n]);
  return acc;
}

double variance_photon(const FieldState& s) {
  double m1 = 0.0, m2 = 0.0;
  for (size_t n = 0; n < s.amps.size(); ++n) {
    const double p = std::norm(s.amps[n]);
    m1 += double(n) * p;
    m2 += double(n) * double(n) * p;
  }
  return m2 - m1 * m1;
}

cplx overlap(const FieldState& a, const FieldState& b) {
  const size_t common = std::min(a.amps.size(), b.amps.size());
  cplx acc{0.0, 0.0};
  for (size_t n = 0; n < common; ++n) acc += std::conj(a.amps[n]) * b.amps[n];
  return acc;
}

std::vector<double> probabilities(const FieldState& s) {
  std::vector<double> p(s.amps.size());
  for (size_t n = 0; n < s.amps.size(); ++n) p[n] = std::norm(s.amps[n]);
  return p;
}

}  // namespace transco
