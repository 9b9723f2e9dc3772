#pragma once

#include <vector>

#include "transco/types.hpp"

namespace transco {

/// Single-mode field state in the photon-number basis. amps[n] is the complex
/// amplitude of |n> for n = 0..n_cut; the vector has unit norm after
/// construction or renormalization.
struct FieldState {
  std::vector<cplx> amps;

  int n_cut() const { return static_cast<int>(amps.size()) - 1; }
};

/// |n> with cutoff n_cut. Throws std::invalid_argument unless 0 <= n <= n_cut.
FieldState make_fock(int n, int n_cut);

/// Coherent state with alpha = magnitude * e^{i phase}. Amplitudes are built
/// by the ratio c_{n+1} = c_n alpha / sqrt(n+1) with running renormalization,
/// so no factorials are formed. Throws CutoffError when n_cut leaves more
/// than ~1e-10 of tail probability; the required minimum is reported.
FieldState make_coherent(double magnitude, double phase, int n_cut);

/// Smallest cutoff accepted by make_coherent for the given |alpha|.
int coherent_min_cutoff(double magnitude);

/// Real-amplitude state with |c_n|^2 proportional to a Gaussian of the given
/// mean and variance. Throws std::invalid_argument for variance <= 0 and
/// CutoffError when n_cut < mean + 10 sigma.
FieldState make_gaussian(double mean, double variance, int n_cut);

void renormalize(FieldState& s);
FieldState renormalized(FieldState s);

double norm_squared(const FieldState& s);
double mean_photon(const FieldState& s);
double variance_photon(const FieldState& s);

/// <a|b>, states padded to the common cutoff.
cplx overlap(const FieldState& a, const FieldState& b);

std::vector<double> probabilities(const FieldState& s);

}  // namespace transco
