#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace transco {

using cplx = std::complex<double>;

// Norm tolerance enforced on all state invariants.
inline constexpr double kNormTol = 1e-12;

/// Thrown by state constructors when the requested photon-number cutoff is
/// too small to hold the state; carries the minimum acceptable cutoff.
struct CutoffError : std::invalid_argument {
  int required_n_cut;
  CutoffError(const std::string& msg, int required)
      : std::invalid_argument(msg), required_n_cut(required) {}
};

/// Thrown when a pulse specification makes the amplitude recursion diverge
/// (an intermediate excitation manifold sitting on an integer pi pulse).
struct DegenerateSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when conditioning on a measurement outcome whose probability is
/// numerically zero.
struct ConditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace transco
