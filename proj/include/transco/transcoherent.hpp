#pragma once

#include "transco/jcm.hpp"

namespace transco {

enum class AtomLevel { ground, excited };

/// Pulse specification for a field state occupying photon numbers
/// [n_min, n_max] that transfers complete coherence to an atom starting in
/// the given level after interacting for a time t.
///
/// Valid combinations tie t to the band through the boundary manifolds:
///   ground, k = 0:  n_min = 0 and Omega_{n_max-1} t = pi
///   ground, k >= 1: Omega_{n_min-1} t = 2k pi, Omega_{n_max-1} t = (2k+1) pi
///                   (so n_max (2k)^2 = n_min (2k+1)^2)
///   excited, k >= 0: Omega_{n_min} t = (2k+1) pi, Omega_{n_max} t = (2k+2) pi
///                   (so (n_max+1)(2k+1)^2 = (n_min+1)(2k+2)^2)
struct PulseSpec {
  AtomLevel start = AtomLevel::ground;
  int k = 0;
  int n_min = 0;
  int n_max = 1;
  double t = 0.0;
  JcmParams params;
};

/// Builds a valid ground-start spec, deriving t from (k, n_min, n_max).
/// Throws std::invalid_argument for incompatible band indices.
PulseSpec ground_spec(int k, int n_min, int n_max, const JcmParams& p = {});
PulseSpec excited_spec(int k, int n_min, int n_max, const JcmParams& p = {});

/// Field state that leaves an atom starting in |g> in (|g>+|e>)/sqrt(2),
/// unentangled from the field, after evolving for spec.t.
FieldState build_ground(const PulseSpec& spec);

/// Excited-atom analogue of build_ground.
FieldState build_excited(const PulseSpec& spec);

/// Near-optimal state for an arbitrary time t > 0: ground-start recursion
/// truncated at n_max = ceil((pi / (omega0 t))^2).
FieldState build_truncated(double t, const JcmParams& p = {});

/// build_truncated with an explicit cutoff instead of the ceiling rule.
FieldState build_truncated_at(double t, int n_max, const JcmParams& p = {});

/// Weighted superposition of recursion-filled bands sharing one atom level
/// and one evolution time. Bands must not overlap and each block must be a
/// valid PulseSpec on its own.
FieldState build_concatenated(const std::vector<PulseSpec>& blocks,
                              const std::vector<cplx>& weights);

/// Time at which the recursion-built distribution peaks at photon number
/// nbar: omega0 t = pi (sqrt(nbar+1) - sqrt(nbar)).
double stationary_time(double nbar, const JcmParams& p = {});

/// Inverse of stationary_time on 0 < omega0 t < pi:
/// nbar = (pi/(2 omega0 t) - omega0 t/(2 pi))^2.
double peak_photon(double t, const JcmParams& p = {});

}  // namespace transco
