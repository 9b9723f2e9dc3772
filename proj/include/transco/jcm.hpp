#pragma once

#include <utility>

#include "transco/fock.hpp"

namespace transco {

struct JcmParams {
  double omega0 = 1.0;  // vacuum Rabi frequency
  double omega = 0.0;   // atom/field resonance frequency
};

/// Quantized Rabi frequency Omega_n = omega0 sqrt(n+1) of the excitation
/// manifold spanned by |g,n+1> and |e,n>. Requires n >= 0.
double rabi_frequency(const JcmParams& p, int n);

/// Joint atom-field state on resonance. g[n], e[n] hold the amplitudes of
/// |g>|n> and |e>|n>; both vectors share one length and the total norm is 1.
///
/// Excitation manifolds (|g,m>, |e,m-1>) are invariant subspaces of the
/// evolution, so the populations |g[m]|^2 + |e[m-1]|^2 (and |g[0]|^2 alone)
/// are conserved.
struct JointState {
  std::vector<cplx> g, e;
  JcmParams params;

  int n_cut() const { return static_cast<int>(g.size()) - 1; }
};

JointState joint_ground(const FieldState& field, const JcmParams& p = {});
JointState joint_excited(const FieldState& field, const JcmParams& p = {});
/// Product state (cg|g> + ce|e>) (x) field; the atom amplitudes are
/// renormalized.
JointState joint_product(cplx cg, cplx ce, const FieldState& field,
                         const JcmParams& p = {});

/// Closed-form resonant evolution for a duration t (negative t reverses).
/// Within manifold m the map is e^{-i m omega t} [cos(Omega_{m-1} t/2) I
/// - i sin(Omega_{m-1} t/2) X]; |g,0> is left unchanged. If the top excited
/// amplitude is occupied the arrays grow by one slot so no amplitude is lost.
JointState evolve(const JointState& s, double t);

/// Bare evolution for a time tau: g[n] and e[n] pick up phases e^{-i n omega
/// tau} and e^{-i (n+1) omega tau}.
JointState free_evolve(const JointState& s, double tau);

double norm_squared(const JointState& s);
double excited_population(const JointState& s);

/// 2x2 reduced atomic density matrix, rows/cols ordered (g, e).
struct AtomDensity {
  cplx gg, ge, eg, ee;
};

AtomDensity reduce_atom(const JointState& s);

/// Coherence measure: |rho_eg| + |rho_ge|.
double coherence_C(const AtomDensity& rho);

/// Expectation of the projector onto (|g> + e^{i phi}|e>)/sqrt(2).
double success_P(const AtomDensity& rho, double phi);

/// Phase maximizing success_P; closed form, no search.
double optimal_phase(const AtomDensity& rho);

double purity(const AtomDensity& rho);

/// Projects the atom onto (|g> + e^{i phi}|e>)/sqrt(2) and returns the
/// outcome probability together with the success-conditioned field. Throws
/// ConditionError when the probability is below 1e-14.
std::pair<double, FieldState> project_atom(const JointState& s, double phi);

/// Coherence generated from |g> (x) (|n> + |n+1>)/sqrt(2) after time t:
/// |sin(Omega_n t/2) cos(Omega_{n-1} t/2)|.
double pair_coherence(int n, double t, const JcmParams& p = {});

}  // namespace transco
