#include "transco/jcm.hpp"

#include <cmath>

namespace transco {

namespace {

// Omega_n extended to n = -1 (zero), used where a band touches the vacuum.
double rabi_at(const JcmParams& p, int n) {
  return n < 0 ? 0.0 : p.omega0 * std::sqrt(double(n) + 1.0);
}

}  // namespace

double rabi_frequency(const JcmParams& p, int n) {
  if (n < 0) throw std::invalid_argument("manifold index must be >= 0");
  return rabi_at(p, n);
}

JointState joint_ground(const FieldState& field, const JcmParams& p) {
  JointState s;
  s.g = field.amps;
  s.e.assign(field.amps.size(), cplx{0.0, 0.0});
  s.params = p;
  return s;
}

JointState joint_excited(const FieldState& field, const JcmParams& p) {
  JointState s;
  s.g.assign(field.amps.size(), cplx{0.0, 0.0});
  s.e = field.amps;
  s.params = p;
  return s;
}

JointState joint_product(cplx cg, cplx ce, const FieldState& field,
                         const JcmParams& p) {
  const double n2 = std::norm(cg) + std::norm(ce);
  if (n2 <= 0.0) throw std::invalid_argument("zero atomic amplitude pair");
  const double inv = 1.0 / std::sqrt(n2);
  JointState s;
  s.g.resize(field.amps.size());
  s.e.resize(field.amps.size());
  for (size_t n = 0; n < field.amps.size(); ++n) {
    s.g[n] = cg * inv * field.amps[n];
    s.e[n] = ce * inv * field.amps[n];
  }
  s.params = p;
  return s;
}

JointState evolve(const JointState& s, double t) {
  JointState out = s;
  // manifold n_cut+1 would feed |g, n_cut+1>; open the slot if occupied
  if (!out.e.empty() && std::abs(out.e.back()) > 0.0) {
    out.g.push_back(cplx{0.0, 0.0});
    out.e.push_back(cplx{0.0, 0.0});
  }
  const int top = out.n_cut();
  for (int m = 1; m <= top; ++m) {
    const double half = 0.5 * rabi_at(out.params, m - 1) * t;
    const double c = std::cos(half);
    const double sn = std::sin(half);
    const cplx ph = std::polar(1.0, -double(m) * out.params.omega * t);
    const cplx gm = out.g[m];
    const cplx em = out.e[m - 1];
    out.g[m] = ph * (c * gm - cplx{0.0, 1.0} * sn * em);
    out.e[m - 1] = ph * (c * em - cplx{0.0, 1.0} * sn * gm);
  }
  return out;
}

JointState free_evolve(const JointState& s, double tau) {
  JointState out = s;
  for (size_t n = 0; n < out.g.size(); ++n) {
    out.g[n] *= std::polar(1.0, -double(n) * out.params.omega * tau);
    out.e[n] *= std::polar(1.0, -(double(n) + 1.0) * out.params.omega * tau);
  }
  return out;
}

double norm_squared(const JointState& s) {
  double acc = 0.0;
  for (const cplx& a : s.g) acc += std::norm(a);
  for (const cplx& a : s.e) acc += std::norm(a);
  return acc;
}

double excited_population(const JointState& s) {
  double acc = 0.0;
  for (const cplx& a : s.e) acc += std::norm(a);
  return acc;
}

AtomDensity reduce_atom(const JointState& s) {
  AtomDensity rho{};
  double gg = 0.0, ee = 0.0;
  cplx ge{0.0, 0.0};
  for (size_t n = 0; n < s.g.size(); ++n) {
    gg += std::norm(s.g[n]);
    ee += std::norm(s.e[n]);
    ge += s.g[n] * std::conj(s.e[n]);
  }
  rho.gg = gg;
  rho.ee = ee;
  rho.ge = ge;
  rho.eg = std::conj(ge);
  return rho;
}

double coherence_C(const AtomDensity& rho) {
  return std::abs(rho.eg) + std::abs(rho.ge);
}

double success_P(const AtomDensity& rho, double phi) {
  const cplx u = std::polar(1.0, phi);
  return 0.5 * std::real(rho.gg + rho.ee + u * rho.ge + std::conj(u) * rho.eg);
}

double optimal_phase(const AtomDensity& rho) {
  if (std::abs(rho.eg) == 0.0) return 0.0;
  return std::arg(rho.eg);
}

double purity(const AtomDensity& rho) {
  return std::real(rho.gg * rho.gg + rho.ee * rho.ee) + 2.0 * std::norm(rho.ge);
}

std::pair<double, FieldState> project_atom(const JointState& s, double phi) {
  const cplx u = std::polar(1.0, -phi);
  FieldState f;
  f.amps.resize(s.g.size());
  double p = 0.0;
  for (size_t n = 0; n < s.g.size(); ++n) {
    f.amps[n] = (s.g[n] + u * s.e[n]) / std::sqrt(2.0);
    p += std::norm(f.amps[n]);
  }
  if (p < 1e-14)
    throw ConditionError("cannot condition on an outcome of probability " +
                         std::to_string(p));
  const double inv = 1.0 / std::sqrt(p);
  for (cplx& a : f.amps) a *= inv;
  return {p, f};
}

double pair_coherence(int n, double t, const JcmParams& p) {
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
  return std::abs(std::sin(0.5 * rabi_at(p, n) * t) *
                  std::cos(0.5 * rabi_at(p, n - 1) * t));
}

}  // namespace transco
