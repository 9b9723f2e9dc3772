#include "transco/catalysis.hpp"

#include <cmath>
#include <numbers>

namespace transco {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// rho_eg of evolve(|g> (x) field, t); only the off-diagonal element is
// needed by the optimizer, so the evolved state is never materialized.
cplx evolved_rho_eg(const FieldState& field, const JcmParams& p, double t) {
  const int n_cut = field.n_cut();
  // e_n comes from manifold n+1, g_n from manifold n; since the atom starts
  // in |g>, e_n(t) = -i e^{-i(n+1) omega t} sin(Omega_n t/2) c_{n+1} and
  // g_n(t) = e^{-i n omega t} cos(Omega_{n-1} t/2) c_n.
  cplx acc{0.0, 0.0};
  for (int n = 0; n < n_cut; ++n) {
    const double s = std::sin(0.5 * p.omega0 * std::sqrt(double(n) + 1.0) * t);
    const double c =
        n == 0 ? 1.0 : std::cos(0.5 * p.omega0 * std::sqrt(double(n)) * t);
    acc += field.amps[n + 1] * std::conj(field.amps[n]) * (s * c);
  }
  return cplx{0.0, -1.0} * std::polar(1.0, -p.omega * t) * acc;
}

double objective(const FieldState& field, const JcmParams& p, double t,
                 bool optimize_phase, double fixed_phase) {
  const cplx eg = evolved_rho_eg(field, p, t);
  if (optimize_phase) return 0.5 + std::abs(eg);
  return 0.5 + std::real(std::polar(1.0, -fixed_phase) * eg);
}

std::pair<double, double> optimize_time_impl(const FieldState& field,
                                             const JcmParams& p, double t_lo,
                                             double t_hi, int grid_points,
                                             bool optimize_phase,
                                             double fixed_phase) {
  if (!(t_lo < t_hi)) throw std::invalid_argument("empty time range");
  if (grid_points < 2) throw std::invalid_argument("need at least 2 grid points");
  const auto f = [&](double t) {
    return objective(field, p, t, optimize_phase, fixed_phase);
  };
  // coarse scan, ties kept at the smaller time
  int best = 0;
  double best_val = f(t_lo);
  const double h = (t_hi - t_lo) / grid_points;
  for (int i = 1; i <= grid_points; ++i) {
    const double v = f(t_lo + i * h);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  // golden-section refinement around the best sample; exact ties shrink the
  // bracket symmetrically so plateaus at double precision stay centered
  double a = t_lo + std::max(0, best - 1) * h;
  double b = t_lo + std::min(grid_points, best + 1) * h;
  const double dt_tol = 1e-10 / p.omega0;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 60 && (b - a) > dt_tol; ++it) {
    if (f1 == f2) {
      a = x1;
      b = x2;
      x1 = b - kGolden * (b - a);
      x2 = a + kGolden * (b - a);
      f1 = f(x1);
      f2 = f(x2);
    } else if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    }
  }
  double t_star = a;
  double p_star = f(a);
  for (double cand : {0.5 * (a + b), b}) {
    const double v = f(cand);
    if (v > p_star) {
      p_star = v;
      t_star = cand;
    }
  }
  // a flat objective ties back to the smallest admissible time
  if (f(t_lo) == p_star) return {t_lo, p_star};
  return {t_star, p_star};
}

}  // namespace

std::pair<double, double> optimize_time(const FieldState& field,
                                        const JcmParams& p, double t_lo,
                                        double t_hi, int grid_points) {
  return optimize_time_impl(field, p, t_lo, t_hi, grid_points, true, 0.0);
}

CatalysisTrace run_catalysis(const FieldState& field, int n_events,
                             const JcmParams& p, const CatalysisOptions& opts) {
  if (n_events < 1) throw std::invalid_argument("need at least one event");
  CatalysisTrace trace;
  trace.initial_mean_photon = mean_photon(field);
  FieldState current = field;
  double cumulative = 1.0;
  for (int i = 1; i <= n_events; ++i) {
    const auto [t_star, p_star] =
        optimize_time_impl(current, p, 0.0, opts.t_hi > 0.0 ? opts.t_hi : kPi / p.omega0,
                           opts.grid_points, opts.optimize_phase,
                           opts.fixed_phase);
    const JointState evolved = evolve(joint_ground(current, p), t_star);
    const double phi = opts.optimize_phase
                           ? optimal_phase(reduce_atom(evolved))
                           : opts.fixed_phase;
    double p_event = 0.0;
    try {
      auto [prob, conditioned] = project_atom(evolved, phi);
      p_event = prob;
      // the atom starts in |g>, so no amplitude can reach |n_cut + 1>
      if (conditioned.amps.size() != current.amps.size())
        throw std::logic_error("field array grew during catalysis");
      current = std::move(conditioned);
    } catch (const ConditionError&) {
      trace.aborted = true;
      break;
    }
    cumulative *= p_event;
    trace.events.push_back(CatalysisEvent{i, t_star, p_event, cumulative});
  }
  trace.final_field = std::move(current);
  return trace;
}

std::pair<CatalysisTrace, CatalysisTrace> compare_catalysts(
    const FieldState& a, const FieldState& b, int n_events, const JcmParams& p,
    const CatalysisOptions& opts) {
  const double na = mean_photon(a);
  const double nb = mean_photon(b);
  if (std::abs(na - nb) > 0.05 * std::max(na, nb))
    throw std::invalid_argument(
        "catalysts must agree in mean photon number within 5%");
  return {run_catalysis(a, n_events, p, opts),
          run_catalysis(b, n_events, p, opts)};
}

}  // namespace transco
