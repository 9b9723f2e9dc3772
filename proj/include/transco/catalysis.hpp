#pragma once

#include "transco/transcoherent.hpp"

namespace transco {

struct CatalysisEvent {
  int index;            // 1-based event number
  double t_star;        // chosen interaction time (units of 1/omega0)
  double p_event;       // conditional success probability
  double p_cumulative;  // running product of p_event
};

struct CatalysisTrace {
  std::vector<CatalysisEvent> events;
  double initial_mean_photon = 0.0;
  FieldState final_field;
  bool aborted = false;  // an event could not be conditioned; trace ends early
};

struct CatalysisOptions {
  double t_hi = 0.0;           // per-event search upper bound; 0 = pi/omega0
  int grid_points = 512;       // coarse-scan intervals before refinement
  bool optimize_phase = true;  // closed-form optimal phi per candidate time
  double fixed_phase = 0.0;    // measurement phase when optimize_phase=false
};

/// Scans [t_lo, t_hi] on a uniform grid and refines the best point by
/// golden-section search to |dt| <= 1e-10/omega0. The objective is the
/// success probability at the closed-form optimal phase; ties break toward
/// smaller t. Returns (t*, P*).
std::pair<double, double> optimize_time(const FieldState& field,
                                        const JcmParams& p, double t_lo,
                                        double t_hi, int grid_points);

/// Reuses one field state to put n_events fresh ground-state atoms into
/// (|g>+e^{i phi}|e>)/sqrt(2), following the success branch of each
/// measurement. Per event the interaction time is optimized over
/// (0, pi/omega0], the atom is measured, and the field is replaced by the
/// success-conditioned remainder. Deterministic; no sampling.
CatalysisTrace run_catalysis(const FieldState& field, int n_events,
                             const JcmParams& p,
                             const CatalysisOptions& opts = {});

/// Runs two catalysts with identical settings for head-to-head comparison.
/// The fields must agree in mean photon number within 5%.
std::pair<CatalysisTrace, CatalysisTrace> compare_catalysts(
    const FieldState& a, const FieldState& b, int n_events, const JcmParams& p,
    const CatalysisOptions& opts = {});

}  // namespace transco
