#pragma once

#include <string>
#include <vector>

#include "transco/jcm.hpp"

namespace transco {

struct CheckResult {
  std::string name;
  double deviation;  // measured worst-case deviation
  double threshold;  // pass iff deviation <= threshold
  bool pass;
};

/// Runs the full invariant suite. Identity-style checks use the supplied
/// tolerance as their threshold; checks with inherent physical bounds keep
/// their fixed thresholds.
std::vector<CheckResult> run_verification(double tol);

/// Independent oracle: RK4 integration of i d/dt psi = H psi with the full
/// Hamiltonian H = omega (a^dag a + |e><e|) + (omega0/2)(a sigma+ + a^dag
/// sigma-). Used to cross-check the closed-form evolution; deliberately
/// shares no code with evolve().
JointState integrate_schrodinger(const JointState& s, double t, double dt);

}  // namespace transco
