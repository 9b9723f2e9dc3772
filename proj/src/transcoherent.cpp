#include "transco/transcoherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace transco {

namespace {

constexpr double kPi = std::numbers::pi;

double rabi_at(const JcmParams& p, int n) {
  return n < 0 ? 0.0 : p.omega0 * std::sqrt(double(n) + 1.0);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// |angle - target| within 1e-12, scaled for multi-turn targets
bool angle_matches(double angle, double target) {
  return std::abs(angle - target) <= 1e-12 * (1.0 + std::abs(target));
}

void validate_spec(const PulseSpec& spec) {
  require(spec.params.omega0 > 0.0, "omega0 must be positive");
  require(spec.k >= 0, "pulse order k must be nonnegative");
  require(spec.n_min >= 0, "n_min must be nonnegative");
  require(spec.n_max > spec.n_min, "need n_max > n_min");
  if (spec.start == AtomLevel::ground) {
    if (spec.k == 0) {
      require(spec.n_min == 0, "ground k=0 requires n_min = 0");
      require(spec.n_max >= 1, "ground k=0 requires n_max >= 1");
      require(angle_matches(rabi_at(spec.params, spec.n_max - 1) * spec.t, kPi),
              "ground k=0 requires Omega_{n_max-1} t = pi");
    } else {
      require(spec.n_min >= 1, "ground k>=1 requires n_min >= 1");
      require(static_cast<long long>(spec.n_max) * (2 * spec.k) * (2 * spec.k) ==
                  static_cast<long long>(spec.n_min) * (2 * spec.k + 1) *
                      (2 * spec.k + 1),
              "ground band indices must satisfy n_max (2k)^2 = n_min (2k+1)^2");
      require(angle_matches(rabi_at(spec.params, spec.n_min - 1) * spec.t,
                            2.0 * spec.k * kPi),
              "ground k>=1 requires Omega_{n_min-1} t = 2k pi");
      require(angle_matches(rabi_at(spec.params, spec.n_max - 1) * spec.t,
                            (2.0 * spec.k + 1.0) * kPi),
              "ground k>=1 requires Omega_{n_max-1} t = (2k+1) pi");
    }
  } else {
    require(static_cast<long long>(spec.n_max + 1) * (2 * spec.k + 1) *
                    (2 * spec.k + 1) ==
                static_cast<long long>(spec.n_min + 1) * (2 * spec.k + 2) *
                    (2 * spec.k + 2),
            "excited band indices must satisfy "
            "(n_max+1)(2k+1)^2 = (n_min+1)(2k+2)^2");
    require(angle_matches(rabi_at(spec.params, spec.n_min) * spec.t,
                          (2.0 * spec.k + 1.0) * kPi),
            "excited requires Omega_{n_min} t = (2k+1) pi");
    require(angle_matches(rabi_at(spec.params, spec.n_max) * spec.t,
                          (2.0 * spec.k + 2.0) * kPi),
            "excited requires Omega_{n_max} t = (2k+2) pi");
  }
}

// Fills amps[n_min..n_max] with the ground-start recursion
//   c_{n+1} = c_n e^{i omega t} cos(Omega_{n-1} t/2) / (-i sin(Omega_n t/2)),
// renormalizing the running prefix every 32 steps so large bands never
// overflow. Throws DegenerateSpecError when an interior manifold sits on an
// integer multiple of a pi pulse.
void fill_ground_band(std::vector<cplx>& amps, int n_min, int n_max, double t,
                      const JcmParams& p) {
  amps[n_min] = 1.0;
  const cplx rot = std::polar(1.0, p.omega * t);
  for (int n = n_min; n < n_max; ++n) {
    const double sn = std::sin(0.5 * rabi_at(p, n) * t);
    if (std::abs(sn) < 1e-12)
      throw DegenerateSpecError(
          "recursion diverges: manifold " + std::to_string(n + 1) +
          " sits on an integer multiple of a pi pulse");
    const cplx num = rot * std::cos(0.5 * rabi_at(p, n - 1) * t);
    amps[n + 1] = amps[n] * num / (cplx{0.0, -1.0} * sn);
    if (((n - n_min) & 31) == 31) {
      double m = 0.0;
      for (int j = n_min; j <= n + 1; ++j) m = std::max(m, std::abs(amps[j]));
      for (int j = n_min; j <= n + 1; ++j) amps[j] /= m;
    }
  }
}

// Excited-start recursion:
//   c_n = c_{n-1} (-i e^{i omega t} sin(Omega_{n-1} t/2)) / cos(Omega_n t/2).
void fill_excited_band(std::vector<cplx>& amps, int n_min, int n_max, double t,
                       const JcmParams& p) {
  amps[n_min] = 1.0;
  const cplx rot = std::polar(1.0, p.omega * t);
  for (int n = n_min + 1; n <= n_max; ++n) {
    const double cs = std::cos(0.5 * rabi_at(p, n) * t);
    if (std::abs(cs) < 1e-12)
      throw DegenerateSpecError(
          "recursion diverges: manifold " + std::to_string(n + 1) +
          " sits on an odd multiple of a pi/2 pulse");
    const cplx num = cplx{0.0, -1.0} * rot * std::sin(0.5 * rabi_at(p, n - 1) * t);
    amps[n] = amps[n - 1] * num / cs;
    if (((n - n_min) & 31) == 31) {
      double m = 0.0;
      for (int j = n_min; j <= n; ++j) m = std::max(m, std::abs(amps[j]));
      for (int j = n_min; j <= n; ++j) amps[j] /= m;
    }
  }
}

// global phase fixed so the first occupied amplitude is real positive
void fix_phase(FieldState& s) {
  for (const cplx& a : s.amps) {
    if (std::abs(a) > 0.0) {
      const cplx u = std::polar(1.0, -std::arg(a));
      for (cplx& b : s.amps) b *= u;
      return;
    }
  }
}

}  // namespace

PulseSpec ground_spec(int k, int n_min, int n_max, const JcmParams& p) {
  PulseSpec spec;
  spec.start = AtomLevel::ground;
  spec.k = k;
  spec.n_min = n_min;
  spec.n_max = n_max;
  spec.params = p;
  require(p.omega0 > 0.0, "omega0 must be positive");
  if (k == 0) {
    require(n_min == 0, "ground k=0 requires n_min = 0");
    require(n_max >= 1, "ground k=0 requires n_max >= 1");
    spec.t = kPi / rabi_at(p, n_max - 1);
  } else {
    require(n_min >= 1, "ground k>=1 requires n_min >= 1");
    spec.t = 2.0 * k * kPi / rabi_at(p, n_min - 1);
  }
  validate_spec(spec);
  return spec;
}

PulseSpec excited_spec(int k, int n_min, int n_max, const JcmParams& p) {
  PulseSpec spec;
  spec.start = AtomLevel::excited;
  spec.k = k;
  spec.n_min = n_min;
  spec.n_max = n_max;
  spec.params = p;
  require(p.omega0 > 0.0, "omega0 must be positive");
  spec.t = (2.0 * k + 1.0) * kPi / rabi_at(p, n_min);
  validate_spec(spec);
  return spec;
}

FieldState build_ground(const PulseSpec& spec) {
  require(spec.start == AtomLevel::ground, "spec is not ground-start");
  validate_spec(spec);
  FieldState s;
  s.amps.assign(static_cast<size_t>(spec.n_max) + 1, cplx{0.0, 0.0});
  fill_ground_band(s.amps, spec.n_min, spec.n_max, spec.t, spec.params);
  renormalize(s);
  fix_phase(s);
  return s;
}

FieldState build_excited(const PulseSpec& spec) {
  require(spec.start == AtomLevel::excited, "spec is not excited-start");
  validate_spec(spec);
  FieldState s;
  s.amps.assign(static_cast<size_t>(spec.n_max) + 1, cplx{0.0, 0.0});
  fill_excited_band(s.amps, spec.n_min, spec.n_max, spec.t, spec.params);
  renormalize(s);
  fix_phase(s);
  return s;
}

FieldState build_truncated(double t, const JcmParams& p) {
  require(t > 0.0, "interaction time must be positive");
  require(p.omega0 > 0.0, "omega0 must be positive");
  const double ratio = kPi / (p.omega0 * t);
  const double r = ratio * ratio;
  // snap to the exact family times, where ceil would be exact-but-for-rounding
  int n_max;
  if (std::abs(r - std::round(r)) < 1e-9)
    n_max = static_cast<int>(std::round(r));
  else
    n_max = static_cast<int>(std::ceil(r));
  n_max = std::max(n_max, 1);
  return build_truncated_at(t, n_max, p);
}

FieldState build_truncated_at(double t, int n_max, const JcmParams& p) {
  require(t > 0.0, "interaction time must be positive");
  require(n_max >= 1, "cutoff must be >= 1");
  FieldState s;
  s.amps.assign(static_cast<size_t>(n_max) + 1, cplx{0.0, 0.0});
  fill_ground_band(s.amps, 0, n_max, t, p);
  renormalize(s);
  fix_phase(s);
  return s;
}

FieldState build_concatenated(const std::vector<PulseSpec>& blocks,
                              const std::vector<cplx>& weights) {
  require(!blocks.empty(), "need at least one block");
  require(blocks.size() == weights.size(),
          "one weight per block is required");
  const AtomLevel start = blocks.front().start;
  const double t = blocks.front().t;
  const JcmParams p = blocks.front().params;
  for (const PulseSpec& b : blocks) {
    require(b.start == start, "blocks must share the atom start level");
    require(std::abs(b.t - t) <= 1e-12 * (1.0 + std::abs(t)),
            "blocks must share one evolution time");
    require(b.params.omega0 == p.omega0 && b.params.omega == p.omega,
            "blocks must share parameters");
    validate_spec(b);
  }
  // bands must not overlap
  std::vector<size_t> order(blocks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return blocks[a].n_min < blocks[b].n_min;
  });
  for (size_t i = 1; i < order.size(); ++i)
    require(blocks[order[i - 1]].n_max < blocks[order[i]].n_min,
            "bands overlap");

  int top = 0;
  for (const PulseSpec& b : blocks) top = std::max(top, b.n_max);
  FieldState s;
  s.amps.assign(static_cast<size_t>(top) + 1, cplx{0.0, 0.0});
  std::vector<cplx> band(s.amps.size());
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::fill(band.begin(), band.end(), cplx{0.0, 0.0});
    if (start == AtomLevel::ground)
      fill_ground_band(band, blocks[i].n_min, blocks[i].n_max, t, p);
    else
      fill_excited_band(band, blocks[i].n_min, blocks[i].n_max, t, p);
    double n2 = 0.0;
    for (int j = blocks[i].n_min; j <= blocks[i].n_max; ++j)
      n2 += std::norm(band[j]);
    const cplx scale = weights[i] / std::sqrt(n2);
    for (int j = blocks[i].n_min; j <= blocks[i].n_max; ++j)
      s.amps[j] += scale * band[j];
  }
  renormalize(s);
  fix_phase(s);
  return s;
}

double stationary_time(double nbar, const JcmParams& p) {
  require(nbar >= 0.0, "nbar must be nonnegative");
  require(p.omega0 > 0.0, "omega0 must be positive");
  // pi (sqrt(nbar+1) - sqrt(nbar)) without cancellation
  return kPi / (p.omega0 * (std::sqrt(nbar + 1.0) + std::sqrt(nbar)));
}

double peak_photon(double t, const JcmParams& p) {
  require(p.omega0 > 0.0, "omega0 must be positive");
  const double x = p.omega0 * t;
  if (!(x > 0.0) || !(x < kPi))
    throw std::invalid_argument("peak_photon needs 0 < omega0 t < pi");
  const double root = kPi / (2.0 * x) - x / (2.0 * kPi);
  return root * root;
}

}  // namespace transco
