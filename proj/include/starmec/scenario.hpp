#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "starmec/rng.hpp"

namespace starmec {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline double horizontal_distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

// Wraps an angle into [0, 2pi).
inline double wrap_2pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  int K = 6;           // UDs
  int N = 100;         // STAR-RIS elements
  int N_bar = 10;      // sub-surfaces
  int Q = 5;           // slots per cycle
  double T = 10.0;     // cycle duration, s
  int b = 2;           // phase quantization bits
  double z = 2.0;      // radiation-pattern exponent
  double D_m = 6.0;    // maximum directivity, 2(z+1) for z=2

  Vec3 bs_pos{0.0, 0.0, 10.0};
  Vec3 ris_pos{50.0, 0.0, 1.0};
  double ud_height = 0.0;
  double ud_center_x = 50.0;
  double ud_center_y = 0.0;
  double ud_radius_min = 2.0;
  double ud_radius_max = 7.0;
  double v_min = 1.1;  // m/s
  double v_max = 1.5;

  double D_k = 1e7;             // task size, bits
  double C_k = 600.0;           // cycles per bit
  double bandwidth = 5e6;       // total B, Hz
  double sigma2 = 1e-14;        // noise power, W (-110 dBm)
  double p_max = 0.2;           // W
  double f_total_e = 1e10;      // Hz
  double f_max_loc = 6e8;       // Hz
  double c_loc = 1e-27;         // effective capacitance
  double W = 10.0;              // penalty constant

  double rho0 = 1e-3;           // reference path gain at 1 m
  double alpha1 = 2.0;          // UD-RIS path-loss exponent
  double alpha2 = 2.0;          // RIS-BS path-loss exponent
  double K1 = 10.0;             // Rician factor, UD side
  double K2 = 10.0;             // Rician factor, BS side
  double carrier_lambda = 0.125;    // m (2.4 GHz)
  double direct_alpha = 3.5;        // blocked UD-BS exponent
  double direct_blockage = 0.01;    // extra power attenuation (-20 dB)

  double heading_sigma = 0.3;   // rad, per-slot heading perturbation

  std::uint64_t seed = 1;

  double tau() const { return T / Q; }
  double B_k() const { return bandwidth / K; }

  void validate() const {
    auto fail = [](const std::string& what) { throw ConfigError(what); };
    if (K < 1) fail("K must be >= 1");
    if (N < 1) fail("N must be >= 1");
    if (N_bar < 1) fail("N_bar must be >= 1");
    if (N % N_bar != 0) fail("N must be divisible by N_bar");
    if (Q < 2) fail("Q must be >= 2");
    if (!(T > 0.0)) fail("T must be > 0");
    if (b < 1) fail("b must be >= 1");
    if (!(z > 0.0)) fail("z must be > 0");
    if (!(D_m > 0.0)) fail("D_m must be > 0");
    if (!(D_k > 0.0)) fail("D_k must be > 0");
    if (!(C_k > 0.0)) fail("C_k must be > 0");
    if (!(bandwidth > 0.0)) fail("B must be > 0");
    if (!(sigma2 > 0.0)) fail("sigma2 must be > 0");
    if (!(p_max > 0.0)) fail("p_max must be > 0");
    if (!(f_total_e > 0.0)) fail("f_total_e must be > 0");
    if (!(f_max_loc > 0.0)) fail("f_max_loc must be > 0");
    if (!(c_loc > 0.0)) fail("c_loc must be > 0");
    if (!(rho0 > 0.0)) fail("rho0 must be > 0");
    if (!(carrier_lambda > 0.0)) fail("carrier_lambda must be > 0");
    if (v_min < 0.0 || v_max < v_min) fail("speed range [v_min, v_max] invalid");
    if (ud_radius_min < 0.0 || ud_radius_max < ud_radius_min)
      fail("ud_radius range invalid");
    if (W < 0.0) fail("W must be >= 0");
  }
};

struct UdState {
  Vec3 pos;
  double heading = 0.0;   // mobility direction, rad
  double speed = 0.0;     // m/s
  double alpha_cu = 0.0;  // cumulative offloaded fraction
};

struct Orientation {
  double delta = 0.0;                // current rotation, rad
  double theta0_bs = 0.0;            // BS angle at initial orientation
  std::vector<double> theta0_ud;     // per-UD angles at world init
};

struct World {
  ScenarioConfig cfg;
  std::vector<UdState> uds;
  Orientation orient;
  int slot = 1;  // q in [1, Q]
  Rng rng{0};    // placement + mobility stream
};

struct AngleSet {
  std::vector<double> theta;  // per-UD azimuth in the surface frame, [0, 2pi)
  std::vector<double> phi;    // per-UD elevation, [0, pi/2]
  double theta_b = 0.0;
  double phi_b = 0.0;
};

namespace detail {

// Azimuth of the surface's 0-degree reference half-plane at delta = 0, chosen
// so the reflection side's outward normal points at the BS azimuth; hence
// theta_B^0 = pi/2.
inline double reference_azimuth(const ScenarioConfig& cfg) {
  const double bs_az = std::atan2(cfg.bs_pos.y - cfg.ris_pos.y,
                                  cfg.bs_pos.x - cfg.ris_pos.x);
  return wrap_2pi(bs_az - std::numbers::pi / 2.0);
}

// Angle of a point relative to the surface at initial orientation (delta = 0).
inline double theta0_of(const ScenarioConfig& cfg, const Vec3& p) {
  const double dxy = horizontal_distance(p, cfg.ris_pos);
  const double d3 = distance(p, cfg.ris_pos);
  if (d3 < 1e-9 || dxy < 1e-12)
    throw GeometryError("point co-located with the STAR-RIS");
  const double az = std::atan2(p.y - cfg.ris_pos.y, p.x - cfg.ris_pos.x);
  return wrap_2pi(az - reference_azimuth(cfg));
}

inline double elevation_of(const Vec3& from_ris, const Vec3& p) {
  const double d = distance(p, from_ris);
  if (d < 1e-9) throw GeometryError("point co-located with the STAR-RIS");
  return std::asin(std::abs(from_ris.z - p.z) / d);
}

}  // namespace detail

inline World init_world(const ScenarioConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  World w;
  w.cfg = cfg;
  w.slot = 1;
  w.rng = Rng(derive_seed(seed, 0xA11CE));
  w.uds.resize(cfg.K);
  const double r2min = cfg.ud_radius_min * cfg.ud_radius_min;
  const double r2max = cfg.ud_radius_max * cfg.ud_radius_max;
  for (auto& ud : w.uds) {
    const double r = std::sqrt(w.rng.uniform(r2min, r2max));
    const double psi = w.rng.uniform(0.0, kTwoPi);
    ud.pos = {cfg.ud_center_x + r * std::cos(psi),
              cfg.ud_center_y + r * std::sin(psi), cfg.ud_height};
    ud.heading = w.rng.uniform(0.0, kTwoPi);
    ud.speed = w.rng.uniform(cfg.v_min, cfg.v_max);
    ud.alpha_cu = 0.0;
  }
  w.orient.delta = 0.0;
  w.orient.theta0_bs = detail::theta0_of(cfg, cfg.bs_pos);
  w.orient.theta0_ud.resize(cfg.K);
  for (int k = 0; k < cfg.K; ++k)
    w.orient.theta0_ud[k] = detail::theta0_of(cfg, w.uds[k].pos);
  return w;
}

// Advances every UD by v*tau along its heading, then resamples heading
// (Gaussian perturbation, sigma = heading_sigma) and speed for the next slot.
inline void step_mobility(World& w) {
  const double tau = w.cfg.tau();
  for (auto& ud : w.uds) {
    ud.pos.x += ud.speed * std::cos(ud.heading) * tau;
    ud.pos.y += ud.speed * std::sin(ud.heading) * tau;
    ud.heading = wrap_2pi(ud.heading + w.rng.normal(0.0, w.cfg.heading_sigma));
    ud.speed = w.rng.uniform(w.cfg.v_min, w.cfg.v_max);
  }
}

// Current-slot angles from positions and the rotation angle delta.
inline AngleSet angles(const World& w) {
  AngleSet a;
  a.theta.resize(w.cfg.K);
  a.phi.resize(w.cfg.K);
  const double delta = w.orient.delta;
  for (int k = 0; k < w.cfg.K; ++k) {
    const double t0 = detail::theta0_of(w.cfg, w.uds[k].pos);
    a.theta[k] = wrap_2pi(t0 - delta + kTwoPi);
    a.phi[k] = detail::elevation_of(w.cfg.ris_pos, w.uds[k].pos);
  }
  a.theta_b = wrap_2pi(w.orient.theta0_bs - delta + kTwoPi);
  a.phi_b = detail::elevation_of(w.cfg.ris_pos, w.cfg.bs_pos);
  return a;
}

// 1 iff theta lies in the reflection area [0, pi] (closed), else 0.
inline int zone_indicator(double theta) {
  return (theta >= 0.0 && theta <= std::numbers::pi) ? 1 : 0;
}

// Clamps a requested rotation into [theta_B^0 - pi, theta_B^0] so the BS
// stays in the reflection area.
inline double clamp_rotation(double delta_raw, const Orientation& o) {
  const double lo = o.theta0_bs - std::numbers::pi;
  const double hi = o.theta0_bs;
  return std::clamp(delta_raw, lo, hi);
}

}  // namespace starmec
