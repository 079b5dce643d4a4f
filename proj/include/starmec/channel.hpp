#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "starmec/protocol.hpp"
#include "starmec/rng.hpp"
#include "starmec/scenario.hpp"

namespace starmec {

// One slot's fading draws. Magnitudes use the surface-center distance
// (far field); LoS phases keep per-element offsets along a uniform linear
// layout with lambda/2 spacing so beamforming stays meaningful.
struct ChannelRealization {
  std::vector<std::vector<std::complex<double>>> h_ud_ris;  // K x N
  std::vector<std::complex<double>> v_ris_bs;               // N
  std::vector<std::complex<double>> h_ud_bs;                // K (blocked link)
  int slot = 0;
};

namespace detail {

// Rician element vector toward a point at (theta, phi) in the surface frame.
inline void rician_vector(std::vector<std::complex<double>>& out, int N,
                          double dist, double theta, double phi,
                          double path_exp, double rician_k, double rho0,
                          double lambda_c, Rng& rng) {
  out.resize(N);
  const double amp = std::sqrt(rho0 / std::pow(dist, path_exp));
  const double w_los = std::sqrt(rician_k / (1.0 + rician_k));
  const double w_nlos = std::sqrt(1.0 / (1.0 + rician_k));
  const double spacing = lambda_c / 2.0;
  const double proj = std::cos(phi) * std::cos(theta);
  for (int n = 0; n < N; ++n) {
    const double off = (static_cast<double>(n) - 0.5 * (N - 1)) * spacing;
    const double d_n = dist - off * proj;
    const double ph = -kTwoPi * d_n / lambda_c;
    const std::complex<double> los{std::cos(ph), std::sin(ph)};
    out[n] = amp * (w_los * los + w_nlos * rng.cgaussian());
  }
}

}  // namespace detail

// Draws the slot's UD->RIS vectors, RIS->BS vector, and blocked direct
// scalars. Consumes a fixed number of rng draws regardless of geometry.
inline ChannelRealization draw_channels(const World& w, Rng& rng) {
  const auto& cfg = w.cfg;
  const AngleSet ang = angles(w);
  ChannelRealization r;
  r.slot = w.slot;
  r.h_ud_ris.resize(cfg.K);
  r.h_ud_bs.resize(cfg.K);
  for (int k = 0; k < cfg.K; ++k) {
    const double d = distance(w.uds[k].pos, cfg.ris_pos);
    detail::rician_vector(r.h_ud_ris[k], cfg.N, d, ang.theta[k], ang.phi[k],
                          cfg.alpha1, cfg.K1, cfg.rho0, cfg.carrier_lambda,
                          rng);
  }
  const double d_rb = distance(cfg.bs_pos, cfg.ris_pos);
  detail::rician_vector(r.v_ris_bs, cfg.N, d_rb, ang.theta_b, ang.phi_b,
                        cfg.alpha2, cfg.K2, cfg.rho0, cfg.carrier_lambda, rng);
  for (int k = 0; k < cfg.K; ++k) {
    const double d = distance(w.uds[k].pos, cfg.bs_pos);
    const double amp =
        std::sqrt(cfg.direct_blockage * cfg.rho0 / std::pow(d, cfg.direct_alpha));
    r.h_ud_bs[k] = amp * rng.cgaussian();
  }
  return r;
}

// g_k = D_m^2 |sin(theta_k) cos(phi_k) sin(theta_B) cos(phi_B)|^z
inline double star_gain_scalar(double theta_k, double phi_k, double theta_b,
                               double phi_b, double z, double d_m) {
  const double s = std::abs(std::sin(theta_k) * std::cos(phi_k) *
                            std::sin(theta_b) * std::cos(phi_b));
  return d_m * d_m * std::pow(s, z);
}

inline double star_gain_scalar(const AngleSet& a, int k, double z,
                               double d_m) {
  return star_gain_scalar(a.theta[k], a.phi[k], a.theta_b, a.phi_b, z, d_m);
}

// h_k = v^H (g_k Phi_m) h_{k,R} + h_{k,B}, with Phi_m picked by the zone.
inline std::complex<double> effective_channel(const ChannelRealization& real,
                                              const CoefficientMatrices& m,
                                              double gain, int k, int u_k) {
  const auto& h = real.h_ud_ris[k];
  const auto& phi = u_k ? m.phi_r : m.phi_t;
  if (h.size() != real.v_ris_bs.size() || h.size() != phi.size())
    throw std::logic_error("effective_channel: dimension mismatch");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t n = 0; n < h.size(); ++n)
    acc += std::conj(real.v_ris_bs[n]) * phi[n] * h[n];
  return gain * acc + real.h_ud_bs[k];
}

// R_k = B_k log2(1 + p |h|^2 / sigma^2), bits/s.
inline double achievable_rate(std::complex<double> h, double p, double b_k,
                              double sigma2) {
  const double snr = p * std::norm(h) / sigma2;
  return b_k * std::log2(1.0 + snr);
}

}  // namespace starmec
