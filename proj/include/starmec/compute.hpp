#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "starmec/scenario.hpp"

namespace starmec {

struct OffloadCost {
  double t_off = 0.0;  // s
  double e_off = 0.0;  // J
  bool feasible = true;
};

// t = alpha D / R, E = t p. alpha > 0 with no rate is the infeasible-offload
// signal that feeds the P2 penalty.
inline OffloadCost offload_time_energy(double alpha, double d_bits,
                                       double rate, double p) {
  OffloadCost c;
  if (alpha <= 0.0) return c;
  if (rate <= 0.0) {
    c.feasible = false;
    return c;
  }
  c.t_off = alpha * d_bits / rate;
  c.e_off = c.t_off * p;
  return c;
}

// f* = D C (1 - eta) / T: the smallest frequency finishing local work
// exactly at the cycle boundary.
inline double optimal_local_freq(double d_bits, double cycles_per_bit,
                                 double eta, double T) {
  return d_bits * cycles_per_bit * (1.0 - eta) / T;
}

// E_loc = c f^2 D C (1 - eta)
inline double local_energy(double c_loc, double f_loc, double d_bits,
                           double cycles_per_bit, double eta) {
  return c_loc * f_loc * f_loc * d_bits * cycles_per_bit * (1.0 - eta);
}

// f* = D C eta / ((Q - 1) tau): edge execution spread over the Q-1 slots
// following the first.
inline double optimal_edge_freq(double d_bits, double cycles_per_bit,
                                double eta, int Q, double tau) {
  return d_bits * cycles_per_bit * eta / ((Q - 1) * tau);
}

// p_hat = sigma^2 (2^{alpha D / (tau B_k)} - 1) / |h|^2: the minimum power
// that finishes the slot's offload within tau.
inline double min_power(double alpha, double d_bits, double b_k, double tau,
                        std::complex<double> h, double sigma2) {
  if (alpha <= 0.0) return 0.0;
  const double h2 = std::norm(h);
  if (h2 <= 0.0)
    return std::numeric_limits<double>::infinity();
  return sigma2 * (std::exp2(alpha * d_bits / (tau * b_k)) - 1.0) / h2;
}

// The alpha at which p_hat reaches p_max, capped at 1.
inline double max_offload_ratio(double p_max, std::complex<double> h,
                                double sigma2, double b_k, double tau,
                                double d_bits) {
  const double h2 = std::norm(h);
  if (h2 <= 0.0) return 0.0;
  const double r = tau * b_k * std::log2(1.0 + p_max * h2 / sigma2) / d_bits;
  return std::min(1.0, r);
}

// E_off as a function of p: alpha D p / (B_k log2(1 + p |h|^2 / sigma^2)).
inline double offload_energy_at(double alpha, double d_bits, double b_k,
                                double h2, double sigma2, double p) {
  return alpha * d_bits * p / (b_k * std::log2(1.0 + p * h2 / sigma2));
}

struct DinkelbachResult {
  double p = 0.0;
  double y = 0.0;       // converged ratio value (J)
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> y_history;
};

// Minimizes E_off(p) over [p_hat, p_max] by Dinkelbach's reduction: the
// parameterized subproblem min_p alpha D p - y B_k log2(1 + p |h|^2/sigma^2)
// has the closed-form stationary point p = y B_k / (alpha D ln 2) -
// sigma^2/|h|^2, clamped to the box; y is updated to the ratio at the new p
// until the subtractive residual drops below eps.
inline DinkelbachResult dinkelbach_power(double alpha, double d_bits,
                                         double b_k, std::complex<double> h,
                                         double sigma2, double p_hat,
                                         double p_max, double eps = 1e-8,
                                         int t_max = 50) {
  if (alpha <= 0.0)
    throw std::invalid_argument("dinkelbach_power: alpha must be > 0");
  if (p_hat > p_max)
    throw std::invalid_argument("dinkelbach_power: p_hat exceeds p_max");
  const double h2 = std::norm(h);
  const double c = h2 / sigma2;
  const double num_coeff = alpha * d_bits;

  auto ratio = [&](double p) {
    return offload_energy_at(alpha, d_bits, b_k, h2, sigma2, p);
  };
  auto subtractive = [&](double p, double y) {
    return num_coeff * p - y * b_k * std::log2(1.0 + p * c);
  };

  DinkelbachResult res;
  double p = p_hat;
  double y = ratio(p);
  res.y_history.push_back(y);
  for (int t = 1; t <= t_max; ++t) {
    // closed-form inner solve of the subtractive problem
    double p_star = y * b_k / (num_coeff * std::numbers::ln2) - 1.0 / c;
    p_star = std::clamp(p_star, p_hat, p_max);
    const double resid = std::abs(subtractive(p_star, y));
    res.iterations = t;
    p = p_star;
    y = ratio(p);
    res.y_history.push_back(y);
    if (resid <= eps) {
      res.residual = resid;
      break;
    }
    res.residual = resid;
  }
  res.p = p;
  res.y = y;
  return res;
}

// E_k = E_loc + sum_q E_off[q]; system total over UDs.
inline double total_energy(const std::vector<double>& e_loc,
                           const std::vector<std::vector<double>>& e_off) {
  double total = 0.0;
  for (std::size_t k = 0; k < e_loc.size(); ++k) {
    double ek = e_loc[k];
    if (k < e_off.size())
      for (double e : e_off[k]) ek += e;
    total += ek;
  }
  return total;
}

}  // namespace starmec
