#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "starmec/scenario.hpp"

namespace starmec {

enum class Protocol { ES, MS, TS };

inline const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::ES: return "es";
    case Protocol::MS: return "ms";
    case Protocol::TS: return "ts";
  }
  return "?";
}

inline Protocol protocol_from_name(const std::string& s) {
  if (s == "es" || s == "ES") return Protocol::ES;
  if (s == "ms" || s == "MS") return Protocol::MS;
  if (s == "ts" || s == "TS") return Protocol::TS;
  throw ConfigError("unknown protocol: " + s);
}

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The b-bit discrete phase set {0, 2^{1-b} pi, ..., (2 - 2^{1-b}) pi}.
struct PhaseSet {
  int bits = 0;
  double spacing = 0.0;           // varsigma = pi / 2^{b-1}
  std::vector<double> values;

  static PhaseSet make(int b) {
    if (b < 1) throw ConfigError("b must be >= 1");
    PhaseSet s;
    s.bits = b;
    const int count = 1 << b;
    s.spacing = std::numbers::pi / static_cast<double>(1 << (b - 1));
    s.values.resize(count);
    for (int i = 0; i < count; ++i)
      s.values[i] = static_cast<double>(i) * s.spacing;
    return s;
  }
};

// Per-protocol STAR-RIS control state, one entry per sub-surface.
struct StarConfig {
  Protocol kind = Protocol::ES;
  std::vector<int> phase_idx_r;     // in [0, 2^b); TS reuses this block
  std::vector<int> phase_idx_t;     // ES/MS only
  std::vector<double> amplitudes_r; // ES: [0,1]; MS: {0,1}
  int lambda_r = 0;                 // TS only
  int lambda_t = 0;
};

// Diagonal transmission/reflection coefficients stored as length-N vectors.
// pow_r/pow_t carry the exact squared amplitudes (beta or lambda) so that
// the per-element energy-conservation identity can be checked exactly.
struct CoefficientMatrices {
  std::vector<std::complex<double>> phi_r, phi_t;
  std::vector<double> pow_r, pow_t;
};

// Repeats each sub-surface value over its N/N_bar contiguous elements.
template <typename T>
std::vector<T> expand_groups(const std::vector<T>& sub_values, int N) {
  const int n_bar = static_cast<int>(sub_values.size());
  if (n_bar < 1 || N % n_bar != 0)
    throw ConfigError("N must be divisible by the sub-surface count");
  const int group = N / n_bar;
  std::vector<T> out;
  out.reserve(N);
  for (const T& v : sub_values)
    for (int i = 0; i < group; ++i) out.push_back(v);
  return out;
}

// Table II constraint rows. Violations are data, not faults.
inline std::vector<std::string> validate(const StarConfig& cfg, int bits,
                                         int n_bar) {
  std::vector<std::string> v;
  const int phases = 1 << bits;
  auto check_phases = [&](const std::vector<int>& idx, const char* name) {
    if (static_cast<int>(idx.size()) != n_bar) {
      v.push_back(std::string(name) + ": expected " + std::to_string(n_bar) +
                  " sub-surface entries, got " + std::to_string(idx.size()));
      return;
    }
    for (int i = 0; i < n_bar; ++i)
      if (idx[i] < 0 || idx[i] >= phases)
        v.push_back(std::string(name) + "[" + std::to_string(i) +
                    "] outside [0, 2^b)");
  };
  check_phases(cfg.phase_idx_r, "phase_idx_r");
  if (cfg.kind != Protocol::TS) check_phases(cfg.phase_idx_t, "phase_idx_t");

  switch (cfg.kind) {
    case Protocol::ES:
      if (static_cast<int>(cfg.amplitudes_r.size()) != n_bar)
        v.push_back("amplitudes_r: wrong length");
      for (std::size_t i = 0; i < cfg.amplitudes_r.size(); ++i)
        if (!(cfg.amplitudes_r[i] >= 0.0 && cfg.amplitudes_r[i] <= 1.0))
          v.push_back("amplitudes_r[" + std::to_string(i) +
                      "] outside [0,1]");
      break;
    case Protocol::MS:
      if (static_cast<int>(cfg.amplitudes_r.size()) != n_bar)
        v.push_back("amplitudes_r: wrong length");
      for (std::size_t i = 0; i < cfg.amplitudes_r.size(); ++i)
        if (cfg.amplitudes_r[i] != 0.0 && cfg.amplitudes_r[i] != 1.0)
          v.push_back("amplitudes_r[" + std::to_string(i) +
                      "] amplitude not binary");
      break;
    case Protocol::TS:
      if (cfg.lambda_r != 0 && cfg.lambda_r != 1)
        v.push_back("lambda_r not binary");
      if (cfg.lambda_t != 0 && cfg.lambda_t != 1)
        v.push_back("lambda_t not binary");
      if (cfg.lambda_r + cfg.lambda_t != 1)
        v.push_back("lambda_t + lambda_r != 1");
      break;
  }
  return v;
}

// i_k = XNOR(lambda_r, u_k): UD k is served iff the surface mode matches
// its zone.
inline int ts_serving_indicator(int lambda_r, int u_k) {
  return 1 - (lambda_r ^ u_k);
}

inline CoefficientMatrices build_matrices(const StarConfig& cfg,
                                          const PhaseSet& phase_set, int N) {
  const int n_bar = static_cast<int>(cfg.phase_idx_r.size());
  const auto violations = validate(cfg, phase_set.bits, n_bar);
  if (!violations.empty())
    throw ProtocolError("invalid STAR-RIS config: " + violations.front());

  CoefficientMatrices m;
  m.phi_r.resize(N);
  m.phi_t.resize(N);
  m.pow_r.resize(N);
  m.pow_t.resize(N);

  const auto idx_r = expand_groups(cfg.phase_idx_r, N);
  if (cfg.kind == Protocol::TS) {
    for (int n = 0; n < N; ++n) {
      const double phase = phase_set.values[idx_r[n]];
      const std::complex<double> e{std::cos(phase), std::sin(phase)};
      m.phi_r[n] = static_cast<double>(cfg.lambda_r) * e;
      m.phi_t[n] = static_cast<double>(cfg.lambda_t) * e;
      m.pow_r[n] = static_cast<double>(cfg.lambda_r);
      m.pow_t[n] = static_cast<double>(cfg.lambda_t);
    }
    return m;
  }

  const auto idx_t = expand_groups(cfg.phase_idx_t, N);
  const auto beta_r = expand_groups(cfg.amplitudes_r, N);
  for (int n = 0; n < N; ++n) {
    const double br = beta_r[n];
    const double bt = 1.0 - br;
    const double pr = phase_set.values[idx_r[n]];
    const double pt = phase_set.values[idx_t[n]];
    m.phi_r[n] = std::sqrt(br) * std::complex<double>{std::cos(pr), std::sin(pr)};
    m.phi_t[n] = std::sqrt(bt) * std::complex<double>{std::cos(pt), std::sin(pt)};
    m.pow_r[n] = br;
    m.pow_t[n] = bt;
  }
  return m;
}

}  // namespace starmec
