#pragma once

#include <complex>
#include <span>
#include <vector>

#include "zq2/config.hpp"

namespace zq2 {

enum class Backend { RiemannSiegel, EulerMaclaurin };

inline const char* backend_name(Backend b) {
    return b == Backend::RiemannSiegel ? "riemann-siegel" : "euler-maclaurin";
}

// One critical-line sample. z is Hardy's Z(t), real with |Z(t)| = |zeta(1/2+it)|.
struct ZEvaluation {
    double  t;
    double  z;
    double  theta;       // Riemann-Siegel phase, radians
    Backend backend;
    double  err_bound;   // absolute error estimate
};

// log Gamma on Re z > 0 via the Stirling series with argument shifting.
// Accurate to ~1e-13 relative; exposed for the theta oracle tests.
std::complex<double> log_gamma(std::complex<double> z);

// theta(t) = Im lnGamma(1/4 + it/2) - (t/2) ln pi. Requires t >= 1.
double theta(double t);

// Same, without the domain guard; valid down to t = 0 (used by the
// Euler-Maclaurin backend, whose domain starts at zero).
double theta_unchecked(double t);

// Reference backend: truncated Dirichlet sum plus Euler-Maclaurin tail with a
// rigorous remainder bound <= target_tol. Works for any t >= 0.
ZEvaluation z_euler_maclaurin(double t, double target_tol = 1e-9,
                              long term_cap = 1000000);

// Main-sum Riemann-Siegel formula with n_corrections correction terms.
// Requires t >= t_switch; err_bound = k_rs * t^(-(2n+3)/4).
ZEvaluation z_riemann_siegel(double t, int n_corrections = 2,
                             const RunConfig& cfg = {});

// Correction coefficient C_j(p), j = 0..4, p = frac(sqrt(t/2pi)).
// Exposed for validation against the multiprecision oracle.
double rs_correction_coefficient(int j, double p);

// Backend dispatcher: Euler-Maclaurin below cfg.t_switch, Riemann-Siegel above.
ZEvaluation z(double t, const RunConfig& cfg = {});

// Convenience: just the Z value.
double z_value(double t, const RunConfig& cfg = {});

struct ZetaRatioResult {
    double value;      // product of |zeta(1/2+i a_r)|^2 / |zeta(1/2+i b_r)|^2
    double min_abs_z;  // conditioning: min |Z| over all nodes
};

// Product of squared zeta ratios over node pairs, computed as Z^2(a)/Z^2(b).
// Throws IllConditionedError when a denominator has |Z| < cfg.z_floor.
ZetaRatioResult zeta_ratio_sq(std::span<const double> alphas,
                              std::span<const double> betas,
                              const RunConfig& cfg = {});

// Non-throwing variant used by transform reports: ill-conditioning is the
// caller's to flag. Denominators exactly at a zero yield +inf.
ZetaRatioResult zeta_ratio_sq_unchecked(std::span<const double> alphas,
                                        std::span<const double> betas,
                                        const RunConfig& cfg = {});

struct Oscillator {
    int    n;
    double amplitude;  // 2/sqrt(n)
    double omega;      // cyclic frequency
};

// Frozen local description of Z around a base point x: amplitudes 2/sqrt(n),
// common phase psi(x) = -x/2 - pi/8, frequencies omega_n, and the validity
// window [x, x + window].
struct SpectrumDescriptor {
    double x;
    double tau;              // sqrt(x/2pi)
    double psi;
    std::vector<Oscillator> oscillators;
    double remainder_bound;  // K * x^(-1/4)
    double window;           // V, 0 < V <= x^(1/4)
};

// Build the local spectrum at x >= cfg.x_min. omega_n = ln(tau/n) by default;
// cfg.spectral_omega_raw switches to the raw tau/n form for comparison.
SpectrumDescriptor local_spectrum(double x, const RunConfig& cfg = {});

// Oscillator-sum approximation of Z(t) for t inside the descriptor's window.
double spectral_z(double t, const SpectrumDescriptor& spec);

}  // namespace zq2
