#include "zq2/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "zq2/constants.hpp"
#include "zq2/errors.hpp"

namespace zq2 {
namespace {

// Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..12.
constexpr std::array<double, 12> kStirling = {
    1.0 / 12,
    -1.0 / 360,
    1.0 / 1260,
    -1.0 / 1680,
    1.0 / 1188,
    -691.0 / 360360,
    1.0 / 156,
    -3617.0 / 122400,
    43867.0 / 244188,
    -174611.0 / 125400,
    854513.0 / 63756,
    -236364091.0 / 1506960,
};

constexpr double kHalfLn2Pi = 0.91893853320467274178032973640561764;

// B_{2k}/(2k)! for the Euler-Maclaurin tail, via zeta(2k)/(2pi)^{2k}.
// Exact pi-power forms for small k, direct sums (fast-converging) beyond.
double bern_over_fact(int k) {
    static const std::vector<double> table = [] {
        std::vector<double> v(64, 0.0);
        const double pi2 = kPi * kPi;
        std::array<double, 6> zeta_even = {
            0.0,
            pi2 / 6.0,
            pi2 * pi2 / 90.0,
            pi2 * pi2 * pi2 / 945.0,
            pi2 * pi2 * pi2 * pi2 / 9450.0,
            pi2 * pi2 * pi2 * pi2 * pi2 / 93555.0,
        };
        double tp = 1.0;  // (2pi)^{2k}
        for (int k = 1; k < 64; ++k) {
            tp *= kTwoPi * kTwoPi;
            double z;
            if (k <= 5) {
                z = zeta_even[k];
            } else {
                z = 0.0;
                for (int n = 40; n >= 1; --n) z += std::pow(double(n), -2.0 * k);
                // integral + midpoint tail corrections past n = 40
                z += std::pow(40.0, 1.0 - 2.0 * k) / (2.0 * k - 1.0) -
                     0.5 * std::pow(40.0, -2.0 * k);
            }
            v[k] = 2.0 * (k % 2 == 1 ? 1.0 : -1.0) * z / tp;
        }
        return v;
    }();
    return table.at(k);
}

// ln n and 1/sqrt(n) tables for the Riemann-Siegel main sum.
constexpr int kTermTable = 4096;
struct TermTables {
    std::vector<double> ln, rsqrt;
    TermTables() : ln(kTermTable + 1), rsqrt(kTermTable + 1) {
        for (int n = 1; n <= kTermTable; ++n) {
            ln[n] = std::log(double(n));
            rsqrt[n] = 1.0 / std::sqrt(double(n));
        }
    }
};

const TermTables& term_tables() {
    static const TermTables t;
    return t;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() <= 0.0) throw DomainError("log_gamma: Re z must be positive");
    std::complex<double> shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const std::complex<double> lz = std::log(z);
    std::complex<double> acc = (z - 0.5) * lz - z + kHalfLn2Pi;
    const std::complex<double> inv2 = 1.0 / (z * z);
    std::complex<double> zp = 1.0 / z;  // z^{1-2k}
    for (double coeff : kStirling) {
        acc += coeff * zp;
        zp *= inv2;
    }
    return acc - shift;
}

double theta_unchecked(double t) {
    const std::complex<double> lg = log_gamma({0.25, 0.5 * t});
    return lg.imag() - 0.5 * t * std::log(kPi);
}

double theta(double t) {
    if (t < 1.0) throw DomainError("theta: requires t >= 1");
    return theta_unchecked(t);
}

ZEvaluation z_euler_maclaurin(double t, double target_tol, long term_cap) {
    if (t < 0.0) throw DomainError("z_euler_maclaurin: requires t >= 0");
    if (target_tol < 1e-12)
        throw DomainError("z_euler_maclaurin: target_tol must be >= 1e-12");

    const std::complex<double> s(0.5, t);
    long n_terms = std::max(25L, long(std::ceil(3.0 * (t + 20.0) / kTwoPi)));

    for (;;) {
        if (n_terms > term_cap)
            throw ToleranceError(detail::msg(
                "z_euler_maclaurin: ", n_terms, " terms exceed cap ",
                term_cap, " at t=", t));

        std::complex<double> sum = 0.0;
        for (long n = 1; n < n_terms; ++n) {
            const double ln = std::log(double(n));
            // n^{-s} = n^{-1/2} e^{-it ln n}
            sum += std::polar(1.0 / std::sqrt(double(n)), -t * ln);
        }
        const double dn = double(n_terms);
        const std::complex<double> npow =
            std::polar(1.0 / std::sqrt(dn), -t * std::log(dn));  // N^{-s}
        sum += dn * npow / (s - 1.0);  // N^{1-s}/(s-1)
        sum += 0.5 * npow;

        // tail terms T_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k},
        // built by ratio recursion to avoid overflow.
        std::complex<double> term = bern_over_fact(1) * s * npow / dn;
        double bound = 0.0;
        bool converged = false;
        for (int k = 1; k <= 30; ++k) {
            sum += term;
            const std::complex<double> next =
                term * (bern_over_fact(k + 1) / bern_over_fact(k)) *
                (s + double(2 * k - 1)) * (s + double(2 * k)) / (dn * dn);
            // standard remainder bound after the k-th term
            bound = std::abs(next) *
                    std::abs((s + double(2 * k + 1)) / (0.5 + 2 * k + 1));
            if (bound <= target_tol) {
                converged = true;
                break;
            }
            term = next;
        }
        if (!converged) {
            n_terms *= 2;
            continue;
        }

        const double th = theta_unchecked(t);
        const std::complex<double> zc = std::polar(1.0, th) * sum;
        if (std::abs(zc.imag()) > 10.0 * target_tol)
            throw ToleranceError(detail::msg(
                "z_euler_maclaurin: imaginary residue ", zc.imag(), " at t=", t));
        return {t, zc.real(), th, Backend::EulerMaclaurin, bound};
    }
}

ZEvaluation z_riemann_siegel(double t, int n_corrections, const RunConfig& cfg) {
    if (t < cfg.t_switch)
        throw DomainError(detail::msg(
            "z_riemann_siegel: t=", t, " below t_switch=", cfg.t_switch,
            "; use the Euler-Maclaurin backend"));
    if (n_corrections < 0 || n_corrections > 4)
        throw DomainError("z_riemann_siegel: n_corrections must be in 0..4");

    const double tau = std::sqrt(t / kTwoPi);
    const int m = int(tau);
    const double p = tau - m;
    const double th = theta_unchecked(t);

    const TermTables& tab = term_tables();
    double sum = 0.0;
    if (m <= kTermTable) {
        for (int n = 1; n <= m; ++n)
            sum += std::cos(th - t * tab.ln[n]) * tab.rsqrt[n];
    } else {
        for (int n = 1; n <= m; ++n)
            sum += std::cos(th - t * std::log(double(n))) /
                   std::sqrt(double(n));
    }

    double corr = 0.0, tp = 1.0;
    for (int j = 0; j <= n_corrections; ++j) {
        corr += rs_correction_coefficient(j, p) * tp;
        tp /= tau;
    }
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m-1)
    const double zv = 2.0 * sum + sign * corr / std::sqrt(tau);
    const double err =
        cfg.k_rs * std::pow(t, -(2.0 * n_corrections + 3.0) / 4.0);
    return {t, zv, th, Backend::RiemannSiegel, err};
}

ZEvaluation z(double t, const RunConfig& cfg) {
    if (t < cfg.t_switch)
        return z_euler_maclaurin(t, cfg.em_tol, cfg.em_term_cap);
    return z_riemann_siegel(t, cfg.n_corrections, cfg);
}

double z_value(double t, const RunConfig& cfg) { return z(t, cfg).z; }

namespace {

ZetaRatioResult ratio_impl(std::span<const double> alphas,
                           std::span<const double> betas,
                           const RunConfig& cfg, bool checked) {
    if (alphas.size() != betas.size())
        throw DomainError("zeta_ratio_sq: node sequences differ in length");
    const size_t k = alphas.size();
    if (k < 1 || int(k) > std::max(cfg.k_max, 8))
        throw DomainError("zeta_ratio_sq: k outside 1..k_max");
    for (size_t r = 0; r < k; ++r)
        if (alphas[r] < 0.0 || betas[r] < 0.0)
            throw DomainError("zeta_ratio_sq: nodes must be >= 0");

    double value = 1.0;
    double min_abs = std::numeric_limits<double>::infinity();
    for (size_t r = 0; r < k; ++r) {
        const double za = z_value(alphas[r], cfg);
        const double zb = z_value(betas[r], cfg);
        min_abs = std::min({min_abs, std::abs(za), std::abs(zb)});
        if (checked && std::abs(zb) < cfg.z_floor)
            throw IllConditionedError(detail::msg(
                "zeta_ratio_sq: |Z(", betas[r], ")| = ", std::abs(zb),
                " below z_floor ", cfg.z_floor));
        value *= (za * za) / (zb * zb);
    }
    return {value, min_abs};
}

}  // namespace

ZetaRatioResult zeta_ratio_sq(std::span<const double> alphas,
                              std::span<const double> betas,
                              const RunConfig& cfg) {
    return ratio_impl(alphas, betas, cfg, true);
}

ZetaRatioResult zeta_ratio_sq_unchecked(std::span<const double> alphas,
                                        std::span<const double> betas,
                                        const RunConfig& cfg) {
    return ratio_impl(alphas, betas, cfg, false);
}

SpectrumDescriptor local_spectrum(double x, const RunConfig& cfg) {
    if (x < cfg.x_min)
        throw DomainError(
            detail::msg("local_spectrum: x=", x, " below x_min=", cfg.x_min));
    SpectrumDescriptor spec;
    spec.x = x;
    spec.tau = std::sqrt(x / kTwoPi);
    spec.psi = -0.5 * x - kPi / 8.0;
    const int m = int(spec.tau);
    spec.oscillators.reserve(m);
    for (int n = 1; n <= m; ++n) {
        const double omega = cfg.spectral_omega_raw
                                 ? spec.tau / n
                                 : std::log(spec.tau / n);
        spec.oscillators.push_back({n, 2.0 / std::sqrt(double(n)), omega});
    }
    spec.remainder_bound = cfg.spectral_k * std::pow(x, -0.25);
    spec.window = std::pow(x, 0.25);
    return spec;
}

double spectral_z(double t, const SpectrumDescriptor& spec) {
    if (t < spec.x || t > spec.x + spec.window)
        throw DomainError(detail::msg(
            "spectral_z: t=", t, " outside the validity window [", spec.x,
            ", ", spec.x + spec.window, "]"));
    double sum = 0.0;
    for (const Oscillator& o : spec.oscillators)
        sum += o.amplitude * std::cos(t * o.omega + spec.psi);
    return sum;
}

}  // namespace zq2
