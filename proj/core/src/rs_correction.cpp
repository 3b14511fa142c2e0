#include <array>
#include <cmath>

#include "zq2/constants.hpp"
#include "zq2/errors.hpp"
#include "zq2/zeta.hpp"

namespace zq2 {
namespace {

// The correction coefficients of the Riemann-Siegel remainder are rational
// combinations of derivatives of
//
//     Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p),
//
// an entire function (numerator and denominator share simple zeros at
// p = 1/4, 3/4). Derivatives up to order 12 are needed, which rules out
// finite differences. Instead we keep two Taylor expansions of Psi, based
// exactly at p = 1/4 and p = 3/4 where the common zero can be stripped
// analytically, and evaluate derivatives from the series. Every p in [0,1]
// is within 0.25 of a base, and the stripped denominator's nearest zero is
// 0.5 away, so the series arithmetic stays well conditioned.

constexpr int kOrder = 48;

struct PsiSeries {
    double base;
    std::array<double, kOrder + 1> c;  // c[m] = Psi^(m)(base) / m!
};

PsiSeries make_series(double b) {
    // Numerator N(x) = cos(q(x)), q(x) = q0 + q1 x + q2 x^2 with
    // q1 = 2pi(2b-1), q2 = 2pi. At both bases q0 = -pi/2 exactly, so
    // N(0) = 0, sin(q0) = -1. Coefficients come from the coupled system
    // N' = -q' S, S' = q' N with S = sin(q).
    const double q1 = kTwoPi * (2.0 * b - 1.0);
    const double q2 = kTwoPi;
    std::array<double, kOrder + 2> n{}, s{};
    n[0] = 0.0;
    s[0] = -1.0;
    for (int m = 0; m <= kOrder; ++m) {
        const double qs = q1 * s[m] + (m >= 1 ? 2.0 * q2 * s[m - 1] : 0.0);
        const double qn = q1 * n[m] + (m >= 1 ? 2.0 * q2 * n[m - 1] : 0.0);
        n[m + 1] = -qs / (m + 1);
        s[m + 1] = qn / (m + 1);
    }

    // Denominator D(x) = cos(2pi(b+x)) = -sin(2pi b) sin(2pi x); sin(2pi b)
    // is +1 at b=1/4 and -1 at b=3/4.
    const double sgn = (b < 0.5) ? 1.0 : -1.0;
    std::array<double, kOrder + 2> d{};
    double pw = kTwoPi;  // (2pi)^(2j+1) / (2j+1)!
    for (int j = 0; 2 * j + 1 <= kOrder + 1; ++j) {
        d[2 * j + 1] = -sgn * (j % 2 == 0 ? pw : -pw);
        pw *= kTwoPi * kTwoPi / ((2 * j + 2) * (2 * j + 3));
    }

    // Both series start at x^1: strip one power of x and divide.
    PsiSeries out;
    out.base = b;
    const double d0 = d[1];
    for (int m = 0; m <= kOrder; ++m) {
        double acc = n[m + 1];
        for (int i = 1; i <= m; ++i) acc -= d[i + 1] * out.c[m - i];
        out.c[m] = acc / d0;
    }
    return out;
}

const PsiSeries& series_for(double p) {
    static const PsiSeries lo = make_series(0.25);
    static const PsiSeries hi = make_series(0.75);
    return p < 0.5 ? lo : hi;
}

// Psi^(k)(p) from the nearer base series.
double psi_derivative(int k, double p) {
    const PsiSeries& ps = series_for(p);
    const double delta = p - ps.base;
    // sum_{m>=k} c[m] * m!/(m-k)! * delta^(m-k)
    double ff = 1.0;  // k!/0! built below
    for (int i = 2; i <= k; ++i) ff *= i;
    double acc = 0.0, dp = 1.0;
    for (int m = k; m <= kOrder; ++m) {
        acc += ps.c[m] * ff * dp;
        dp *= delta;
        ff *= double(m + 1) / double(m + 1 - k);
    }
    return acc;
}

const double kPi2 = kPi * kPi;
const double kPi4 = kPi2 * kPi2;
const double kPi6 = kPi4 * kPi2;
const double kPi8 = kPi4 * kPi4;

}  // namespace

double rs_correction_coefficient(int j, double p) {
    switch (j) {
        case 0:
            return psi_derivative(0, p);
        case 1:
            return -psi_derivative(3, p) / (96.0 * kPi2);
        case 2:
            return psi_derivative(2, p) / (64.0 * kPi2) +
                   psi_derivative(6, p) / (18432.0 * kPi4);
        case 3:
            return -psi_derivative(1, p) / (64.0 * kPi2) -
                   psi_derivative(5, p) / (3840.0 * kPi4) -
                   psi_derivative(9, p) / (5308416.0 * kPi6);
        case 4:
            return psi_derivative(0, p) / (128.0 * kPi2) +
                   19.0 * psi_derivative(4, p) / (24576.0 * kPi4) +
                   11.0 * psi_derivative(8, p) / (5898240.0 * kPi6) +
                   psi_derivative(12, p) / (2038431744.0 * kPi8);
        default:
            throw DomainError("rs_correction_coefficient: j must be in 0..4");
    }
}

}  // namespace zq2
