#include "zq2/quadrature.hpp"

#include <cmath>

#include "zq2/constants.hpp"
#include "zq2/errors.hpp"
#include "zq2/zeta.hpp"

namespace zq2 {

GaussLegendre::GaussLegendre(int order) : nodes(order), weights(order) {
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P'_n(x)
            double p0 = 1.0, p1 = x;
            for (int n = 2; n <= order; ++n) {
                const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

const GaussLegendre& GaussLegendre::order16() {
    static const GaussLegendre g(16);
    return g;
}

const GaussLegendre& GaussLegendre::order32() {
    static const GaussLegendre g(32);
    return g;
}

namespace {

double panel_width_cap(double t, double rho) {
    const double osc = std::max(1.0, std::log(std::max(t, 1.0) / kTwoPi));
    return rho * kTwoPi / osc;
}

double apply_rule(const GaussLegendre& g,
                  const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        acc += g.weights[i] * f(mid + half * g.nodes[i]);
    return acc * half;
}

// One panel with order-doubled error estimate; bisect until the estimate
// fits the panel's proportional share of the budget, or until the estimate
// reaches rounding level where further splitting cannot help.
double integrate_panel(const std::function<double(double)>& f, double a,
                       double b, double tol_share, int depth) {
    const double i16 = apply_rule(GaussLegendre::order16(), f, a, b);
    const double i32 = apply_rule(GaussLegendre::order32(), f, a, b);
    const double est = std::abs(i32 - i16);
    if (est <= tol_share || est <= 1e-14 * (std::abs(i32) + 1.0)) return i32;
    if (depth >= 40)
        throw ToleranceError(detail::msg(
            "integrate_oscillatory: refinement stalled on [", a, ", ", b, "]"));
    const double mid = 0.5 * (a + b);
    return integrate_panel(f, a, mid, 0.5 * tol_share, depth + 1) +
           integrate_panel(f, mid, b, 0.5 * tol_share, depth + 1);
}

}  // namespace

double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double abs_tol, double rho) {
    if (b < a) throw DomainError("integrate_oscillatory: requires a <= b");
    if (a == b) return 0.0;
    const double len = b - a;
    double acc = 0.0;
    double t = a;
    while (t < b) {
        const double w = std::min(panel_width_cap(t, rho), b - t);
        const double hi = (b - t - w < 1e-12 * len) ? b : t + w;
        acc += integrate_panel(f, t, hi, abs_tol * (hi - t) / len, 0);
        t = hi;
    }
    return acc;
}

double integrate_z_squared(double a, double b, double tol,
                           const RunConfig& cfg) {
    if (a < 0.0 || b < a) throw DomainError("integrate_z_squared: requires 0 <= a <= b");
    if (tol < 1e-10) throw DomainError("integrate_z_squared: tol must be >= 1e-10");
    if (a == b) return 0.0;
    const auto z2 = [&cfg](double t) {
        const double zv = z_value(t, cfg);
        return zv * zv;
    };
    // Never let a panel straddle the backend switch: the ~1e-7 evaluation
    // jump there defeats the order-doubling estimate.
    if (a < cfg.t_switch && cfg.t_switch < b)
        return integrate_oscillatory(z2, a, cfg.t_switch, 0.5 * tol, cfg.rho) +
               integrate_oscillatory(z2, cfg.t_switch, b, 0.5 * tol, cfg.rho);
    return integrate_oscillatory(z2, a, b, tol, cfg.rho);
}

}  // namespace zq2
