#pragma once

#include <functional>
#include <vector>

#include "zq2/config.hpp"

namespace zq2 {

// Gauss-Legendre rule on [-1, 1]; nodes computed once by Newton iteration.
struct GaussLegendre {
    std::vector<double> nodes, weights;
    explicit GaussLegendre(int order);
    static const GaussLegendre& order16();
    static const GaussLegendre& order32();
};

// Composite Gauss-Legendre integration of an oscillatory integrand whose
// local oscillation scale is the mean zeta-zero gap 2pi/ln(t/2pi). Panel
// width <= rho * gap; per-panel error estimated by order doubling (16 vs 32)
// against a proportional share of abs_tol, with bisection refinement.
double integrate_oscillatory(const std::function<double(double)>& f, double a,
                             double b, double abs_tol, double rho = 0.25);

// The Hardy-Littlewood integrand: int_a^b Z(t)^2 dt.
// Preconditions: 0 <= a <= b, tol >= 1e-10.
double integrate_z_squared(double a, double b, double tol,
                           const RunConfig& cfg = {});

}  // namespace zq2
