#pragma once

#include <string>

#include "zq2/errors.hpp"

namespace zq2 {

// Run-wide tunables. Defaults are the calibrated production values; every
// field can be overridden from the CLI.
struct RunConfig {
    // --- critical-line evaluation ---
    double t_switch      = 200.0;   // Euler-Maclaurin below, Riemann-Siegel above
    int    n_corrections = 2;       // Riemann-Siegel correction terms (0..4)
    double em_tol        = 1e-9;    // Euler-Maclaurin absolute tolerance
    long   em_term_cap   = 1000000; // hard cap on Dirichlet-sum length
    double k_rs          = 0.25;    // Riemann-Siegel error constant (calibrated)

    // --- spectral (oscillator) form ---
    double x_min             = 1e3;   // minimum base point for a local spectrum
    double spectral_k        = 10.0;  // remainder constant K in K*x^(-1/4)
    bool   spectral_omega_raw = false; // tau/n instead of ln(tau/n)

    // --- second-moment table ---
    double t_floor   = 100.0;
    double grid_step = 0.25;
    double rho       = 0.25;    // panel width fraction of the mean zero gap
    int    quad_order = 16;
    double c0        = 0.0;     // Titchmarsh-Kober-Atkinson constant

    // --- transform machinery ---
    double kappa        = 5.0;   // constant of the ln ln T / ln T bound
    double u_kappa      = 1.0;   // U <= u_kappa * T / ln^2 T
    double z_floor      = 1e-4;  // conditioning floor for |Z| at nodes
    double inv_tol_rel  = 1e-6;  // inversion contract: |phi1(t) - y| <= inv_tol_rel*y
    double mv_tol       = 1e-6;  // mean-value product identity tolerance
    int    k_max        = 3;     // iteration depth cap k0
    double l_bar0       = 1e3;   // smallest admissible L for signal transforms
    bool   well_conditioned = false;  // skip roots with a node near a zeta zero

    std::string table_path;  // default cache location (ZLAD_TABLE)

    void validate() const {
        if (em_tol < 1e-12) throw DomainError("em_tol must be >= 1e-12");
        if (n_corrections < 0 || n_corrections > 4)
            throw DomainError("n_corrections must be in 0..4");
        if (grid_step < 0.05 || grid_step > 1.0)
            throw DomainError("grid_step must be in [0.05, 1]");
        if (k_max < 0 || k_max > 8) throw DomainError("k_max must be in 0..8");
        if (em_tol <= 0 || k_rs <= 0 || rho <= 0 || kappa <= 0 || u_kappa <= 0 ||
            z_floor <= 0 || inv_tol_rel <= 0 || mv_tol <= 0)
            throw DomainError("tolerances must be positive");
    }
};

}  // namespace zq2
