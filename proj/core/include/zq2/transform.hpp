#pragma once

#include <span>
#include <string>
#include <vector>

#include "zq2/config.hpp"
#include "zq2/ladder.hpp"
#include "zq2/signals.hpp"

namespace zq2 {

enum class NodeKind { Alpha, Beta };

// Mean-value abscissa d on the k-fold iterated segment and the node chain
// derived from it: alpha_{k-r} = phi1^r(d). Alpha solutions store
// [alpha_0..alpha_k]; Beta solutions (constant signal) store [beta_1..beta_k].
struct MeanValueSolution {
    double d = 0.0;
    NodeKind kind = NodeKind::Alpha;
    std::vector<double> nodes;
    double min_abs_z = 0.0;     // min |Z| over the ratio nodes (index >= 1)
    double residual = 0.0;      // |F(d) * len - int F|
    double master_defect = 0.0; // |int F - int f| / |int f|
    IterationChain chain;
};

// H(T, U) = (1/U) int_T^(T+U) f, by closed form.
double mean_h(const SignalSpec& f);

struct UBound {
    bool ok;
    double max_u;  // u_kappa * T / ln^2 T
};

// Concrete enforcement of the U = o(T/ln T) admissibility class.
UBound check_u_bound(double t, double u, const RunConfig& cfg = {});

// Solve F(d) = avg(F) on (T^k, (T+U)^k) for the transformed integrand
// F(t) = f[phi1^k(t)] prod_{r<k} phi1'[phi1^r(t)], validating the exact
// change-of-variables identity int F = int f on the way. Returns the
// smallest crossing; cfg.well_conditioned advances past roots whose nodes
// sit within z_floor of a zeta zero.
MeanValueSolution mean_value_point(const LadderTable& table,
                                   const SignalSpec& f, double t, double u,
                                   int k, const RunConfig& cfg = {});

// The constant-signal solution: prod Z~^2(beta_r) = U / len.
MeanValueSolution beta_nodes(const LadderTable& table, double t, double u,
                             int k, const RunConfig& cfg = {});

struct TransformReport {
    SignalSpec signal;
    double t = 0.0, u = 0.0;
    int k = 0;
    MeanValueSolution alpha, beta;
    double h = 0.0;             // may overflow to +inf for huge deltas
    double log10_h = 0.0;       // always finite
    double g = 0.0;             // H / f(alpha_0)
    double g2 = 0.0;            // zeta-ratio product
    double discrepancy = 0.0;   // G^2/g - 1
    double bound = 0.0;         // kappa * ln ln T / ln T
    double kappa = 0.0;
    double min_abs_z_alpha = 0.0, min_abs_z_beta = 0.0;
    bool conditioned = false;
    std::string table_digest;
};

// The full transformation: input signal f on [T, T+U] to the output value
// g = H/f(alpha_0), realized by the zeta-ratio product G^2. Ill-conditioned
// runs come back flagged, not failed.
TransformReport z_transform(const LadderTable& table, const SignalSpec& f,
                            double t, double u, int k,
                            const RunConfig& cfg = {});

struct PowerTheoremReport {
    TransformReport base;
    double delta = 0.0;
    double envelope = 0.0;      // (1 + U/T)^(|delta|+1) - 1
    bool envelope_ok = false;   // |g - 1| <= envelope
    bool ratio_ok = false;      // |G^2 - 1| <= kappa ln ln T / ln T (conditioned runs)
};

// Power-signal transform: output is the constant 1 within the deterministic
// envelope; the zeta-ratio product returns to 1 within the kappa bound.
PowerTheoremReport power_theorem_check(const LadderTable& table, double delta,
                                       double t, double u, int k,
                                       const RunConfig& cfg = {});

struct ShiftedPowerReport {
    TransformReport base;
    double delta = 0.0, l = 0.0;
    double alpha0_minus_l = 0.0;
    int dichotomy_case = 0;     // 1: alpha0-L <= U/2, 2: otherwise
    double lower_bound = 0.0, upper_bound = 0.0;
    bool bounds_ok = false;
};

// f = (t-L)^delta: g = (1/(delta+1)) (U/(alpha0-L))^delta with the exact
// two-case characterization of where g may fall.
ShiftedPowerReport shifted_power_transform(const LadderTable& table,
                                           double delta, double l, double u,
                                           int k, const RunConfig& cfg = {});

struct GapRow {
    int r;
    double gap;    // node[r+1] - node[r]
    double ratio;  // gap / ((1-c) * T/ln T)
};

std::vector<GapRow> gap_report(const MeanValueSolution& solution);

struct TelegraphicOutcome {
    bool accepted = false;
    TelegraphicSignal signal{};
    int offending_run = -1;
    std::string reason;
};

// Accept a batch of power-signal runs sharing (L, a, delta) as one
// telegraphic (unit rectangular) output signal.
TelegraphicOutcome telegraphic_output(std::span<const TransformReport> runs,
                                      const RunConfig& cfg = {});

// Stable-key-order JSON / CSV serialization, 15 significant digits.
std::string report_to_json(const TransformReport& report);
std::string report_csv_header();
std::string report_to_csv(const TransformReport& report);

}  // namespace zq2
