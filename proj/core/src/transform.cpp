#include "zq2/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zq2/constants.hpp"
#include "zq2/errors.hpp"
#include "zq2/primes.hpp"
#include "zq2/quadrature.hpp"
#include "zq2/zeta.hpp"

namespace zq2 {
namespace {

constexpr double kMasterDefectCap = 1e-4;
constexpr double kIntegralRelTol = 1e-7;

// F(t) = f[phi1^k(t)] * prod_{r=0}^{k-1} phi1'[phi1^r(t)], in the signal's
// normalized scale. Exactly the derivative of t -> int f over the k-fold
// ladder image, which is what makes int F = int f an identity.
double transformed_integrand(const LadderTable& table, const SignalSpec& f,
                             double t, int k, const RunConfig& cfg) {
    double x = t, w = 1.0;
    for (int r = 0; r < k; ++r) {
        const double p1 = table.phi1(x);
        const double zv = z_value(x, cfg);
        w *= (zv * zv - p1 / x) / ladder_log_factor(x);
        x = p1;
    }
    return f.norm_value(x) * w;
}

struct Bracket {
    double lo;
    double hi;
};

// Nodes alpha_{k-r} = phi1^r(d), r = 0..k (index 0 is alpha_0).
std::vector<double> nodes_from_d(const LadderTable& table, double d, int k) {
    std::vector<double> nodes(k + 1);
    nodes[k] = d;
    double x = d;
    for (int r = 1; r <= k; ++r) {
        x = table.phi1(x);
        nodes[k - r] = x;
    }
    return nodes;
}

double min_ratio_node_abs_z(std::span<const double> nodes, int first,
                            const RunConfig& cfg) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t r = size_t(first); r < nodes.size(); ++r)
        m = std::min(m, std::abs(z_value(nodes[r], cfg)));
    return m;
}

MeanValueSolution solve(const LadderTable& table, const SignalSpec& f,
                        double t, double u, int k, NodeKind kind,
                        const IterationChain& chain, const RunConfig& cfg) {
    MeanValueSolution sol;
    sol.kind = kind;
    sol.chain = chain;

    const double a = chain.lower[k], b = chain.upper[k];
    const double len = b - a;
    const double int_f = u * f.norm_mean_h();

    // Degenerate pair: constant signal with k = 0 makes F - avg vanish
    // identically; take the canonical midpoint.
    if (k == 0 && f.kind() == SignalKind::Constant) {
        sol.d = t + 0.5 * u;
        sol.nodes = {sol.d};
        sol.min_abs_z = std::numeric_limits<double>::infinity();
        sol.residual = 0.0;
        sol.master_defect = 0.0;
        if (kind == NodeKind::Beta) sol.nodes.clear();
        return sol;
    }

    auto F = [&](double x) {
        return transformed_integrand(table, f, x, k, cfg);
    };

    const double int_F = integrate_oscillatory(
        F, a, b, kIntegralRelTol * std::abs(int_f), cfg.rho);
    sol.master_defect = std::abs(int_F - int_f) / std::abs(int_f);
    if (sol.master_defect > kMasterDefectCap)
        throw ToleranceError(detail::msg(
            "mean_value_point: substitution identity defect ",
            sol.master_defect, " exceeds ", kMasterDefectCap,
            "; quadrature or inversion failure"));

    const double avg = int_F / len;

    // Scan for sign changes of F - avg, finest first crossing wins.
    double step = cfg.rho * kTwoPi / std::log(a);
    std::vector<Bracket> found;
    for (int refine = 0; refine < 2 && found.empty(); ++refine) {
        found.clear();
        double x0 = a, g0 = F(x0) - avg;
        const long n_steps = std::max(4L, std::lround(std::ceil(len / step)));
        for (long i = 1; i <= n_steps; ++i) {
            const double x1 = (i == n_steps) ? b : a + (len * double(i)) / double(n_steps);
            const double g1 = F(x1) - avg;
            if (g0 * g1 <= 0.0) found.push_back({x0, x1});
            x0 = x1;
            g0 = g1;
        }
        step *= 0.25;
    }
    if (found.empty())
        throw ToleranceError(
            "mean_value_point: no crossing of F - avg found; impossible for "
            "a continuous integrand, check quadrature settings");

    // found holds bracketing intervals as {lo, hi}; bisect each in scan
    // order until one yields an admissible (well-conditioned) root.
    MeanValueSolution first;
    bool have_first = false;
    for (const Bracket& bracket : found) {
        double lo = bracket.lo, hi = bracket.hi;
        double glo = F(lo) - avg;
        for (int iter = 0; iter < 80; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double gm = F(mid) - avg;
            if (glo * gm <= 0.0)
                hi = mid;
            else {
                lo = mid;
                glo = gm;
            }
        }
        MeanValueSolution cand = sol;
        cand.d = 0.5 * (lo + hi);
        cand.nodes = nodes_from_d(table, cand.d, k);
        cand.min_abs_z = min_ratio_node_abs_z(cand.nodes, 1, cfg);
        cand.residual = std::abs((F(cand.d) - avg) * len);
        if (!have_first) {
            first = cand;
            have_first = true;
        }
        if (!cfg.well_conditioned || cand.min_abs_z >= cfg.z_floor) {
            first = cand;
            break;
        }
    }
    sol = first;

    // Node geometry: alpha_0 interior to (T, T+U), each node inside its
    // iterated segment, strict ordering.
    if (!(sol.nodes[0] > t && sol.nodes[0] < t + u))
        throw BracketError(detail::msg("mean_value_point: alpha_0=", sol.nodes[0],
                                       " escaped (T, T+U)"));
    for (int r = 0; r <= k; ++r) {
        if (!(sol.nodes[r] > chain.lower[r] && sol.nodes[r] < chain.upper[r]))
            throw BracketError(detail::msg(
                "mean_value_point: node ", r, " outside its iterated segment"));
        if (r > 0 && sol.nodes[r] <= sol.nodes[r - 1])
            throw BracketError("mean_value_point: node ordering violated");
    }

    if (kind == NodeKind::Beta) sol.nodes.erase(sol.nodes.begin());
    return sol;
}

}  // namespace

double mean_h(const SignalSpec& f) { return f.mean_h(); }

UBound check_u_bound(double t, double u, const RunConfig& cfg) {
    const double lt = std::log(t);
    const double max_u = cfg.u_kappa * t / (lt * lt);
    return {u > 0.0 && u <= max_u, max_u};
}

MeanValueSolution mean_value_point(const LadderTable& table,
                                   const SignalSpec& f, double t, double u,
                                   int k, const RunConfig& cfg) {
    if (k < 0 || k > cfg.k_max)
        throw DomainError(detail::msg("mean_value_point: k must be in 0..", cfg.k_max));
    if (f.start() != t || f.u() != u)
        throw DomainError("mean_value_point: signal support disagrees with (T, U)");
    const UBound ub = check_u_bound(t, u, cfg);
    if (!ub.ok)
        throw DomainError(detail::msg("mean_value_point: U=", u,
                                      " violates the admissible bound ",
                                      ub.max_u, " at T=", t));
    const IterationChain chain = make_chain(table, t, u, k, cfg);
    return solve(table, f, t, u, k, NodeKind::Alpha, chain, cfg);
}

MeanValueSolution beta_nodes(const LadderTable& table, double t, double u,
                             int k, const RunConfig& cfg) {
    if (k < 0 || k > cfg.k_max)
        throw DomainError(detail::msg("beta_nodes: k must be in 0..", cfg.k_max));
    const UBound ub = check_u_bound(t, u, cfg);
    if (!ub.ok)
        throw DomainError(detail::msg("beta_nodes: U=", u,
                                      " violates the admissible bound ",
                                      ub.max_u, " at T=", t));
    const IterationChain chain = make_chain(table, t, u, k, cfg);
    const SignalSpec one = SignalSpec::constant(t, u, u);
    return solve(table, one, t, u, k, NodeKind::Beta, chain, cfg);
}

TransformReport z_transform(const LadderTable& table, const SignalSpec& f,
                            double t, double u, int k, const RunConfig& cfg) {
    TransformReport rep;
    rep.signal = f;
    rep.t = t;
    rep.u = u;
    rep.k = k;
    rep.kappa = cfg.kappa;
    rep.table_digest = table.digest();

    rep.alpha = mean_value_point(table, f, t, u, k, cfg);
    if (f.kind() == SignalKind::Constant) {
        // identical solve; share it so G^2 collapses to 1 exactly
        rep.beta = rep.alpha;
        if (k > 0) rep.beta.nodes.erase(rep.beta.nodes.begin());
        else rep.beta.nodes.clear();
        rep.beta.kind = NodeKind::Beta;
    } else {
        rep.beta = beta_nodes(table, t, u, k, cfg);
    }

    rep.h = f.mean_h();
    rep.log10_h = f.log10_mean_h();
    rep.g = f.g_of(rep.alpha.nodes[0]);
    if (k >= 1) {
        const ZetaRatioResult zr = zeta_ratio_sq_unchecked(
            std::span<const double>(rep.alpha.nodes).subspan(1),
            std::span<const double>(rep.beta.nodes), cfg);
        rep.g2 = zr.value;
    } else {
        rep.g2 = 1.0;
    }
    rep.min_abs_z_alpha = rep.alpha.min_abs_z;
    rep.min_abs_z_beta = rep.beta.min_abs_z;
    rep.discrepancy = rep.g2 / rep.g - 1.0;
    rep.bound = cfg.kappa * std::log(std::log(t)) / std::log(t);
    rep.conditioned =
        std::min(rep.min_abs_z_alpha, rep.min_abs_z_beta) >= cfg.z_floor;
    return rep;
}

PowerTheoremReport power_theorem_check(const LadderTable& table, double delta,
                                       double t, double u, int k,
                                       const RunConfig& cfg) {
    PowerTheoremReport rep;
    rep.delta = delta;
    const SignalSpec f = delta == 0.0 ? SignalSpec::constant(t, u, u)
                                      : SignalSpec::power(delta, t, u, u);
    rep.base = z_transform(table, f, t, u, k, cfg);
    rep.envelope = std::expm1((std::abs(delta) + 1.0) * std::log1p(u / t));
    rep.envelope_ok = std::abs(rep.base.g - 1.0) <= rep.envelope;
    if (delta == 0.0) rep.envelope_ok = rep.base.g == 1.0;
    rep.ratio_ok =
        !rep.base.conditioned || std::abs(rep.base.g2 - 1.0) <= rep.base.bound;
    return rep;
}

ShiftedPowerReport shifted_power_transform(const LadderTable& table,
                                           double delta, double l, double u,
                                           int k, const RunConfig& cfg) {
    if (l < cfg.l_bar0)
        throw DomainError(detail::msg("shifted_power_transform: L must be >= ",
                                      cfg.l_bar0));
    ShiftedPowerReport rep;
    rep.delta = delta;
    rep.l = l;
    const SignalSpec f = SignalSpec::shifted_power(delta, l, u, 0.5);
    rep.base = z_transform(table, f, l, u, k, cfg);
    rep.alpha0_minus_l = rep.base.alpha.nodes[0] - l;

    const double two_pow = std::pow(2.0, delta);
    const double g = rep.base.g;
    if (rep.alpha0_minus_l <= 0.5 * u) {
        rep.dichotomy_case = 1;
        rep.lower_bound = two_pow / (delta + 1.0);
        rep.upper_bound = std::numeric_limits<double>::infinity();
        rep.bounds_ok = g >= rep.lower_bound;
    } else {
        rep.dichotomy_case = 2;
        rep.lower_bound = 1.0 / (delta + 1.0);
        rep.upper_bound = two_pow / (delta + 1.0);
        rep.bounds_ok = g >= rep.lower_bound && g < rep.upper_bound;
    }
    return rep;
}

std::vector<GapRow> gap_report(const MeanValueSolution& solution) {
    std::vector<GapRow> rows;
    const double denom =
        (1.0 - kEulerC) * pi_asymptotic(solution.chain.base);
    const int base_index = solution.kind == NodeKind::Alpha ? 0 : 1;
    for (size_t r = 0; r + 1 < solution.nodes.size(); ++r) {
        const double gap = solution.nodes[r + 1] - solution.nodes[r];
        rows.push_back({int(r) + base_index, gap, gap / denom});
    }
    return rows;
}

TelegraphicOutcome telegraphic_output(std::span<const TransformReport> runs,
                                      const RunConfig& cfg) {
    TelegraphicOutcome out;
    if (runs.empty()) {
        out.reason = "empty batch";
        return out;
    }
    const SignalSpec& first = runs[0].signal;
    for (size_t i = 0; i < runs.size(); ++i) {
        const TransformReport& r = runs[i];
        const SignalKind kind = r.signal.kind();
        if (kind == SignalKind::ShiftedPower) {
            out.offending_run = int(i);
            out.reason = "run is not a power signal";
            return out;
        }
        if (r.signal.start() != first.start() ||
            r.signal.u0() != first.u0() ||
            r.signal.delta() != first.delta()) {
            out.offending_run = int(i);
            out.reason = "runs do not share (L, a, delta)";
            return out;
        }
        const double envelope = std::expm1(
            (std::abs(r.signal.delta()) + 1.0) * std::log1p(r.u / r.t));
        if (std::abs(r.g - 1.0) > envelope &&
            !(r.signal.kind() == SignalKind::Constant && r.g == 1.0)) {
            out.offending_run = int(i);
            out.reason = detail::msg("g deviates from 1 beyond the envelope: ",
                                     r.g - 1.0, " > ", envelope);
            return out;
        }
        if (r.conditioned && r.k >= 1 && std::abs(r.g2 - 1.0) > r.bound) {
            out.offending_run = int(i);
            out.reason = detail::msg("zeta-ratio product off unity: |",
                                     r.g2, " - 1| > ", r.bound);
            return out;
        }
    }
    out.accepted = true;
    out.signal.level = 1.0;
    out.signal.l = first.start();
    out.signal.a = first.u0();
    out.signal.alpha0_lo = first.start();
    out.signal.alpha0_hi = first.start() + first.u0();
    (void)cfg;
    return out;
}

}  // namespace zq2
