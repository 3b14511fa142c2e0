#include "zq2/ladder.hpp"

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

// Per-cell quadrature budget: keeps the accumulated absolute error of I
// below ~1e-4 even on a 2e5 build.
constexpr double kCellTolPerUnit = 1e-9;
constexpr double kHeadTol = 1e-8;    // [0, t_floor] segment
constexpr double kLocalTol = 1e-10;  // off-grid refinement

}  // namespace

LadderTable LadderTable::build(double t_max, double grid_step, double c0,
                               const RunConfig& cfg) {
    if (t_max < 1e3) throw DomainError("LadderTable::build: t_max must be >= 1e3");
    if (grid_step < 0.05 || grid_step > 1.0)
        throw DomainError("LadderTable::build: grid_step must be in [0.05, 1]");

    LadderTable table;
    table.cfg_ = cfg;
    table.params_.grid_step = grid_step;
    table.params_.t_floor = cfg.t_floor;
    table.params_.c0 = c0;
    table.params_.rho = cfg.rho;
    table.params_.quad_order = cfg.quad_order;

    const size_t cells = size_t((t_max - cfg.t_floor) / grid_step + 1e-9);
    table.params_.t_max = cfg.t_floor + double(cells) * grid_step;
    table.rows_.resize(cells + 1);

    const double cell_tol = kCellTolPerUnit * grid_step;
    double acc = integrate_z_squared(0.0, cfg.t_floor, kHeadTol, cfg);
    double prev_t = cfg.t_floor;
    for (size_t j = 0; j <= cells; ++j) {
        const double t = cfg.t_floor + double(j) * grid_step;
        if (j > 0) acc += integrate_z_squared(prev_t, t, cell_tol, cfg);
        const double lam = ladder_log_factor(t);
        const double zv = z_value(t, cfg);
        LadderRow& row = table.rows_[j];
        row.t = t;
        row.i = acc;
        row.phi1 = (acc - c0) / lam;
        row.phi1_prime = (zv * zv - row.phi1 / t) / lam;
        prev_t = t;
    }
    table.validate_rows();
    table.compute_digest();
    return table;
}

void LadderTable::check_range(double t) const {
    if (t < params_.t_floor || t > params_.t_max)
        throw RangeError(detail::msg("ladder: t=", t, " outside table range [",
                                     params_.t_floor, ", ", params_.t_max,
                                     "]"));
}

size_t LadderTable::nearest_row(double t) const {
    const double idx = (t - params_.t_floor) / params_.grid_step;
    const long j = std::lround(idx);
    return size_t(std::clamp(j, 0L, long(rows_.size()) - 1));
}

double LadderTable::i_of(double t) const {
    check_range(t);
    const LadderRow& row = rows_[nearest_row(t)];
    if (t == row.t) return row.i;
    if (t > row.t) return row.i + integrate_z_squared(row.t, t, kLocalTol, cfg_);
    return row.i - integrate_z_squared(t, row.t, kLocalTol, cfg_);
}

double LadderTable::phi1(double t) const {
    check_range(t);
    const LadderRow& row = rows_[nearest_row(t)];
    if (t == row.t) return row.phi1;
    return (i_of(t) - params_.c0) / ladder_log_factor(t);
}

double LadderTable::phi1_prime(double t) const {
    check_range(t);
    const double zv = z_value(t, cfg_);
    return (zv * zv - phi1(t) / t) / ladder_log_factor(t);
}

double LadderTable::phi1_inverse(double y) const {
    const double y_lo = rows_.front().phi1;
    const double y_hi = rows_.back().phi1;
    if (y < y_lo || y > y_hi)
        throw RangeError(detail::msg("phi1_inverse: y=", y,
                                     " outside covered image [", y_lo, ", ",
                                     y_hi, "]"));

    // Coarse bracket on the stride >= 1 subgrid. From t >= 1e3 the strided
    // phi1 is strictly increasing (validated at build) and binary search is
    // safe; below that fall back to a left-to-right scan so the smallest
    // bracket still wins.
    const size_t stride = coarse_stride_rows_;
    const size_t last = (rows_.size() - 1) / stride;
    size_t mono_first = 0;  // first strided index with t >= 1e3
    if (params_.t_floor < 1e3)
        mono_first = std::min(
            last, size_t(std::ceil((1e3 - params_.t_floor) /
                                   (params_.grid_step * double(stride)))));
    size_t a, b;
    if (mono_first > 0 && y <= rows_[mono_first * stride].phi1) {
        size_t j = 0;
        while (j < last && !(rows_[j * stride].phi1 <= y &&
                             y <= rows_[(j + 1) * stride].phi1))
            ++j;
        a = j * stride;
        b = std::min((j + 1) * stride, rows_.size() - 1);
    } else {
        size_t lo = mono_first, hi = last;
        while (lo + 1 < hi) {
            const size_t mid = (lo + hi) / 2;
            if (rows_[mid * stride].phi1 <= y)
                lo = mid;
            else
                hi = mid;
        }
        a = lo * stride;
        b = std::min(hi * stride, rows_.size() - 1);
    }

    // First fine cell bracketing y. Fine-scale dips can break monotonicity,
    // so walk forward and take the first sign change.
    size_t cell = rows_.size();
    for (size_t j = a; j < b; ++j) {
        if ((rows_[j].phi1 - y) * (rows_[j + 1].phi1 - y) <= 0.0) {
            cell = j;
            break;
        }
    }
    if (cell == rows_.size())
        throw BracketError(detail::msg(
            "phi1_inverse: no bracket for y=", y,
            " inside coarse cell; table corrupt or non-monotone"));

    // Sub-scan the fine cell so bisection homes in on the smallest crossing.
    double t_lo = rows_[cell].t, t_hi = rows_[cell + 1].t;
    double g_lo = rows_[cell].phi1 - y;
    constexpr int kSubScan = 8;
    const double sub = (t_hi - t_lo) / kSubScan;
    for (int i = 1; i <= kSubScan; ++i) {
        const double tt = (i == kSubScan) ? t_hi : t_lo + sub * i;
        const double gg = phi1(tt) - y;
        if (g_lo * gg <= 0.0) {
            t_hi = tt;
            break;
        }
        t_lo = tt;
        g_lo = gg;
    }

    // Bisection to floating-point resolution; the contract tolerance
    // inv_tol_rel * y is far looser than what this delivers, and the
    // transform identities need the extra consistency.
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (mid <= t_lo || mid >= t_hi) break;
        const double gm = phi1(mid) - y;
        if (g_lo * gm <= 0.0)
            t_hi = mid;
        else {
            t_lo = mid;
            g_lo = gm;
        }
    }
    return 0.5 * (t_lo + t_hi);
}

std::vector<double> LadderTable::reverse_iterate(double t, int k) const {
    if (k < 0) throw DomainError("reverse_iterate: k must be >= 0");
    check_range(t);
    std::vector<double> seq;
    seq.reserve(k + 1);
    seq.push_back(t);
    for (int r = 1; r <= k; ++r) {
        try {
            seq.push_back(phi1_inverse(seq.back()));
        } catch (const RangeError&) {
            const double need =
                t * (1.0 + 1.1 * k * (1.0 - kEulerC) / ladder_log_factor(t));
            throw RangeError(detail::msg(
                "reverse_iterate: iterate ", r, " of t=", t,
                " leaves the table; rebuild with t_max >= ", need));
        }
    }
    return seq;
}

double LadderTable::forward_iterate(double t, int k) const {
    if (k < 0) throw DomainError("forward_iterate: k must be >= 0");
    double x = t;
    for (int r = 0; r < k; ++r) x = phi1(x);
    return x;
}

IterationChain make_chain(const LadderTable& table, double t, double u, int k,
                          const RunConfig& cfg) {
    if (u < 0.0) throw DomainError("make_chain: U must be >= 0");
    IterationChain chain;
    chain.base = t;
    chain.u = u;
    chain.k = k;
    chain.lower = table.reverse_iterate(t, k);
    chain.upper = table.reverse_iterate(t + u, k);
    for (int r = 0; r <= k; ++r) {
        if (chain.lower[r] >= chain.upper[r])
            throw BracketError("make_chain: iterated segment collapsed");
        if (r > 0) {
            if (chain.lower[r] <= chain.lower[r - 1])
                throw BracketError("make_chain: lower chain not increasing");
            const double back = table.phi1(chain.lower[r]);
            const double tol = cfg.inv_tol_rel * std::abs(chain.lower[r - 1]);
            if (std::abs(back - chain.lower[r - 1]) > tol)
                throw BracketError(detail::msg(
                    "make_chain: inversion defect ", back - chain.lower[r - 1],
                    " exceeds inv_tol at r=", r));
        }
    }
    return chain;
}

std::vector<ComplementarityRow> complementarity_report(
    const LadderTable& table, const std::vector<double>& ts) {
    std::vector<ComplementarityRow> out;
    out.reserve(ts.size());
    for (double t : ts) {
        const double gap = t - table.phi1(t);
        const double denom = (1.0 - kEulerC) * pi_asymptotic(t);
        ComplementarityRow row{t, gap / denom,
                               std::numeric_limits<double>::quiet_NaN()};
        if (t <= 1e8)
            row.ratio_exact =
                gap / ((1.0 - kEulerC) * double(prime_pi(std::int64_t(t))));
        out.push_back(row);
    }
    return out;
}

}  // namespace zq2
