#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "zq2/config.hpp"

namespace zq2 {

struct LadderRow {
    double t;
    double i;           // I(t) = int_0^t Z^2
    double phi1;        // (I(t) - c0) / (ln t + c - ln 2pi)
    double phi1_prime;  // (Z^2(t) - phi1/t) / (ln t + c - ln 2pi)
};

// Immutable grid of the second-moment accumulator and the ladder function
// phi1 derived from it. The backbone of every transform operation: built
// once, cached to CSV, shared read-only afterwards.
class LadderTable {
public:
    struct Params {
        double grid_step = 0.25;
        double t_floor = 100.0;
        double t_max = 0.0;
        double c0 = 0.0;
        double rho = 0.25;
        int    quad_order = 16;
    };

    static LadderTable build(double t_max, double grid_step = 0.25,
                             double c0 = 0.0, const RunConfig& cfg = {});
    static LadderTable load(const std::filesystem::path& path,
                            const RunConfig& cfg = {});
    void save(const std::filesystem::path& path) const;

    const Params& params() const { return params_; }
    const std::vector<LadderRow>& rows() const { return rows_; }
    double t_floor() const { return params_.t_floor; }
    double t_max() const { return params_.t_max; }

    // FNV-1a 64 over the serialized table, hex string; ties reports to a build.
    const std::string& digest() const { return digest_; }

    // Rows per coarse bracketing step: the smallest step >= 1 on which phi1
    // is strictly increasing for t >= 1e3. Unit steps are not always enough;
    // weak Z stretches (close zero pairs with a small peak between) can push
    // phi1 down across more than one unit.
    size_t coarse_stride_rows() const { return coarse_stride_rows_; }

    // I(t) anywhere in range: nearest grid row plus local re-quadrature.
    // Never interpolates I across panels; Z^2 oscillates too fast for that.
    double i_of(double t) const;

    double phi1(double t) const;
    double phi1_prime(double t) const;

    // Inverse of phi1: coarse bracket on the step >= 1 subgrid (where phi1 is
    // strictly increasing), then the smallest crossing inside the bracket.
    double phi1_inverse(double y) const;

    // T^0 = t, phi1(T^r) = T^(r-1): the reversely iterated sequence.
    std::vector<double> reverse_iterate(double t, int k) const;

    // phi1 applied k times.
    double forward_iterate(double t, int k) const;

private:
    LadderTable() = default;
    void check_range(double t) const;
    size_t nearest_row(double t) const;
    void validate_rows();
    void compute_digest();

    Params params_;
    RunConfig cfg_;
    std::vector<LadderRow> rows_;
    std::string digest_;
    size_t coarse_stride_rows_ = 0;
};

// Reverse-iterated endpoints of [T, T+U]: lower[r] = T^r, upper[r] = (T+U)^r.
struct IterationChain {
    double base = 0.0;
    double u = 0.0;
    int k = 0;
    std::vector<double> lower, upper;
};

IterationChain make_chain(const LadderTable& table, double t, double u, int k,
                          const RunConfig& cfg = {});

struct ComplementarityRow {
    double t;
    double ratio_asymptotic;  // (t - phi1(t)) / ((1-c) * t/ln t)
    double ratio_exact;       // same against exact prime_pi
};

std::vector<ComplementarityRow> complementarity_report(
    const LadderTable& table, const std::vector<double>& ts);

}  // namespace zq2
