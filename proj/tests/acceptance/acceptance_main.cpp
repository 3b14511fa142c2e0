// Acceptance suite: one line per criterion, [PASS]/[FAIL] verdicts with the
// measured numbers inline. Exits nonzero if any criterion fails.
//
// Two checks (4 and 9) assert asymptotic windows around ln-corrected
// quantities; the exact desk-scale values are printed next to the verdict so
// a red line can be read against what the identities actually give at these
// heights.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zq2/constants.hpp"
#include "zq2/errors.hpp"
#include "zq2/ladder.hpp"
#include "zq2/primes.hpp"
#include "zq2/quadrature.hpp"
#include "zq2/signals.hpp"
#include "zq2/transform.hpp"
#include "zq2/zeta.hpp"

using namespace zq2;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void verdict(int criterion, bool ok, const std::string& text) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
                text.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, ...) {
    char buf[1024];
    va_list ap;
    va_start(ap, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, ap);
    va_end(ap);
    return buf;
}

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct ZFixturePoint {
    double t, z;
};

std::vector<ZFixturePoint> load_z_fixture() {
    std::ifstream in(std::string(ZLADDER_FIXTURE_DIR) + "/z_values.csv");
    if (!in) throw IoError("missing fixtures/z_values.csv");
    std::string line;
    std::getline(in, line);
    std::vector<ZFixturePoint> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        out.push_back({std::stod(line.substr(0, comma)),
                       std::stod(line.substr(comma + 1))});
    }
    return out;
}

std::string run_cli(const std::string& cli, const std::string& args,
                    const fs::path& stdout_path) {
    const std::string cmd =
        cli + " " + args + " > " + stdout_path.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(stdout_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return "rc=" + std::to_string(rc) + "\n" + ss.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ----------------------------------------------------------------- criteria

void criterion_1_backend_agreement() {
    const auto start = clock_type::now();
    double max_diff = 0.0, arg_max = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double t = 200.0 * std::pow(500.0, i / 199.0);
        const double diff =
            std::abs(z_riemann_siegel(t, 2).z - z_euler_maclaurin(t, 1e-9).z);
        if (diff > max_diff) {
            max_diff = diff;
            arg_max = t;
        }
    }
    const double secs = seconds_since(start);
    const bool ok = max_diff <= 1e-6 && secs <= 30.0;
    verdict(1, ok,
            fmt("backend agreement over 200 log-spaced t in [2e2, 1e5]: "
                "max |Z_rs - Z_em| = %.3e at t = %.1f (cap 1e-6), %.1f s "
                "(cap 30 s)",
                max_diff, arg_max, secs));
}

void criterion_2_oracle_agreement() {
    const auto fixture = load_z_fixture();
    double max_dev = 0.0;
    for (const auto& p : fixture)
        max_dev = std::max(max_dev, std::abs(z_value(p.t) - p.z));
    const double first_zero = std::abs(z_value(14.1347251417));
    const bool ok =
        max_dev <= 1e-6 && first_zero <= 1e-6 && fixture.size() == 20;
    verdict(2, ok,
            fmt("oracle agreement at %zu fixture heights: max |Z - Z_mp| = "
                "%.3e (cap 1e-6); |Z(14.1347251417)| = %.3e (cap 1e-6)",
                fixture.size(), max_dev, first_zero));
}

LadderTable criterion_3_second_moment(const fs::path& table_path) {
    const auto start = clock_type::now();
    LadderTable table = LadderTable::build(2e5, 0.25, 0.0);
    const double secs = seconds_since(start);
    table.save(table_path);

    const double i4 = table.i_of(1e4);
    const double asym =
        1e4 * std::log(1e4 / kTwoPi) + (2.0 * kEulerC - 1.0) * 1e4;
    const double rel = std::abs(i4 / asym - 1.0);
    const bool ok = rel <= 0.01 && secs <= 600.0;
    verdict(3, ok,
            fmt("second moment: I(1e4) = %.4f vs classical asymptotic %.4f "
                "(rel dev %.2e, cap 1e-2); build to t_max=2e5 in %.0f s "
                "(cap 600 s, single-threaded)",
                i4, asym, rel, secs));
    return table;
}

void criterion_4_complementarity(const LadderTable& table) {
    const std::vector<double> ts = {1e4, 1e5, 2e5 - 10.0};
    const auto rows = complementarity_report(table, ts);
    bool band_ok = true;
    std::string detail;
    std::vector<double> devs;
    for (const auto& r : rows) {
        band_ok = band_ok && r.ratio_asymptotic >= 0.85 &&
                  r.ratio_asymptotic <= 1.15;
        devs.push_back(std::abs(r.ratio_asymptotic - 1.0));
        detail += fmt("%s%.0f:%.4f", detail.empty() ? "" : ", ", r.t,
                      r.ratio_asymptotic);
    }
    bool trend_ok = true;
    for (size_t i = 1; i < devs.size(); ++i)
        trend_ok = trend_ok && devs[i] <= devs[i - 1] + 1e-12;
    verdict(4, band_ok && trend_ok,
            fmt("complementarity (T - phi1) ln T / ((1-c)T) in [0.85, 1.15]: "
                "{%s}; deviation trend non-increasing: %s. The exact identity "
                "gives ln T/(ln T + c - ln 2pi) * (1 - E/((1-c)T)) = 1.158 at "
                "T=1e4; the asserted window only opens past T ~ 1.6e4",
                detail.c_str(), trend_ok ? "yes" : "no"));
}

void criterion_5_master_identity(const LadderTable& table) {
    std::mt19937 rng(20250810);
    std::uniform_real_distribution<double> logT(std::log(1e4), std::log(1.5e5));
    std::uniform_real_distribution<double> pickU(0.1, 0.5);
    std::uniform_real_distribution<double> pickD(-2.0, 3.0);
    std::uniform_int_distribution<int> pickK(0, 2);
    std::uniform_real_distribution<double> pickSD(0.5, 2.0);

    double max_defect = 0.0, max_product_dev = 0.0;
    int done = 0;
    for (int i = 0; i < 20; ++i) {
        const double t = std::exp(logT(rng));
        const double u = pickU(rng);
        const int k = pickK(rng);
        SignalSpec f;
        switch (i % 4) {
            case 0: f = SignalSpec::constant(t, u, u); break;
            case 3: f = SignalSpec::shifted_power(pickSD(rng), t, u, 0.5); break;
            default: {
                double d = pickD(rng);
                if (d == 0.0) d = 0.5;
                f = SignalSpec::power(d, t, u, u);
            }
        }
        const MeanValueSolution alpha = mean_value_point(table, f, t, u, k);
        const MeanValueSolution beta = beta_nodes(table, t, u, k);
        max_defect =
            std::max({max_defect, alpha.master_defect, beta.master_defect});

        double prod = 1.0;
        for (size_t r = 1; r < alpha.nodes.size(); ++r)
            prod *= table.phi1_prime(alpha.nodes[r]);
        const double len = alpha.chain.upper[k] - alpha.chain.lower[k];
        const double rhs = (u / len) * f.g_of(alpha.nodes[0]);
        max_product_dev = std::max(max_product_dev, std::abs(prod / rhs - 1.0));

        double bprod = 1.0;
        for (double b : beta.nodes) bprod *= table.phi1_prime(b);
        const double blen = beta.chain.upper[k] - beta.chain.lower[k];
        if (k >= 1)
            max_product_dev =
                std::max(max_product_dev, std::abs(bprod * blen / u - 1.0));
        ++done;
    }
    const bool ok = done == 20 && max_defect <= 1e-4 && max_product_dev <= 1e-6;
    verdict(5, ok,
            fmt("substitution identity on 20 random (T, U, k, f) runs: max "
                "|int F - int f|/int f = %.3e (cap 1e-4); max mean-value "
                "product defect = %.3e (cap mv_tol = 1e-6)",
                max_defect, max_product_dev));
}

void criterion_6_telegraphic(const LadderTable& table) {
    bool ok = true;
    double worst_margin = 0.0;
    std::string worst = "-";
    for (double t : {1e4, 1e5})
        for (double delta : {-1.0, -0.5, 0.0, 2.0, 1000.0}) {
            const PowerTheoremReport rep =
                power_theorem_check(table, delta, t, 0.4, 2);
            if (delta == 0.0) {
                ok = ok && rep.base.g == 1.0;
                continue;
            }
            const double margin = std::abs(rep.base.g - 1.0) / rep.envelope;
            if (margin > worst_margin) {
                worst_margin = margin;
                worst = fmt("delta=%g T=%g", delta, t);
            }
            ok = ok && rep.envelope_ok;
        }
    verdict(6, ok,
            fmt("power signals map to the unit level: |g-1| within the "
                "deterministic envelope (1+U/T)^(|delta|+1)-1 on all 10 runs "
                "(worst uses %.3f of the envelope, at %s); g = 1 exactly for "
                "delta = 0",
                worst_margin, worst.c_str()));
}

void criterion_7_factorization(const LadderTable& table) {
    RunConfig cfg;
    cfg.well_conditioned = true;
    bool bound_ok = true;
    std::vector<double> medians;
    std::string detail;
    for (double t : {1e4, 1e5}) {
        std::vector<double> devs;
        int conditioned = 0;
        for (double delta : {-1.0, -0.5, 0.5, 1.0, 2.0, 3.0})
            for (double u : {0.3, 0.4, 0.5}) {
                const SignalSpec f = SignalSpec::power(delta, t, u, u);
                const TransformReport rep = z_transform(table, f, t, u, 2, cfg);
                if (!rep.conditioned) continue;
                ++conditioned;
                const double dev = std::abs(rep.discrepancy);
                devs.push_back(dev);
                bound_ok = bound_ok && dev <= rep.bound;
            }
        for (double delta : {1.0, 2.0})
            for (double u : {0.3, 0.4, 0.5}) {
                const ShiftedPowerReport rep =
                    shifted_power_transform(table, delta, t, u, 2, cfg);
                if (!rep.base.conditioned) continue;
                ++conditioned;
                const double dev = std::abs(rep.base.discrepancy);
                devs.push_back(dev);
                bound_ok = bound_ok && dev <= rep.base.bound;
            }
        std::sort(devs.begin(), devs.end());
        const double median = devs.empty() ? 1e9 : devs[devs.size() / 2];
        medians.push_back(median);
        detail += fmt("%sT=%g: %d conditioned runs, median |G2/g - 1| = %.3e",
                      detail.empty() ? "" : "; ", t, conditioned, median);
        bound_ok = bound_ok && conditioned >= 10;
    }
    const bool trend_ok = medians.size() == 2 && medians[1] <= medians[0];
    verdict(7, bound_ok && trend_ok,
            fmt("factorization: |G2/g - 1| <= 5 ln ln T / ln T on every "
                "conditioned run, median shrinking with T (%s)",
                detail.c_str()));
}

void criterion_8_dichotomy(const LadderTable& table) {
    int runs = 0, violations = 0, case1 = 0;
    for (double delta : {0.5, 1.0, 2.0})
        for (int i = 1; i <= 10; ++i) {
            const double u = 0.05 * i;
            const ShiftedPowerReport rep =
                shifted_power_transform(table, delta, 1e5, u, 1);
            ++runs;
            if (!rep.bounds_ok) ++violations;
            if (rep.dichotomy_case == 1) ++case1;
        }
    verdict(8, violations == 0 && runs == 30,
            fmt("shifted-power dichotomy: %d U-sweep runs at L=1e5 (delta in "
                "{0.5, 1, 2}), %d landed in the near-edge case alpha0-L <= "
                "U/2, %d violations of the exact g-bounds",
                runs, case1, violations));
}

void criterion_9_gaps(const LadderTable& table) {
    const SignalSpec f = SignalSpec::power(2.0, 1e5, 0.4, 0.5);
    const MeanValueSolution alpha = mean_value_point(table, f, 1e5, 0.4, 2);
    const MeanValueSolution beta = beta_nodes(table, 1e5, 0.4, 2);

    bool ordering_ok = true;
    for (size_t r = 1; r < alpha.nodes.size(); ++r)
        ordering_ok = ordering_ok && alpha.nodes[r] > alpha.nodes[r - 1];
    for (size_t r = 1; r < beta.nodes.size(); ++r)
        ordering_ok = ordering_ok && beta.nodes[r] > beta.nodes[r - 1];
    ordering_ok =
        ordering_ok && alpha.nodes[0] > 1e5 && alpha.nodes[0] < 1e5 + 0.4;

    bool band_ok = true;
    std::string detail;
    for (const auto& sol : {alpha, beta})
        for (const GapRow& row : gap_report(sol)) {
            band_ok = band_ok && row.ratio >= 0.85 && row.ratio <= 1.15;
            detail += fmt("%s%.4f", detail.empty() ? "" : ", ", row.ratio);
        }
    verdict(9, ordering_ok && band_ok,
            fmt("node gaps vs (1-c) T/ln T at T=1e5, k=2: ratios {%s} "
                "asserted in [0.85, 1.15]; strict node ordering: %s. The "
                "exact identity gives (1-c)T^(r+1)/(ln T^(r+1)+c-ln 2pi) over "
                "(1-c)T/ln T ~ 1.17-1.21 here; the window needs far larger T",
                detail.c_str(), ordering_ok ? "yes" : "no"));
}

void criterion_10_spectral() {
    RunConfig cfg;
    RunConfig raw = cfg;
    raw.spectral_omega_raw = true;
    double c_sp = 0.0;
    std::vector<double> errs, raw_errs, xs = {1e3, 1e4, 1e5};
    for (double x : xs) {
        const SpectrumDescriptor spec = local_spectrum(x, cfg);
        const SpectrumDescriptor spec_raw = local_spectrum(x, raw);
        double err = 0.0, err_raw = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double t = x + spec.window * i / 100.0;
            const double zv = z_value(t);
            err = std::max(err, std::abs(spectral_z(t, spec) - zv));
            err_raw = std::max(err_raw, std::abs(spectral_z(t, spec_raw) - zv));
        }
        errs.push_back(err);
        raw_errs.push_back(err_raw);
        c_sp = std::max(c_sp, err * std::pow(x, 0.25));
    }
    bool raw_exceeds = true;
    for (size_t i = 0; i < xs.size(); ++i)
        raw_exceeds =
            raw_exceeds && raw_errs[i] > c_sp * std::pow(xs[i], -0.25);
    const bool ok = c_sp <= 10.0 && raw_exceeds;
    verdict(10, ok,
            fmt("spectral form with omega = ln(tau/n): single fitted C_sp = "
                "%.3f (cap 10) bounds max errors {%.3f, %.3f, %.3f} over "
                "[x, x + x^(1/4)] at x in {1e3, 1e4, 1e5}; raw omega = tau/n "
                "errors {%.1f, %.1f, %.1f} exceed that bound at every x: %s",
                c_sp, errs[0], errs[1], errs[2], raw_errs[0], raw_errs[1],
                raw_errs[2], raw_exceeds ? "yes" : "no"));
}

void criterion_11_determinism(const std::string& cli, const fs::path& work,
                              const fs::path& table_path) {
    const std::string tbl = " --table " + table_path.string();
    struct Mode {
        const char* name;
        std::string args;
    };
    const std::vector<Mode> modes = {
        {"power",
         "verify power --deltas -1,0,2 --T-list 1e4,1e5 --U 0.4 --k 2" + tbl},
        {"shifted",
         "verify shifted --delta 1 --L 1e5 --U-sweep 0.1:0.5:0.1 --k 1" + tbl},
        {"gaps", "verify gaps --T 1e5 --U 0.4 --k 2" + tbl},
        {"complementarity", "verify complementarity --T-list 1e4,1e5" + tbl},
        {"spectral", "verify spectral --x-list 1e3,1e4 --probes 50"},
    };
    bool ok = true;
    std::string mismatch;
    for (const Mode& m : modes) {
        std::string outputs[2];
        for (int runix = 0; runix < 2; ++runix) {
            const fs::path csv =
                work / fmt("verify-%s-run%d.csv", m.name, runix + 1);
            const fs::path log =
                work / fmt("verify-%s-run%d.log", m.name, runix + 1);
            const std::string console =
                run_cli(cli, m.args + " --csv " + csv.string(), log);
            outputs[runix] = console + "\n---\n" + slurp(csv);
        }
        if (outputs[0] != outputs[1] || outputs[0].empty()) {
            ok = false;
            mismatch += std::string(" ") + m.name;
        }
    }
    std::string json[2];
    for (int runix = 0; runix < 2; ++runix) {
        const fs::path jp = work / fmt("transform-run%d.json", runix + 1);
        run_cli(cli,
                "transform --f pow:2 --T 1e5 --U 0.4 --k 2" + tbl + " --json " +
                    jp.string(),
                work / "transform.log");
        json[runix] = slurp(jp);
    }
    if (json[0] != json[1] || json[0].empty()) {
        ok = false;
        mismatch += " transform-json";
    }
    verdict(11, ok,
            fmt("determinism: two verify-suite runs (5 modes + transform "
                "JSON) on the same table are byte-identical%s%s",
                ok ? "" : "; mismatch in:", mismatch.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    fs::path work = "acceptance-work";
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--cli")) cli = argv[i + 1];
        if (!std::strcmp(argv[i], "--workdir")) work = argv[i + 1];
    }
    fs::create_directories(work);
    const fs::path table_path = work / "ladder-table.csv";

    try {
        criterion_1_backend_agreement();
        criterion_2_oracle_agreement();
        const LadderTable table = criterion_3_second_moment(table_path);
        criterion_4_complementarity(table);
        criterion_5_master_identity(table);
        criterion_6_telegraphic(table);
        criterion_7_factorization(table);
        criterion_8_dichotomy(table);
        criterion_9_gaps(table);
        criterion_10_spectral();
        if (!cli.empty())
            criterion_11_determinism(cli, work, table_path);
        else
            verdict(11, false, "determinism: no --cli path supplied");
    } catch (const Error& e) {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 2;
    }

    std::printf("acceptance: %d of 11 criteria passed\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
