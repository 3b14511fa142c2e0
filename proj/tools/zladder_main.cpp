// zladder: critical-line evaluation, Hardy-Littlewood ladder tables, and the
// zeta-ratio transform of power signals, from the command line.
//
// Exit codes: 0 ok; 1 verify invariant failed; 2 build/validation failure;
// 3 I/O failure; 4 inadmissible U; 5 outside table range.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zq2/constants.hpp"
#include "zq2/errors.hpp"
#include "zq2/ladder.hpp"
#include "zq2/primes.hpp"
#include "zq2/quadrature.hpp"
#include "zq2/signals.hpp"
#include "zq2/transform.hpp"
#include "zq2/zeta.hpp"

using namespace zq2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBuildFail = 2;
constexpr int kExitIoFail = 3;
constexpr int kExitUBound = 4;
constexpr int kExitRange = 5;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

// lo:hi:step inclusive sweep
std::vector<double> parse_sweep(const std::string& text) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 ||
        step <= 0)
        throw CLI::ValidationError("sweep", "expected lo:hi:step");
    std::vector<double> out;
    for (long i = 0;; ++i) {
        const double v = lo + step * double(i);
        if (v > hi + 1e-12 * step) break;
        out.push_back(std::min(v, hi));
    }
    return out;
}

struct SignalArg {
    SignalKind kind = SignalKind::Constant;
    double delta = 0.0;
    double l = 0.0;
};

SignalArg parse_signal(const std::string& text) {
    SignalArg s;
    if (text == "const") {
        s.kind = SignalKind::Constant;
        return s;
    }
    if (text.rfind("pow:", 0) == 0) {
        s.kind = SignalKind::Power;
        s.delta = std::stod(text.substr(4));
        return s;
    }
    if (text.rfind("shifted:", 0) == 0) {
        const auto rest = text.substr(8);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--f", "expected shifted:<delta>:<L>");
        s.kind = SignalKind::ShiftedPower;
        s.delta = std::stod(rest.substr(0, colon));
        s.l = std::stod(rest.substr(colon + 1));
        return s;
    }
    throw CLI::ValidationError("--f", "expected const, pow:<d> or shifted:<d>:<L>");
}

struct CommonOpts {
    RunConfig cfg;
    std::string table_path;
    std::string omega_mode = "ln";

    void add_config_flags(CLI::App* app, bool with_table) {
        app->add_option("--t-switch", cfg.t_switch,
                        "backend switch height (default 200)");
        app->add_option("--n-corrections", cfg.n_corrections,
                        "Riemann-Siegel correction terms, 0..4");
        app->add_option("--em-tol", cfg.em_tol, "Euler-Maclaurin tolerance");
        app->add_option("--rho", cfg.rho, "panel width fraction of the zero gap");
        app->add_option("--kappa", cfg.kappa, "ln ln T / ln T bound constant");
        app->add_option("--u-kappa", cfg.u_kappa, "U-bound constant");
        app->add_option("--z-floor", cfg.z_floor, "conditioning floor for |Z|");
        app->add_option("--k-max", cfg.k_max, "iteration depth cap");
        app->add_option("--l-bar0", cfg.l_bar0, "smallest admissible L");
        app->add_option("--mv-tol", cfg.mv_tol, "mean-value identity tolerance");
        app->add_option("--inv-tol", cfg.inv_tol_rel,
                        "relative inversion contract tolerance");
        app->add_option("--spectral-omega", omega_mode,
                        "oscillator frequency form: ln (default) or raw");
        app->add_flag("--well-conditioned", cfg.well_conditioned,
                      "skip mean-value roots with a node near a zeta zero");
        if (with_table) {
            const char* env = std::getenv("ZLAD_TABLE");
            table_path = env ? env : "";
            app->add_option("--table", table_path,
                            "ladder table cache (default $ZLAD_TABLE)");
        }
    }

    RunConfig final_config() {
        cfg.spectral_omega_raw = (omega_mode == "raw");
        cfg.validate();
        return cfg;
    }

    LadderTable load_table() {
        if (table_path.empty())
            throw IoError("no table given: pass --table or set ZLAD_TABLE");
        return LadderTable::load(table_path, final_config());
    }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(detail::msg("cannot open ", path, " for writing"));
    out << text;
    if (!out.flush()) throw IoError(detail::msg("write failed for ", path));
}

// ---------------------------------------------------------------- build-table

int cmd_build_table(double t_max, double grid_step, double c0,
                    CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    if (opts.table_path.empty())
        throw IoError("build-table: pass --out or set ZLAD_TABLE");
    const auto start = std::chrono::steady_clock::now();
    const LadderTable table = LadderTable::build(t_max, grid_step, c0, cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    table.save(opts.table_path);
    std::printf("rows=%zu t=[%s, %s] grid_step=%s c0=%s digest=%s build_s=%.1f\n",
                table.rows().size(), num(table.t_floor()).c_str(),
                num(table.t_max()).c_str(), num(grid_step).c_str(),
                num(c0).c_str(), table.digest().c_str(), secs);
    return kExitOk;
}

// --------------------------------------------------------------------- eval-z

int cmd_eval_z(const std::vector<double>& ts, const std::string& backend,
               const std::string& json_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    std::string json = "[";
    std::printf("t,z,theta,backend,err_bound\n");
    for (size_t i = 0; i < ts.size(); ++i) {
        ZEvaluation e;
        if (backend == "em")
            e = z_euler_maclaurin(ts[i], cfg.em_tol, cfg.em_term_cap);
        else if (backend == "rs")
            e = z_riemann_siegel(ts[i], cfg.n_corrections, cfg);
        else
            e = z(ts[i], cfg);
        std::printf("%s,%s,%s,%s,%s\n", num(e.t).c_str(), num(e.z).c_str(),
                    num(e.theta).c_str(), backend_name(e.backend),
                    num(e.err_bound).c_str());
        if (i) json += ",";
        json += "{\"t\":" + num(e.t) + ",\"z\":" + num(e.z) +
                ",\"theta\":" + num(e.theta) + ",\"backend\":\"" +
                backend_name(e.backend) + "\",\"err_bound\":" +
                num(e.err_bound) + "}";
    }
    json += "]";
    if (!json_path.empty()) write_text(json_path, json + "\n");
    return kExitOk;
}

// ------------------------------------------------------------------- spectrum

int cmd_spectrum(double x, const std::string& csv_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    const SpectrumDescriptor spec = local_spectrum(x, cfg);
    std::string csv = "# spectrum x=" + num(spec.x) + " tau=" + num(spec.tau) +
                      " psi=" + num(spec.psi) +
                      " remainder_bound=" + num(spec.remainder_bound) +
                      " window=" + num(spec.window) + "\n";
    csv += "n,amplitude,omega\n";
    for (const Oscillator& o : spec.oscillators)
        csv += std::to_string(o.n) + "," + num(o.amplitude) + "," +
               num(o.omega) + "\n";
    if (csv_path.empty())
        std::fputs(csv.c_str(), stdout);
    else
        write_text(csv_path, csv);
    return kExitOk;
}

// ------------------------------------------------------------------ transform

int cmd_transform(const SignalArg& sig, double t, double u, int k, double a,
                  const std::string& json_path, const std::string& csv_path,
                  CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    const UBound ub = check_u_bound(sig.kind == SignalKind::ShiftedPower
                                        ? sig.l
                                        : t,
                                    u, cfg);
    if (!ub.ok) {
        std::fprintf(stderr, "inadmissible U=%s: bound at this T is %s\n",
                     num(u).c_str(), num(ub.max_u).c_str());
        return kExitUBound;
    }
    const LadderTable table = opts.load_table();

    TransformReport rep;
    if (sig.kind == SignalKind::ShiftedPower) {
        rep = shifted_power_transform(table, sig.delta, sig.l, u, k, cfg).base;
    } else {
        const SignalSpec f = sig.kind == SignalKind::Constant
                                 ? SignalSpec::constant(t, u, std::max(a, u))
                                 : SignalSpec::power(sig.delta, t, u,
                                                     std::max(a, u));
        rep = z_transform(table, f, t, u, k, cfg);
    }
    const std::string json = report_to_json(rep);
    std::puts(json.c_str());
    if (!json_path.empty()) write_text(json_path, json + "\n");
    if (!csv_path.empty())
        write_text(csv_path, report_csv_header() + "\n" + report_to_csv(rep) + "\n");
    return kExitOk;
}

// ------------------------------------------------------------------- schedule

int cmd_schedule(const std::string& mode, double l, double a, int count,
                 const std::string& l_list, const std::string& a_list,
                 const std::string& out_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    std::vector<SchedulePoint> sched;
    ScheduleMode m;
    if (mode == "integer-ladder") {
        m = ScheduleMode::IntegerLadder;
        sched = make_integer_ladder_schedule(l, a, count, cfg);
    } else if (mode == "custom") {
        m = ScheduleMode::Custom;
        const auto ls = parse_list(l_list);
        const auto as = parse_list(a_list);
        sched = make_custom_schedule(ls, as, cfg);
    } else {
        throw CLI::ValidationError("--mode", "integer-ladder or custom");
    }
    if (!out_path.empty()) save_schedule(out_path, m, sched);
    std::printf("points=%zu periodic=%s\n", sched.size(),
                schedule_is_periodic(sched) ? "yes" : "no");
    for (const SchedulePoint& p : sched)
        std::printf("%s,%s\n", num(p.l).c_str(), num(p.a).c_str());
    return kExitOk;
}

// --------------------------------------------------------------------- verify

struct VerifySink {
    std::string csv;
    bool all_ok = true;

    void header(const std::string& cols) { csv = cols + "\n"; }
    void row(const std::string& r) { csv += r + "\n"; }
    void check(bool ok, const std::string& what) {
        if (!ok) {
            all_ok = false;
            std::printf("[FAIL] %s\n", what.c_str());
        }
    }
    int finish(const std::string& csv_path, const std::string& mode) {
        if (!csv_path.empty()) write_text(csv_path, csv);
        std::printf("%s: %s\n", mode.c_str(), all_ok ? "PASS" : "FAIL");
        return all_ok ? kExitOk : kExitVerifyFail;
    }
};

int verify_power(const std::vector<double>& deltas,
                 const std::vector<double>& ts, double u, int k, double a,
                 const std::string& csv_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    const LadderTable table = opts.load_table();
    VerifySink sink;
    sink.header("delta,T,U,k,g,envelope,g_dev,G2,discrepancy,bound,conditioned");
    for (double t : ts)
        for (double delta : deltas) {
            const PowerTheoremReport rep =
                power_theorem_check(table, delta, t, u, k, cfg);
            (void)a;
            sink.row(num(delta) + "," + num(t) + "," + num(u) + "," +
                     std::to_string(k) + "," + num(rep.base.g) + "," +
                     num(rep.envelope) + "," + num(std::abs(rep.base.g - 1.0)) +
                     "," + num(rep.base.g2) + "," + num(rep.base.discrepancy) +
                     "," + num(rep.base.bound) + "," +
                     (rep.base.conditioned ? "true" : "false"));
            sink.check(rep.envelope_ok,
                       detail::msg("envelope delta=", delta, " T=", t, ": |g-1|=",
                                   std::abs(rep.base.g - 1.0), " > ",
                                   rep.envelope));
            if (delta == 0.0)
                sink.check(rep.base.g == 1.0, "delta=0 must give g=1 exactly");
            if (rep.base.conditioned && k >= 1)
                sink.check(std::abs(rep.base.g2 - 1.0) <= rep.base.bound,
                           detail::msg("zeta-ratio |G2-1| delta=", delta,
                                       " T=", t, " exceeds ", rep.base.bound));
        }
    return sink.finish(csv_path, "verify power");
}

int verify_shifted(const std::vector<double>& deltas, double l,
                   const std::vector<double>& us, int k,
                   const std::string& csv_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    const LadderTable table = opts.load_table();
    VerifySink sink;
    sink.header("delta,L,U,k,alpha0_minus_l,case,g,lower,upper,ok");
    for (double delta : deltas)
        for (double u : us) {
            const ShiftedPowerReport rep =
                shifted_power_transform(table, delta, l, u, k, cfg);
            sink.row(num(delta) + "," + num(l) + "," + num(u) + "," +
                     std::to_string(k) + "," + num(rep.alpha0_minus_l) + "," +
                     std::to_string(rep.dichotomy_case) + "," +
                     num(rep.base.g) + "," + num(rep.lower_bound) + "," +
                     num(rep.upper_bound) + "," +
                     (rep.bounds_ok ? "true" : "false"));
            sink.check(rep.bounds_ok,
                       detail::msg("dichotomy delta=", delta, " U=", u, " g=",
                                   rep.base.g, " case=", rep.dichotomy_case));
            sink.check(rep.alpha0_minus_l > 0.0 && rep.alpha0_minus_l < u,
                       detail::msg("alpha0 outside (L, L+U) at U=", u));
        }
    return sink.finish(csv_path, "verify shifted");
}

int verify_gaps(double t, double u, int k, const SignalArg& sig,
                const std::string& csv_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    const LadderTable table = opts.load_table();
    const SignalSpec f = sig.kind == SignalKind::Power
                             ? SignalSpec::power(sig.delta, t, u, 0.5)
                             : SignalSpec::constant(t, u, 0.5);
    VerifySink sink;
    sink.header("chain,r,gap,ratio");
    const MeanValueSolution alpha = mean_value_point(table, f, t, u, k, cfg);
    const MeanValueSolution beta = beta_nodes(table, t, u, k, cfg);
    for (const GapRow& row : gap_report(alpha)) {
        sink.row(detail::msg("alpha,", row.r, ",", num(row.gap), ",",
                             num(row.ratio)));
        sink.check(row.gap > 0.0, "alpha chain ordering");
        sink.check(row.ratio >= 0.85 && row.ratio <= 1.15,
                   detail::msg("alpha gap ratio r=", row.r, " = ", row.ratio,
                               " outside [0.85, 1.15]"));
    }
    for (const GapRow& row : gap_report(beta)) {
        sink.row(detail::msg("beta,", row.r, ",", num(row.gap), ",",
                             num(row.ratio)));
        sink.check(row.gap > 0.0, "beta chain ordering");
        sink.check(row.ratio >= 0.85 && row.ratio <= 1.15,
                   detail::msg("beta gap ratio r=", row.r, " = ", row.ratio,
                               " outside [0.85, 1.15]"));
    }
    return sink.finish(csv_path, "verify gaps");
}

int verify_complementarity(const std::vector<double>& ts,
                           const std::string& csv_path, CommonOpts& opts) {
    opts.final_config();
    const LadderTable table = opts.load_table();
    VerifySink sink;
    sink.header("t,ratio_asymptotic,ratio_exact");
    const auto rows = complementarity_report(table, ts);
    std::vector<double> devs;
    for (const auto& row : rows) {
        sink.row(num(row.t) + "," + num(row.ratio_asymptotic) + "," +
                 num(row.ratio_exact));
        devs.push_back(std::abs(row.ratio_asymptotic - 1.0));
        sink.check(row.ratio_asymptotic >= 0.85 && row.ratio_asymptotic <= 1.15,
                   detail::msg("complementarity ratio at t=", row.t, " = ",
                               row.ratio_asymptotic, " outside [0.85, 1.15]"));
    }
    for (size_t i = 1; i < devs.size(); ++i)
        sink.check(devs[i] <= devs[i - 1] + 1e-12,
                   detail::msg("deviation from 1 grew between t=", rows[i - 1].t,
                               " and t=", rows[i].t));
    return sink.finish(csv_path, "verify complementarity");
}

int verify_spectral(const std::vector<double>& xs, int n_probe,
                    const std::string& csv_path, CommonOpts& opts) {
    const RunConfig cfg = opts.final_config();
    VerifySink sink;
    sink.header("x,max_err,bound,max_err_raw");
    RunConfig raw_cfg = cfg;
    raw_cfg.spectral_omega_raw = true;
    for (double x : xs) {
        const SpectrumDescriptor spec = local_spectrum(x, cfg);
        const SpectrumDescriptor spec_raw = local_spectrum(x, raw_cfg);
        double max_err = 0.0, max_raw = 0.0;
        for (int i = 0; i <= n_probe; ++i) {
            const double t = x + spec.window * double(i) / double(n_probe);
            const double zv = z_value(t, cfg);
            max_err = std::max(max_err, std::abs(spectral_z(t, spec) - zv));
            max_raw = std::max(max_raw, std::abs(spectral_z(t, spec_raw) - zv));
        }
        const double bound = cfg.spectral_k * std::pow(x, -0.25);
        sink.row(num(x) + "," + num(max_err) + "," + num(bound) + "," +
                 num(max_raw));
        sink.check(max_err <= bound,
                   detail::msg("spectral error at x=", x, " = ", max_err,
                               " exceeds ", bound));
        // raw tau/n frequencies are printed for comparison, not asserted
    }
    return sink.finish(csv_path, "verify spectral");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical-line engine and zeta-ratio signal transform"};
    app.require_subcommand(1);

    // build-table
    auto* build = app.add_subcommand("build-table", "build and cache a ladder table");
    CommonOpts build_opts;
    double t_max = 0, grid_step = 0.25, c0 = 0.0;
    build->add_option("--t-max", t_max, "upper end of the grid")->required();
    build->add_option("--grid-step", grid_step, "grid step (default 0.25)");
    build->add_option("--c0", c0, "Titchmarsh-Kober-Atkinson constant");
    build->add_option("--out,-o", build_opts.table_path, "output path");
    build_opts.add_config_flags(build, false);
    if (build_opts.table_path.empty()) {
        const char* env = std::getenv("ZLAD_TABLE");
        if (env) build_opts.table_path = env;
    }

    // eval-z
    auto* evalz = app.add_subcommand("eval-z", "evaluate Z(t)");
    CommonOpts eval_opts;
    std::string eval_backend = "auto", eval_json;
    std::vector<double> eval_ts;
    evalz->add_option("--t", eval_ts, "heights to evaluate")->required();
    evalz->add_option("--backend", eval_backend, "auto|em|rs");
    evalz->add_option("--json", eval_json, "also write a JSON array here");
    eval_opts.add_config_flags(evalz, false);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "local oscillator spectrum");
    CommonOpts spec_opts;
    double spec_x = 0;
    std::string spec_csv;
    spectrum->add_option("--x", spec_x, "base point")->required();
    spectrum->add_option("--csv", spec_csv, "write rows here instead of stdout");
    spec_opts.add_config_flags(spectrum, false);

    // transform
    auto* transform = app.add_subcommand("transform", "run the signal transform");
    CommonOpts tr_opts;
    std::string tr_f = "const", tr_json, tr_csv;
    double tr_t = 0, tr_u = 0, tr_a = 0.5;
    int tr_k = 1;
    transform->add_option("--f", tr_f, "const, pow:<d>, shifted:<d>:<L>");
    transform->add_option("--T", tr_t, "interval start (ignored for shifted)");
    transform->add_option("--U", tr_u, "interval length")->required();
    transform->add_option("--k", tr_k, "iteration depth");
    transform->add_option("--a", tr_a, "U-range upper bound (default 0.5)");
    transform->add_option("--json", tr_json, "write the report JSON here");
    transform->add_option("--csv", tr_csv, "write a CSV row here");
    tr_opts.add_config_flags(transform, true);

    // schedule
    auto* schedule = app.add_subcommand("schedule", "emit an (L_n, a_n) schedule");
    CommonOpts sched_opts;
    std::string sched_mode = "integer-ladder", sched_llist, sched_alist, sched_out;
    double sched_l = 0, sched_a = 0.5;
    int sched_count = 1;
    schedule->add_option("--mode", sched_mode, "integer-ladder or custom");
    schedule->add_option("--L", sched_l, "first L (integer-ladder)");
    schedule->add_option("--a", sched_a, "a (integer-ladder)");
    schedule->add_option("--count", sched_count, "points (integer-ladder)");
    schedule->add_option("--L-list", sched_llist, "custom L values, comma separated");
    schedule->add_option("--a-list", sched_alist, "custom a values, comma separated");
    schedule->add_option("--out,-o", sched_out, "write the schedule CSV here");
    sched_opts.add_config_flags(schedule, false);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->require_subcommand(1);

    auto* vpow = verify->add_subcommand("power", "power-signal telegraphic checks");
    CommonOpts vpow_opts;
    std::string vpow_deltas = "-1,-0.5,0,2,1000", vpow_ts = "1e4", vpow_csv;
    double vpow_u = 0.4, vpow_a = 0.5;
    int vpow_k = 2;
    vpow->add_option("--deltas", vpow_deltas, "comma separated exponents");
    vpow->add_option("--T-list", vpow_ts, "comma separated T values");
    vpow->add_option("--U", vpow_u, "interval length");
    vpow->add_option("--k", vpow_k, "iteration depth");
    vpow->add_option("--a", vpow_a, "U-range upper bound");
    vpow->add_option("--csv", vpow_csv, "per-run CSV output");
    vpow_opts.add_config_flags(vpow, true);

    auto* vsh = verify->add_subcommand("shifted", "shifted-power dichotomy sweep");
    CommonOpts vsh_opts;
    std::string vsh_deltas = "1", vsh_sweep = "0.05:0.5:0.05", vsh_csv;
    double vsh_l = 1e5;
    int vsh_k = 1;
    vsh->add_option("--delta", vsh_deltas, "comma separated exponents > 0");
    vsh->add_option("--L", vsh_l, "signal shift L");
    vsh->add_option("--U-sweep", vsh_sweep, "lo:hi:step sweep of U");
    vsh->add_option("--k", vsh_k, "iteration depth");
    vsh->add_option("--csv", vsh_csv, "per-run CSV output");
    vsh_opts.add_config_flags(vsh, true);

    auto* vgap = verify->add_subcommand("gaps", "node gap asymptotics");
    CommonOpts vgap_opts;
    std::string vgap_f = "pow:2", vgap_csv;
    double vgap_t = 1e5, vgap_u = 0.5;
    int vgap_k = 2;
    vgap->add_option("--T", vgap_t, "base height");
    vgap->add_option("--U", vgap_u, "interval length");
    vgap->add_option("--k", vgap_k, "iteration depth");
    vgap->add_option("--f", vgap_f, "signal for the alpha chain");
    vgap->add_option("--csv", vgap_csv, "per-gap CSV output");
    vgap_opts.add_config_flags(vgap, true);

    auto* vcomp = verify->add_subcommand("complementarity",
                                         "phi1 + (1-c) pi(T) ~ T checks");
    CommonOpts vcomp_opts;
    std::string vcomp_ts = "1e4,1e5", vcomp_csv;
    vcomp->add_option("--T-list", vcomp_ts, "comma separated T values");
    vcomp->add_option("--csv", vcomp_csv, "per-T CSV output");
    vcomp_opts.add_config_flags(vcomp, true);

    auto* vspec = verify->add_subcommand("spectral", "oscillator-form error sweep");
    CommonOpts vspec_opts;
    std::string vspec_xs = "1e3,1e4,1e5", vspec_csv;
    int vspec_probe = 100;
    vspec->add_option("--x-list", vspec_xs, "comma separated base points");
    vspec->add_option("--probes", vspec_probe, "samples across the window");
    vspec->add_option("--csv", vspec_csv, "per-x CSV output");
    vspec_opts.add_config_flags(vspec, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build_table(t_max, grid_step, c0, build_opts);
        if (evalz->parsed())
            return cmd_eval_z(eval_ts, eval_backend, eval_json, eval_opts);
        if (spectrum->parsed()) return cmd_spectrum(spec_x, spec_csv, spec_opts);
        if (transform->parsed()) {
            const SignalArg sig = parse_signal(tr_f);
            if (sig.kind == SignalKind::ShiftedPower) tr_t = sig.l;
            return cmd_transform(sig, tr_t, tr_u, tr_k, tr_a, tr_json, tr_csv,
                                 tr_opts);
        }
        if (schedule->parsed())
            return cmd_schedule(sched_mode, sched_l, sched_a, sched_count,
                                sched_llist, sched_alist, sched_out, sched_opts);
        if (vpow->parsed())
            return verify_power(parse_list(vpow_deltas), parse_list(vpow_ts),
                                vpow_u, vpow_k, vpow_a, vpow_csv, vpow_opts);
        if (vsh->parsed())
            return verify_shifted(parse_list(vsh_deltas), vsh_l,
                                  parse_sweep(vsh_sweep), vsh_k, vsh_csv,
                                  vsh_opts);
        if (vgap->parsed())
            return verify_gaps(vgap_t, vgap_u, vgap_k, parse_signal(vgap_f),
                               vgap_csv, vgap_opts);
        if (vcomp->parsed())
            return verify_complementarity(parse_list(vcomp_ts), vcomp_csv,
                                          vcomp_opts);
        if (vspec->parsed())
            return verify_spectral(parse_list(vspec_xs), vspec_probe, vspec_csv,
                                   vspec_opts);
    } catch (const RangeError& e) {
        std::fprintf(stderr, "range error: %s\n", e.what());
        return kExitRange;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIoFail;
    } catch (const FormatError& e) {
        std::fprintf(stderr, "format error: %s\n", e.what());
        return kExitIoFail;
    } catch (const DomainError& e) {
        // inadmissible U carries its own exit code for the transform command
        const std::string what = e.what();
        std::fprintf(stderr, "error: %s\n", what.c_str());
        if (what.find("admissible bound") != std::string::npos ||
            what.find("inadmissible U") != std::string::npos)
            return kExitUBound;
        return kExitBuildFail;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBuildFail;
    }
    return kExitOk;
}
