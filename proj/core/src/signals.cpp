#include "zq2/signals.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zq2/errors.hpp"

namespace zq2 {

SignalSpec SignalSpec::power(double delta, double start, double u, double u0) {
    if (u <= 0.0 || u0 < u) throw DomainError("SignalSpec: need 0 < u <= u0");
    if (start <= 0.0) throw DomainError("SignalSpec: power support must start > 0");
    if (delta == 0.0) return constant(start, u, u0);
    SignalSpec s;
    s.kind_ = SignalKind::Power;
    s.delta_ = delta;
    s.start_ = start;
    s.u_ = u;
    s.u0_ = u0;
    return s;
}

SignalSpec SignalSpec::shifted_power(double delta, double l, double u,
                                     double a_l) {
    if (delta <= 0.0)
        throw DomainError("SignalSpec: shifted power requires delta > 0");
    if (a_l <= 0.0 || a_l > 0.5)
        throw DomainError("SignalSpec: a_L must lie in (0, 1/2]");
    if (u <= 0.0 || u > a_l)
        throw DomainError("SignalSpec: need 0 < U <= a_L");
    SignalSpec s;
    s.kind_ = SignalKind::ShiftedPower;
    s.delta_ = delta;
    s.shift_l_ = l;
    s.start_ = l;
    s.u_ = u;
    s.u0_ = a_l;
    return s;
}

SignalSpec SignalSpec::constant(double start, double u, double u0) {
    if (u <= 0.0 || u0 < u) throw DomainError("SignalSpec: need 0 < u <= u0");
    SignalSpec s;
    s.kind_ = SignalKind::Constant;
    s.start_ = start;
    s.u_ = u;
    s.u0_ = u0;
    return s;
}

double SignalSpec::value(double t) const {
    switch (kind_) {
        case SignalKind::Constant: return 1.0;
        case SignalKind::Power: return std::pow(t, delta_);
        case SignalKind::ShiftedPower: return std::pow(t - shift_l_, delta_);
    }
    return 0.0;
}

double SignalSpec::norm_value(double t) const {
    switch (kind_) {
        case SignalKind::Constant:
            return 1.0;
        case SignalKind::Power:
            // (t/start)^delta, safe for any delta while t stays near start
            return std::exp(delta_ * (std::log(t) - std::log(start_)));
        case SignalKind::ShiftedPower:
            return std::pow((t - shift_l_) / u_, delta_);
    }
    return 0.0;
}

double SignalSpec::norm_mean_h() const {
    switch (kind_) {
        case SignalKind::Constant:
            return 1.0;
        case SignalKind::Power: {
            const double r = u_ / start_;
            if (delta_ == -1.0) return std::log1p(r) / r;
            // H/f(start) = expm1((d+1) log1p(U/T)) / ((d+1) U/T)
            return std::expm1((delta_ + 1.0) * std::log1p(r)) /
                   ((delta_ + 1.0) * r);
        }
        case SignalKind::ShiftedPower:
            // H = U^delta/(delta+1); normalized by f at the right endpoint
            return 1.0 / (delta_ + 1.0);
    }
    return 0.0;
}

double SignalSpec::log10_mean_h() const {
    double ref_log10 = 0.0;
    if (kind_ == SignalKind::Power) ref_log10 = delta_ * std::log10(start_);
    if (kind_ == SignalKind::ShiftedPower) ref_log10 = delta_ * std::log10(u_);
    return ref_log10 + std::log10(norm_mean_h());
}

double SignalSpec::mean_h() const {
    if (kind_ == SignalKind::Constant) return 1.0;
    const double ref =
        kind_ == SignalKind::Power ? value(start_) : std::pow(u_, delta_);
    return ref * norm_mean_h();
}

double SignalSpec::g_of(double alpha0) const {
    switch (kind_) {
        case SignalKind::Constant:
            return 1.0;
        case SignalKind::Power:
            // H/f(a0) = norm_mean_h * (start/a0)^delta in log space
            return norm_mean_h() *
                   std::exp(-delta_ * (std::log(alpha0) - std::log(start_)));
        case SignalKind::ShiftedPower:
            return std::pow(u_ / (alpha0 - shift_l_), delta_) / (delta_ + 1.0);
    }
    return 0.0;
}

std::string SignalSpec::describe() const {
    char buf[64];
    switch (kind_) {
        case SignalKind::Constant:
            return "const";
        case SignalKind::Power:
            std::snprintf(buf, sizeof buf, "pow:%.15g", delta_);
            return buf;
        case SignalKind::ShiftedPower:
            std::snprintf(buf, sizeof buf, "shifted:%.15g:%.15g", delta_,
                          shift_l_);
            return buf;
    }
    return "?";
}

SignalClass classify_signal(const SignalSpec& s) {
    switch (s.kind()) {
        case SignalKind::Constant:
            return SignalClass::Constant;
        case SignalKind::ShiftedPower:
            return SignalClass::BoundedShifted;
        case SignalKind::Power:
            return s.delta() > 0.0 ? SignalClass::Unbounded
                                   : SignalClass::Negligible;
    }
    return SignalClass::Constant;
}

const char* signal_class_name(SignalClass c) {
    switch (c) {
        case SignalClass::Unbounded: return "unbounded";
        case SignalClass::Negligible: return "negligible";
        case SignalClass::Constant: return "constant";
        case SignalClass::BoundedShifted: return "bounded-shifted";
    }
    return "?";
}

std::vector<SchedulePoint> make_integer_ladder_schedule(double l, double a,
                                                        int count,
                                                        const RunConfig& cfg) {
    if (l <= cfg.l_bar0)
        throw DomainError(detail::msg("schedule: L must exceed l_bar0=", cfg.l_bar0));
    if (a <= 0.0 || a > 0.5) throw DomainError("schedule: a must lie in (0, 1/2]");
    if (count < 1) throw DomainError("schedule: count must be >= 1");
    std::vector<SchedulePoint> out;
    out.reserve(count);
    for (int n = 0; n < count; ++n) out.push_back({l + n, a});
    return out;
}

std::vector<SchedulePoint> make_custom_schedule(std::span<const double> ls,
                                                std::span<const double> as,
                                                const RunConfig& cfg) {
    if (ls.size() < 2 || as.size() + 1 != ls.size())
        throw DomainError("schedule: need n L-values and n-1 a-values");
    if (ls[0] <= cfg.l_bar0)
        throw DomainError(detail::msg("schedule: L_1 must exceed l_bar0=", cfg.l_bar0));
    std::vector<SchedulePoint> out;
    for (size_t n = 0; n + 1 < ls.size(); ++n) {
        if (ls[n + 1] <= ls[n])
            throw DomainError("schedule: L sequence must be strictly increasing");
        const double half_gap = 0.5 * (ls[n + 1] - ls[n]);
        if (as[n] <= 0.0 || as[n] > half_gap)
            throw DomainError(detail::msg("schedule: a_", n + 1, "=", as[n],
                                          " violates (0, ", half_gap, "]"));
        out.push_back({ls[n], as[n]});
    }
    return out;
}

bool schedule_is_periodic(std::span<const SchedulePoint> points) {
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i].a != points[0].a) return false;
    return true;
}

void save_schedule(const std::filesystem::path& path, ScheduleMode mode,
                   std::span<const SchedulePoint> points) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(detail::msg("cannot open ", path.string(), " for writing"));
    out << "# schedule v1 mode="
        << (mode == ScheduleMode::IntegerLadder ? "integer-ladder" : "custom")
        << "\n";
    char buf[96];
    for (const SchedulePoint& p : points) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", p.l, p.a);
        out << buf;
    }
}

std::vector<SchedulePoint> load_schedule(const std::filesystem::path& path,
                                         ScheduleMode* mode_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(detail::msg("cannot open ", path.string()));
    std::string header;
    if (!std::getline(in, header)) throw FormatError("schedule: empty file");
    std::istringstream hs(header);
    std::string hash, name, version, kv;
    hs >> hash >> name >> version >> kv;
    if (hash != "#" || name != "schedule" || version != "v1" ||
        kv.rfind("mode=", 0) != 0)
        throw FormatError(detail::msg("schedule: bad header '", header, "'"));
    if (mode_out)
        *mode_out = (kv == "mode=integer-ladder") ? ScheduleMode::IntegerLadder
                                                  : ScheduleMode::Custom;
    std::vector<SchedulePoint> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SchedulePoint p;
        if (std::sscanf(line.c_str(), "%lf,%lf", &p.l, &p.a) != 2)
            throw FormatError(detail::msg("schedule: bad row '", line, "'"));
        out.push_back(p);
    }
    return out;
}

}  // namespace zq2
