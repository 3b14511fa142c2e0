#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "zq2/config.hpp"

namespace zq2 {

enum class SignalKind { Power, ShiftedPower, Constant };
enum class SignalClass { Unbounded, Negligible, Constant, BoundedShifted };

// An input signal on [start, start+u]: t^delta, (t-L)^delta, or 1.
// Power signals can carry delta up to the thousands, so every ratio the
// transform needs is available in log-safe form.
class SignalSpec {
public:
    SignalSpec() = default;  // degenerate constant; reports overwrite it

    // Power(0) normalizes to Constant.
    static SignalSpec power(double delta, double start, double u, double u0);
    static SignalSpec shifted_power(double delta, double l, double u,
                                    double a_l);
    static SignalSpec constant(double start, double u, double u0);

    SignalKind kind() const { return kind_; }
    double delta() const { return delta_; }
    double shift_l() const { return shift_l_; }
    double start() const { return start_; }
    double u() const { return u_; }
    double u0() const { return u0_; }

    double value(double t) const;

    // Interval mean H = (1/U) int f, closed form. Overflows to +inf for
    // power signals whose values leave double range; the normalized forms
    // below stay O(1) regardless of delta.
    double mean_h() const;
    double log10_mean_h() const;

    // f(t) / f(reference), reference = start (power) or the width scale
    // (shifted power).
    double norm_value(double t) const;
    double norm_mean_h() const;

    // g = H / f(alpha0), evaluated in log space.
    double g_of(double alpha0) const;

    std::string describe() const;

private:
    SignalKind kind_ = SignalKind::Constant;
    double delta_ = 0.0;
    double shift_l_ = 0.0;
    double start_ = 0.0;
    double u_ = 0.0;
    double u0_ = 0.0;
};

SignalClass classify_signal(const SignalSpec& s);
const char* signal_class_name(SignalClass c);

// The unit rectangular output signal: level 1 over U in (0, a).
struct TelegraphicSignal {
    double level;      // identically 1
    double l;
    double a;
    double alpha0_lo;  // alpha0 confined to (l, l+a)
    double alpha0_hi;
};

struct SchedulePoint {
    double l;
    double a;
};

enum class ScheduleMode { IntegerLadder, Custom };

// L_n = l + n, a_n = a: the periodic construction.
std::vector<SchedulePoint> make_integer_ladder_schedule(double l, double a,
                                                        int count,
                                                        const RunConfig& cfg = {});

// Arbitrary increasing {L_n} with a_n <= (L_{n+1} - L_n)/2; one point per
// consecutive pair. Throws DomainError on a spacing violation.
std::vector<SchedulePoint> make_custom_schedule(std::span<const double> ls,
                                                std::span<const double> as,
                                                const RunConfig& cfg = {});

// Periodic iff {a_n} is stationary.
bool schedule_is_periodic(std::span<const SchedulePoint> points);

void save_schedule(const std::filesystem::path& path, ScheduleMode mode,
                   std::span<const SchedulePoint> points);
std::vector<SchedulePoint> load_schedule(const std::filesystem::path& path,
                                         ScheduleMode* mode_out = nullptr);

}  // namespace zq2
