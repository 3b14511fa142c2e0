#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "zq2/errors.hpp"
#include "zq2/signals.hpp"

using namespace zq2;

TEST_CASE("classification follows the delta sign") {
    CHECK(classify_signal(SignalSpec::power(1000.0, 1e5, 0.4, 0.5)) ==
          SignalClass::Unbounded);
    CHECK(classify_signal(SignalSpec::power(-2.0, 1e5, 0.4, 0.5)) ==
          SignalClass::Negligible);
    CHECK(classify_signal(SignalSpec::shifted_power(1.0, 1e5, 0.4, 0.5)) ==
          SignalClass::BoundedShifted);
    CHECK(classify_signal(SignalSpec::power(0.0, 1e5, 0.4, 0.5)) ==
          SignalClass::Constant);
}

TEST_CASE("power(0) normalizes to the constant signal") {
    const SignalSpec s = SignalSpec::power(0.0, 1e5, 0.4, 0.5);
    CHECK(s.kind() == SignalKind::Constant);
    CHECK(s.value(1e5 + 0.2) == 1.0);
    CHECK(s.mean_h() == 1.0);
}

TEST_CASE("signal values and normalized forms agree") {
    const SignalSpec p = SignalSpec::power(2.0, 1e3, 0.5, 0.5);
    CHECK(p.value(1000.25) == doctest::Approx(1000.25 * 1000.25));
    CHECK(p.norm_value(1000.25) ==
          doctest::Approx(p.value(1000.25) / p.value(1e3)).epsilon(1e-13));
    const SignalSpec s = SignalSpec::shifted_power(2.0, 1e3, 0.4, 0.5);
    CHECK(s.value(1000.2) == doctest::Approx(0.04));
    CHECK(s.value(1e3) == 0.0);
}

TEST_CASE("huge exponents stay finite in normalized space") {
    const SignalSpec p = SignalSpec::power(1000.0, 1e4, 0.4, 0.5);
    CHECK(std::isinf(p.value(1e4 + 0.2)));  // the raw value overflows
    CHECK(p.norm_value(1e4 + 0.2) ==
          doctest::Approx(std::exp(1000.0 * std::log1p(0.2 / 1e4))));
    CHECK(std::isfinite(p.norm_mean_h()));
    CHECK(std::isfinite(p.g_of(1e4 + 0.2)));
    CHECK(p.log10_mean_h() > 3000.0);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(SignalSpec::shifted_power(0.0, 1e5, 0.4, 0.5), DomainError);
    CHECK_THROWS_AS(SignalSpec::shifted_power(1.0, 1e5, 0.4, 0.7), DomainError);
    CHECK_THROWS_AS(SignalSpec::shifted_power(1.0, 1e5, 0.6, 0.5), DomainError);
    CHECK_THROWS_AS(SignalSpec::power(2.0, 1e5, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(SignalSpec::power(2.0, 1e5, 0.6, 0.5), DomainError);
}

TEST_CASE("integer-ladder schedules step by one and stay periodic") {
    const auto sched = make_integer_ladder_schedule(1e5, 0.5, 3);
    REQUIRE(sched.size() == 3);
    CHECK(sched[0].l == 1e5);
    CHECK(sched[1].l == 1e5 + 1.0);
    CHECK(sched[2].l == 1e5 + 2.0);
    for (const auto& p : sched) CHECK(p.a == 0.5);
    CHECK(schedule_is_periodic(sched));
}

TEST_CASE("custom schedules validate the half-gap rule") {
    const double ls[] = {1e5, 1e5 + 2.0, 1e5 + 5.0};
    const double as[] = {1.0, 1.5};
    const auto sched = make_custom_schedule(ls, as);
    REQUIRE(sched.size() == 2);
    CHECK(!schedule_is_periodic(sched));  // {a_n} not stationary

    const double bad_a[] = {1.5, 1.5};  // 1.5 > (L2-L1)/2 = 1
    CHECK_THROWS_AS(make_custom_schedule(ls, bad_a), DomainError);

    const double bad_l[] = {1e5, 1e5, 1e5 + 5.0};
    CHECK_THROWS_AS(make_custom_schedule(bad_l, as), DomainError);

    const double low_l[] = {500.0, 600.0};
    const double one_a[] = {0.5};
    CHECK_THROWS_AS(make_custom_schedule(low_l, one_a), DomainError);
}

TEST_CASE("schedule files round-trip with the v1 header") {
    const auto path =
        std::filesystem::temp_directory_path() / "zladder-test-sched.csv";
    const auto sched = make_integer_ladder_schedule(2000.0, 0.25, 4);
    save_schedule(path, ScheduleMode::IntegerLadder, sched);

    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "# schedule v1 mode=integer-ladder");
    in.close();

    ScheduleMode mode;
    const auto loaded = load_schedule(path, &mode);
    CHECK(mode == ScheduleMode::IntegerLadder);
    REQUIRE(loaded.size() == sched.size());
    for (size_t i = 0; i < sched.size(); ++i) {
        CHECK(loaded[i].l == sched[i].l);
        CHECK(loaded[i].a == sched[i].a);
    }
    std::filesystem::remove(path);
}

TEST_CASE("signal descriptions match the CLI vocabulary") {
    CHECK(SignalSpec::power(2.0, 1e5, 0.4, 0.5).describe() == "pow:2");
    CHECK(SignalSpec::shifted_power(1.0, 1e5, 0.4, 0.5).describe() ==
          "shifted:1:100000");
    CHECK(SignalSpec::constant(1e5, 0.4, 0.5).describe() == "const");
}
