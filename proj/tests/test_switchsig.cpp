#include <doctest.h>

#include <random>

#include "swcontract/switchsig.hpp"

using namespace swc;

namespace {

SwitchingSignal two_mode() { return SwitchingSignal({{1, 1.0}, {2, 1.0}}, true); }

}  // namespace

TEST_CASE("value_at is right-continuous and periodic") {
    const SwitchingSignal mono({{1, 5.0}}, true);
    CHECK(mono.value_at(0.0) == 1);
    CHECK(mono.value_at(123.456) == 1);

    const SwitchingSignal sig = two_mode();
    CHECK(sig.value_at(0.0) == 1);
    CHECK(sig.value_at(0.999) == 1);
    CHECK(sig.value_at(1.0) == 2);  // right-continuity at the switch
    CHECK(sig.value_at(3.5) == 2);
    CHECK_THROWS_AS(sig.value_at(-0.1), OutOfDomain);

    const SwitchingSignal finite({{1, 1.0}, {2, 1.0}}, false);
    CHECK(finite.value_at(2.0) == 2);  // the final instant of a finite signal
    CHECK_THROWS_AS(finite.value_at(2.1), OutOfDomain);
}

TEST_CASE("construction validates and merges equal modes") {
    CHECK_THROWS_AS(SwitchingSignal({}, false), InvalidInput);
    CHECK_THROWS_AS(SwitchingSignal({{1, 0.0}}, false), InvalidInput);
    const SwitchingSignal merged({{1, 1.0}, {1, 2.0}, {2, 1.0}}, false);
    CHECK(merged.segments().size() == 2);
    CHECK(merged.segments()[0].dwell == doctest::Approx(3.0));
}

TEST_CASE("dwell_stats enumerates durations and transitions") {
    const SwitchingSignal sig = two_mode();
    const DwellStats full = dwell_stats(sig, 0.0, 4.0);
    CHECK(full.durations.at(1) == doctest::Approx(2.0));
    CHECK(full.durations.at(2) == doctest::Approx(2.0));
    CHECK(full.transitions.at({1, 2}) == 2);
    CHECK(full.transitions.at({2, 1}) == 2);
    CHECK(full.total_switches == 4);

    const DwellStats mid = dwell_stats(sig, 0.5, 2.5);
    CHECK(mid.durations.at(1) == doctest::Approx(1.0));
    CHECK(mid.durations.at(2) == doctest::Approx(1.0));
    CHECK(mid.transitions.at({1, 2}) == 1);
    CHECK(mid.transitions.at({2, 1}) == 1);

    const DwellStats single = dwell_stats(sig, 0.1, 0.9);
    CHECK(single.durations.at(1) == doctest::Approx(0.8));
    CHECK(single.total_switches == 0);
}

TEST_CASE("dwell_stats additivity over random split points") {
    const SwitchingSignal sig({{1, 0.7}, {2, 1.3}, {3, 0.5}}, true);
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        double a = u(rng), b = u(rng), c = u(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        if (!(a < b && b < c)) continue;
        const DwellStats left = dwell_stats(sig, a, b);
        const DwellStats right = dwell_stats(sig, b, c);
        const DwellStats whole = dwell_stats(sig, a, c);
        double sum_durations = 0.0;
        for (const auto& [mode, dur] : whole.durations) {
            double parts = 0.0;
            if (left.durations.count(mode)) parts += left.durations.at(mode);
            if (right.durations.count(mode)) parts += right.durations.at(mode);
            CHECK(dur == doctest::Approx(parts).epsilon(1e-12));
            sum_durations += dur;
        }
        CHECK(sum_durations == doctest::Approx(c - a).epsilon(1e-12));
        CHECK(whole.total_switches == left.total_switches + right.total_switches);
    }
}

TEST_CASE("periodic stats are shift invariant over one period") {
    const SwitchingSignal sig({{1, 0.4}, {2, 0.6}, {1, 0.2}, {3, 0.8}}, true);
    // equal-mode neighbors across the wrap: mode 1 both ends, so the wrap
    // itself is a real switch only 3 -> 1
    const double P = sig.period();
    const DwellStats ref = dwell_stats(sig, 0.0, P);
    std::mt19937_64 rng(402);
    std::uniform_real_distribution<double> u(0.0, 3.0 * P);
    for (int trial = 0; trial < 50; ++trial) {
        const double s = u(rng);
        const DwellStats shifted = dwell_stats(sig, s, s + P);
        CHECK(shifted.total_switches == ref.total_switches);
        for (const auto& [mode, dur] : ref.durations)
            CHECK(shifted.durations.at(mode) == doctest::Approx(dur).epsilon(1e-9));
        CHECK(shifted.transitions == ref.transitions);
    }
}

TEST_CASE("switch count over one period equals segment count") {
    const SwitchingSignal sig({{1, 0.5}, {2, 0.25}, {3, 0.25}}, true);
    const DwellStats stats = dwell_stats(sig, 0.0, sig.period());
    CHECK(stats.total_switches == 3);  // all consecutive modes differ, wrap included
}

TEST_CASE("switches_in reports boundary instants with modes") {
    const SwitchingSignal sig = two_mode();
    const auto sw = sig.switches_in(0.0, 2.0);
    REQUIRE(sw.size() == 2);
    CHECK(std::get<0>(sw[0]) == doctest::Approx(1.0));
    CHECK(std::get<1>(sw[0]) == 1);
    CHECK(std::get<2>(sw[0]) == 2);
    CHECK(std::get<0>(sw[1]) == doctest::Approx(2.0));
    CHECK(std::get<1>(sw[1]) == 2);
    CHECK(std::get<2>(sw[1]) == 1);
}
