#pragma once

// Staircase switching signals r(t) and dwell/switch-count statistics.
// Right-continuous at switch instants; statistics use half-open (s, t]
// attribution so they are exactly additive over adjacent windows.

#include <map>
#include <vector>

#include "swcontract/errors.hpp"

namespace swc {

struct Segment {
    int mode = 0;
    double dwell = 0.0;  // strictly positive seconds
};

class SwitchingSignal {
public:
    // Consecutive segments with equal modes are merged at construction.
    SwitchingSignal(std::vector<Segment> segments, bool periodic, double t0 = 0.0);

    const std::vector<Segment>& segments() const { return segments_; }
    bool periodic() const { return periodic_; }
    double t0() const { return t0_; }
    double period() const { return total_; }       // sum of dwells
    double end_time() const { return t0_ + total_; }  // finite signals only

    bool in_domain(double t) const;
    int value_at(double t) const;

    // Switch instants b with s < b <= t at which the mode actually changes,
    // each with (mode before, mode after). For finite signals the end of the
    // last segment is not a switch.
    std::vector<std::tuple<double, int, int>> switches_in(double s, double t) const;

    // Segment decomposition of [s, t): list of (start, end, mode).
    std::vector<std::tuple<double, double, int>> pieces_in(double s, double t) const;

private:
    std::vector<Segment> segments_;
    std::vector<double> offsets_;  // prefix sums of dwells, offsets_[i] = start of segment i
    bool periodic_ = false;
    double t0_ = 0.0;
    double total_ = 0.0;

    // index of the segment containing local time u in [0, total_)
    int segment_index(double u) const;
};

struct DwellStats {
    std::map<int, double> durations;             // mode -> total seconds
    std::map<std::pair<int, int>, int> transitions;  // (from, to) -> count
    int total_switches = 0;
};

DwellStats dwell_stats(const SwitchingSignal& signal, double s, double t);

}  // namespace swc
