#include "swcontract/switchsig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace swc {

SwitchingSignal::SwitchingSignal(std::vector<Segment> segments, bool periodic, double t0)
    : periodic_(periodic), t0_(t0) {
    if (segments.empty()) throw InvalidInput("SwitchingSignal: no segments");
    for (const Segment& s : segments)
        if (!(s.dwell > 0.0) || !std::isfinite(s.dwell))
            throw InvalidInput("SwitchingSignal: dwells must be strictly positive");

    for (const Segment& s : segments) {
        if (!segments_.empty() && segments_.back().mode == s.mode)
            segments_.back().dwell += s.dwell;  // same-mode "switch" has no effect
        else
            segments_.push_back(s);
    }
    offsets_.resize(segments_.size());
    double acc = 0.0;
    for (size_t i = 0; i < segments_.size(); ++i) {
        offsets_[i] = acc;
        acc += segments_[i].dwell;
    }
    total_ = acc;
}

bool SwitchingSignal::in_domain(double t) const {
    if (t < t0_) return false;
    if (!periodic_ && t > end_time()) return false;
    return true;
}

int SwitchingSignal::segment_index(double u) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), u);
    return static_cast<int>(it - offsets_.begin()) - 1;
}

int SwitchingSignal::value_at(double t) const {
    if (!in_domain(t)) throw OutOfDomain("value_at: time outside signal domain");
    double u = t - t0_;
    if (periodic_) {
        u = std::fmod(u, total_);
        if (u < 0.0) u += total_;
    } else if (u >= total_) {
        return segments_.back().mode;  // the final instant of a finite signal
    }
    return segments_[segment_index(u)].mode;
}

std::vector<std::tuple<double, int, int>> SwitchingSignal::switches_in(double s, double t) const {
    if (!(t > s)) throw InvalidInput("switches_in: need t > s");
    if (!in_domain(s) || !in_domain(t)) throw OutOfDomain("switches_in: window outside signal domain");
    std::vector<std::tuple<double, int, int>> out;
    const int nseg = static_cast<int>(segments_.size());
    // first boundary index k such that boundary time > s; boundaries are
    // t0 + m*total + offsets_[i] for i >= 1, plus period wrap points.
    const double us = s - t0_;
    long long cycle = periodic_ ? static_cast<long long>(std::floor(us / total_)) : 0;
    int idx = segment_index(periodic_ ? us - cycle * total_ : std::min(us, std::nextafter(total_, 0.0)));
    while (true) {
        // boundary at end of segment idx in this cycle
        const int next = (idx + 1) % nseg;
        const bool wraps = (idx + 1 == nseg);
        if (!periodic_ && wraps) break;  // finite signal ends, no switch
        const double b = t0_ + cycle * total_ + (wraps ? total_ : offsets_[idx + 1]);
        if (b > t) break;
        if (b > s) {
            const int before = segments_[idx].mode;
            const int after = segments_[next].mode;
            if (before != after) out.emplace_back(b, before, after);
        }
        idx = next;
        if (wraps) ++cycle;
    }
    return out;
}

std::vector<std::tuple<double, double, int>> SwitchingSignal::pieces_in(double s, double t) const {
    if (!(t > s)) throw InvalidInput("pieces_in: need t > s");
    if (!in_domain(s) || !in_domain(t)) throw OutOfDomain("pieces_in: window outside signal domain");
    std::vector<std::tuple<double, double, int>> out;
    double cur = s;
    const int nseg = static_cast<int>(segments_.size());
    while (cur < t) {
        const double u = cur - t0_;
        long long cycle = periodic_ ? static_cast<long long>(std::floor(u / total_)) : 0;
        double local = u - cycle * total_;
        if (!periodic_ && local >= total_) break;
        if (local >= total_) {  // exactly at a wrap point
            ++cycle;
            local = 0.0;
        }
        int idx = segment_index(local);
        double seg_end = t0_ + cycle * total_ +
                         (idx + 1 == nseg ? total_ : offsets_[idx + 1]);
        // rounding can place cur a few ulps before the boundary it already
        // reached; advance into the next segment instead of emitting a sliver
        const double tiny =
            8.0 * std::numeric_limits<double>::epsilon() * (std::abs(cur) + total_);
        if (seg_end <= cur + tiny) {
            if (idx + 1 == nseg) {
                ++cycle;
                idx = 0;
                if (!periodic_) break;
            } else {
                ++idx;
            }
            seg_end = t0_ + cycle * total_ + (idx + 1 == nseg ? total_ : offsets_[idx + 1]);
        }
        // last-resort guard against floating-point stall
        if (seg_end <= cur) seg_end = std::nextafter(cur, t);
        const double stop = std::min(seg_end, t);
        out.emplace_back(cur, stop, segments_[idx].mode);
        cur = stop;
    }
    return out;
}

DwellStats dwell_stats(const SwitchingSignal& signal, double s, double t) {
    DwellStats stats;
    for (const auto& [a, b, mode] : signal.pieces_in(s, t)) stats.durations[mode] += b - a;
    for (const auto& [time, from, to] : signal.switches_in(s, t)) {
        (void)time;
        stats.transitions[{from, to}] += 1;
        stats.total_switches += 1;
    }
    return stats;
}

}  // namespace swc
