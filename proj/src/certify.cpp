#include "swcontract/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swcontract/errors.hpp"

namespace swc {

namespace {

// cumulative integral of the alpha profile over [0, T], extending the last
// segment's alpha past the end of the profile
double alpha_integral(const std::vector<AlphaSegment>& profile, double T) {
    double acc = 0.0, elapsed = 0.0;
    for (const AlphaSegment& seg : profile) {
        const double take = std::min(seg.duration, T - elapsed);
        if (take <= 0.0) return acc;
        acc += seg.alpha * take;
        elapsed += take;
    }
    if (T > elapsed) acc += profile.back().alpha * (T - elapsed);
    return acc;
}

}  // namespace

Certificate certify_general(const std::vector<AlphaSegment>& alpha_profile,
                            const std::vector<LogBetaEvent>& log_beta_events, double t0, double T0,
                            double Tmax, double c_min) {
    if (alpha_profile.empty()) throw InvalidInput("certify_general: empty alpha profile");
    for (const AlphaSegment& seg : alpha_profile)
        if (!(seg.duration > 0.0) || !std::isfinite(seg.alpha))
            throw InvalidInput("certify_general: alpha segments need positive duration, finite alpha");
    if (!(T0 >= 0.0) || !(Tmax > T0)) throw InvalidInput("certify_general: need 0 <= T0 < Tmax");

    std::vector<LogBetaEvent> events = log_beta_events;
    std::sort(events.begin(), events.end(),
              [](const LogBetaEvent& a, const LogBetaEvent& b) { return a.time < b.time; });

    // prefix sums of log beta up to and including each event
    std::vector<double> beta_prefix(events.size());
    double acc = 0.0;
    for (size_t i = 0; i < events.size(); ++i) {
        acc += events[i].log_beta;
        beta_prefix[i] = acc;
    }
    // sum of log beta over events with time <= t0 + T; strict=true drops
    // events at exactly t0 + T (the left limit at an event time)
    auto beta_sum = [&](double T, bool strict) {
        const double cutoff = t0 + T;
        size_t lo = 0, hi = events.size();
        while (lo < hi) {
            const size_t mid = (lo + hi) / 2;
            const bool in = strict ? events[mid].time < cutoff : events[mid].time <= cutoff;
            if (in)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo == 0 ? 0.0 : beta_prefix[lo - 1];
    };

    // candidate window lengths: the window ends, alpha-segment boundaries and
    // event offsets; the objective is a Moebius function of T between these
    std::vector<double> candidates = {T0, Tmax};
    double elapsed = 0.0;
    for (const AlphaSegment& seg : alpha_profile) {
        elapsed += seg.duration;
        if (elapsed > T0 && elapsed < Tmax) candidates.push_back(elapsed);
    }
    for (const LogBetaEvent& ev : events) {
        const double T = ev.time - t0;
        if (T > T0 && T <= Tmax) candidates.push_back(T);
    }

    double sup = -std::numeric_limits<double>::infinity();
    CertificateBreakdown best;
    auto consider = [&](double T, bool strict) {
        if (T <= 0.0) return;  // T0 = 0 contributes only through interior candidates
        const double a = alpha_integral(alpha_profile, T);
        const double b = beta_sum(T, strict);
        const double g = (a + b) / T;
        if (g > sup) {
            sup = g;
            best = CertificateBreakdown{a, b, T};
        }
    };
    for (double T : candidates) {
        consider(T, false);
        consider(T, true);
    }

    Certificate cert;
    cert.c = -sup;
    cert.c_min = c_min;
    cert.satisfied = cert.c >= c_min;
    cert.breakdown = best;
    cert.window_T0 = T0;
    cert.window_Tmax = Tmax;
    cert.kind = "general";
    return cert;
}

Certificate certify_staircase(const ModeBounds& bounds, const SwitchingSignal& signal, double t0,
                              double T0, double Tmax, double c_min) {
    auto alpha_of = [&](int mode) {
        auto it = bounds.alpha.find(mode);
        if (it == bounds.alpha.end())
            throw MissingBound("certify_staircase: no measure bound for mode " + std::to_string(mode));
        return it->second;
    };
    auto beta_of = [&](int from, int to) {
        auto it = bounds.beta.find({from, to});
        if (it == bounds.beta.end())
            throw MissingBound("certify_staircase: no transaction coefficient for " +
                               std::to_string(from) + "->" + std::to_string(to));
        if (!(it->second > 0.0))
            throw InvalidInput("certify_staircase: transaction coefficients must be positive");
        return it->second;
    };

    if (signal.periodic()) {
        // asymptotic rate = the per-period rate; the wrap switch at the end
        // of the period is included by the half-open attribution
        const double P = signal.period();
        const DwellStats stats = dwell_stats(signal, t0, t0 + P);
        double a = 0.0, b = 0.0;
        for (const auto& [mode, dur] : stats.durations) a += alpha_of(mode) * dur;
        for (const auto& [pair, count] : stats.transitions)
            b += count * std::log(beta_of(pair.first, pair.second));
        Certificate cert;
        cert.c = -(a + b) / P;
        cert.c_min = c_min;
        cert.satisfied = cert.c >= c_min;
        cert.breakdown = CertificateBreakdown{a, b, P};
        cert.window_T0 = T0 > 0.0 ? T0 : P;
        cert.window_Tmax = Tmax > 0.0 ? Tmax : P;
        cert.kind = "periodic";
        return cert;
    }

    const double horizon = signal.end_time() - t0;
    if (!(horizon > 0.0)) throw InvalidInput("certify_staircase: window start past signal end");
    const double tmax = Tmax > 0.0 ? std::min(Tmax, horizon) : horizon;
    const double t_lo = T0 > 0.0 ? T0 : 0.01 * tmax;
    if (!(t_lo < tmax)) throw InvalidInput("certify_staircase: empty window");

    std::vector<AlphaSegment> profile;
    for (const auto& [a, b, mode] : signal.pieces_in(t0, t0 + tmax))
        profile.push_back({b - a, alpha_of(mode)});
    std::vector<LogBetaEvent> events;
    for (const auto& [time, from, to] : signal.switches_in(t0, t0 + tmax))
        events.push_back({time, std::log(beta_of(from, to))});

    Certificate cert = certify_general(profile, events, t0, t_lo, tmax, c_min);
    cert.kind = "staircase";
    return cert;
}

Certificate certify_ltv_two_mode(double mu1, double mu2, double beta12, double beta21, double phi_r,
                                 std::optional<double> dwell) {
    if (!(beta12 > 0.0) || !(beta21 > 0.0))
        throw InvalidInput("certify_ltv_two_mode: transaction coefficients must be positive");
    if (!(phi_r > 0.0)) throw InvalidInput("certify_ltv_two_mode: switching frequency must be positive");
    const double delta = dwell.value_or(1.0 / (2.0 * phi_r));
    if (!(delta > 0.0)) throw InvalidInput("certify_ltv_two_mode: dwell must be positive");

    const double log_b = std::log(beta12) + std::log(beta21);
    const double literal = -0.5 * (mu1 + mu2 + phi_r * log_b);
    // per-period rate of the equal-dwell square wave with period 2*Delta
    const double period = 2.0 * delta;
    const double alpha_term = (mu1 + mu2) * delta;
    const double consistent = -(alpha_term + log_b) / period;

    Certificate cert;
    cert.c = consistent;
    cert.satisfied = consistent >= 0.0;
    cert.breakdown = CertificateBreakdown{alpha_term, log_b, period};
    cert.window_T0 = period;
    cert.window_Tmax = period;
    cert.kind = "ltv2";
    cert.literal_rate = literal;
    cert.forms_disagree =
        std::abs(literal - consistent) > 1e-9 * std::max(1.0, std::abs(consistent));
    return cert;
}

Certificate sync_certify(double mu0, double mu1, double beta01, double beta10, double duty_off,
                         double period, double c_min, bool gamma_ok) {
    if (!(beta01 > 0.0) || !(beta10 > 0.0))
        throw InvalidInput("sync_certify: transaction coefficients must be positive");
    if (!(duty_off >= 0.0) || !(duty_off <= 1.0))
        throw InvalidInput("sync_certify: duty_off must lie in [0, 1]");
    if (!(period > 0.0)) throw InvalidInput("sync_certify: period must be positive");

    const double alpha_term = (mu0 * duty_off + mu1 * (1.0 - duty_off)) * period;
    const double log_b = std::log(beta01) + std::log(beta10);

    Certificate cert;
    cert.c = -(alpha_term + log_b) / period;
    cert.c_min = c_min;
    cert.satisfied = gamma_ok && cert.c >= c_min;
    cert.breakdown = CertificateBreakdown{alpha_term, log_b, period};
    cert.window_T0 = period;
    cert.window_Tmax = period;
    cert.kind = "sync";
    return cert;
}

double solve_min_period(double mu0, double mu1, double beta01, double beta10, double duty_off,
                        double c_min) {
    if (!(beta01 > 0.0) || !(beta10 > 0.0))
        throw InvalidInput("solve_min_period: transaction coefficients must be positive");
    if (!(duty_off >= 0.0) || !(duty_off <= 1.0))
        throw InvalidInput("solve_min_period: duty_off must lie in [0, 1]");
    const double denom = -(mu0 * duty_off + mu1 * (1.0 - duty_off)) - c_min;
    if (!(denom > 0.0))
        throw Infeasible("solve_min_period: averaged measure does not beat the target rate");
    const double t_star = (std::log(beta01) + std::log(beta10)) / denom;
    return std::max(t_star, 0.0);
}

}  // namespace swc
