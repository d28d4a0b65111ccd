#pragma once

// Averaged contraction conditions: the general windowed form, the staircase
// and periodic forms, the two-mode LTV shortcut, and the blinking-network
// synchronization condition. All produce a Certificate with a guaranteed
// rate c (positive = contracting).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swcontract/switchsig.hpp"

namespace swc {

struct ModeBounds {
    std::map<int, double> alpha;                     // mode -> measure bound (1/s)
    std::map<std::pair<int, int>, double> beta;      // (from, to) -> transaction coefficient
};

struct CertificateBreakdown {
    double alpha_term = 0.0;     // sum alpha_k * T_k over the binding window
    double log_beta_term = 0.0;  // sum log(beta) over the binding window
    double binding_T = 0.0;      // window length attaining the sup
};

struct Certificate {
    double c = 0.0;
    bool satisfied = false;
    double c_min = 0.0;
    CertificateBreakdown breakdown;
    double window_T0 = 0.0;
    double window_Tmax = 0.0;
    std::string kind;  // general | staircase | periodic | ltv2 | sync
    // set by certify_ltv_two_mode: the literal printed-formula rate next to
    // the dwell-consistent one, and whether they disagree
    std::optional<double> literal_rate;
    bool forms_disagree = false;
};

struct AlphaSegment {
    double duration = 0.0;  // seconds from the previous segment end
    double alpha = 0.0;
};

struct LogBetaEvent {
    double time = 0.0;  // absolute time
    double log_beta = 0.0;
};

// c = -sup over T in (T0, Tmax] of (1/T)[int alpha + sum of log beta events
// with time <= t0+T]. The objective is a Moebius function of T between
// breakpoints, so the sup is attained at segment boundaries, event times
// (both sides) or the window ends; those are evaluated exactly.
Certificate certify_general(const std::vector<AlphaSegment>& alpha_profile,
                            const std::vector<LogBetaEvent>& log_beta_events, double t0, double T0,
                            double Tmax, double c_min = 0.0);

// Staircase form via dwell_stats. For periodic signals the certificate c is
// the single-period (asymptotic) rate; the windowed sup is kept in the
// breakdown. T0 <= 0 selects the default (one period, or 1% of the horizon).
Certificate certify_staircase(const ModeBounds& bounds, const SwitchingSignal& signal, double t0,
                              double T0, double Tmax, double c_min = 0.0);

// Two-mode LTV shortcut. Evaluates the literal printed formula
// -(1/2)[mu1 + mu2 + phi_r (log b12 + log b21)] and the dwell-consistent
// staircase form with equal dwells (default Delta = 1/(2 phi_r), overridable);
// the dwell-consistent value is the certificate rate.
Certificate certify_ltv_two_mode(double mu1, double mu2, double beta12, double beta21, double phi_r,
                                 std::optional<double> dwell = std::nullopt);

// Blinking-network per-period rate; requires the caller to have verified
// mu(-Gamma) <= 0 under the on-phase norm (gamma_ok).
Certificate sync_certify(double mu0, double mu1, double beta01, double beta10, double duty_off,
                         double period, double c_min, bool gamma_ok);

// Smallest period certifying rate c_min; throws Infeasible when no period
// works. Never negative (a nonpositive switching cost certifies any period).
double solve_min_period(double mu0, double mu1, double beta01, double beta10, double duty_off,
                        double c_min);

}  // namespace swc
