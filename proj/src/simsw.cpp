#include "swcontract/simsw.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>

#include "swcontract/transact.hpp"

namespace swc {

namespace {

constexpr double kDivergeGuard = 1e12;

bool state_ok(const Vec& x) {
    if (!all_finite(x)) return false;
    for (double v : x)
        if (std::abs(v) > kDivergeGuard) return false;
    return true;
}

// one classical RK4 step of the given mode field
Vec rk4_step(const std::function<Vec(double, const Vec&)>& f, double t, const Vec& x, double h) {
    const Vec k1 = f(t, x);
    const Vec k2 = f(t + 0.5 * h, axpy(0.5 * h, k1, x));
    const Vec k3 = f(t + 0.5 * h, axpy(0.5 * h, k2, x));
    const Vec k4 = f(t + h, axpy(h, k3, x));
    Vec out = x;
    for (size_t i = 0; i < x.size(); ++i)
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

}  // namespace

ModeDynamics linear_mode(const Mat& a, const Vec& b) {
    if (!a.square() || static_cast<int>(b.size()) != a.rows())
        throw InvalidInput("linear_mode: A must be square and match B");
    ModeDynamics m;
    m.A = a;
    m.B = b;
    m.field = [a, b](double, const Vec& x) { return axpy(1.0, a * x, b); };
    m.jacobian = [a](double, const Vec&) { return a; };
    return m;
}

ModeDynamics linear_mode(const Mat& a) { return linear_mode(a, Vec(a.rows(), 0.0)); }

SwitchedSystem::SwitchedSystem(std::map<int, ModeDynamics> modes, int dimension, bool validate)
    : modes_(std::move(modes)), dim_(dimension) {
    if (modes_.empty()) throw InvalidInput("SwitchedSystem: no modes");
    if (dim_ <= 0) throw InvalidInput("SwitchedSystem: dimension must be positive");
    for (const auto& [id, m] : modes_) {
        if (!m.field || !m.jacobian)
            throw InvalidInput("SwitchedSystem: mode " + std::to_string(id) +
                               " needs field and jacobian");
        if (m.A && (m.A->rows() != dim_ || m.A->cols() != dim_))
            throw InvalidInput("SwitchedSystem: linear mode dimension mismatch");
    }
    if (!validate) return;

    // finite-difference consistency of each jacobian on seeded random probes;
    // probes stay in a small box to avoid grazing nonsmooth loci
    std::mt19937_64 rng(0x51d3c4afULL);
    std::uniform_real_distribution<double> box(-0.45, 0.45);
    for (const auto& [id, m] : modes_) {
        for (int probe = 0; probe < 5; ++probe) {
            Vec x(dim_);
            for (double& v : x) v = box(rng);
            const double t = 0.5 + 0.1 * probe;
            const Mat jac = m.jacobian(t, x);
            if (jac.rows() != dim_ || jac.cols() != dim_)
                throw InvalidInput("SwitchedSystem: jacobian shape mismatch in mode " +
                                   std::to_string(id));
            double scale = 1.0 + max_abs(jac);
            for (int j = 0; j < dim_; ++j) {
                const double h = 1e-6 * (1.0 + std::abs(x[j]));
                Vec xp = x, xm = x;
                xp[j] += h;
                xm[j] -= h;
                const Vec fp = m.field(t, xp);
                const Vec fm = m.field(t, xm);
                for (int i = 0; i < dim_; ++i) {
                    const double fd = (fp[i] - fm[i]) / (2.0 * h);
                    if (std::abs(fd - jac(i, j)) > 1e-5 * scale)
                        throw InvalidInput("SwitchedSystem: jacobian disagrees with field in mode " +
                                           std::to_string(id));
                }
            }
        }
    }
}

const ModeDynamics& SwitchedSystem::mode(int id) const {
    auto it = modes_.find(id);
    if (it == modes_.end())
        throw InvalidInput("SwitchedSystem: unknown mode " + std::to_string(id));
    return it->second;
}

Trajectory simulate(const SwitchedSystem& system, const SwitchingSignal& signal, const Vec& x0,
                    double t0, double tf, double dt) {
    if (!(dt > 0.0)) throw InvalidInput("simulate: dt must be positive");
    if (!(tf > t0)) throw InvalidInput("simulate: need tf > t0");
    if (static_cast<int>(x0.size()) != system.dimension())
        throw InvalidInput("simulate: initial state dimension mismatch");

    Trajectory traj;
    traj.dt = dt;
    traj.times.push_back(t0);
    traj.states.push_back(x0);
    traj.modes.push_back(signal.value_at(t0));

    Vec x = x0;
    for (const auto& [a, b, mode] : signal.pieces_in(t0, tf)) {
        const auto& dyn = system.mode(mode);
        const double span = b - a;
        const int nsteps = std::max(1, static_cast<int>(std::ceil(span / dt - 1e-9)));
        const double h = span / nsteps;
        for (int s = 0; s < nsteps; ++s) {
            const double t = a + s * h;
            x = rk4_step(dyn.field, t, x, h);
            const double tn = (s + 1 == nsteps) ? b : t + h;  // land exactly on the switch
            traj.times.push_back(tn);
            traj.states.push_back(x);
            traj.modes.push_back(signal.in_domain(tn) ? signal.value_at(tn) : mode);
            if (!state_ok(x)) {
                traj.diverged = true;
                return traj;
            }
        }
    }
    return traj;
}

void write_csv(const Trajectory& traj, std::ostream& out) {
    const int n = traj.states.empty() ? 0 : static_cast<int>(traj.states.front().size());
    out << "t,mode";
    for (int i = 1; i <= n; ++i) out << ",x" << i;
    out << "\n";
    out << std::setprecision(12);
    for (size_t k = 0; k < traj.times.size(); ++k) {
        out << traj.times[k] << "," << traj.modes[k];
        for (double v : traj.states[k]) out << "," << v;
        out << "\n";
    }
}

PairDivergence pair_divergence(const SwitchedSystem& system, const SwitchingSignal& signal,
                               const Vec& x0, const Vec& y0,
                               const std::map<int, NormSpec>& norm_schedule, double t0, double tf,
                               double dt) {
    const Trajectory tx = simulate(system, signal, x0, t0, tf, dt);
    const Trajectory ty = simulate(system, signal, y0, t0, tf, dt);

    PairDivergence out;
    out.diverged = tx.diverged || ty.diverged;
    const size_t nsamp = std::min(tx.times.size(), ty.times.size());
    out.times.assign(tx.times.begin(), tx.times.begin() + nsamp);
    out.err_active.reserve(nsamp);
    out.err_euclid.reserve(nsamp);
    for (size_t k = 0; k < nsamp; ++k) {
        Vec d(tx.states[k].size());
        for (size_t i = 0; i < d.size(); ++i) d[i] = tx.states[k][i] - ty.states[k][i];
        auto it = norm_schedule.find(tx.modes[k]);
        if (it == norm_schedule.end())
            throw MissingBound("pair_divergence: no norm for mode " + std::to_string(tx.modes[k]));
        out.err_active.push_back(norm_eval(it->second, d));
        out.err_euclid.push_back(norm2(d));
    }

    // least-squares slope of ln(err) over the second half of the horizon,
    // skipping samples down at log-of-noise level relative to the start
    const double err0 = out.err_active.empty() ? 0.0 : out.err_active.front();
    const double floor_err = 1e2 * std::numeric_limits<double>::epsilon() * err0;
    const double t_mid = 0.5 * (t0 + tf);
    double sw = 0.0, st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    for (size_t k = 0; k < nsamp; ++k) {
        if (out.times[k] < t_mid) continue;
        if (!(out.err_active[k] > floor_err) || !(out.err_active[k] > 0.0)) continue;
        const double t = out.times[k], l = std::log(out.err_active[k]);
        sw += 1.0;
        st += t;
        sl += l;
        stt += t * t;
        stl += t * l;
    }
    const double denom = sw * stt - st * st;
    if (sw < 2.0 || !(std::abs(denom) > 0.0))
        out.fitted_rate = -std::numeric_limits<double>::infinity();
    else
        out.fitted_rate = (sw * stl - st * sl) / denom;
    return out;
}

CoppelReport coppel_audit(const std::vector<CoppelSegment>& schedule, const Vec& x0, double t0,
                          double dt) {
    if (schedule.empty()) throw InvalidInput("coppel_audit: empty schedule");
    if (!(dt > 0.0)) throw InvalidInput("coppel_audit: dt must be positive");

    CoppelReport report;
    report.tol = 1e-6 + 10.0 * dt * dt * dt * dt;

    for (const CoppelSegment& seg : schedule) {
        if (!(seg.duration > 0.0)) throw InvalidInput("coppel_audit: segment durations must be positive");
        const double gap = seg.alpha - matrix_measure_value(seg.chi, seg.A);
        report.alpha_gaps.push_back(gap);
        if (gap < -1e-9) report.alpha_precheck_ok = false;
    }

    Vec x = x0;
    double t = t0;
    double log_bound = std::log(norm_eval(schedule.front().chi, x0));
    const bool trivial = !(norm_eval(schedule.front().chi, x0) > 0.0);
    double max_ratio = 0.0;

    for (size_t si = 0; si < schedule.size(); ++si) {
        const CoppelSegment& seg = schedule[si];
        if (si > 0) {
            // norm handover: the bound pays the transaction coefficient
            const double beta = beta_with_fallback(schedule[si - 1].chi, seg.chi).value;
            log_bound += std::log(beta);
        }
        const auto field = [&seg](double, const Vec& v) { return seg.A * v; };
        const int nsteps = std::max(1, static_cast<int>(std::ceil(seg.duration / dt - 1e-9)));
        const double h = seg.duration / nsteps;
        for (int s = 0; s < nsteps; ++s) {
            x = rk4_step(field, t, x, h);
            t += h;
            log_bound += seg.alpha * h;
            if (trivial) continue;
            const double lhs = norm_eval(seg.chi, x);
            max_ratio = std::max(max_ratio, lhs / std::exp(log_bound));
        }
    }

    report.max_ratio = max_ratio;
    report.violated = max_ratio > 1.0 + report.tol;
    return report;
}

PeriodicOrbitReport periodic_orbit_check(const SwitchedSystem& system,
                                         const SwitchingSignal& signal, const Vec& x0,
                                         int n_transient_periods, int n_check_periods, double dt) {
    if (!signal.periodic()) throw InvalidInput("periodic_orbit_check: signal must be periodic");
    if (n_transient_periods < 0 || n_check_periods < 1)
        throw InvalidInput("periodic_orbit_check: invalid period counts");

    const double P = signal.period();
    const int n_periods = n_transient_periods + n_check_periods + 1;
    const double t0 = signal.t0();
    const Trajectory traj = simulate(system, signal, x0, t0, t0 + n_periods * P, dt);

    PeriodicOrbitReport report;
    report.diverged = traj.diverged;
    if (traj.diverged) return report;

    // switch-aligned stepping repeats the same step layout every period, so
    // the sample offset of +P is constant
    const size_t per_period = (traj.times.size() - 1) / static_cast<size_t>(n_periods);
    const size_t start = static_cast<size_t>(n_transient_periods) * per_period;
    const size_t stop = start + static_cast<size_t>(n_check_periods) * per_period;
    double worst = 0.0;
    for (size_t k = start; k <= stop && k + per_period < traj.times.size(); ++k) {
        Vec d(traj.states[k].size());
        for (size_t i = 0; i < d.size(); ++i)
            d[i] = traj.states[k + per_period][i] - traj.states[k][i];
        worst = std::max(worst, norm2(d) / (1.0 + norm2(traj.states[k])));
    }
    report.max_mismatch = worst;
    report.passed = worst <= report.threshold;
    return report;
}

}  // namespace swc
