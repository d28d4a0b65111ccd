#include "swcontract/transact.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace swc {

namespace {

bool is_quadratic_like(const BasicNorm& b) {
    if (std::holds_alternative<Quadratic>(b)) return true;
    return std::get<WeightedLp>(b).p == LpOrder::two;
}

Mat quad_p(const BasicNorm& b) {
    if (const auto* lp = std::get_if<WeightedLp>(&b)) return Mat::diag(lp->weights);
    return std::get<Quadratic>(b).P;
}

// sup over sign patterns s of sqrt(s^T M s), M symmetric PSD. Exact value of
// the sup of a piecewise-linear convex norm over an ellipsoid.
double sign_enum_sqrt(const Mat& m) {
    const int n = m.rows();
    if (n > 16) throw UnsupportedPair("sign enumeration limited to n <= 16");
    double best = 0.0;
    for (uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
        Vec s(n, 1.0);
        for (int i = 0; i < n - 1; ++i)
            if (bits & (1u << i)) s[i] = -1.0;
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += s[i] * m(i, j) * s[j];
        best = std::max(best, acc);
    }
    return std::sqrt(std::max(best, 0.0));
}

double beta_exact_basic(const BasicNorm& from, const BasicNorm& to) {
    if (norm_dimension(from) != norm_dimension(to))
        throw InvalidInput("beta: dimension mismatch");
    const int n = norm_dimension(from);

    if (is_quadratic_like(from) && is_quadratic_like(to)) {
        const Mat r = spd_inv_sqrt(quad_p(from));
        const Mat mid = r * quad_p(to) * r;
        return std::sqrt(std::max(sym_eig(mid).eigenvalues.back(), 0.0));
    }

    const auto* lf = std::get_if<WeightedLp>(&from);
    const auto* lt = std::get_if<WeightedLp>(&to);
    if (lf && lt && lf->p == lt->p) {
        // same-p weighted: max_i (eta_i/xi_i)^{1/p}
        double m = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ratio = lt->weights[i] / lf->weights[i];
            m = std::max(m, lf->p == LpOrder::one ? ratio : ratio);  // p=1 and p=inf both linear
        }
        return m;
    }

    if (lf && lf->p == LpOrder::one && is_quadratic_like(to)) {
        // sup over the cross-polytope vertices e_i / xi_i
        const Mat p = quad_p(to);
        double m = 0.0;
        for (int i = 0; i < n; ++i) m = std::max(m, std::sqrt(p(i, i)) / lf->weights[i]);
        return m;
    }

    if (lt && lt->p == LpOrder::one && is_quadratic_like(from)) {
        const Mat pinv = spd_inverse(quad_p(from));
        const Mat d = Mat::diag(lt->weights);
        return sign_enum_sqrt(d * pinv * d);
    }

    if (lt && lt->p == LpOrder::inf && is_quadratic_like(from)) {
        const Mat pinv = spd_inverse(quad_p(from));
        double m = 0.0;
        for (int i = 0; i < n; ++i) m = std::max(m, lt->weights[i] * std::sqrt(pinv(i, i)));
        return m;
    }

    if (lf && lf->p == LpOrder::inf && is_quadratic_like(to)) {
        // box vertices diag(1/xi) s
        Vec inv(lf->weights.size());
        std::transform(lf->weights.begin(), lf->weights.end(), inv.begin(),
                       [](double v) { return 1.0 / v; });
        const Mat d = Mat::diag(inv);
        return sign_enum_sqrt(d * quad_p(to) * d);
    }

    throw UnsupportedPair("beta_exact: no closed form for this norm pair");
}

}  // namespace

BetaResult beta_exact(const NormSpec& from, const NormSpec& to) {
    if (std::holds_alternative<Structured>(from) || std::holds_alternative<Structured>(to))
        throw UnsupportedPair("beta_exact: structured norms need prop5_structured");
    return BetaResult{beta_exact_basic(to_basic(from), to_basic(to)), BetaResult::Kind::exact, "", ""};
}

BetaResult beta_with_fallback(const NormSpec& from, const NormSpec& to) {
    try {
        return beta_exact(from, to);
    } catch (const UnsupportedPair&) {
        const NormSpec mid = euclidean(norm_dimension(from));
        const double b1 = beta_exact(from, mid).value;
        const double b2 = beta_exact(mid, to).value;
        return BetaResult{b1 * b2, BetaResult::Kind::paper_bound, "", ""};
    }
}

namespace {

double lp_num(LpOrder p) {
    switch (p) {
        case LpOrder::one: return 1.0;
        case LpOrder::two: return 2.0;
        case LpOrder::inf: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

// Weight exponent: w^{1/p} for finite p; the L-inf norm carries its weight
// linearly, so the exponent is 1 there.
double wexp(double w, LpOrder p) {
    return p == LpOrder::inf ? w : std::pow(w, 1.0 / lp_num(p));
}

}  // namespace

BetaResult prop4_bound(LpOrder p, const Vec& xi, LpOrder q, const Vec& eta, int direction,
                       Prop4Variant variant) {
    if (!(lp_num(p) > lp_num(q))) throw InvalidInput("prop4_bound: requires p > q");
    if (xi.size() != eta.size() || xi.empty()) throw InvalidInput("prop4_bound: weight size mismatch");
    for (size_t i = 0; i < xi.size(); ++i)
        if (!(xi[i] > 0.0) || !(eta[i] > 0.0)) throw InvalidInput("prop4_bound: weights must be positive");
    const int n = static_cast<int>(xi.size());

    double value = 0.0;
    if (direction == 1) {
        for (int i = 0; i < n; ++i) value = std::max(value, wexp(xi[i], p) / wexp(eta[i], q));
    } else if (direction == 2) {
        double m = 0.0;
        for (int i = 0; i < n; ++i) m = std::max(m, wexp(eta[i], q) / wexp(xi[i], p));
        const double inv_q = 1.0 / lp_num(q);
        const double inv_p = p == LpOrder::inf ? 0.0 : 1.0 / lp_num(p);
        const double factor = variant == Prop4Variant::literal
                                  ? std::pow(n, inv_q) - std::pow(n, inv_p)
                                  : std::pow(n, inv_q - inv_p);
        value = m * factor;
    } else {
        throw InvalidInput("prop4_bound: direction must be 1 or 2");
    }
    return BetaResult{value, BetaResult::Kind::paper_bound, "", ""};
}

BetaResult prop5_structured(double tau_outer, const Vec& inner_taus, const BasicNorm& outer_spec) {
    if (!(tau_outer > 0.0)) throw InvalidInput("prop5_structured: tau_S must be positive");
    for (double t : inner_taus)
        if (!(t > 0.0)) throw InvalidInput("prop5_structured: inner taus must be positive");
    if (static_cast<int>(inner_taus.size()) != norm_dimension(outer_spec))
        throw InvalidInput("prop5_structured: dimension mismatch");
    const double nrm = induced_matrix_norm(from_basic(outer_spec), Mat::diag(inner_taus));
    return BetaResult{tau_outer * nrm, BetaResult::Kind::paper_bound, "", ""};
}

BetaResult sampled_sup(const NormSpec& from, const NormSpec& to, int n_samples, uint64_t seed) {
    if (norm_dimension(from) != norm_dimension(to))
        throw InvalidInput("sampled_sup: dimension mismatch");
    if (n_samples <= 0) throw InvalidInput("sampled_sup: need positive sample count");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = norm_dimension(from);
    double best = 0.0;
    for (int s = 0; s < n_samples; ++s) {
        Vec x(n);
        for (double& v : x) v = gauss(rng);
        const double nf = norm_eval(from, x);
        if (nf < 1e-300) continue;
        for (double& v : x) v /= nf;
        best = std::max(best, norm_eval(to, x));
    }
    return BetaResult{best, BetaResult::Kind::sampled_lower, "", ""};
}

}  // namespace swc
