#include "swcontract/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace swc {

WeightedLp unweighted_lp(LpOrder p, int n) {
    return WeightedLp{p, Vec(static_cast<size_t>(n), 1.0)};
}

NormSpec euclidean(int n) { return unweighted_lp(LpOrder::two, n); }

Quadratic quadratic_from_factor(const Mat& theta) {
    return Quadratic{transpose(theta) * theta};
}

BasicNorm to_basic(const NormSpec& spec) {
    if (std::holds_alternative<Structured>(spec))
        throw UnsupportedNorm("structured norm not allowed here");
    if (const auto* lp = std::get_if<WeightedLp>(&spec)) return *lp;
    return std::get<Quadratic>(spec);
}

NormSpec from_basic(const BasicNorm& b) {
    if (const auto* lp = std::get_if<WeightedLp>(&b)) return *lp;
    return std::get<Quadratic>(b);
}

int norm_dimension(const BasicNorm& spec) {
    if (const auto* lp = std::get_if<WeightedLp>(&spec)) return static_cast<int>(lp->weights.size());
    return std::get<Quadratic>(spec).P.rows();
}

int norm_dimension(const NormSpec& spec) {
    if (const auto* st = std::get_if<Structured>(&spec)) {
        int n = 0;
        for (int nk : st->partition) n += nk;
        return n;
    }
    return norm_dimension(to_basic(spec));
}

namespace {

void validate_basic(const BasicNorm& b) {
    if (const auto* lp = std::get_if<WeightedLp>(&b)) {
        if (lp->weights.empty()) throw InvalidInput("norm: empty weight vector");
        for (double w : lp->weights)
            if (!(w > 0.0) || !std::isfinite(w)) throw InvalidInput("norm: weights must be positive");
    } else {
        const Mat& p = std::get<Quadratic>(b).P;
        if (!p.square()) throw InvalidInput("norm: P must be square");
        spd_inv_sqrt(p);  // throws NotPositiveDefinite if not SPD
    }
}

}  // namespace

void validate_norm(const NormSpec& spec) {
    if (const auto* st = std::get_if<Structured>(&spec)) {
        if (st->partition.size() != st->inner.size())
            throw InvalidInput("structured norm: partition/inner size mismatch");
        if (st->partition.empty()) throw InvalidInput("structured norm: empty partition");
        for (size_t k = 0; k < st->partition.size(); ++k) {
            if (st->partition[k] <= 0) throw InvalidInput("structured norm: block sizes must be positive");
            validate_basic(st->inner[k]);
            if (norm_dimension(st->inner[k]) != st->partition[k])
                throw InvalidInput("structured norm: inner norm dimension mismatch");
        }
        validate_basic(st->outer);
        if (norm_dimension(st->outer) != static_cast<int>(st->partition.size()))
            throw InvalidInput("structured norm: outer norm dimension mismatch");
        return;
    }
    validate_basic(to_basic(spec));
}

double norm_eval(const BasicNorm& spec, const Vec& x) {
    if (norm_dimension(spec) != static_cast<int>(x.size()))
        throw InvalidInput("norm_eval: dimension mismatch");
    if (const auto* lp = std::get_if<WeightedLp>(&spec)) {
        const Vec& w = lp->weights;
        switch (lp->p) {
            case LpOrder::one: {
                double s = 0.0;
                for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::abs(x[i]);
                return s;
            }
            case LpOrder::two: {
                double s = 0.0;
                for (size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * x[i];
                return std::sqrt(s);
            }
            case LpOrder::inf: {
                double m = 0.0;
                for (size_t i = 0; i < x.size(); ++i) m = std::max(m, w[i] * std::abs(x[i]));
                return m;
            }
        }
    }
    const Mat& p = std::get<Quadratic>(spec).P;
    double s = 0.0;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) s += x[i] * p(i, j) * x[j];
    return std::sqrt(std::max(s, 0.0));
}

double norm_eval(const NormSpec& spec, const Vec& x) {
    if (const auto* st = std::get_if<Structured>(&spec)) {
        if (norm_dimension(spec) != static_cast<int>(x.size()))
            throw InvalidInput("norm_eval: dimension mismatch");
        Vec block_norms(st->partition.size());
        int off = 0;
        for (size_t k = 0; k < st->partition.size(); ++k) {
            Vec xk(x.begin() + off, x.begin() + off + st->partition[k]);
            block_norms[k] = norm_eval(st->inner[k], xk);
            off += st->partition[k];
        }
        return norm_eval(st->outer, block_norms);
    }
    return norm_eval(to_basic(spec), x);
}

namespace {

double induced_basic(const BasicNorm& spec, const Mat& a) {
    const int n = norm_dimension(spec);
    if (a.rows() != n || a.cols() != n) throw InvalidInput("induced_matrix_norm: dimension mismatch");
    if (const auto* lp = std::get_if<WeightedLp>(&spec)) {
        const Vec& w = lp->weights;
        switch (lp->p) {
            case LpOrder::one: {
                double m = 0.0;
                for (int j = 0; j < n; ++j) {
                    double col = 0.0;
                    for (int i = 0; i < n; ++i) col += w[i] * std::abs(a(i, j));
                    m = std::max(m, col / w[j]);
                }
                return m;
            }
            case LpOrder::inf: {
                double m = 0.0;
                for (int i = 0; i < n; ++i) {
                    double row = 0.0;
                    for (int j = 0; j < n; ++j) row += std::abs(a(i, j)) / w[j];
                    m = std::max(m, w[i] * row);
                }
                return m;
            }
            case LpOrder::two: {
                Vec sq(w.size());
                std::transform(w.begin(), w.end(), sq.begin(), [](double v) { return std::sqrt(v); });
                Vec isq(w.size());
                std::transform(w.begin(), w.end(), isq.begin(), [](double v) { return 1.0 / std::sqrt(v); });
                return max_singular(Mat::diag(sq) * a * Mat::diag(isq));
            }
        }
    }
    const Mat& p = std::get<Quadratic>(spec).P;
    return max_singular(spd_sqrt(p) * a * spd_inv_sqrt(p));
}

double measure_basic(const BasicNorm& spec, const Mat& a) {
    const int n = norm_dimension(spec);
    if (a.rows() != n || a.cols() != n) throw InvalidInput("matrix_measure: dimension mismatch");
    if (const auto* lp = std::get_if<WeightedLp>(&spec)) {
        const Vec& w = lp->weights;
        switch (lp->p) {
            case LpOrder::one: {
                double m = -std::numeric_limits<double>::infinity();
                for (int j = 0; j < n; ++j) {
                    double s = a(j, j);
                    for (int i = 0; i < n; ++i)
                        if (i != j) s += (w[i] / w[j]) * std::abs(a(i, j));
                    m = std::max(m, s);
                }
                return m;
            }
            case LpOrder::inf: {
                double m = -std::numeric_limits<double>::infinity();
                for (int i = 0; i < n; ++i) {
                    double s = a(i, i);
                    for (int j = 0; j < n; ++j)
                        if (j != i) s += (w[i] / w[j]) * std::abs(a(i, j));
                    m = std::max(m, s);
                }
                return m;
            }
            case LpOrder::two:
                return measure_basic(Quadratic{Mat::diag(w)}, a);
        }
    }
    const Mat& p = std::get<Quadratic>(spec).P;
    const Mat r = spd_inv_sqrt(p);
    const Mat sym = r * (p * a + transpose(a) * p) * r;
    return 0.5 * sym_eig(sym).eigenvalues.back();
}

}  // namespace

double induced_matrix_norm(const NormSpec& spec, const Mat& a) {
    if (const auto* st = std::get_if<Structured>(&spec)) {
        const int n = norm_dimension(spec);
        if (a.rows() != n || a.cols() != n) throw InvalidInput("induced_matrix_norm: dimension mismatch");
        // Upper bound: induced outer norm of the block-wise cross-norm matrix.
        const int kk = static_cast<int>(st->partition.size());
        Mat reduced(kk, kk);
        int roff = 0;
        for (int i = 0; i < kk; ++i) {
            int coff = 0;
            for (int j = 0; j < kk; ++j) {
                Mat blk(st->partition[i], st->partition[j]);
                for (int r = 0; r < st->partition[i]; ++r)
                    for (int c = 0; c < st->partition[j]; ++c) blk(r, c) = a(roff + r, coff + c);
                reduced(i, j) = cross_block_norm(st->inner[j], st->inner[i], blk).value;
                coff += st->partition[j];
            }
            roff += st->partition[i];
        }
        return induced_basic(st->outer, reduced);
    }
    return induced_basic(to_basic(spec), a);
}

double matrix_measure_value(const NormSpec& spec, const Mat& a) {
    if (const auto* st = std::get_if<Structured>(&spec)) {
        const Mat reduced = structured_reduced(a, *st);
        return measure_basic(st->outer, reduced);
    }
    return measure_basic(to_basic(spec), a);
}

MeasureResult matrix_measure(const NormSpec& spec, const Mat& a) {
    return MeasureResult{matrix_measure_value(spec, a), MeasureResult::Method::closed_form};
}

namespace {

// Sampled sup_{|x|=1} |(I+hA)x| for structured norms; deterministic seed so
// the oracle stays reproducible.
double sampled_operator_norm(const NormSpec& spec, const Mat& m) {
    std::mt19937_64 rng(0x5eed0123u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = m.rows();
    double best = 0.0;
    for (int s = 0; s < 2000; ++s) {
        Vec x(n);
        for (double& v : x) v = gauss(rng);
        const double nx = norm_eval(spec, x);
        if (nx < 1e-12) continue;
        for (double& v : x) v /= nx;
        best = std::max(best, norm_eval(spec, m * x));
    }
    return best;
}

double limit_quotient(const NormSpec& spec, const Mat& a, double h) {
    const Mat m = Mat::identity(a.rows()) + h * a;
    const double nrm = std::holds_alternative<Structured>(spec) ? sampled_operator_norm(spec, m)
                                                                : induced_matrix_norm(spec, m);
    return (nrm - 1.0) / h;
}

}  // namespace

double measure_limit_oracle(const NormSpec& spec, const Mat& a, double h) {
    if (!(h >= 1e-8 && h <= 1e-3)) throw InvalidInput("measure_limit_oracle: h out of [1e-8, 1e-3]");
    if (!a.square() || a.rows() != norm_dimension(spec))
        throw InvalidInput("measure_limit_oracle: dimension mismatch");
    const double q1 = limit_quotient(spec, a, h);
    const double q2 = limit_quotient(spec, a, h / 2.0);
    return 2.0 * q2 - q1;  // Richardson: removes the O(h) bias
}

double tv_quadratic_measure(const Mat& p, const Mat& pdot, const Mat& a) {
    if (!p.square() || p.rows() != a.rows() || !a.square() || pdot.rows() != p.rows() || !pdot.square())
        throw InvalidInput("tv_quadratic_measure: dimension mismatch");
    const Mat r = spd_inv_sqrt(p);
    const Mat sym = r * (p * a + transpose(a) * p + pdot) * r;
    return 0.5 * sym_eig(sym).eigenvalues.back();
}

namespace {

// Exact transaction coefficients to/from the Euclidean norm; used for
// chaining mixed cross-norm cases.
double beta_basic_to_euclid(const BasicNorm& from) {
    if (const auto* lp = std::get_if<WeightedLp>(&from)) {
        const Vec& w = lp->weights;
        switch (lp->p) {
            case LpOrder::one: {
                double m = 0.0;
                for (double v : w) m = std::max(m, 1.0 / v);
                return m;
            }
            case LpOrder::two: {
                double m = 0.0;
                for (double v : w) m = std::max(m, 1.0 / std::sqrt(v));
                return m;
            }
            case LpOrder::inf: {
                double s = 0.0;
                for (double v : w) s += 1.0 / (v * v);
                return std::sqrt(s);
            }
        }
    }
    const Mat& p = std::get<Quadratic>(from).P;
    return 1.0 / std::sqrt(sym_eig(p).eigenvalues.front());
}

double beta_euclid_to_basic(const BasicNorm& to) {
    if (const auto* lp = std::get_if<WeightedLp>(&to)) {
        const Vec& w = lp->weights;
        switch (lp->p) {
            case LpOrder::one: {
                double s = 0.0;
                for (double v : w) s += v * v;
                return std::sqrt(s);
            }
            case LpOrder::two: {
                double m = 0.0;
                for (double v : w) m = std::max(m, std::sqrt(v));
                return m;
            }
            case LpOrder::inf: {
                double m = 0.0;
                for (double v : w) m = std::max(m, v);
                return m;
            }
        }
    }
    const Mat& p = std::get<Quadratic>(to).P;
    return std::sqrt(sym_eig(p).eigenvalues.back());
}

Mat quad_factor(const BasicNorm& b) {
    if (const auto* lp = std::get_if<WeightedLp>(&b)) {
        Vec sq(lp->weights.size());
        std::transform(lp->weights.begin(), lp->weights.end(), sq.begin(),
                       [](double v) { return std::sqrt(v); });
        return Mat::diag(sq);
    }
    return spd_sqrt(std::get<Quadratic>(b).P);
}

Mat quad_factor_inv(const BasicNorm& b) {
    if (const auto* lp = std::get_if<WeightedLp>(&b)) {
        Vec isq(lp->weights.size());
        std::transform(lp->weights.begin(), lp->weights.end(), isq.begin(),
                       [](double v) { return 1.0 / std::sqrt(v); });
        return Mat::diag(isq);
    }
    return spd_inv_sqrt(std::get<Quadratic>(b).P);
}

bool is_quadratic_like(const BasicNorm& b) {
    if (std::holds_alternative<Quadratic>(b)) return true;
    return std::get<WeightedLp>(b).p == LpOrder::two;
}

}  // namespace

CrossNorm cross_block_norm(const BasicNorm& from, const BasicNorm& to, const Mat& b) {
    if (b.cols() != norm_dimension(from) || b.rows() != norm_dimension(to))
        throw InvalidInput("cross_block_norm: dimension mismatch");

    if (is_quadratic_like(from) && is_quadratic_like(to))
        return {max_singular(quad_factor(to) * b * quad_factor_inv(from)), true};

    const auto* lf = std::get_if<WeightedLp>(&from);
    const auto* lt = std::get_if<WeightedLp>(&to);
    if (lf && lt && lf->p == lt->p) {
        if (lf->p == LpOrder::one) {
            double m = 0.0;
            for (int j = 0; j < b.cols(); ++j) {
                double col = 0.0;
                for (int i = 0; i < b.rows(); ++i) col += lt->weights[i] * std::abs(b(i, j));
                m = std::max(m, col / lf->weights[j]);
            }
            return {m, true};
        }
        if (lf->p == LpOrder::inf) {
            double m = 0.0;
            for (int i = 0; i < b.rows(); ++i) {
                double row = 0.0;
                for (int j = 0; j < b.cols(); ++j) row += std::abs(b(i, j)) / lf->weights[j];
                m = std::max(m, lt->weights[i] * row);
            }
            return {m, true};
        }
    }

    // Mixed families: chain |Bx|_to <= beta(2->to) ||B||_2 beta(from->2) |x|_from.
    const double bound = beta_basic_to_euclid(from) * max_singular(b) * beta_euclid_to_basic(to);
    return {bound, false};
}

Mat structured_reduced(const Mat& a, const Structured& spec) {
    validate_norm(NormSpec{spec});
    const int kk = static_cast<int>(spec.partition.size());
    int n = 0;
    for (int nk : spec.partition) n += nk;
    if (!a.square() || a.rows() != n) throw InvalidInput("structured_reduced: dimension mismatch");

    Mat reduced(kk, kk);
    int roff = 0;
    for (int i = 0; i < kk; ++i) {
        int coff = 0;
        for (int j = 0; j < kk; ++j) {
            Mat blk(spec.partition[i], spec.partition[j]);
            for (int r = 0; r < spec.partition[i]; ++r)
                for (int c = 0; c < spec.partition[j]; ++c) blk(r, c) = a(roff + r, coff + c);
            if (i == j) {
                reduced(i, j) = measure_basic(spec.inner[i], blk);
            } else {
                reduced(i, j) = cross_block_norm(spec.inner[j], spec.inner[i], blk).value;
            }
            coff += spec.partition[j];
        }
        roff += spec.partition[i];
    }
    return reduced;
}

}  // namespace swc
