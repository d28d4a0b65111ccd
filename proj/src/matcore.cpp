#include "swcontract/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace swc {

Mat::Mat(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw InvalidInput("Mat: dimensions must be positive");
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw InvalidInput("Mat: empty initializer");
    cols_ = static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw InvalidInput("Mat: ragged initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::diag(const Vec& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw InvalidInput("Mat mul: dimension mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("Mat add: dimension mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("Mat sub: dimension mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

Mat operator*(double s, const Mat& a) {
    Mat c = a;
    for (double& v : c.data()) v *= s;
    return c;
}

Vec operator*(const Mat& a, const Vec& x) {
    if (a.cols() != static_cast<int>(x.size())) throw InvalidInput("Mat-vec: dimension mismatch");
    Vec y(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Mat transpose(const Mat& a) {
    Mat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

double max_abs(const Mat& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const Mat& a) {
    return std::all_of(a.data().begin(), a.data().end(), [](double v) { return std::isfinite(v); });
}

bool all_finite(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

double dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw InvalidInput("dot: dimension mismatch");
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

Vec axpy(double a, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw InvalidInput("axpy: dimension mismatch");
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + y[i];
    return z;
}

namespace {

constexpr double kSymTol = 1e-10;
constexpr double kJacobiTol = 1e-12;
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const Mat& s) {
    double acc = 0.0;
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j)
            if (i != j) acc += s(i, j) * s(i, j);
    return std::sqrt(acc);
}

double diag_scale(const Mat& s) {
    double acc = 0.0;
    for (int i = 0; i < s.rows(); ++i) acc += s(i, i) * s(i, i);
    return std::max(std::sqrt(acc), 1.0);
}

}  // namespace

SymEig sym_eig(const Mat& s) {
    if (!s.square()) throw InvalidInput("sym_eig: matrix must be square");
    if (!all_finite(s)) throw InvalidInput("sym_eig: non-finite entries");
    const int n = s.rows();
    const double scale = std::max(max_abs(s), 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(s(i, j) - s(j, i)) > kSymTol * scale)
                throw InvalidInput("sym_eig: matrix not symmetric within tolerance");

    Mat a = s;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }

    Mat v = Mat::identity(n);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) <= kJacobiTol * diag_scale(a)) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SymEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    return out;
}

namespace {

Mat spectral_apply(const Mat& p, double (*f)(double), const char* who) {
    const SymEig e = sym_eig(p);
    for (double lam : e.eigenvalues)
        if (lam <= 1e-12) throw NotPositiveDefinite(std::string(who) + ": matrix is not SPD");
    const int n = p.rows();
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += e.eigenvectors(i, k) * f(e.eigenvalues[k]) * e.eigenvectors(j, k);
            out(i, j) = s;
        }
    return out;
}

}  // namespace

Mat spd_inv_sqrt(const Mat& p) {
    return spectral_apply(p, +[](double x) { return 1.0 / std::sqrt(x); }, "spd_inv_sqrt");
}

Mat spd_sqrt(const Mat& p) {
    return spectral_apply(p, +[](double x) { return std::sqrt(x); }, "spd_sqrt");
}

Mat spd_inverse(const Mat& p) {
    return spectral_apply(p, +[](double x) { return 1.0 / x; }, "spd_inverse");
}

std::pair<std::complex<double>, std::complex<double>> eig_2x2(const Mat& a) {
    if (a.rows() != 2 || a.cols() != 2) throw InvalidInput("eig_2x2: matrix must be 2x2");
    const double tr = a(0, 0) + a(1, 1);
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double disc = tr * tr / 4.0 - det;
    if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        return {std::complex<double>(tr / 2.0 - r, 0.0), std::complex<double>(tr / 2.0 + r, 0.0)};
    }
    const double im = std::sqrt(-disc);
    return {std::complex<double>(tr / 2.0, -im), std::complex<double>(tr / 2.0, im)};
}

double max_singular(const Mat& a) {
    if (!all_finite(a)) throw InvalidInput("max_singular: non-finite entries");
    const Mat ata = transpose(a) * a;
    const SymEig e = sym_eig(ata);
    const double lam = std::max(e.eigenvalues.back(), 0.0);
    return std::sqrt(lam);
}

Mat kron(const Mat& a, const Mat& b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

}  // namespace swc
