#pragma once

// Small dense linear algebra kernel. Row-major storage, double precision.
// Dimensions here are tiny (n up to a few hundred), so the symmetric
// eigensolver is a cyclic Jacobi iteration and everything else is direct.

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "swcontract/errors.hpp"

namespace swc {

using Vec = std::vector<double>;

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0);
    Mat(std::initializer_list<std::initializer_list<double>> rows);

    static Mat identity(int n);
    static Mat diag(const Vec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    bool square() const { return rows_ == cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);
Vec operator*(const Mat& a, const Vec& x);

Mat transpose(const Mat& a);
double max_abs(const Mat& a);
bool all_finite(const Mat& a);
bool all_finite(const Vec& x);

double dot(const Vec& x, const Vec& y);
double norm2(const Vec& x);
Vec axpy(double a, const Vec& x, const Vec& y);  // a*x + y

struct SymEig {
    Vec eigenvalues;   // ascending
    Mat eigenvectors;  // columns, orthonormal
};

// Cyclic Jacobi. Input must be symmetric within 1e-10 of its scale; it is
// symmetrized before solving. Throws InvalidInput otherwise.
SymEig sym_eig(const Mat& s);

// P^{-1/2} of a symmetric positive definite matrix. Throws NotPositiveDefinite
// when the smallest eigenvalue is <= 1e-12.
Mat spd_inv_sqrt(const Mat& p);
Mat spd_sqrt(const Mat& p);
Mat spd_inverse(const Mat& p);

// Closed-form eigenvalues of a 2x2 matrix.
std::pair<std::complex<double>, std::complex<double>> eig_2x2(const Mat& a);

// Largest singular value, via sym_eig of A^T A.
double max_singular(const Mat& a);

Mat kron(const Mat& a, const Mat& b);

}  // namespace swc
