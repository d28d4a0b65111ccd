#pragma once

// Norm specifications, induced matrix norms and matrix measures (logarithmic
// norms) for weighted Lp (p in {1,2,inf}), quadratic and structured norms.

#include <variant>
#include <vector>

#include "swcontract/matcore.hpp"

namespace swc {

enum class LpOrder { one, two, inf };

struct WeightedLp {
    LpOrder p = LpOrder::two;
    Vec weights;  // strictly positive; unit weights = unweighted norm
};

struct Quadratic {
    Mat P;  // SPD; a factor Theta is canonicalized to P = Theta^T Theta
};

using BasicNorm = std::variant<WeightedLp, Quadratic>;

// One level of nesting only: inner and outer specs are non-structured.
struct Structured {
    std::vector<int> partition;     // block sizes, sum = n
    std::vector<BasicNorm> inner;   // one per block
    BasicNorm outer;                // norm on R^K
};

using NormSpec = std::variant<WeightedLp, Quadratic, Structured>;

WeightedLp unweighted_lp(LpOrder p, int n);
NormSpec euclidean(int n);
Quadratic quadratic_from_factor(const Mat& theta);
BasicNorm to_basic(const NormSpec& spec);   // throws UnsupportedNorm if structured
NormSpec from_basic(const BasicNorm& b);

int norm_dimension(const NormSpec& spec);
int norm_dimension(const BasicNorm& spec);
void validate_norm(const NormSpec& spec);

double norm_eval(const NormSpec& spec, const Vec& x);
double norm_eval(const BasicNorm& spec, const Vec& x);

double induced_matrix_norm(const NormSpec& spec, const Mat& a);

struct MeasureResult {
    double value = 0.0;
    enum class Method { closed_form, limit_oracle } method = Method::closed_form;
};

double matrix_measure_value(const NormSpec& spec, const Mat& a);
MeasureResult matrix_measure(const NormSpec& spec, const Mat& a);

// Finite-difference quotient (||I + hA|| - 1)/h, one-sided, with Richardson
// extrapolation over h and h/2. Test oracle only. Structured specs use a
// seeded sampled sup for the induced norm (a lower estimate).
double measure_limit_oracle(const NormSpec& spec, const Mat& a, double h);

// (1/2) lambda_max(P^{-1/2}(PA + A^T P + Pdot)P^{-1/2})
double tv_quadratic_measure(const Mat& p, const Mat& pdot, const Mat& a);

struct CrossNorm {
    double value = 0.0;
    bool exact = true;  // false: certified upper bound via L2 chaining
};

// sup over |x|_from = 1 of |B x|_to, for non-structured specs.
CrossNorm cross_block_norm(const BasicNorm& from, const BasicNorm& to, const Mat& b);

// Reduced KxK matrix: measures of diagonal blocks under the inner norms,
// cross-block norms off-diagonal. mu_outer(reduced) >= mu of the full
// structured norm.
Mat structured_reduced(const Mat& a, const Structured& spec);

}  // namespace swc
