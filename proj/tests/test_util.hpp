#pragma once

// Shared randomized-test helpers. Every suite seeds its own generator so the
// cases are reproducible run to run.

#include <random>

#include "swcontract/matcore.hpp"
#include "swcontract/norms.hpp"

namespace swctest {

using swc::Mat;
using swc::Vec;

inline Vec random_vec(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vec x(n);
    for (double& v : x) v = u(rng);
    return x;
}

inline Mat random_mat(std::mt19937_64& rng, int rows, int cols, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Mat a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = u(rng);
    return a;
}

inline Mat random_spd(std::mt19937_64& rng, int n) {
    const Mat r = random_mat(rng, n, n);
    Mat p = swc::transpose(r) * r;
    for (int i = 0; i < n; ++i) p(i, i) += 0.5;  // keep well conditioned
    return p;
}

inline Vec random_weights(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.2, 3.0);
    Vec w(n);
    for (double& v : w) v = u(rng);
    return w;
}

inline swc::NormSpec random_basic_norm(std::mt19937_64& rng, int n) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: return swc::WeightedLp{swc::LpOrder::one, random_weights(rng, n)};
        case 1: return swc::WeightedLp{swc::LpOrder::two, random_weights(rng, n)};
        case 2: return swc::WeightedLp{swc::LpOrder::inf, random_weights(rng, n)};
        default: return swc::Quadratic{random_spd(rng, n)};
    }
}

}  // namespace swctest
