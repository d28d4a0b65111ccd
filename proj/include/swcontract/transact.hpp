#pragma once

// Transaction coefficients beta between norm pairs: exact closed forms,
// weighted-Lp and structured-norm bounds, and a seeded Monte-Carlo sup
// estimator used as a validating lower bound (never fed to certificates).

#include <cstdint>
#include <string>

#include "swcontract/norms.hpp"

namespace swc {

struct BetaResult {
    double value = 0.0;
    enum class Kind { exact, paper_bound, sampled_lower } kind = Kind::exact;
    std::string from_id;
    std::string to_id;
};

// Exact beta with |x|_to <= beta |x|_from for all x, equality attained.
// Throws UnsupportedPair when no closed form exists for the pair.
BetaResult beta_exact(const NormSpec& from, const NormSpec& to);

// beta_exact with fallback: unsupported pairs chain through the Euclidean
// norm (beta(from->2) * beta(2->to)), reported as Kind::paper_bound.
BetaResult beta_with_fallback(const NormSpec& from, const NormSpec& to);

enum class Prop4Variant { literal, corrected };

// Weighted-Lp transaction bounds for p > q. Direction 1 bounds |x|_{p,xi} by
// |x|_{q,eta}; direction 2 bounds |x|_{q,eta} by |x|_{p,xi}. The literal
// variant keeps the printed dimension factor (n^{1/q} - n^{1/p}); corrected
// uses n^{1/q - 1/p} (the literal factor vanishes at n = 1, which is
// unsound, so corrected is the default).
BetaResult prop4_bound(LpOrder p, const Vec& xi, LpOrder q, const Vec& eta, int direction,
                       Prop4Variant variant = Prop4Variant::corrected);

// Structured-norm transaction bound: tau_S * ||diag(tau_k)||_S.
BetaResult prop5_structured(double tau_outer, const Vec& inner_taus, const BasicNorm& outer_spec);

// Max of |x|_to over n_samples Gaussian directions normalized to |x|_from=1.
// Deterministic given the seed; a lower bound on the true beta.
BetaResult sampled_sup(const NormSpec& from, const NormSpec& to, int n_samples, uint64_t seed);

}  // namespace swc
