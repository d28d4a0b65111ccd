#include <doctest.h>

#include <cmath>

#include "swcontract/models.hpp"
#include "swcontract/transact.hpp"
#include "test_util.hpp"

using namespace swc;
using swctest::random_basic_norm;
using swctest::random_spd;
using swctest::random_vec;
using swctest::random_weights;

TEST_CASE("beta_exact identical norms give 1") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 4;
        const NormSpec spec = random_basic_norm(rng, n);
        CHECK(beta_exact(spec, spec).value == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("beta_exact closed forms for the network norm pair") {
    const NormSpec w1 = WeightedLp{LpOrder::one, {1.0, 3.4042, 1.0369}};
    const NormSpec e3 = euclidean(3);
    CHECK(beta_exact(w1, e3).value == doctest::Approx(1.0));
    CHECK(beta_exact(e3, w1).value ==
          doctest::Approx(std::sqrt(1.0 + 3.4042 * 3.4042 + 1.0369 * 1.0369)));
}

TEST_CASE("beta_exact on the benchmark quadratic pairs is oracle-consistent") {
    // The printed coefficients for benchmark 1 (1.796 / 1.05) do not follow
    // from the definition for either direction; assert the definitional
    // values against the sampling oracle instead. Benchmark 2's printed pair
    // does reproduce.
    const NormSpec n1 = quadratic_from_factor(ltv1_theta(1));
    const NormSpec n2 = quadratic_from_factor(ltv1_theta(2));
    const double b12 = beta_exact(n1, n2).value;
    const double b21 = beta_exact(n2, n1).value;
    CHECK(sampled_sup(n1, n2, 100000, 7).value <= b12 * (1.0 + 1e-9));
    CHECK(sampled_sup(n1, n2, 100000, 7).value >= 0.98 * b12);
    CHECK(sampled_sup(n2, n1, 100000, 7).value <= b21 * (1.0 + 1e-9));
    CHECK(sampled_sup(n2, n1, 100000, 7).value >= 0.98 * b21);

    const NormSpec m1 = quadratic_from_factor(ltv2_theta(1));
    const NormSpec m2 = quadratic_from_factor(ltv2_theta(2));
    CHECK(beta_exact(m1, m2).value == doctest::Approx(1.9079).epsilon(0.01));
    CHECK(beta_exact(m2, m1).value == doctest::Approx(10.4207).epsilon(0.01));
}

TEST_CASE("beta soundness on random supported pairs") {
    std::mt19937_64 rng(302);
    int checked = 0;
    while (checked < 120) {
        const int n = 2 + checked % 4;
        const NormSpec from = random_basic_norm(rng, n);
        const NormSpec to = random_basic_norm(rng, n);
        BetaResult r;
        try {
            r = beta_exact(from, to);
        } catch (const UnsupportedPair&) {
            r = beta_with_fallback(from, to);
        }
        CHECK(r.value > 0.0);
        for (int probe = 0; probe < 50; ++probe) {
            const Vec x = random_vec(rng, n);
            CHECK(norm_eval(to, x) <= r.value * norm_eval(from, x) * (1.0 + 1e-9));
        }
        ++checked;
    }
}

TEST_CASE("reciprocal product at least one") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 4;
        const NormSpec a = random_basic_norm(rng, n);
        const NormSpec b = random_basic_norm(rng, n);
        double fwd, back;
        try {
            fwd = beta_exact(a, b).value;
            back = beta_exact(b, a).value;
        } catch (const UnsupportedPair&) {
            fwd = beta_with_fallback(a, b).value;
            back = beta_with_fallback(b, a).value;
        }
        CHECK(fwd * back >= 1.0 - 1e-9);
    }
}

TEST_CASE("sampled_sup below exact below weighted-Lp bound") {
    std::mt19937_64 rng(304);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 4;
        const Vec xi = random_weights(rng, n);
        const Vec eta = random_weights(rng, n);
        // p = 2 versus q = 1 exercises the quadratic <-> weighted-1 closed forms
        const NormSpec p_norm = WeightedLp{LpOrder::two, xi};
        const NormSpec q_norm = WeightedLp{LpOrder::one, eta};

        const double exact_pq = beta_exact(p_norm, q_norm).value;
        const double bound_pq = prop4_bound(LpOrder::two, xi, LpOrder::one, eta, 2).value;
        CHECK(sampled_sup(p_norm, q_norm, 4000, 1000 + trial).value <= exact_pq * (1.0 + 1e-9));
        CHECK(exact_pq <= bound_pq * (1.0 + 1e-9));

        const double exact_qp = beta_exact(q_norm, p_norm).value;
        const double bound_qp = prop4_bound(LpOrder::two, xi, LpOrder::one, eta, 1).value;
        CHECK(sampled_sup(q_norm, p_norm, 4000, 2000 + trial).value <= exact_qp * (1.0 + 1e-9));
        CHECK(exact_qp <= bound_qp * (1.0 + 1e-9));
    }
}

TEST_CASE("prop4 printed versus corrected factor") {
    // n = 1 exposes the difference: the printed factor collapses to zero,
    // which is unsound for a norm-equivalence constant
    const Vec one{1.0};
    CHECK(prop4_bound(LpOrder::two, one, LpOrder::one, one, 2, Prop4Variant::literal).value ==
          doctest::Approx(0.0));
    CHECK(prop4_bound(LpOrder::two, one, LpOrder::one, one, 2, Prop4Variant::corrected).value ==
          doctest::Approx(1.0));

    const Vec ones3(3, 1.0);
    CHECK(prop4_bound(LpOrder::inf, ones3, LpOrder::one, ones3, 2).value == doctest::Approx(3.0));
    const Vec ones4(4, 1.0);
    CHECK(prop4_bound(LpOrder::two, ones4, LpOrder::one, ones4, 2).value == doctest::Approx(2.0));
    // tight at the all-ones vector, so the sampler gets close
    CHECK(sampled_sup(NormSpec(WeightedLp{LpOrder::two, ones4}),
                      NormSpec(WeightedLp{LpOrder::one, ones4}), 100000, 11)
              .value >= 0.99 * 2.0);
    CHECK_THROWS_AS(prop4_bound(LpOrder::one, ones3, LpOrder::inf, ones3, 2), InvalidInput);
}

TEST_CASE("prop5 structured transaction bound") {
    CHECK(prop5_structured(1.0, {1.0, 1.0}, unweighted_lp(LpOrder::two, 2)).value ==
          doctest::Approx(1.0));
    CHECK(prop5_structured(2.0, {3.0, 5.0}, unweighted_lp(LpOrder::inf, 2)).value ==
          doctest::Approx(10.0));
    CHECK(prop5_structured(1.0, {1.0, 4.0}, unweighted_lp(LpOrder::one, 2)).value ==
          doctest::Approx(4.0));
}

TEST_CASE("sampled_sup determinism and trivial case") {
    const NormSpec a = WeightedLp{LpOrder::one, {1.0, 2.0}};
    CHECK(sampled_sup(a, a, 500, 99).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sampled_sup(a, euclidean(2), 500, 42).value ==
          sampled_sup(a, euclidean(2), 500, 42).value);
}

TEST_CASE("quadratic beta matches factor-ratio singular value") {
    std::mt19937_64 rng(305);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 3;
        const Mat pa = random_spd(rng, n);
        const Mat pb = random_spd(rng, n);
        const double direct = beta_exact(NormSpec(Quadratic{pa}), NormSpec(Quadratic{pb})).value;
        const double via_factors = max_singular(spd_sqrt(pb) * spd_inv_sqrt(pa));
        CHECK(direct == doctest::Approx(via_factors).epsilon(1e-8));
    }
}

TEST_CASE("unsupported pairs throw and fall back") {
    // weighted-1 to weighted-inf has no closed form here; chaining through
    // the Euclidean norm must produce a sound (possibly loose) bound
    const NormSpec a = WeightedLp{LpOrder::one, {1.0, 2.0, 0.5}};
    const NormSpec b = WeightedLp{LpOrder::inf, {0.7, 1.1, 2.2}};
    CHECK_THROWS_AS(beta_exact(a, b), UnsupportedPair);
    const BetaResult fb = beta_with_fallback(a, b);
    CHECK(fb.kind == BetaResult::Kind::paper_bound);
    std::mt19937_64 rng(306);
    for (int probe = 0; probe < 500; ++probe) {
        const Vec x = random_vec(rng, 3);
        CHECK(norm_eval(b, x) <= fb.value * norm_eval(a, x) * (1.0 + 1e-9));
    }
}
