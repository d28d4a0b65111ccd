#include <doctest.h>

#include <cmath>
#include <random>

#include "swcontract/models.hpp"
#include "test_util.hpp"

using namespace swc;
using swctest::random_vec;

TEST_CASE("chua characteristic and field") {
    const ChuaParams params;
    CHECK(chua_g(params, 0.0) == doctest::Approx(0.0));
    CHECK(chua_g(params, 2.0) == doctest::Approx(-1.3));
    const Vec origin = chua_field(params, {0.0, 0.0, 0.0});
    CHECK(origin[0] == doctest::Approx(0.0));
    CHECK(origin[1] == doctest::Approx(0.0));
    CHECK(origin[2] == doctest::Approx(0.0));
}

TEST_CASE("chua jacobian matches finite differences away from the kinks") {
    const ChuaParams params;
    std::mt19937_64 rng(701);
    for (int trial = 0; trial < 100; ++trial) {
        Vec w = random_vec(rng, 3, -2.0, 2.0);
        if (std::abs(std::abs(w[0]) - 1.0) < 1e-2) continue;
        const Mat jac = chua_jacobian(params, w);
        for (int j = 0; j < 3; ++j) {
            Vec wp = w, wm = w;
            wp[j] += 1e-6;
            wm[j] -= 1e-6;
            const Vec fp = chua_field(params, wp);
            const Vec fm = chua_field(params, wm);
            for (int i = 0; i < 3; ++i)
                CHECK(jac(i, j) == doctest::Approx((fp[i] - fm[i]) / 2e-6).epsilon(1e-5));
        }
    }
}

TEST_CASE("chua weighted-1 measure bound over both slopes") {
    const NormSpec w1 = WeightedLp{LpOrder::one, {1.0, 3.4042, 1.0369}};
    const auto [inner, outer] = chua_jacobian_slopes(ChuaParams{});
    const double mu = std::max(matrix_measure_value(w1, inner),
                               matrix_measure_value(w1, outer));
    CHECK(mu == doctest::Approx(3.2829).epsilon(1e-3));
}

TEST_CASE("laplacian spectra of small graphs") {
    Graph k2{2, {{0, 1}}, true};
    const Mat l2 = laplacian(k2);
    CHECK(l2(0, 0) == 1.0);
    CHECK(l2(0, 1) == -1.0);
    CHECK(lambda2(k2) == doctest::Approx(2.0));

    Graph p3{3, {{0, 1}, {1, 2}}, true};
    CHECK(lambda2(p3) == doctest::Approx(1.0));

    Graph empty{4, {}, true};
    CHECK(lambda2(empty) == doctest::Approx(0.0));

    Graph directed{3, {{0, 1}, {1, 2}, {2, 0}}, false};
    CHECK_THROWS_AS(lambda2(directed), UnsupportedGraph);
    CHECK_THROWS_AS(laplacian(Graph{2, {{0, 0}}, true}), InvalidInput);
}

TEST_CASE("laplacian rows sum to zero and spectrum is nonnegative") {
    std::mt19937_64 rng(702);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 3 + trial % 5;
        Graph g{m, {}, true};
        std::uniform_int_distribution<int> node(0, m - 1);
        for (int e = 0; e < m + 2; ++e) {
            const int i = node(rng), j = node(rng);
            if (i != j) g.edges.push_back({i, j});
        }
        const Mat l = laplacian(g);
        for (int i = 0; i < m; ++i) {
            double row = 0.0;
            for (int j = 0; j < m; ++j) row += l(i, j);
            CHECK(row == doctest::Approx(0.0).epsilon(1e-12));
        }
        for (const double ev : sym_eig(l).eigenvalues) CHECK(ev >= -1e-9);
    }
}

TEST_CASE("shipped 10-node graph has the closed-form connectivity") {
    const Graph g = sample_graph10();
    const double expected = 6.0 - 2.0 * std::cos(M_PI / 5.0) - 2.0 * std::cos(2.0 * M_PI / 5.0) -
                            2.0 * std::cos(3.0 * M_PI / 5.0);
    CHECK(lambda2(g) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("blink network assembly against elementwise oracle") {
    // linear node dynamics make the sigma = 1 field I_m x A - k L x Gamma
    const Mat a{{-1.0, 0.5}, {0.0, -2.0}};
    BlinkNetConfig cfg;
    cfg.node_field = [a](const Vec& x) { return a * x; };
    cfg.node_jacobian = [a](const Vec&) { return a; };
    cfg.node_dim = 2;
    cfg.k = 0.7;
    cfg.gamma = Mat{{1.0, 0.0}, {0.0, 0.5}};
    cfg.graph = Graph{3, {{0, 1}, {1, 2}}, true};
    const SwitchedSystem sys = blink_network_field(cfg);
    CHECK(sys.dimension() == 6);

    const Mat full = kron(Mat::identity(3), a) - 0.7 * kron(laplacian(cfg.graph), cfg.gamma);
    std::mt19937_64 rng(703);
    for (int probe = 0; probe < 20; ++probe) {
        const Vec x = random_vec(rng, 6);
        const Vec f_on = sys.mode(1).field(0.0, x);
        const Vec f_expect = full * x;
        for (int i = 0; i < 6; ++i) CHECK(f_on[i] == doctest::Approx(f_expect[i]).epsilon(1e-12));
        const Vec f_off = sys.mode(0).field(0.0, x);
        const Vec f_uncoupled = kron(Mat::identity(3), a) * x;
        for (int i = 0; i < 6; ++i)
            CHECK(f_off[i] == doctest::Approx(f_uncoupled[i]).epsilon(1e-12));
    }

    BlinkNetConfig uncoupled = cfg;
    uncoupled.k = 0.0;
    const SwitchedSystem sys0 = blink_network_field(uncoupled);
    const Vec x = random_vec(rng, 6);
    const Vec m0 = sys0.mode(0).field(0.0, x);
    const Vec m1 = sys0.mode(1).field(0.0, x);
    for (int i = 0; i < 6; ++i) CHECK(m0[i] == doctest::Approx(m1[i]));
}

TEST_CASE("synchronized manifold is invariant for the blinking chua network") {
    const BlinkNetConfig cfg =
        chua_blink_config(ChuaParams{}, 2.0, Mat::identity(3), sample_graph10());
    const SwitchedSystem sys = blink_network_field(cfg);
    Vec x0(30);
    const Vec seed_state{0.2, -0.1, 0.15};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 3; ++j) x0[3 * i + j] = seed_state[j];
    const SwitchingSignal sig({{0, 0.25}, {1, 0.75}}, true);
    const Trajectory traj = simulate(sys, sig, x0, 0.0, 10.0, 1e-3);
    CHECK_FALSE(traj.diverged);
    double worst = 0.0;
    for (const Vec& x : traj.states) worst = std::max(worst, sync_error_stacked(x, 3));
    CHECK(worst <= 1e-9);
}

TEST_CASE("sync_error closed forms") {
    CHECK(sync_error({{1.0, 2.0}, {1.0, 2.0}}) == doctest::Approx(0.0));
    CHECK(sync_error({{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}}) == doctest::Approx(1.0));
    const double base = sync_error({{1.0, 0.5}, {-0.2, 0.1}, {0.4, -0.9}});
    CHECK(sync_error({{2.0, 1.0}, {-0.4, 0.2}, {0.8, -1.8}}) == doctest::Approx(2.0 * base));
}

TEST_CASE("variational mode matrix and the measure shift identity") {
    const auto [inner, outer] = chua_jacobian_slopes(ChuaParams{});
    CHECK(max_abs(variational_mode_matrix(inner, 2.0, 3.0, Mat::identity(3), 0) - inner) == 0.0);

    std::mt19937_64 rng(704);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double k = u(rng), lam = u(rng);
        const Mat shifted = variational_mode_matrix(inner, k, lam, Mat::identity(3), 1);
        CHECK(matrix_measure_value(euclidean(3), shifted) ==
              doctest::Approx(matrix_measure_value(euclidean(3), inner) - k * lam)
                  .epsilon(1e-10));
        // monotone in lambda for identity coupling
        const Mat more = variational_mode_matrix(inner, k, lam + 1.0, Mat::identity(3), 1);
        CHECK(matrix_measure_value(euclidean(3), more) <=
              matrix_measure_value(euclidean(3), shifted) + 1e-12);
    }
}

TEST_CASE("benchmark matrices are consistent") {
    // the average matrix of benchmark 2 matches its printed value, which
    // pins the corrected sign of A(1)(2,1)
    const Mat am = 0.5 * (ltv2_A(1) + ltv2_A(2));
    CHECK(max_abs(am - ltv2_Am()) < 1e-3);
    const auto [e1, e2] = eig_2x2(ltv2_Am());
    CHECK(std::min(e1.real(), e2.real()) == doctest::Approx(-6.3988).epsilon(1e-3));
    CHECK(std::max(e1.real(), e2.real()) == doctest::Approx(0.2311).epsilon(1e-3));
    // mode 1 is Hurwitz, mode 2 is not
    const auto [s1, s2] = eig_2x2(ltv2_A(1));
    CHECK(s1.real() < 0.0);
    CHECK(s2.real() < 0.0);
    const auto [u1, u2] = eig_2x2(ltv2_A(2));
    CHECK(std::max(u1.real(), u2.real()) > 0.0);
}
