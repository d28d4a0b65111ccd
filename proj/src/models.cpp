#include "swcontract/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace swc {

double chua_g(const ChuaParams& params, double w1) {
    return params.m0 * w1 +
           0.5 * (params.m1 - params.m0) * (std::abs(w1 + 1.0) - std::abs(w1 - 1.0));
}

Vec chua_field(const ChuaParams& params, const Vec& w) {
    if (w.size() != 3) throw InvalidInput("chua_field: state must be 3-dimensional");
    return {params.p * (params.G * (-w[0] + w[1]) - chua_g(params, w[0])),
            params.G * (w[0] - w[1]) + w[2], -params.q * w[1]};
}

namespace {

Mat chua_jacobian_for_slope(const ChuaParams& params, double gprime) {
    return Mat{{params.p * (-params.G - gprime), params.p * params.G, 0.0},
               {params.G, -params.G, 1.0},
               {0.0, -params.q, 0.0}};
}

}  // namespace

Mat chua_jacobian(const ChuaParams& params, const Vec& w) {
    if (w.size() != 3) throw InvalidInput("chua_jacobian: state must be 3-dimensional");
    const double gprime = std::abs(w[0]) < 1.0 ? params.m1 : params.m0;
    return chua_jacobian_for_slope(params, gprime);
}

std::pair<Mat, Mat> chua_jacobian_slopes(const ChuaParams& params) {
    return {chua_jacobian_for_slope(params, params.m1),
            chua_jacobian_for_slope(params, params.m0)};
}

void validate_graph(const Graph& graph) {
    if (graph.nodes < 0) throw InvalidInput("graph: negative node count");
    for (const auto& [i, j] : graph.edges) {
        if (i < 0 || i >= graph.nodes || j < 0 || j >= graph.nodes)
            throw InvalidInput("graph: edge endpoint out of range");
        if (i == j) throw InvalidInput("graph: self-loops are not allowed");
    }
}

Mat laplacian(const Graph& graph) {
    validate_graph(graph);
    Mat l(graph.nodes, graph.nodes, 0.0);
    std::set<std::pair<int, int>> links;
    for (const auto& [i, j] : graph.edges) {
        links.insert({i, j});
        if (graph.undirected) links.insert({j, i});
    }
    for (const auto& [i, j] : links) {
        l(i, j) = -1.0;
        l(i, i) += 1.0;
    }
    return l;
}

double lambda2(const Graph& graph) {
    const Mat l = laplacian(graph);
    if (l.rows() < 2) return 0.0;
    const double scale = std::max(1.0, max_abs(l));
    for (int i = 0; i < l.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (std::abs(l(i, j) - l(j, i)) > 1e-10 * scale)
                throw UnsupportedGraph("lambda2: Laplacian is not symmetric (directed graph)");
    return sym_eig(l).eigenvalues[1];
}

Graph sample_graph10() {
    Graph g;
    g.nodes = 10;
    g.undirected = true;
    for (int i = 0; i < 10; ++i)
        for (int d = 1; d <= 3; ++d) g.edges.push_back({i, (i + d) % 10});
    return g;
}

BlinkNetConfig chua_blink_config(const ChuaParams& params, double k, const Mat& gamma,
                                 const Graph& graph) {
    BlinkNetConfig cfg;
    cfg.node_field = [params](const Vec& w) { return chua_field(params, w); };
    cfg.node_jacobian = [params](const Vec& w) { return chua_jacobian(params, w); };
    cfg.node_dim = 3;
    cfg.k = k;
    cfg.gamma = gamma;
    cfg.graph = graph;
    return cfg;
}

SwitchedSystem blink_network_field(const BlinkNetConfig& config) {
    if (!config.node_field || !config.node_jacobian)
        throw InvalidInput("blink_network_field: node dynamics callbacks required");
    const int n = config.node_dim;
    const int m = config.graph.nodes;
    if (n <= 0 || m <= 0) throw InvalidInput("blink_network_field: empty network");
    if (config.gamma.rows() != n || config.gamma.cols() != n)
        throw InvalidInput("blink_network_field: inner coupling must be node_dim x node_dim");
    if (config.k < 0.0) throw InvalidInput("blink_network_field: coupling strength must be >= 0");
    validate_graph(config.graph);

    const int dim = m * n;
    const Mat coupling = config.k * kron(laplacian(config.graph), config.gamma);

    auto node_field = config.node_field;
    auto node_jac = config.node_jacobian;
    auto stacked_field = [node_field, m, n](const Vec& x) {
        Vec out(static_cast<size_t>(m) * n);
        for (int i = 0; i < m; ++i) {
            const Vec xi(x.begin() + static_cast<size_t>(i) * n,
                         x.begin() + static_cast<size_t>(i + 1) * n);
            const Vec fi = node_field(xi);
            std::copy(fi.begin(), fi.end(), out.begin() + static_cast<size_t>(i) * n);
        }
        return out;
    };
    auto stacked_jac = [node_jac, m, n, dim](const Vec& x) {
        Mat out(dim, dim, 0.0);
        for (int i = 0; i < m; ++i) {
            const Vec xi(x.begin() + static_cast<size_t>(i) * n,
                         x.begin() + static_cast<size_t>(i + 1) * n);
            const Mat ji = node_jac(xi);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) out(i * n + r, i * n + c) = ji(r, c);
        }
        return out;
    };

    ModeDynamics off;
    off.field = [stacked_field](double, const Vec& x) { return stacked_field(x); };
    off.jacobian = [stacked_jac](double, const Vec& x) { return stacked_jac(x); };

    ModeDynamics on;
    on.field = [stacked_field, coupling](double, const Vec& x) {
        Vec out = stacked_field(x);
        const Vec cx = coupling * x;
        for (size_t i = 0; i < out.size(); ++i) out[i] -= cx[i];
        return out;
    };
    on.jacobian = [stacked_jac, coupling](double, const Vec& x) {
        return stacked_jac(x) - coupling;
    };

    return SwitchedSystem({{0, std::move(off)}, {1, std::move(on)}}, dim);
}

double sync_error(const std::vector<Vec>& node_states) {
    if (node_states.empty()) throw InvalidInput("sync_error: no nodes");
    const size_t n = node_states.front().size();
    for (const Vec& x : node_states)
        if (x.size() != n) throw InvalidInput("sync_error: node dimensions differ");
    Vec centroid(n, 0.0);
    for (const Vec& x : node_states)
        for (size_t j = 0; j < n; ++j) centroid[j] += x[j] / node_states.size();
    double acc = 0.0;
    for (const Vec& x : node_states) {
        double sq = 0.0;
        for (size_t j = 0; j < n; ++j) sq += (x[j] - centroid[j]) * (x[j] - centroid[j]);
        acc += std::sqrt(sq);
    }
    return acc / node_states.size();
}

double sync_error_stacked(const Vec& stacked, int node_dim) {
    if (node_dim <= 0 || stacked.size() % node_dim != 0)
        throw InvalidInput("sync_error_stacked: stacked size not divisible by node_dim");
    std::vector<Vec> nodes;
    for (size_t o = 0; o < stacked.size(); o += node_dim)
        nodes.emplace_back(stacked.begin() + o, stacked.begin() + o + node_dim);
    return sync_error(nodes);
}

Mat variational_mode_matrix(const Mat& node_jacobian, double k, double lambda, const Mat& gamma,
                            int sigma) {
    if (!node_jacobian.square() || gamma.rows() != node_jacobian.rows() ||
        gamma.cols() != node_jacobian.cols())
        throw InvalidInput("variational_mode_matrix: dimension mismatch");
    if (sigma == 0) return node_jacobian;
    return node_jacobian - (k * lambda) * gamma;
}

namespace {

Mat inv2(const Mat& a) {
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (!(std::abs(det) > 1e-14)) throw InvalidInput("inv2: singular matrix");
    return Mat{{a(1, 1) / det, -a(0, 1) / det}, {-a(1, 0) / det, a(0, 0) / det}};
}

}  // namespace

Mat ltv1_A(int mode) {
    if (mode == 1) return Mat{{0.0, -1.0}, {2.0, -3.0}};
    if (mode == 2) return Mat{{0.0, -11.0}, {2.0, -33.0}};
    throw InvalidInput("ltv1_A: mode must be 1 or 2");
}

Mat ltv1_theta(int mode) {
    if (mode == 1) return inv2(Mat{{0.707, 0.447}, {0.707, 0.894}});
    if (mode == 2) return inv2(Mat{{0.998, 0.322}, {0.0618, 0.947}});
    throw InvalidInput("ltv1_theta: mode must be 1 or 2");
}

Mat ltv2_A(int mode) {
    if (mode == 1) return Mat{{-1.3481, -2.9306}, {2.4538, -1.2755}};
    if (mode == 2) return Mat{{-11.2237, 7.0628}, {-1.7413, 1.5119}};
    throw InvalidInput("ltv2_A: mode must be 1 or 2");
}

Mat ltv2_theta(int mode) {
    if (mode == 1) return Mat{{0.3797, 0.0061}, {0.0061, 0.4534}};
    if (mode == 2) return Mat{{0.0644, -0.1475}, {-0.1475, 0.8267}};
    throw InvalidInput("ltv2_theta: mode must be 1 or 2");
}

Mat ltv2_Am() { return Mat{{-6.2859, 2.0661}, {0.3562, 0.1182}}; }

}  // namespace swc
