#pragma once

// Model library: the two-mode switched LTV benchmarks, the Chua circuit,
// graphs/Laplacians, and the blinking diffusively-coupled network.

#include <functional>
#include <utility>
#include <vector>

#include "swcontract/simsw.hpp"

namespace swc {

struct ChuaParams {
    double m0 = -0.5;  // outer slope of the piecewise-linear characteristic
    double m1 = -0.8;  // inner slope
    double G = 0.7;
    double p = 9.0;
    double q = 7.0;
};

double chua_g(const ChuaParams& params, double w1);
Vec chua_field(const ChuaParams& params, const Vec& w);
// At the nonsmooth points |w1| = 1 the outer slope m0 is used; measure bounds
// take the max over both slopes, so the choice cannot weaken certificates.
Mat chua_jacobian(const ChuaParams& params, const Vec& w);
// The Jacobian takes exactly two values (one per slope); returned as
// {inner-slope Jacobian, outer-slope Jacobian}.
std::pair<Mat, Mat> chua_jacobian_slopes(const ChuaParams& params);

struct Graph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;  // (i, j): link j -> i; both ways if undirected
    bool undirected = true;
};

void validate_graph(const Graph& graph);
// L_ij = -1 for a link from j to i, L_ii = in-degree (rows sum to zero).
Mat laplacian(const Graph& graph);
// Second-smallest Laplacian eigenvalue (algebraic connectivity). Only the
// symmetric path is implemented; directed input throws UnsupportedGraph.
double lambda2(const Graph& graph);

// The 10-node undirected circulant graph with offsets {1, 2, 3}; its
// algebraic connectivity is 6 - 2cos(pi/5) - 2cos(2pi/5) - 2cos(3pi/5).
Graph sample_graph10();

struct BlinkNetConfig {
    std::function<Vec(const Vec&)> node_field;
    std::function<Mat(const Vec&)> node_jacobian;
    int node_dim = 0;
    double k = 0.0;  // coupling strength, >= 0
    Mat gamma;       // inner coupling, node_dim x node_dim
    Graph graph;
};

BlinkNetConfig chua_blink_config(const ChuaParams& params, double k, const Mat& gamma,
                                 const Graph& graph);

// Two modes over dimension m*n: mode 0 is the uncoupled node dynamics, mode 1
// subtracts k (L kron Gamma) x. Jacobians are blockdiag of node Jacobians
// minus the Kronecker coupling term.
SwitchedSystem blink_network_field(const BlinkNetConfig& config);

// (1/m) sum_i |x^i - xbar|_2, the mean distance to the node-state centroid.
double sync_error(const std::vector<Vec>& node_states);
// Splits a stacked state into per-node blocks and applies sync_error.
double sync_error_stacked(const Vec& stacked, int node_dim);

// Df - sigma * k * lambda * Gamma, the per-eigenmode variational matrix.
Mat variational_mode_matrix(const Mat& node_jacobian, double k, double lambda, const Mat& gamma,
                            int sigma);

// Two-mode LTV benchmark 1: both modes stable, 1 s dwells.
Mat ltv1_A(int mode);       // mode in {1, 2}
Mat ltv1_theta(int mode);   // norm factors Theta_i (P_i = Theta_i^T Theta_i)
// Two-mode LTV benchmark 2: mode 2 unstable, 2 s dwells. The printed source
// has a sign typo in A(1)(2,1); the value here is the one consistent with
// both the mode-1 stability claim and the printed average matrix A_m.
Mat ltv2_A(int mode);
Mat ltv2_theta(int mode);
Mat ltv2_Am();              // (A(1) + A(2)) / 2 as printed

}  // namespace swc
