#pragma once

// Shared reference networks and matrices used across the test suite.
// Expected values were worked out by hand or cross-checked against
// independent brute-force oracles in the tests themselves.

#include "econet/finance.hpp"
#include "econet/flows.hpp"
#include "econet/graph.hpp"
#include "econet/markov.hpp"
#include "econet/matrix.hpp"

namespace fixtures {

using econet::Edge;
using econet::FlowNetwork;
using econet::Matrix;
using econet::Vector;
using econet::WeightedDigraph;

// 7-city shipping network, vertices A..G = 0..6, destination G.
// Minimum costs-to-go: (8, 10, 3, 5, 4, 1, 0).
inline FlowNetwork shipping_network() {
    WeightedDigraph g(7, {{0, 1, 1}, {0, 2, 5}, {0, 3, 3},
                          {1, 3, 9}, {1, 4, 6},
                          {2, 5, 2}, {3, 5, 4},
                          {4, 6, 4}, {5, 6, 1}});
    FlowNetwork net{std::move(g)};
    net.destination = 6;
    return net;
}

// Two-product firm: max 3q1 + 4q2 s.t. 2q1 + 5q2 <= 30, 4q1 + 2q2 <= 20.
// Optimum q = (2.5, 5.0), value 27.5.
inline econet::GeneralLP firm_lp() {
    econet::GeneralLP g;
    g.c = {-3.0, -4.0};  // minimize the negation
    g.A_ub = Matrix{{2, 5}, {4, 2}};
    g.b_ub = {30.0, 20.0};
    return g;
}

// 4-node flow problem: supply 10 at node 0, demand 10 at node 3.
// Edge order (0,1), (0,3), (1,2), (2,3); costs 1, 4, 1, 1.
// Optimal flow (10, 0, 10, 10); with cap 5 on edge (0,1): (5, 5, 5, 5).
inline FlowNetwork small_flow_network() {
    WeightedDigraph g(4, {{0, 1, 1}, {0, 3, 4}, {1, 2, 1}, {2, 3, 1}});
    FlowNetwork net{std::move(g)};
    net.supply = {10, 0, 0, 0};
    net.demand = {0, 0, 0, 10};
    return net;
}

// 5-node network whose trading station (vertex 2) drops out of the
// transport reduction: suppliers {0, 1}, consumers {3, 4},
// reduced cost matrix [[3, 3], [2, 2]].
inline FlowNetwork station_flow_network() {
    WeightedDigraph g(5, {{0, 1, 1}, {0, 2, 5}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}});
    FlowNetwork net{std::move(g)};
    net.supply = {5, 5, 0, 0, 0};
    net.demand = {0, 0, 0, 4, 6};
    return net;
}

// Weighted 4-vertex graph where hub and authority rankings disagree.
// Katz (beta = 1): hub (5, 4, 5, 1), authority (1, 6, 4, 4).
// Eigenvector hub: (0.4, 0.2, 0.4, 0.0).
inline Matrix hub_authority_adjacency() {
    return Matrix{{0, 1.0, 0, 0},
                  {0, 0, 0.5, 0.5},
                  {0, 1.0, 0, 0},
                  {0, 0, 0, 0}};
}

// Five-vertex out-star with weight 0.2: Katz hub (1.8, 1, 1, 1, 1).
inline Matrix out_star_adjacency() {
    Matrix a(5, 5);
    for (int j = 1; j < 5; ++j) a(0, j) = 0.2;
    return a;
}

// Five-vertex in-star with weight 0.2: Katz hub (1.2, 1.2, 1.2, 1.2, 1).
inline Matrix in_star_adjacency() {
    Matrix a(5, 5);
    for (int i = 0; i < 4; ++i) a(i, 4) = 0.2;
    return a;
}

// Directed 4-cycle with weight 0.2: Katz hub 1.25 everywhere.
inline Matrix ring_adjacency() {
    Matrix a(4, 4);
    for (int i = 0; i < 4; ++i) a(i, (i + 1) % 4) = 0.2;
    return a;
}

// Two-state worker chain (unemployed/employed).
inline Matrix worker_matrix(double alpha, double beta) {
    return Matrix{{1.0 - alpha, alpha}, {beta, 1.0 - beta}};
}

// Closed form for worker_matrix(alpha, beta)^m.
inline Matrix worker_matrix_power(double alpha, double beta, unsigned m) {
    const double s = alpha + beta;
    double gm = 1.0;
    for (unsigned i = 0; i < m; ++i) gm *= 1.0 - s;
    return Matrix{{(beta + alpha * gm) / s, (alpha - alpha * gm) / s},
                  {(beta - beta * gm) / s, (alpha + beta * gm) / s}};
}

// Estimated 8-state intergenerational wealth mobility matrix.
inline Matrix mobility_matrix() {
    return Matrix{
        {0.222, 0.222, 0.215, 0.187, 0.081, 0.038, 0.029, 0.006},
        {0.221, 0.220, 0.215, 0.188, 0.082, 0.039, 0.029, 0.006},
        {0.207, 0.209, 0.210, 0.194, 0.090, 0.046, 0.036, 0.008},
        {0.198, 0.201, 0.207, 0.198, 0.095, 0.052, 0.040, 0.009},
        {0.175, 0.178, 0.197, 0.207, 0.110, 0.067, 0.054, 0.012},
        {0.182, 0.184, 0.200, 0.205, 0.106, 0.062, 0.050, 0.011},
        {0.123, 0.125, 0.166, 0.216, 0.141, 0.114, 0.094, 0.021},
        {0.084, 0.084, 0.142, 0.228, 0.170, 0.143, 0.121, 0.028}};
}

// Trust matrix where agent 0 listens to nobody: consensus at b0(0).
inline Matrix trust_a() {
    return Matrix{{1.0, 0, 0, 0},
                  {0.5, 0.1, 0.4, 0},
                  {0.5, 0.4, 0.1, 0},
                  {0, 0.5, 0, 0.5}};
}

// Same network but agent 0 trusts agent 3 a little.
// Stationary distribution rounds to (0.56, 0.15, 0.07, 0.22).
inline Matrix trust_b() {
    return Matrix{{0.8, 0, 0, 0.2},
                  {0.5, 0.1, 0.4, 0},
                  {0.5, 0.4, 0.1, 0},
                  {0, 0.5, 0, 0.5}};
}

// Strongly connected 4-page web graph used for the surfer chain.
inline Matrix web_adjacency() {
    return Matrix{{0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
}

// Poverty-trap mobility digraph on {poor, middle, rich}; poor is a sink.
inline Matrix poverty_trap_adjacency() {
    return Matrix{{1, 0, 0}, {1, 1, 1}, {1, 1, 1}};
}

// Three vertices, components {0} and {1, 2}.
inline WeightedDigraph two_component_graph() {
    return WeightedDigraph(3, {{0, 0, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}});
}

// Vertex 3 is a source, so strong connectivity fails.
inline WeightedDigraph reducible_graph() {
    return WeightedDigraph(4, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 2, 1},
                               {2, 0, 1}, {3, 2, 1}});
}

// Two banks that owe each other 1: clearing vectors form the bracket
// p = (0,0) (least) and p = (1,1) (greatest).
inline void two_bank_ring(Matrix& pi, Vector& e, Vector& x) {
    pi = Matrix{{0, 1}, {1, 0}};
    e = {0.0, 0.0};
    x = {1.0, 1.0};
}

inline econet::BankingSystem two_bank_system() {
    econet::BankingSystem sys;
    sys.W = Matrix{{0, 1}, {1, 0}};
    sys.a = {0.0, 0.0};
    sys.dliab = {0.0, 0.0};
    return sys;
}

}  // namespace fixtures
