#pragma once

#include <string>
#include <vector>

#include "econet/graph.hpp"
#include "econet/lp.hpp"
#include "econet/matrix.hpp"

namespace econet {

/// Network for shortest-path work (destination set) or flow work (supply and
/// demand set). Edge weights are interpreted as per-unit shipping costs.
/// The destination's zero-cost self-loop is implicit: the Bellman operator
/// pins q(destination) = 0 rather than storing a zero-weight edge.
struct FlowNetwork {
    WeightedDigraph graph;
    int destination = -1;        // >= 0 in shortest-path mode
    Vector supply;               // nonempty in flow mode
    Vector demand;
    std::vector<Edge> capacities;  // optional per-edge upper bounds

    bool shortest_path_mode() const { return destination >= 0; }
    bool flow_mode() const { return !supply.empty(); }
    void validate() const;
};

struct CostToGo {
    Vector q;
    long iterations;
};

/// Minimum cost-to-go by Bellman iteration from q = 0. With beta = 1 the
/// iteration reaches the fixed point exactly within n steps; with beta < 1
/// it stops once ||Tq - q||_inf < tol (1 - beta) / beta.
CostToGo min_cost_to_go(const FlowNetwork& net, double beta = 1.0, double tol = 1e-10);

/// sigma(x) = argmin over successors y of c(x,y) + beta q(y); ties broken by
/// smallest vertex index. The destination maps to itself.
std::vector<int> greedy_policy(const Vector& q, const FlowNetwork& net,
                               double beta = 1.0);

Vector vec_col_major(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);

struct TransportPlan {
    Matrix pi;
    double cost;
};

struct DualPotentials {
    Vector w;  // source prices
    Vector p;  // target prices
};

/// Kantorovich problem as an equality-form LP over vec_col_major(pi):
/// rows are the n source marginals then the m target marginals.
LPProblem ot_to_lp(const Vector& phi, const Vector& psi, const Matrix& cost);

std::pair<TransportPlan, DualPotentials> solve_ot(const Vector& phi, const Vector& psi,
                                                  const Matrix& cost);

struct EquilibriumReport {
    bool ok;
    std::string detail;  // names the first (RE)/(NA)/(IC) violation
};

EquilibriumReport check_competitive_equilibrium(const Vector& w, const Vector& p,
                                                const Matrix& pi, const Matrix& cost,
                                                const Vector& phi, const Vector& psi,
                                                double tol = 1e-8);

/// Node-edge incidence matrix: column k is +1 at the tail and -1 at the head
/// of edge k.
Matrix incidence_matrix(const FlowNetwork& net);

struct FlowResult {
    LPStatus status;
    Vector flow;  // per edge, in edge-list order
    double cost;
};

FlowResult min_cost_flow(const FlowNetwork& net);

struct FlowOTReduction {
    std::vector<int> suppliers;   // vertices with s - d > 0
    std::vector<int> consumers;   // vertices with d - s > 0
    Vector phi;                   // net supply per supplier
    Vector psi;                   // net demand per consumer
    Matrix cost;                  // shortest-path cost supplier x consumer
    std::vector<std::vector<std::vector<int>>> paths;  // vertex sequences
    bool has_unreachable;         // true when a big-M cost was substituted
    TransportPlan plan;
    Vector edge_flows;            // flows recovered onto the original edges
};

/// Eliminates trading stations: solves the OT instance over net suppliers and
/// net consumers with shortest-path costs, then pushes the plan back onto the
/// network edges. Multiple shortest paths resolve to the lexicographically
/// smallest vertex sequence.
FlowOTReduction flow_to_ot_reduction(const FlowNetwork& net);

}  // namespace econet
