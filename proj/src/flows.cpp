#include "econet/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace econet {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

void FlowNetwork::validate() const {
    const int n = graph.num_vertices();
    if (shortest_path_mode()) {
        if (destination >= n) throw IndexError("FlowNetwork: destination out of range");
    }
    if (flow_mode()) {
        if (supply.size() != static_cast<std::size_t>(n) ||
            demand.size() != static_cast<std::size_t>(n))
            throw InvalidArgument("FlowNetwork: supply/demand length mismatch");
        double ts = 0.0, td = 0.0;
        for (int i = 0; i < n; ++i) {
            if (supply[i] < 0.0 || demand[i] < 0.0)
                throw InvalidArgument("FlowNetwork: supply and demand must be >= 0");
            ts += supply[i];
            td += demand[i];
        }
        if (std::abs(ts - td) > 1e-9 * std::max(1.0, ts))
            throw MarginalMismatch("FlowNetwork: total supply != total demand", ts, td);
    }
    for (const Edge& cap : capacities) {
        if (!graph.has_edge(cap.tail, cap.head))
            throw InvalidArgument("FlowNetwork: capacity on a missing edge");
        if (cap.weight < 0.0) throw InvalidArgument("FlowNetwork: negative capacity");
    }
    if (!shortest_path_mode() && !flow_mode())
        throw InvalidArgument("FlowNetwork: set a destination or supply/demand");
}

CostToGo min_cost_to_go(const FlowNetwork& net, double beta, double tol) {
    net.validate();
    if (!net.shortest_path_mode())
        throw InvalidArgument("min_cost_to_go: network has no destination");
    if (!(beta > 0.0) || beta > 1.0)
        throw InvalidArgument("min_cost_to_go: beta must lie in (0, 1]");
    const int n = net.graph.num_vertices();
    const int d = net.destination;

    // Assumption: every vertex reaches the destination.
    {
        std::vector<bool> reach(n, false);
        std::queue<int> bfs;
        reach[d] = true;
        bfs.push(d);
        while (!bfs.empty()) {
            const int v = bfs.front();
            bfs.pop();
            for (int k : net.graph.in_edges(v)) {
                const int u = net.graph.edges()[k].tail;
                if (!reach[u]) {
                    reach[u] = true;
                    bfs.push(u);
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (!reach[v])
                throw UnreachableDestination("min_cost_to_go: vertex " + std::to_string(v) +
                                                 " cannot reach the destination",
                                             v);
    }

    auto bellman = [&](const Vector& q) {
        Vector next(n, kInf);
        next[d] = 0.0;  // implicit zero-cost self-loop
        for (int x = 0; x < n; ++x) {
            if (x == d) continue;
            for (int k : net.graph.out_edges(x)) {
                const Edge& e = net.graph.edges()[k];
                next[x] = std::min(next[x], e.weight + beta * q[e.head]);
            }
        }
        return next;
    };

    const double stop = (beta < 1.0) ? tol * (1.0 - beta) / beta : tol;
    Vector q(n, 0.0);
    const long max_iter = (beta < 1.0) ? 1000000 : 4L * n + 4;
    for (long it = 1; it <= max_iter; ++it) {
        Vector next = bellman(q);
        double gap = 0.0;
        for (int v = 0; v < n; ++v)
            if (next[v] < kInf) gap = std::max(gap, std::abs(next[v] - q[v]));
        q = std::move(next);
        if (gap <= stop) return {std::move(q), it - 1};
    }
    throw NonConvergence("min_cost_to_go: no fixed point within iteration budget",
                         max_iter);
}

std::vector<int> greedy_policy(const Vector& q, const FlowNetwork& net, double beta) {
    const int n = net.graph.num_vertices();
    if (q.size() != static_cast<std::size_t>(n))
        throw InvalidArgument("greedy_policy: q length mismatch");
    std::vector<int> sigma(n, -1);
    for (int x = 0; x < n; ++x) {
        if (x == net.destination) {
            sigma[x] = x;
            continue;
        }
        double best = kInf;
        for (int k : net.graph.out_edges(x)) {
            const Edge& e = net.graph.edges()[k];
            const double val = e.weight + beta * q[e.head];
            if (val < best - 1e-12 || (std::abs(val - best) <= 1e-12 && e.head < sigma[x])) {
                best = val;
                sigma[x] = e.head;
            }
        }
        if (sigma[x] < 0)
            throw InvalidNetwork("greedy_policy: vertex " + std::to_string(x) +
                                 " has no successors");
    }
    return sigma;
}

Vector vec_col_major(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
    return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
        }
    return k;
}

LPProblem ot_to_lp(const Vector& phi, const Vector& psi, const Matrix& cost) {
    const std::size_t n = phi.size();
    const std::size_t m = psi.size();
    if (cost.rows() != n || cost.cols() != m)
        throw InvalidArgument("ot_to_lp: cost matrix shape mismatch");
    double sp = 0.0, sq = 0.0;
    for (double v : phi) {
        if (v < 0.0) throw InvalidArgument("ot_to_lp: negative source marginal");
        sp += v;
    }
    for (double v : psi) {
        if (v < 0.0) throw InvalidArgument("ot_to_lp: negative target marginal");
        sq += v;
    }
    if (std::abs(sp - sq) > 1e-9 * std::max(1.0, sp))
        throw MarginalMismatch("ot_to_lp: marginal totals differ", sp, sq);

    LPProblem p;
    p.c = Vector(n * m);
    p.A = Matrix(n + m, n * m);
    p.b = Vector(n + m);
    // Column-major variable order: pi(i, j) sits at column j*n + i, so the
    // constraint matrix is (1_m' (x) I_n ; I_m (x) 1_n').
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t col = j * n + i;
            p.c[col] = cost(i, j);
            p.A(i, col) = 1.0;
            p.A(n + j, col) = 1.0;
        }
    }
    for (std::size_t i = 0; i < n; ++i) p.b[i] = phi[i];
    for (std::size_t j = 0; j < m; ++j) p.b[n + j] = psi[j];
    return p;
}

std::pair<TransportPlan, DualPotentials> solve_ot(const Vector& phi, const Vector& psi,
                                                  const Matrix& cost) {
    const std::size_t n = phi.size();
    const std::size_t m = psi.size();
    const LPProblem p = ot_to_lp(phi, psi, cost);
    const LPSolution sol = simplex_solve(p);
    if (sol.status != LPStatus::Optimal)
        throw NumericalError("solve_ot: simplex did not return an optimum");
    TransportPlan plan{Matrix(n, m), sol.objective};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) plan.pi(i, j) = std::max(sol.x[j * n + i], 0.0);
    // Dual constraint theta_i + theta_{n+j} <= c(i,j) reads p(j) - w(i) <= c
    // with w = -theta_src, p = theta_tgt.
    DualPotentials duals;
    duals.w = Vector(n);
    duals.p = Vector(m);
    for (std::size_t i = 0; i < n; ++i) duals.w[i] = -sol.theta[i];
    for (std::size_t j = 0; j < m; ++j) duals.p[j] = sol.theta[n + j];
    return {std::move(plan), std::move(duals)};
}

EquilibriumReport check_competitive_equilibrium(const Vector& w, const Vector& p,
                                                const Matrix& pi, const Matrix& cost,
                                                const Vector& phi, const Vector& psi,
                                                double tol) {
    const std::size_t n = phi.size();
    const std::size_t m = psi.size();
    if (pi.rows() != n || pi.cols() != m || cost.rows() != n || cost.cols() != m ||
        w.size() != n || p.size() != m)
        throw InvalidArgument("check_competitive_equilibrium: shape mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(row_sum(pi, i) - phi[i]) > tol)
            return {false, "(RE) source marginal " + std::to_string(i) + " off by " +
                               std::to_string(row_sum(pi, i) - phi[i])};
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (std::abs(col_sum(pi, j) - psi[j]) > tol)
            return {false, "(RE) target marginal " + std::to_string(j) + " off by " +
                               std::to_string(col_sum(pi, j) - psi[j])};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double margin = p[j] - w[i] - cost(i, j);
            if (margin > tol)
                return {false, "(NA) arbitrage on pair (" + std::to_string(i) + ", " +
                                   std::to_string(j) + "): margin " + std::to_string(margin)};
            if (pi(i, j) > tol && std::abs(margin) > tol)
                return {false, "(IC) active pair (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ") priced off cost by " +
                                   std::to_string(margin)};
        }
    return {true, ""};
}

Matrix incidence_matrix(const FlowNetwork& net) {
    const int n = net.graph.num_vertices();
    const auto& edges = net.graph.edges();
    Matrix a(n, edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        a(edges[k].tail, k) += 1.0;
        a(edges[k].head, k) -= 1.0;
    }
    return a;
}

FlowResult min_cost_flow(const FlowNetwork& net) {
    net.validate();
    if (!net.flow_mode()) throw InvalidArgument("min_cost_flow: supply/demand missing");
    const auto& edges = net.graph.edges();
    GeneralLP g;
    g.c = Vector(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) g.c[k] = edges[k].weight;
    g.A_eq = incidence_matrix(net);
    g.b_eq = vsub(net.supply, net.demand);
    if (!net.capacities.empty()) {
        g.bounds.assign(edges.size(), {0.0, kInf});
        for (const Edge& cap : net.capacities)
            for (std::size_t k = 0; k < edges.size(); ++k)
                if (edges[k].tail == cap.tail && edges[k].head == cap.head)
                    g.bounds[k].second = cap.weight;
    }
    const LPSolution sol = solve_general(g);
    FlowResult res{sol.status, {}, 0.0};
    if (sol.status == LPStatus::Optimal) {
        res.flow = sol.x;
        for (double& f : res.flow) f = std::max(f, 0.0);
        res.cost = sol.objective;
    }
    return res;
}

namespace {

// Shortest cost from every vertex to `target` over the (positively weighted)
// graph, via Dijkstra on the reversed graph.
Vector cost_to_target(const WeightedDigraph& g, int target) {
    const int n = g.num_vertices();
    Vector dist(n, kInf);
    dist[target] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, target});
    std::vector<bool> done(n, false);
    while (!pq.empty()) {
        const auto [dv, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = true;
        for (int k : g.in_edges(v)) {
            const Edge& e = g.edges()[k];
            if (dv + e.weight < dist[e.tail]) {
                dist[e.tail] = dv + e.weight;
                pq.push({dist[e.tail], e.tail});
            }
        }
    }
    return dist;
}

// Lexicographically smallest shortest path src -> target given exact
// cost-to-target values: greedily step to the smallest successor that stays
// on a shortest path.
std::vector<int> lex_shortest_path(const WeightedDigraph& g, int src, int target,
                                   const Vector& to_target) {
    std::vector<int> path{src};
    int u = src;
    const double eps = 1e-9;
    while (u != target) {
        int next = -1;
        for (int k : g.out_edges(u)) {
            const Edge& e = g.edges()[k];
            if (to_target[e.head] < kInf &&
                std::abs(e.weight + to_target[e.head] - to_target[u]) <= eps &&
                (next < 0 || e.head < next))
                next = e.head;
        }
        if (next < 0)
            throw NumericalError("flow_to_ot_reduction: path reconstruction failed");
        path.push_back(next);
        u = next;
    }
    return path;
}

}  // namespace

FlowOTReduction flow_to_ot_reduction(const FlowNetwork& net) {
    net.validate();
    if (!net.flow_mode())
        throw InvalidArgument("flow_to_ot_reduction: supply/demand missing");
    const int n = net.graph.num_vertices();
    FlowOTReduction red;
    for (int v = 0; v < n; ++v) {
        const double balance = net.supply[v] - net.demand[v];
        if (balance > 0.0) {
            red.suppliers.push_back(v);
            red.phi.push_back(balance);
        } else if (balance < 0.0) {
            red.consumers.push_back(v);
            red.psi.push_back(-balance);
        }
    }
    if (red.suppliers.empty())
        throw DegenerateInstance("flow_to_ot_reduction: no net suppliers");
    if (red.consumers.empty())
        throw DegenerateInstance("flow_to_ot_reduction: no net consumers");

    const std::size_t ns = red.suppliers.size();
    const std::size_t nc = red.consumers.size();
    red.cost = Matrix(ns, nc);
    red.paths.assign(ns, std::vector<std::vector<int>>(nc));
    red.has_unreachable = false;

    double max_cost = 0.0;
    std::vector<Vector> to_target(nc);
    for (std::size_t j = 0; j < nc; ++j) {
        to_target[j] = cost_to_target(net.graph, red.consumers[j]);
        for (std::size_t i = 0; i < ns; ++i) {
            const double c = to_target[j][red.suppliers[i]];
            if (c < kInf) max_cost = std::max(max_cost, c);
        }
    }
    const double big_m = 1e6 * std::max(max_cost, 1.0);
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            const double c = to_target[j][red.suppliers[i]];
            if (c == kInf) {
                red.cost(i, j) = big_m;
                red.has_unreachable = true;
            } else {
                red.cost(i, j) = c;
                red.paths[i][j] = lex_shortest_path(net.graph, red.suppliers[i],
                                                    red.consumers[j], to_target[j]);
            }
        }
    }

    auto [plan, duals] = solve_ot(red.phi, red.psi, red.cost);
    (void)duals;
    red.plan = std::move(plan);

    const auto& edges = net.graph.edges();
    red.edge_flows = Vector(edges.size(), 0.0);
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            const double mass = red.plan.pi(i, j);
            if (mass <= 1e-12 || red.paths[i][j].empty()) continue;
            const auto& path = red.paths[i][j];
            for (std::size_t s = 0; s + 1 < path.size(); ++s)
                for (std::size_t k = 0; k < edges.size(); ++k)
                    if (edges[k].tail == path[s] && edges[k].head == path[s + 1])
                        red.edge_flows[k] += mass;
        }
    }
    return red;
}

}  // namespace econet
