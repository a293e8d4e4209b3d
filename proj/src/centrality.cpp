#include "econet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "econet/markov.hpp"
#include "econet/spectral.hpp"

namespace econet {

CentralityVector degree_centrality(const WeightedDigraph& g, CentralityMode mode,
                                   bool weighted) {
    const Direction dir = (mode == CentralityMode::Hub) ? Direction::Out : Direction::In;
    return {degrees(g, dir, weighted), "degree", mode};
}

CentralityVector eigenvector_centrality(const Matrix& a, CentralityMode mode,
                                        int power_steps) {
    if (!a.square()) throw InvalidArgument("eigenvector_centrality: matrix not square");
    if (!a.nonnegative()) throw InvalidArgument("eigenvector_centrality: negative entry");
    if (power_steps < 1) throw InvalidArgument("eigenvector_centrality: power_steps < 1");
    const Matrix m = (mode == CentralityMode::Hub) ? a : a.transpose();
    const double r = spectral_radius(m);
    if (r <= 0.0)
        throw DegenerateInput("eigenvector_centrality: zero spectral radius");
    Vector e(m.rows(), 1.0);
    for (int s = 0; s < power_steps; ++s) e = vscale(matvec(m, e), 1.0 / r);
    const double sum = norm_l1(e);
    if (sum == 0.0)
        throw DegenerateInput("eigenvector_centrality: iterate collapsed to zero");
    return {vscale(e, 1.0 / sum), "eigenvector", mode};
}

CentralityVector katz_centrality(const Matrix& a, double beta, CentralityMode mode) {
    if (!a.square()) throw InvalidArgument("katz_centrality: matrix not square");
    if (!a.nonnegative()) throw InvalidArgument("katz_centrality: negative entry");
    if (beta <= 0.0) throw InvalidArgument("katz_centrality: beta must be positive");
    const double r = spectral_radius(a);
    if (r > 0.0 && beta >= 1.0 / r)
        throw AttenuationError("katz_centrality: beta " + std::to_string(beta) +
                                   " >= 1/r(A) = " + std::to_string(1.0 / r),
                               1.0 / r);
    const Matrix m = (mode == CentralityMode::Hub) ? a : a.transpose();
    Vector kappa = solve_neumann(m * beta, Vector(m.rows(), 1.0));
    return {std::move(kappa), "katz", mode};
}

namespace {

struct ShortestPathCounts {
    Vector dist;        // +inf when unreachable
    Vector path_count;  // number of distinct shortest paths
};

ShortestPathCounts count_paths_bfs(const WeightedDigraph& g, int source) {
    const double inf = std::numeric_limits<double>::infinity();
    ShortestPathCounts r{Vector(g.num_vertices(), inf), Vector(g.num_vertices(), 0.0)};
    r.dist[source] = 0.0;
    r.path_count[source] = 1.0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int k : g.out_edges(v)) {
            const int w = g.edges()[k].head;
            if (r.dist[w] == inf) {
                r.dist[w] = r.dist[v] + 1.0;
                q.push(w);
            }
            if (r.dist[w] == r.dist[v] + 1.0) r.path_count[w] += r.path_count[v];
        }
    }
    return r;
}

ShortestPathCounts count_paths_dijkstra(const WeightedDigraph& g, int source) {
    const double inf = std::numeric_limits<double>::infinity();
    const double eps = 1e-12;
    ShortestPathCounts r{Vector(g.num_vertices(), inf), Vector(g.num_vertices(), 0.0)};
    r.dist[source] = 0.0;
    r.path_count[source] = 1.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, source});
    std::vector<bool> settled(g.num_vertices(), false);
    while (!pq.empty()) {
        const auto [d, v] = pq.top();
        pq.pop();
        if (settled[v]) continue;
        settled[v] = true;
        for (int k : g.out_edges(v)) {
            const Edge& e = g.edges()[k];
            const double nd = d + e.weight;
            if (nd < r.dist[e.head] - eps) {
                r.dist[e.head] = nd;
                r.path_count[e.head] = r.path_count[v];
                pq.push({nd, e.head});
            } else if (std::abs(nd - r.dist[e.head]) <= eps) {
                r.path_count[e.head] += r.path_count[v];
            }
        }
    }
    return r;
}

}  // namespace

CentralityVector betweenness_centrality(const WeightedDigraph& g, bool weighted) {
    const int n = g.num_vertices();
    std::vector<ShortestPathCounts> from(n);
    for (int s = 0; s < n; ++s)
        from[s] = weighted ? count_paths_dijkstra(g, s) : count_paths_bfs(g, s);
    const double eps = weighted ? 1e-9 : 0.0;
    Vector b(n, 0.0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || from[x].path_count[y] == 0.0) continue;
            const double dxy = from[x].dist[y];
            for (int v = 0; v < n; ++v) {
                if (v == x || v == y) continue;
                if (from[x].path_count[v] == 0.0 || from[v].path_count[y] == 0.0) continue;
                if (std::abs(from[x].dist[v] + from[v].dist[y] - dxy) <= eps)
                    b[v] += from[x].path_count[v] * from[v].path_count[y] /
                            from[x].path_count[y];
            }
        }
    }
    return {std::move(b), "betweenness", CentralityMode::Hub};
}

Matrix google_matrix(const Matrix& a, double damping) {
    if (!a.square()) throw InvalidArgument("google_matrix: matrix not square");
    if (!a.nonnegative()) throw InvalidArgument("google_matrix: negative entry");
    if (damping <= 0.0 || damping >= 1.0)
        throw InvalidArgument("google_matrix: damping must lie in (0, 1)");
    const std::size_t n = a.rows();
    if (n == 0) throw InvalidArgument("google_matrix: empty matrix");
    Matrix g(n, n);
    const double uniform = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double rs = row_sum(a, i);
        for (std::size_t j = 0; j < n; ++j) {
            const double pij = (rs > 0.0) ? a(i, j) / rs : uniform;  // dangling row
            g(i, j) = damping * pij + (1.0 - damping) * uniform;
        }
    }
    return g;
}

CentralityVector pagerank(const Matrix& a, double damping) {
    if (a.rows() == 1) return {Vector{1.0}, "pagerank", CentralityMode::Authority};
    const StochasticMatrix g(google_matrix(a, damping));
    Distribution psi = stationary_distribution(g);
    return {psi.probs(), "pagerank", CentralityMode::Authority};
}

}  // namespace econet
