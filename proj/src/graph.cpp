#include "econet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stack>

namespace econet {

WeightedDigraph::WeightedDigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), out_(n), in_(n) {
    if (n < 0) throw InvalidArgument("WeightedDigraph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
            throw IndexError("WeightedDigraph: edge endpoint out of range");
        if (!(e.weight > 0.0))
            throw InvalidArgument("WeightedDigraph: edge weights must be strictly positive");
        if (!seen.insert({e.tail, e.head}).second)
            throw InvalidArgument("WeightedDigraph: duplicate edge (" +
                                  std::to_string(e.tail) + ", " + std::to_string(e.head) + ")");
        out_[e.tail].push_back(static_cast<int>(k));
        in_[e.head].push_back(static_cast<int>(k));
    }
}

bool WeightedDigraph::has_edge(int tail, int head) const { return weight(tail, head) > 0.0; }

double WeightedDigraph::weight(int tail, int head) const {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
        throw IndexError("WeightedDigraph::weight: vertex out of range");
    for (int k : out_[tail])
        if (edges_[k].head == head) return edges_[k].weight;
    return 0.0;
}

WeightedDigraph WeightedDigraph::reversed() const {
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const Edge& e : edges_) rev.push_back({e.head, e.tail, e.weight});
    return WeightedDigraph(n_, std::move(rev));
}

WeightedDigraph from_adjacency(const Matrix& a) {
    if (!a.square()) throw InvalidAdjacency("from_adjacency: matrix not square");
    if (!a.nonnegative()) throw InvalidAdjacency("from_adjacency: negative entry");
    const int n = static_cast<int>(a.rows());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) > 0.0) edges.push_back({i, j, a(i, j)});
    return WeightedDigraph(n, std::move(edges));
}

Matrix adjacency(const WeightedDigraph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    Matrix a(n, n);
    for (const Edge& e : g.edges()) a(e.tail, e.head) = e.weight;
    return a;
}

Matrix binarized_adjacency(const WeightedDigraph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    Matrix u(n, n);
    for (const Edge& e : g.edges()) u(e.tail, e.head) = 1.0;
    return u;
}

Vector degrees(const WeightedDigraph& g, Direction dir, bool weighted) {
    Vector d(g.num_vertices(), 0.0);
    for (const Edge& e : g.edges()) {
        const int v = (dir == Direction::Out) ? e.tail : e.head;
        d[v] += weighted ? e.weight : 1.0;
    }
    return d;
}

namespace {

// Iterative Tarjan SCC.
struct TarjanState {
    const WeightedDigraph& g;
    std::vector<int> index, lowlink, on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    explicit TarjanState(const WeightedDigraph& g)
        : g(g),
          index(g.num_vertices(), -1),
          lowlink(g.num_vertices(), 0),
          on_stack(g.num_vertices(), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            std::size_t edge_pos;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.out_edges(f.v);
            if (f.edge_pos < out.size()) {
                const int w = g.edges()[out[f.edge_pos++]].head;
                if (index[w] < 0) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
                const int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
            }
        }
    }
};

std::vector<int> reachable_from(const WeightedDigraph& g, const std::vector<int>& sources) {
    std::vector<int> visited(g.num_vertices(), 0);
    std::queue<int> q;
    for (int s : sources) {
        if (s < 0 || s >= g.num_vertices())
            throw IndexError("reachability: vertex out of range");
        if (!visited[s]) {
            visited[s] = 1;
            q.push(s);
        }
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int k : g.out_edges(v)) {
            const int w = g.edges()[k].head;
            if (!visited[w]) {
                visited[w] = 1;
                q.push(w);
            }
        }
    }
    return visited;
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const WeightedDigraph& g) {
    TarjanState st(g);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (st.index[v] < 0) st.run(v);
    std::sort(st.components.begin(), st.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return st.components;
}

bool is_strongly_connected(const WeightedDigraph& g) {
    if (g.num_vertices() == 0) return false;
    return strongly_connected_components(g).size() == 1;
}

bool is_irreducible(const Matrix& a) { return is_strongly_connected(from_adjacency(a)); }

bool is_aperiodic(const WeightedDigraph& g) {
    // The gcd of all cycle lengths, computed per strongly connected component
    // from BFS level differences: every intra-component edge (u, v) closes
    // cycles of length level(u) + 1 - level(v) modulo existing cycles.
    const auto sccs = strongly_connected_components(g);
    std::vector<int> comp_of(g.num_vertices(), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (int v : sccs[c]) comp_of[v] = static_cast<int>(c);

    long long gcd_all = 0;
    std::vector<int> level(g.num_vertices(), -1);
    for (const auto& comp : sccs) {
        bool has_internal_edge = false;
        for (int v : comp)
            for (int k : g.out_edges(v))
                if (comp_of[g.edges()[k].head] == comp_of[v]) has_internal_edge = true;
        if (!has_internal_edge) continue;  // singleton without self-loop: no cycles

        std::queue<int> q;
        level[comp.front()] = 0;
        q.push(comp.front());
        long long gcd_comp = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int k : g.out_edges(v)) {
                const int w = g.edges()[k].head;
                if (comp_of[w] != comp_of[v]) continue;
                if (level[w] < 0) {
                    level[w] = level[v] + 1;
                    q.push(w);
                } else {
                    gcd_comp = std::gcd(gcd_comp,
                                        static_cast<long long>(level[v] + 1 - level[w]));
                }
            }
        }
        gcd_all = std::gcd(gcd_all, gcd_comp);
    }
    if (gcd_all == 0) return false;  // no cycles anywhere: period undefined
    return gcd_all == 1;
}

bool is_primitive(const Matrix& a) {
    const WeightedDigraph g = from_adjacency(a);
    return is_strongly_connected(g) && is_aperiodic(g);
}

bool is_accessible(const WeightedDigraph& g, int u, int v) {
    if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices())
        throw IndexError("is_accessible: vertex out of range");
    if (u == v) return true;
    return reachable_from(g, {u})[v] != 0;
}

bool is_absorbing(const WeightedDigraph& g, const std::vector<int>& absorbing_set) {
    if (absorbing_set.empty()) throw InvalidArgument("is_absorbing: empty vertex set");
    const auto visited = reachable_from(g, absorbing_set);
    std::vector<int> in_set(g.num_vertices(), 0);
    for (int v : absorbing_set) in_set[v] = 1;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (visited[v] && !in_set[v]) return false;
    return true;
}

bool is_dag(const WeightedDigraph& g) {
    // Kahn's algorithm: a digraph is acyclic iff all vertices can be peeled.
    std::vector<int> indeg(g.num_vertices(), 0);
    for (const Edge& e : g.edges()) ++indeg[e.head];
    std::queue<int> q;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (indeg[v] == 0) q.push(v);
    int peeled = 0;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        ++peeled;
        for (int k : g.out_edges(v))
            if (--indeg[g.edges()[k].head] == 0) q.push(g.edges()[k].head);
    }
    return peeled == g.num_vertices();
}

}  // namespace econet
