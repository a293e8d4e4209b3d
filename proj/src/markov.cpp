#include "econet/markov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "econet/rng.hpp"

namespace econet {

Distribution::Distribution(Vector probs, double tol) : probs_(std::move(probs)) {
    double sum = 0.0;
    for (double p : probs_) {
        if (p < 0.0) throw InvalidArgument("Distribution: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol)
        throw InvalidArgument("Distribution: probabilities sum to " + std::to_string(sum) +
                              ", expected 1 within " + std::to_string(tol));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t x) {
    if (x >= n) throw IndexError("Distribution::point_mass: index out of range");
    Vector v(n, 0.0);
    v[x] = 1.0;
    return Distribution(std::move(v));
}

Distribution Distribution::uniform(std::size_t n) {
    if (n == 0) throw InvalidArgument("Distribution::uniform: empty support");
    return Distribution(Vector(n, 1.0 / static_cast<double>(n)));
}

double l1_distance(const Vector& a, const Vector& b) { return norm_l1(vsub(a, b)); }

StochasticMatrix::StochasticMatrix(Matrix p, double tol) : p_(std::move(p)) {
    if (!p_.square()) throw InvalidArgument("StochasticMatrix: matrix not square");
    for (std::size_t i = 0; i < p_.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < p_.cols(); ++j) {
            if (p_(i, j) < 0.0)
                throw InvalidArgument("StochasticMatrix: negative entry at row " +
                                      std::to_string(i));
            sum += p_(i, j);
        }
        if (std::abs(sum - 1.0) > tol)
            throw InvalidArgument("StochasticMatrix: row " + std::to_string(i) +
                                  " sums to " + std::to_string(sum));
    }
}

MarkovModel::MarkovModel(StochasticMatrix p)
    : matrix(std::move(p)), graph(from_adjacency(matrix.matrix())) {}

StochasticMatrix k_step(const StochasticMatrix& p, unsigned k) {
    // Powers of a stochastic matrix stay stochastic; loosen the row-sum
    // tolerance slightly to absorb accumulated rounding.
    return StochasticMatrix(matpow(p.matrix(), k), 1e-9 * (1.0 + k));
}

Distribution update_marginal(const Distribution& psi, const StochasticMatrix& p, unsigned t) {
    if (psi.size() != p.size()) throw InvalidArgument("update_marginal: size mismatch");
    Vector v = psi.probs();
    for (unsigned s = 0; s < t; ++s) v = vecmat(v, p.matrix());
    // Renormalize rounding drift before revalidating.
    const double sum = norm_l1(v);
    if (sum > 0.0)
        for (double& x : v) x /= sum;
    return Distribution(std::move(v));
}

namespace {

int sample_index(const Vector& probs, double u) {
    // Inverse transform: the index i with q_{i-1} < u <= q_i.
    double cum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cum += probs[i];
        if (u <= cum && probs[i] > 0.0) return static_cast<int>(i);
    }
    // Rounding pushed u past the final cumulative sum; return last support point.
    for (std::size_t i = probs.size(); i-- > 0;)
        if (probs[i] > 0.0) return static_cast<int>(i);
    throw InvalidArgument("sample_index: zero distribution");
}

}  // namespace

std::vector<int> simulate_chain(const StochasticMatrix& p, const Distribution& psi0,
                                unsigned T, std::uint64_t seed) {
    if (psi0.size() != p.size()) throw InvalidArgument("simulate_chain: size mismatch");
    Rng rng(seed);
    std::vector<int> path;
    path.reserve(T + 1);
    int x = sample_index(psi0.probs(), rng.uniform_open_closed());
    path.push_back(x);
    Vector row(p.size());
    for (unsigned t = 0; t < T; ++t) {
        for (std::size_t j = 0; j < p.size(); ++j) row[j] = p(x, j);
        x = sample_index(row, rng.uniform_open_closed());
        path.push_back(x);
    }
    return path;
}

int sink_scc_count(const WeightedDigraph& g) {
    const auto sccs = strongly_connected_components(g);
    std::vector<int> comp_of(g.num_vertices(), -1);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (int v : sccs[c]) comp_of[v] = static_cast<int>(c);
    std::vector<bool> closed(sccs.size(), true);
    for (const Edge& e : g.edges())
        if (comp_of[e.tail] != comp_of[e.head]) closed[comp_of[e.tail]] = false;
    return static_cast<int>(std::count(closed.begin(), closed.end(), true));
}

Distribution stationary_distribution(const StochasticMatrix& p) {
    const std::size_t n = p.size();
    // psi (I - P + 11^T) = 1, transposed into a standard linear solve.
    Matrix m = Matrix::identity(n);
    m -= p.matrix();
    m += Matrix::ones(n, n);
    Vector psi;
    try {
        psi = solve(m.transpose(), Vector(n, 1.0));
    } catch (const NumericalError&) {
        const MarkovModel model{p};
        throw NonUniqueStationary(
            "stationary_distribution: singular system; the chain has " +
                std::to_string(sink_scc_count(model.graph)) +
                " closed communicating classes",
            sink_scc_count(model.graph));
    }
    // Guard against a numerically nonsingular system for a chain that is in
    // fact not uniquely ergodic (e.g. block-diagonal P with tiny coupling).
    const Vector residual = vsub(vecmat(psi, p.matrix()), psi);
    if (norm_linf(residual) > 1e-9)
        throw NumericalError("stationary_distribution: residual " +
                             std::to_string(norm_linf(residual)) + " exceeds 1e-9");
    double sum = 0.0;
    for (double& x : psi) {
        x = std::max(x, 0.0);
        sum += x;
    }
    for (double& x : psi) x /= sum;
    return Distribution(std::move(psi), 1e-9);
}

bool is_ergodic(const MarkovModel& model) { return sink_scc_count(model.graph) == 1; }

double dobrushin_coefficient(const StochasticMatrix& p, unsigned k) {
    if (k < 1) throw InvalidArgument("dobrushin_coefficient: k must be >= 1");
    const Matrix pk = matpow(p.matrix(), k);
    const std::size_t n = pk.rows();
    if (n <= 1) return 1.0;
    double alpha = 1.0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t xp = x + 1; xp < n; ++xp) {
            double overlap = 0.0;
            for (std::size_t y = 0; y < n; ++y) overlap += std::min(pk(x, y), pk(xp, y));
            alpha = std::min(alpha, overlap);
        }
    }
    return alpha;
}

double stability_bound(const StochasticMatrix& p, unsigned k, unsigned t) {
    if (k < 1 || t < 1) throw InvalidArgument("stability_bound: k, t must be >= 1");
    const double alpha = dobrushin_coefficient(p, k);
    return 2.0 * std::pow(1.0 - alpha, static_cast<double>(t / k));
}

double ergodic_average(const StochasticMatrix& p, const Vector& h, const Distribution& psi0,
                       unsigned T, std::uint64_t seed) {
    if (h.size() != p.size()) throw InvalidArgument("ergodic_average: size mismatch");
    if (T == 0) throw InvalidArgument("ergodic_average: T must be >= 1");
    const auto path = simulate_chain(p, psi0, T - 1, seed);
    double sum = 0.0;
    for (int x : path) sum += h[x];
    return sum / static_cast<double>(T);
}

Vector degroot(const StochasticMatrix& trust, const Vector& b0, unsigned t) {
    if (b0.size() != trust.size()) throw InvalidArgument("degroot: size mismatch");
    for (double b : b0)
        if (b < 0.0 || b > 1.0)
            throw InvalidArgument("degroot: beliefs must lie in [0, 1]");
    Vector b = b0;
    for (unsigned s = 0; s < t; ++s) b = matvec(trust.matrix(), b);
    return b;
}

ConsensusResult degroot_consensus(const StochasticMatrix& trust, const Vector& b0,
                                  double tol, long max_iter) {
    const std::size_t n = trust.size();
    if (b0.size() != n) throw InvalidArgument("degroot_consensus: size mismatch");
    bool certified = false;
    for (unsigned k = 1; k <= n; ++k) {
        if (dobrushin_coefficient(trust, k) > 0.0) {
            certified = true;
            break;
        }
    }
    if (!certified)
        throw NoConsensusCertificate(
            "degroot_consensus: alpha(T^k) = 0 for all k <= n; consensus not certified");
    Vector b = b0;
    for (long it = 0; it <= max_iter; ++it) {
        const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
        if (*hi - *lo < tol) return {b, it};
        b = matvec(trust.matrix(), b);
    }
    throw NonConvergence("degroot_consensus: no consensus after " +
                         std::to_string(max_iter) + " iterations");
}

}  // namespace econet
