#pragma once

#include <cstdint>
#include <vector>

#include "econet/graph.hpp"
#include "econet/matrix.hpp"

namespace econet {

/// Nonnegative vector summing to one over an indexed finite set.
class Distribution {
  public:
    explicit Distribution(Vector probs, double tol = 1e-12);
    static Distribution point_mass(std::size_t n, std::size_t x);
    static Distribution uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const Vector& probs() const { return probs_; }

  private:
    Vector probs_;
};

/// l1 deviation between two distributions (or arbitrary equal-length vectors).
double l1_distance(const Vector& a, const Vector& b);

/// Square nonnegative matrix with unit row sums (tolerance 1e-10).
class StochasticMatrix {
  public:
    explicit StochasticMatrix(Matrix p, double tol = 1e-10);

    std::size_t size() const { return p_.rows(); }
    const Matrix& matrix() const { return p_; }
    double operator()(std::size_t i, std::size_t j) const { return p_(i, j); }

  private:
    Matrix p_;
};

/// A stochastic matrix together with its support digraph.
struct MarkovModel {
    StochasticMatrix matrix;
    WeightedDigraph graph;

    explicit MarkovModel(StochasticMatrix p);
};

StochasticMatrix k_step(const StochasticMatrix& p, unsigned k);

Distribution update_marginal(const Distribution& psi, const StochasticMatrix& p, unsigned t);

/// Simulates X_0 ~ psi0, X_{t+1} ~ P(X_t, .), one uniform draw per step.
std::vector<int> simulate_chain(const StochasticMatrix& p, const Distribution& psi0,
                                unsigned T, std::uint64_t seed);

/// Unique stationary distribution via the linear system 1 = psi (I - P + 11^T).
/// Throws NonUniqueStationary (with the sink-SCC count) when the chain has
/// more than one closed communicating class.
Distribution stationary_distribution(const StochasticMatrix& p);

/// True iff the SCC condensation has exactly one closed (sink) class.
bool is_ergodic(const MarkovModel& model);
int sink_scc_count(const WeightedDigraph& g);

/// Markov-Dobrushin coefficient of P^k: the minimum row-pair overlap.
double dobrushin_coefficient(const StochasticMatrix& p, unsigned k = 1);

/// Upper bound 2 (1 - alpha(P^k))^floor(t/k) on rho(psi P^t, psi*).
double stability_bound(const StochasticMatrix& p, unsigned k, unsigned t);

/// Time average (1/T) sum h(X_t) along a simulated path.
double ergodic_average(const StochasticMatrix& p, const Vector& h, const Distribution& psi0,
                       unsigned T, std::uint64_t seed);

/// DeGroot belief update: b_t = T^t b0.
Vector degroot(const StochasticMatrix& trust, const Vector& b0, unsigned t);

struct ConsensusResult {
    Vector beliefs;
    long steps;
};

/// Iterates beliefs until the max pairwise gap is below tol. Requires a
/// consensus certificate: alpha(T^k) > 0 for some k <= n.
ConsensusResult degroot_consensus(const StochasticMatrix& trust, const Vector& b0,
                                  double tol = 1e-8, long max_iter = 1000000);

}  // namespace econet
