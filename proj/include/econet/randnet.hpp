#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "econet/graph.hpp"
#include "econet/markov.hpp"

namespace econet {

/// Log-log tail regression summary: slope estimates -alpha.
struct TailFit {
    double slope;
    double intercept;
    double r_squared;
    double tail_fraction;
};

/// Index i with q_{i-1} < u <= q_i, q the cumulative sums of phi.
/// Requires u in (0, 1]; never returns an index with phi(i) = 0.
int inverse_transform_sample(const Distribution& phi, double u);

/// Symmetric (each undirected link stored as two directed edges) unit-weight
/// Erdos-Renyi graph: every unordered pair included independently w.p. p.
WeightedDigraph erdos_renyi(int n, double p, std::uint64_t seed);

/// Preferential attachment from a complete m-vertex seed graph; each arrival
/// attaches to m distinct existing vertices sampled proportional to degree
/// (rejection sampling without replacement). Symmetric, unit weights.
WeightedDigraph barabasi_albert(int n, int m, std::uint64_t seed);

enum class DegreeKind { In, Out, Undirected };

/// phi(k) = fraction of vertices with degree k, support k = 0..n.
Distribution degree_distribution(const WeightedDigraph& g, DegreeKind kind);

/// OLS line through (log x, log Ghat(x)) over the top tail_fraction of the
/// sorted sample; needs at least 20 tail points.
TailFit empirical_ccdf_loglog(const Vector& samples, double tail_fraction);

/// Pareto(xbar, alpha) via inversion xbar * U^(-1/alpha), U in (0,1].
Vector pareto_sample(double xbar, double alpha, std::uint64_t seed, std::size_t n);
Vector lognormal_sample(double mu, double sigma, std::uint64_t seed, std::size_t n);
/// Zeta pmf proportional to k^(-gamma) over k = 1..k_max, normalized.
Distribution zeta_pmf(double gamma, int k_max);

/// H = sqrt(sum (S_i / Y)^2), Y = sum S_i. Always in [1/sqrt(n), 1].
double herfindahl(const Vector& sizes);

struct SizeSampler {
    std::string kind;  // pareto | lognormal
    double a = 0.0;    // xbar | mu
    double b = 0.0;    // alpha | sigma
};

/// Median over m replications of herfindahl on n sampled firm sizes.
/// Replication j uses the derived substream (seed, j).
double herfindahl_median_mc(const SizeSampler& sampler, std::size_t n, int m,
                            std::uint64_t seed);

}  // namespace econet
