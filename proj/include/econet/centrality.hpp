#pragma once

#include <string>

#include "econet/graph.hpp"
#include "econet/matrix.hpp"

namespace econet {

enum class CentralityMode { Hub, Authority };

struct CentralityVector {
    Vector values;
    std::string measure;  // degree | eigenvector | katz | betweenness | pagerank
    CentralityMode mode;
};

/// Row sums (hub) or column sums (authority) of the raw or binarized adjacency.
CentralityVector degree_centrality(const WeightedDigraph& g, CentralityMode mode,
                                   bool weighted);

/// r(A)^{-m} A^m 1 (hub) or the transposed variant, normalized to sum 1.
/// Power-step count m defaults to 40.
CentralityVector eigenvector_centrality(const Matrix& a, CentralityMode mode,
                                        int power_steps = 40);

/// kappa = (I - beta A)^{-1} 1 (hub) or with A^T (authority).
/// Requires 0 < beta < 1/r(A); beta defaults to 1, valid when r(A) < 1.
CentralityVector katz_centrality(const Matrix& a, double beta, CentralityMode mode);

/// b(v) = sum over ordered pairs (x, y), x != y, both != v, of the fraction
/// of shortest x->y paths passing through v. Unreachable pairs contribute 0.
CentralityVector betweenness_centrality(const WeightedDigraph& g, bool weighted);

/// Stationary distribution of the Google matrix
/// G = delta P + (1 - delta) (1/n) 1 1^T, where P row-normalizes A and
/// dangling (all-zero) rows are replaced by uniform rows.
CentralityVector pagerank(const Matrix& a, double damping);

/// The Google matrix itself, exposed for Dobrushin-style diagnostics.
Matrix google_matrix(const Matrix& a, double damping);

}  // namespace econet
