#pragma once

#include <string>
#include <vector>

#include "econet/matrix.hpp"

namespace econet {

/// Interbank system: W[i][j] = liability of bank i to bank j, a = external
/// assets, dliab = external liabilities. Net external position e = a - dliab;
/// total interbank liability x_i = sum_j W[i][j].
struct BankingSystem {
    Matrix W;
    Vector a;
    Vector dliab;

    void validate() const;
    Vector total_liabilities() const;            // x
    Vector net_external() const;                 // e = a - dliab
};

/// Pi[i][j] = W[i][j] / x_i when x_i > 0, else 0. Substochastic.
Matrix relative_liabilities(const BankingSystem& sys);

enum class ClearingStart { Below, Above, Both };

struct ClearingState {
    Vector p;
    long iterations;
    bool bracket_computed;
    Vector least;     // filled when Both
    Vector greatest;  // filled when Both
};

/// Fixed point of T p = ((e + p Pi) ^ x) v 0 (p a row vector of payments).
/// Below iterates from 0 (least fixed point), Above from x (greatest), Both
/// returns the bracket; an equal bracket witnesses uniqueness.
ClearingState solve_clearing(const Matrix& pi, const Vector& e, const Vector& x,
                             ClearingStart from = ClearingStart::Both,
                             double tol = 1e-10, long max_iter = 1000000);

enum class UniquenessCertificate { SpectralRadius, WeaklyChained, DAG, CashAccessible, None };

struct CertificateResult {
    UniquenessCertificate kind;
    std::string detail;
};

/// Strongest applicable uniqueness certificate for the clearing problem.
CertificateResult uniqueness_certificate(const BankingSystem& sys);

/// Cross-holding structure: C[k][i] = fraction of firm i held by firm k
/// (column sums below 1), external assets e, failure cost beta, threshold
/// theta in (0, 1).
struct CrossHoldings {
    Matrix C;
    Vector e_assets;
    double beta;
    double theta;

    void validate() const;
    /// A = R (I - C)^{-1} with R = diag(1 - column sums of C).
    Matrix holdings_operator() const;
};

struct MarketValues {
    Vector v_bar;  // market values A e
    Vector book;   // book values (I - C)^{-1} e
};

MarketValues market_values(const CrossHoldings& ch);

enum class CascadeStart { Above, Below };

struct CascadeState {
    Vector v;
    std::vector<bool> failed;
    std::vector<int> waves;  // cumulative failure count after each sweep
    long iterations;
};

/// Iterates T v = A (e - f(v)), f_i(v) = beta 1{v_i < theta vbar_i}, from
/// v = vbar (above, greatest fixed point) or from A(e - beta 1) (below).
/// Terminates exactly once the failure set stabilizes.
CascadeState cascade(const CrossHoldings& ch, CascadeStart start = CascadeStart::Above);

/// True iff the valuation implied by the claimed failure set reproduces the
/// same failure indicator: 1{A(e - beta*failed) < theta vbar} = failed.
bool failure_set_consistency(const CrossHoldings& ch, const std::vector<bool>& failed);

}  // namespace econet
