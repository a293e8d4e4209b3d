#include "econet/finance.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "econet/graph.hpp"
#include "econet/spectral.hpp"

namespace econet {

void BankingSystem::validate() const {
    if (!W.square()) throw InvalidArgument("BankingSystem: W must be square");
    const std::size_t n = W.rows();
    if (a.size() != n || dliab.size() != n)
        throw InvalidArgument("BankingSystem: asset/liability length mismatch");
    if (!W.nonnegative()) throw InvalidArgument("BankingSystem: negative entry in W");
    for (std::size_t i = 0; i < n; ++i) {
        if (W(i, i) != 0.0) throw InvalidArgument("BankingSystem: nonzero diagonal in W");
        if (a[i] < 0.0 || dliab[i] < 0.0)
            throw InvalidArgument("BankingSystem: external positions must be >= 0");
    }
}

Vector BankingSystem::total_liabilities() const {
    Vector x(W.rows());
    for (std::size_t i = 0; i < W.rows(); ++i) x[i] = row_sum(W, i);
    return x;
}

Vector BankingSystem::net_external() const { return vsub(a, dliab); }

Matrix relative_liabilities(const BankingSystem& sys) {
    sys.validate();
    const std::size_t n = sys.W.rows();
    const Vector x = sys.total_liabilities();
    Matrix pi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) pi(i, j) = sys.W(i, j) / x[i];
    }
    return pi;
}

namespace {

Vector clearing_step(const Matrix& pi, const Vector& e, const Vector& x, const Vector& p) {
    Vector next = vecmat(p, pi);
    for (std::size_t i = 0; i < p.size(); ++i)
        next[i] = std::max(std::min(e[i] + next[i], x[i]), 0.0);
    return next;
}

struct IterOutcome {
    Vector p;
    long iterations;
};

IterOutcome iterate_clearing(const Matrix& pi, const Vector& e, const Vector& x,
                             Vector p, double tol, long max_iter) {
    for (long it = 1; it <= max_iter; ++it) {
        Vector next = clearing_step(pi, e, x, p);
        const double gap = norm_linf(vsub(next, p));
        p = std::move(next);
        if (gap <= tol) return {std::move(p), it};
    }
    throw NumericalError("solve_clearing: residual " +
                             std::to_string(norm_linf(
                                 vsub(clearing_step(pi, e, x, p), p))) +
                             " after iteration budget",
                         max_iter);
}

}  // namespace

ClearingState solve_clearing(const Matrix& pi, const Vector& e, const Vector& x,
                             ClearingStart from, double tol, long max_iter) {
    const std::size_t n = pi.rows();
    if (!pi.square() || e.size() != n || x.size() != n)
        throw InvalidArgument("solve_clearing: dimension mismatch");
    if (!pi.nonnegative()) throw InvalidArgument("solve_clearing: negative entry in Pi");
    for (std::size_t i = 0; i < n; ++i) {
        if (row_sum(pi, i) > 1.0 + 1e-10)
            throw InvalidArgument("solve_clearing: Pi is not substochastic");
        if (x[i] < 0.0) throw InvalidArgument("solve_clearing: negative liability cap");
    }
    ClearingState state;
    state.bracket_computed = false;
    if (from == ClearingStart::Below) {
        auto out = iterate_clearing(pi, e, x, Vector(n, 0.0), tol, max_iter);
        state.p = std::move(out.p);
        state.iterations = out.iterations;
    } else if (from == ClearingStart::Above) {
        auto out = iterate_clearing(pi, e, x, x, tol, max_iter);
        state.p = std::move(out.p);
        state.iterations = out.iterations;
    } else {
        auto lo = iterate_clearing(pi, e, x, Vector(n, 0.0), tol, max_iter);
        auto hi = iterate_clearing(pi, e, x, x, tol, max_iter);
        state.least = std::move(lo.p);
        state.greatest = std::move(hi.p);
        state.p = state.least;
        state.iterations = std::max(lo.iterations, hi.iterations);
        state.bracket_computed = true;
    }
    return state;
}

CertificateResult uniqueness_certificate(const BankingSystem& sys) {
    sys.validate();
    const Matrix pi = relative_liabilities(sys);
    const std::size_t n = pi.rows();
    const WeightedDigraph g = from_adjacency(pi);

    if (is_dag(g)) return {UniquenessCertificate::DAG, "liability graph has no cycles"};

    // Weakly chained: every bank reaches one with a strictly deficient row.
    {
        std::vector<bool> reach(n, false);
        std::queue<int> q;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_sum(pi, i) < 1.0 - 1e-12) {
                reach[i] = true;
                q.push(static_cast<int>(i));
            }
        }
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int k : g.in_edges(v)) {
                const int u = g.edges()[k].tail;
                if (!reach[u]) {
                    reach[u] = true;
                    q.push(u);
                }
            }
        }
        if (std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }))
            return {UniquenessCertificate::WeaklyChained,
                    "every bank reaches a strictly deficient row"};
    }

    const double r = spectral_radius(pi);
    if (r < 1.0 - 1e-10)
        return {UniquenessCertificate::SpectralRadius,
                "r(Pi) = " + std::to_string(r)};

    // Cash accessible route: Pi stochastic, e >= 0, and every bank sits
    // downstream of one with strictly positive net external assets.
    const Vector e = sys.net_external();
    bool stochastic = true;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(row_sum(pi, i) - 1.0) > 1e-10) stochastic = false;
    bool e_ok = std::all_of(e.begin(), e.end(), [](double v) { return v >= 0.0; });
    if (stochastic && e_ok) {
        std::vector<bool> cash(n, false);
        std::queue<int> q;
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] > 0.0) {
                cash[i] = true;
                q.push(static_cast<int>(i));
            }
        }
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int k : g.out_edges(v)) {
                const int w = g.edges()[k].head;
                if (!cash[w]) {
                    cash[w] = true;
                    q.push(w);
                }
            }
        }
        if (std::all_of(cash.begin(), cash.end(), [](bool b) { return b; }))
            return {UniquenessCertificate::CashAccessible,
                    "every bank is downstream of positive net external assets"};
    }
    return {UniquenessCertificate::None, "no uniqueness certificate applies"};
}

void CrossHoldings::validate() const {
    if (!C.square()) throw InvalidArgument("CrossHoldings: C must be square");
    const std::size_t n = C.rows();
    if (e_assets.size() != n) throw InvalidArgument("CrossHoldings: e length mismatch");
    if (!(beta > 0.0)) throw InvalidArgument("CrossHoldings: beta must be positive");
    if (!(theta > 0.0) || !(theta < 1.0))
        throw InvalidArgument("CrossHoldings: theta must lie in (0, 1)");
    for (std::size_t i = 0; i < n; ++i) {
        if (C(i, i) != 0.0) throw InvalidArgument("CrossHoldings: nonzero diagonal");
        if (e_assets[i] < 0.0) throw InvalidArgument("CrossHoldings: negative assets");
        for (std::size_t j = 0; j < n; ++j)
            if (C(i, j) < 0.0 || C(i, j) > 1.0)
                throw InvalidArgument("CrossHoldings: holdings must lie in [0, 1]");
    }
    for (std::size_t j = 0; j < n; ++j)
        if (col_sum(C, j) >= 1.0)
            throw InvalidCrossHoldings("CrossHoldings: column " + std::to_string(j) +
                                           " of C sums to " + std::to_string(col_sum(C, j)),
                                       static_cast<int>(j));
}

Matrix CrossHoldings::holdings_operator() const {
    validate();
    const std::size_t n = C.rows();
    Matrix m = Matrix::identity(n);
    m -= C;
    Matrix inv = inverse(m);
    // A = R (I - C)^{-1}, R = diag of outside-ownership shares.
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = 1.0 - col_sum(C, i);
        for (std::size_t j = 0; j < n; ++j) a(i, j) = r * inv(i, j);
    }
    return a;
}

MarketValues market_values(const CrossHoldings& ch) {
    ch.validate();
    const std::size_t n = ch.C.rows();
    Matrix m = Matrix::identity(n);
    m -= ch.C;
    MarketValues mv;
    mv.book = solve(m, ch.e_assets);
    mv.v_bar = Vector(n);
    for (std::size_t i = 0; i < n; ++i)
        mv.v_bar[i] = (1.0 - col_sum(ch.C, i)) * mv.book[i];
    return mv;
}

namespace {

Vector cascade_value(const CrossHoldings& ch, const Matrix& a,
                     const std::vector<bool>& failed) {
    Vector hit = ch.e_assets;
    for (std::size_t i = 0; i < hit.size(); ++i)
        if (failed[i]) hit[i] -= ch.beta;
    return matvec(a, hit);
}

}  // namespace

CascadeState cascade(const CrossHoldings& ch, CascadeStart start) {
    ch.validate();
    const std::size_t n = ch.C.rows();
    const Matrix a = ch.holdings_operator();
    const Vector v_bar = matvec(a, ch.e_assets);

    CascadeState state;
    state.failed.assign(n, start == CascadeStart::Below);
    state.v = cascade_value(ch, a, state.failed);
    state.iterations = 0;
    const long cap = static_cast<long>(n) + 2;
    for (long sweep = 0; sweep <= cap; ++sweep) {
        std::vector<bool> next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = state.v[i] < ch.theta * v_bar[i];
        ++state.iterations;
        state.v = cascade_value(ch, a, next);
        int count = 0;
        for (bool f : next) count += f;
        state.waves.push_back(count);
        if (next == state.failed) return state;
        state.failed = std::move(next);
    }
    throw NumericalError("cascade: failure set did not stabilize", state.iterations);
}

bool failure_set_consistency(const CrossHoldings& ch, const std::vector<bool>& failed) {
    ch.validate();
    if (failed.size() != ch.C.rows())
        throw InvalidArgument("failure_set_consistency: indicator length mismatch");
    const Matrix a = ch.holdings_operator();
    const Vector v_bar = matvec(a, ch.e_assets);
    const Vector v = cascade_value(ch, a, failed);
    for (std::size_t i = 0; i < failed.size(); ++i)
        if ((v[i] < ch.theta * v_bar[i]) != failed[i]) return false;
    return true;
}

}  // namespace econet
