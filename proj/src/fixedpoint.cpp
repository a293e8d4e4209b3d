#include "econet/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "econet/rng.hpp"
#include "econet/spectral.hpp"

namespace econet {

namespace {

double residual_norm(const Vector& v, ResidualNorm norm) {
    switch (norm) {
        case ResidualNorm::L1: return norm_l1(v);
        case ResidualNorm::L2: return norm_l2(v);
        default: return norm_linf(v);
    }
}

}  // namespace

IterationResult iterate(const VectorMap& map, const Vector& x0, ResidualNorm norm,
                        double tol, long max_iter) {
    Vector x = x0;
    double res = residual_norm(vsub(map(x), x), norm);
    if (res <= tol) return {std::move(x), res, 0, FPCertificate::None};
    for (long it = 1; it <= max_iter; ++it) {
        x = map(x);
        res = residual_norm(vsub(map(x), x), norm);
        if (res <= tol) return {std::move(x), res, it, FPCertificate::None};
    }
    throw NonConvergence("iterate: residual " + std::to_string(res) + " after " +
                             std::to_string(max_iter) + " iterations",
                         max_iter);
}

IterationResult monotone_iterate(const VectorMap& map, const Vector& bound,
                                 MonotoneDirection direction, double tol,
                                 long max_iter) {
    const bool below = direction == MonotoneDirection::Below;
    Vector x = bound;
    for (long it = 1; it <= max_iter; ++it) {
        Vector next = map(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double drift = below ? x[i] - next[i] : next[i] - x[i];
            if (drift > 1e-9)
                throw ContractViolation(
                    "monotone_iterate: iterate moved the wrong way at coordinate " +
                    std::to_string(i) + " (step " + std::to_string(it) + ")");
        }
        const double res = norm_linf(vsub(next, x));
        x = std::move(next);
        if (res <= tol)
            return {std::move(x), res, it,
                    below ? FPCertificate::MonotoneBelow : FPCertificate::MonotoneAbove};
    }
    throw NonConvergence("monotone_iterate: no fixed point within " +
                             std::to_string(max_iter) + " iterations",
                         max_iter);
}

std::pair<bool, double> eventual_contraction_certificate(const Matrix& a) {
    if (!a.nonnegative())
        throw InvalidArgument("eventual_contraction_certificate: negative entry");
    const double r = spectral_radius(a);
    return {r < 1.0 - 1e-10, r};
}

bool du_certificate(const VectorMap& map, const Vector& a, const Vector& b,
                    int probe_count, std::uint64_t seed) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidArgument("du_certificate: bound length mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > b[i]) throw InvalidArgument("du_certificate: empty order interval");

    Rng rng(seed);
    const double slack = 1e-9;
    for (int probe = 0; probe < probe_count; ++probe) {
        Vector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = a[i] + (b[i] - a[i]) * rng.uniform01();
            y[i] = a[i] + (b[i] - a[i]) * rng.uniform01();
        }
        const double lam = rng.uniform01();
        Vector mix(n);
        for (std::size_t i = 0; i < n; ++i) mix[i] = lam * x[i] + (1.0 - lam) * y[i];
        const Vector gmix = map(mix);
        const Vector gx = map(x);
        const Vector gy = map(y);
        for (std::size_t i = 0; i < n; ++i)
            if (gmix[i] < lam * gx[i] + (1.0 - lam) * gy[i] - slack) return false;
    }

    // G^k a >> a for some k <= n.
    Vector ga = a;
    for (std::size_t k = 1; k <= std::max<std::size_t>(n, 1); ++k) {
        ga = map(ga);
        bool strict = true;
        for (std::size_t i = 0; i < n; ++i)
            if (!(ga[i] > a[i])) strict = false;
        if (strict) return true;
    }
    return false;
}

}  // namespace econet
