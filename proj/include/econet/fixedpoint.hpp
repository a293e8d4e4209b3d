#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "econet/matrix.hpp"

namespace econet {

using VectorMap = std::function<Vector(const Vector&)>;

enum class FPCertificate { Contraction, EventualContraction, MonotoneBelow, MonotoneAbove, None };

enum class ResidualNorm { L1, L2, Linf };

struct IterationResult {
    Vector point;
    double residual;
    long iterations;
    FPCertificate certificate;
};

/// Picard iteration x <- F(x) until ||F(x) - x|| <= tol in the chosen norm.
IterationResult iterate(const VectorMap& map, const Vector& x0,
                        ResidualNorm norm = ResidualNorm::Linf, double tol = 1e-10,
                        long max_iter = 100000);

enum class MonotoneDirection { Below, Above };

/// Iterates an order-preserving self-map of [a, b] from the chosen endpoint;
/// the limit is the least (from a) or greatest (from b) fixed point. A
/// non-monotone iterate step violates the caller's contract and is reported.
IterationResult monotone_iterate(const VectorMap& map, const Vector& bound,
                                 MonotoneDirection direction, double tol = 1e-10,
                                 long max_iter = 1000000);

/// True plus r(A) when r(A) < 1 - 1e-10: any map with |Fx - Fy| <= A|x - y|
/// entrywise is then globally stable.
std::pair<bool, double> eventual_contraction_certificate(const Matrix& a);

/// Sampled sufficient conditions for global stability on [a, b]: concavity
/// G(lx + (1-l)y) >= l Gx + (1-l) Gy on probe_count random triples, plus
/// G^k a >> a for some k <= n. Probabilistic — a gate, not a proof.
bool du_certificate(const VectorMap& map, const Vector& a, const Vector& b,
                    int probe_count = 200, std::uint64_t seed = 1);

}  // namespace econet
