#pragma once

#include <stdexcept>
#include <string>

namespace econet {

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidAdjacency : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg, long iterations = -1)
        : std::runtime_error(msg), iterations(iterations) {}
    long iterations;
};

// Raised when an operation requires r(A) < 1 and the input fails the check.
struct SpectralRadiusError : std::runtime_error {
    SpectralRadiusError(const std::string& msg, double radius)
        : std::runtime_error(msg), radius(radius) {}
    double radius;
};

struct AttenuationError : std::runtime_error {
    AttenuationError(const std::string& msg, double limit)
        : std::runtime_error(msg), limit(limit) {}
    double limit;  // 1 / r(A)
};

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero(const std::string& msg, int sector)
        : std::runtime_error(msg), sector(sector) {}
    int sector;
};

struct NonUniqueStationary : std::runtime_error {
    NonUniqueStationary(const std::string& msg, int sink_scc_count)
        : std::runtime_error(msg), sink_scc_count(sink_scc_count) {}
    int sink_scc_count;
};

struct NoConsensusCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MarginalMismatch : std::runtime_error {
    MarginalMismatch(const std::string& msg, double lhs, double rhs)
        : std::runtime_error(msg), lhs(lhs), rhs(rhs) {}
    double lhs, rhs;
};

struct UnreachableDestination : std::runtime_error {
    UnreachableDestination(const std::string& msg, int vertex)
        : std::runtime_error(msg), vertex(vertex) {}
    int vertex;
};

struct InvalidNetwork : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCrossHoldings : std::runtime_error {
    InvalidCrossHoldings(const std::string& msg, int column)
        : std::runtime_error(msg), column(column) {}
    int column;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace econet
