#pragma once

#include <string>
#include <vector>

#include "econet/finance.hpp"
#include "econet/flows.hpp"
#include "econet/graph.hpp"
#include "econet/lp.hpp"
#include "econet/matrix.hpp"
#include "econet/production.hpp"

namespace econet {

/// 17-significant-digit formatting used for every numeric value the toolkit
/// writes, so reruns are byte-identical.
std::string format_number(double v);

struct GraphFile {
    WeightedDigraph graph;
    std::vector<std::string> labels;  // empty when absent
};

GraphFile read_graph_json(const std::string& path);
void write_graph_json(const std::string& path, const WeightedDigraph& g,
                      const std::vector<std::string>& labels = {});

/// Matrix CSV: plain rows, no header.
Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const Matrix& m);

/// Reads a matrix CSV and validates unit row sums to 1e-8; rows within the
/// tolerance are renormalized exactly, and a note is appended to `log` for
/// every adjusted row.
Matrix read_stochastic_csv(const std::string& path, std::vector<std::string>& log);

/// IOTable JSON: {"sectors": [...], "Z": [[...]], "x": [...], "d": [...]}.
IOTable read_io_json(const std::string& path, std::vector<std::string>& sectors);

/// Flow JSON extends graph JSON with supply/demand/capacity/destination.
FlowNetwork read_flow_json(const std::string& path);

/// Banking JSON: {"W": [[...]], "assets": [...], "liabilities": [...]}.
BankingSystem read_banking_json(const std::string& path);

/// Cross-holdings JSON: {"C": [[...]], "e": [...], "beta": ..., "theta": ...}.
CrossHoldings read_crossholdings_json(const std::string& path);

/// LP JSON: {"c", "A_eq", "b_eq", "A_ub", "b_ub", "bounds"} (all but c optional).
GeneralLP read_lp_json(const std::string& path);

/// FNV-1a digest of a file's bytes, hex-encoded; used in run manifests.
std::string content_digest(const std::string& path);

}  // namespace econet
