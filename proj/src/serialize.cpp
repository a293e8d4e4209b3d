#include "econet/serialize.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace econet {

using nlohmann::json;

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InvalidArgument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

Vector to_vector(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidArgument(std::string(what) + ": expected an array");
    Vector v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) throw InvalidArgument(std::string(what) + ": non-numeric entry");
        v.push_back(x.get<double>());
    }
    return v;
}

Matrix to_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw InvalidArgument(std::string(what) + ": expected a nonempty 2-D array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw InvalidArgument(std::string(what) + ": ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
    }
    return m;
}

}  // namespace

GraphFile read_graph_json(const std::string& path) {
    const json j = load_json(path);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InvalidArgument("graph JSON: missing integer field 'n'");
    const int n = j["n"].get<int>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 3)
                throw InvalidArgument("graph JSON: each edge must be [tail, head, weight]");
            edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
        }
    }
    GraphFile gf{WeightedDigraph(n, std::move(edges)), {}};
    if (j.contains("labels")) {
        for (const auto& s : j["labels"]) gf.labels.push_back(s.get<std::string>());
        if (gf.labels.size() != static_cast<std::size_t>(n))
            throw InvalidArgument("graph JSON: labels length must equal n");
    }
    return gf;
}

void write_graph_json(const std::string& path, const WeightedDigraph& g,
                      const std::vector<std::string>& labels) {
    json j;
    j["n"] = g.num_vertices();
    j["edges"] = json::array();
    for (const Edge& e : g.edges()) j["edges"].push_back({e.tail, e.head, e.weight});
    if (!labels.empty()) j["labels"] = labels;
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

Matrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    std::vector<Vector> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Vector row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw InvalidArgument("matrix CSV: bad cell '" + cell + "' in " + path);
            }
        }
        if (!rows.empty() && row.size() != rows[0].size())
            throw InvalidArgument("matrix CSV: ragged rows in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidArgument("matrix CSV: empty file " + path);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < rows[0].size(); ++c) m(i, c) = rows[i][c];
    return m;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write file: " + path);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_number(m(i, j));
        }
        out << '\n';
    }
}

Matrix read_stochastic_csv(const std::string& path, std::vector<std::string>& log) {
    Matrix m = read_matrix_csv(path);
    if (!m.square()) throw InvalidArgument("stochastic CSV: matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double rs = row_sum(m, i);
        if (std::abs(rs - 1.0) > 1e-8)
            throw InvalidArgument("stochastic CSV: row " + std::to_string(i) +
                                  " sums to " + format_number(rs));
        if (rs != 1.0) {
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= rs;
            log.push_back("renormalized row " + std::to_string(i) + " (sum was " +
                          format_number(rs) + ")");
        }
    }
    return m;
}

IOTable read_io_json(const std::string& path, std::vector<std::string>& sectors) {
    const json j = load_json(path);
    if (!j.contains("Z") || !j.contains("x"))
        throw InvalidArgument("IO JSON: fields 'Z' and 'x' are required");
    IOTable t;
    t.Z = to_matrix(j["Z"], "IO JSON Z");
    t.x = to_vector(j["x"], "IO JSON x");
    if (j.contains("d")) t.d = to_vector(j["d"], "IO JSON d");
    sectors.clear();
    if (j.contains("sectors"))
        for (const auto& s : j["sectors"]) sectors.push_back(s.get<std::string>());
    t.validate();
    return t;
}

FlowNetwork read_flow_json(const std::string& path) {
    const json j = load_json(path);
    GraphFile gf = read_graph_json(path);
    FlowNetwork net{std::move(gf.graph)};
    if (j.contains("destination")) net.destination = j["destination"].get<int>();
    if (j.contains("supply")) net.supply = to_vector(j["supply"], "flow JSON supply");
    if (j.contains("demand")) net.demand = to_vector(j["demand"], "flow JSON demand");
    if (j.contains("capacity"))
        for (const auto& c : j["capacity"])
            net.capacities.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<double>()});
    net.validate();
    return net;
}

BankingSystem read_banking_json(const std::string& path) {
    const json j = load_json(path);
    BankingSystem sys;
    sys.W = to_matrix(j.at("W"), "banking JSON W");
    sys.a = to_vector(j.at("assets"), "banking JSON assets");
    sys.dliab = to_vector(j.at("liabilities"), "banking JSON liabilities");
    sys.validate();
    return sys;
}

CrossHoldings read_crossholdings_json(const std::string& path) {
    const json j = load_json(path);
    CrossHoldings ch;
    ch.C = to_matrix(j.at("C"), "cross-holdings JSON C");
    ch.e_assets = to_vector(j.at("e"), "cross-holdings JSON e");
    ch.beta = j.at("beta").get<double>();
    ch.theta = j.at("theta").get<double>();
    ch.validate();
    return ch;
}

GeneralLP read_lp_json(const std::string& path) {
    const json j = load_json(path);
    GeneralLP g;
    g.c = to_vector(j.at("c"), "LP JSON c");
    if (j.contains("A_eq")) {
        g.A_eq = to_matrix(j["A_eq"], "LP JSON A_eq");
        g.b_eq = to_vector(j.at("b_eq"), "LP JSON b_eq");
    }
    if (j.contains("A_ub")) {
        g.A_ub = to_matrix(j["A_ub"], "LP JSON A_ub");
        g.b_ub = to_vector(j.at("b_ub"), "LP JSON b_ub");
    }
    if (j.contains("bounds")) {
        for (const auto& b : j["bounds"]) {
            double lo = 0.0, hi = std::numeric_limits<double>::infinity();
            if (!b[0].is_null()) lo = b[0].get<double>();
            else lo = -std::numeric_limits<double>::infinity();
            if (!b[1].is_null()) hi = b[1].get<double>();
            g.bounds.emplace_back(lo, hi);
        }
    }
    return g;
}

std::string content_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace econet
