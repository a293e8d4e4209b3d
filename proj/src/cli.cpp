#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "econet/centrality.hpp"
#include "econet/finance.hpp"
#include "econet/fixedpoint.hpp"
#include "econet/flows.hpp"
#include "econet/graph.hpp"
#include "econet/lp.hpp"
#include "econet/markov.hpp"
#include "econet/production.hpp"
#include "econet/randnet.hpp"
#include "econet/serialize.hpp"
#include "econet/spectral.hpp"

namespace {

using econet::format_number;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct RunContext {
    std::string out_dir = ".";
    std::string format = "json";
    std::string command;
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> input_digests;
    bool has_seed = false;
    std::uint64_t seed = 0;
};

json vector_json(const econet::Vector& v) {
    json a = json::array();
    for (double x : v) a.push_back(x);
    return a;
}

json matrix_json(const econet::Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        a.push_back(row);
    }
    return a;
}

void write_manifest(const RunContext& ctx) {
    json m;
    m["command"] = ctx.command;
    m["version"] = kVersion;
    m["inputs"] = json::object();
    for (const auto& [path, digest] : ctx.input_digests) m["inputs"][path] = digest;
    if (ctx.has_seed) m["seed"] = ctx.seed;
    m["params"] = json::object();
    for (const auto& [k, v] : ctx.params) m["params"][k] = v;
    std::ofstream out(ctx.out_dir + "/manifest.json");
    out << m.dump(2) << '\n';
}

void note_input(RunContext& ctx, const std::string& path) {
    ctx.input_digests[path] = econet::content_digest(path);
}

// Writes the result record (JSON always; CSV rows too when format=csv) and
// the manifest, and echoes the JSON to stdout.
void emit_result(const RunContext& ctx, const json& result,
                 const std::vector<std::vector<std::string>>& csv_rows = {}) {
    std::filesystem::create_directories(ctx.out_dir);
    {
        std::ofstream out(ctx.out_dir + "/result.json");
        out << result.dump(2) << '\n';
    }
    if (ctx.format == "csv" && !csv_rows.empty()) {
        std::ofstream out(ctx.out_dir + "/result.csv");
        for (const auto& row : csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << row[i];
            }
            out << '\n';
        }
    }
    write_manifest(ctx);
    std::cout << result.dump(2) << std::endl;
}

std::vector<std::vector<std::string>> vector_csv_rows(const econet::Vector& v,
                                                      const std::vector<std::string>& labels,
                                                      const std::string& value_name) {
    std::vector<std::vector<std::string>> rows{{"vertex", "label", value_name}};
    for (std::size_t i = 0; i < v.size(); ++i)
        rows.push_back({std::to_string(i), i < labels.size() ? labels[i] : "",
                        format_number(v[i])});
    return rows;
}

econet::Vector parse_list(const std::string& csv) {
    econet::Vector v;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
    return v;
}

void emit_plot_data(const std::string& kind, const std::vector<econet::Vector>& data,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw econet::InvalidArgument("cannot write file: " + path);
    if (kind == "ccdf") {
        for (const auto& row : data)
            if (row.size() != 2)
                throw econet::InvalidArgument("ccdf plot data needs (log_x, log_ccdf) rows");
        out << "log_x,log_ccdf\n";
    } else if (kind == "degree-hist") {
        for (const auto& row : data)
            if (row.size() != 2)
                throw econet::InvalidArgument("degree-hist plot data needs (degree, fraction)");
        out << "degree,fraction\n";
    } else if (kind == "shock-rounds") {
        out << "round";
        const std::size_t n = data.empty() ? 0 : data[0].size();
        for (std::size_t j = 0; j < n; ++j) out << ",sector_" << j;
        out << '\n';
        for (std::size_t k = 0; k < data.size(); ++k) {
            if (data[k].size() != n)
                throw econet::InvalidArgument("shock-rounds plot data has ragged rows");
            out << k;
            for (double x : data[k]) out << ',' << format_number(x);
            out << '\n';
        }
        return;
    } else if (kind == "convergence") {
        for (const auto& row : data)
            if (row.size() != 2)
                throw econet::InvalidArgument("convergence plot data needs (step, residual)");
        out << "step,residual\n";
    } else {
        throw econet::InvalidArgument("unknown plot kind: " + kind);
    }
    for (const auto& row : data) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_number(row[i]);
        }
        out << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"economic-network analysis toolkit"};
    app.require_subcommand(1);

    RunContext ctx;
    {
        std::ostringstream cmd;
        for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
        ctx.command = cmd.str();
    }
    app.add_option("--out", ctx.out_dir, "output directory")->capture_default_str();
    app.add_option("--format", ctx.format, "result format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // ---- graph ----------------------------------------------------------
    auto* graph_cmd = app.add_subcommand("graph", "graph structure queries");
    auto* graph_info = graph_cmd->add_subcommand("info", "connectivity summary");
    static std::string graph_file;
    graph_info->add_option("file", graph_file, "graph JSON")->required();
    graph_info->callback([&] {
        note_input(ctx, graph_file);
        const auto gf = econet::read_graph_json(graph_file);
        const econet::Matrix a = econet::adjacency(gf.graph);
        json r;
        r["n"] = gf.graph.num_vertices();
        r["edges"] = gf.graph.edges().size();
        r["strongly_connected"] = econet::is_strongly_connected(gf.graph);
        r["aperiodic"] = econet::is_aperiodic(gf.graph);
        r["primitive"] = econet::is_primitive(a);
        r["dag"] = econet::is_dag(gf.graph);
        r["scc"] = json::array();
        for (const auto& block : econet::strongly_connected_components(gf.graph))
            r["scc"].push_back(block);
        emit_result(ctx, r);
    });

    // ---- spectral -------------------------------------------------------
    auto* spectral_cmd = app.add_subcommand("spectral", "spectral radius machinery");
    static std::string spec_file;
    static int gelfand_k = 50;
    auto* spec_radius = spectral_cmd->add_subcommand("radius", "spectral radius");
    spec_radius->add_option("file", spec_file, "matrix CSV")->required();
    spec_radius->callback([&] {
        note_input(ctx, spec_file);
        const econet::Matrix a = econet::read_matrix_csv(spec_file);
        emit_result(ctx, json{{"radius", econet::spectral_radius(a)}});
    });
    auto* spec_bounds = spectral_cmd->add_subcommand("bounds", "row/column-sum bracket");
    spec_bounds->add_option("file", spec_file, "matrix CSV")->required();
    spec_bounds->callback([&] {
        note_input(ctx, spec_file);
        const auto [lo, hi] = econet::spectral_radius_bounds(econet::read_matrix_csv(spec_file));
        emit_result(ctx, json{{"lower", lo}, {"upper", hi}});
    });
    auto* spec_gelfand = spectral_cmd->add_subcommand("gelfand", "Gelfand sequence");
    spec_gelfand->add_option("file", spec_file, "matrix CSV")->required();
    spec_gelfand->add_option("--k", gelfand_k, "iterations")->capture_default_str();
    spec_gelfand->callback([&] {
        note_input(ctx, spec_file);
        ctx.params["k"] = std::to_string(gelfand_k);
        const econet::Vector seq = econet::gelfand_estimate(
            econet::read_matrix_csv(spec_file), econet::MatrixNormKind::L1, gelfand_k);
        emit_result(ctx, json{{"sequence", vector_json(seq)}, {"final", seq.back()}});
    });
    auto* spec_pair = spectral_cmd->add_subcommand("eigenpair", "dominant eigenpair");
    spec_pair->add_option("file", spec_file, "matrix CSV")->required();
    spec_pair->callback([&] {
        note_input(ctx, spec_file);
        const auto pair = econet::dominant_eigenpair(econet::read_matrix_csv(spec_file));
        emit_result(ctx, json{{"radius", pair.radius},
                              {"right", vector_json(pair.right)},
                              {"left", vector_json(pair.left)},
                              {"iterations", pair.iterations}});
    });

    // ---- centrality -----------------------------------------------------
    auto* cent_cmd = app.add_subcommand("centrality", "centrality measures");
    static std::string cent_measure, cent_file, cent_mode = "hub";
    static double cent_beta = 1.0, cent_damping = 0.85;
    static bool cent_weighted = false;
    cent_cmd->add_option("measure", cent_measure, "degree|eigenvector|katz|betweenness|pagerank")
        ->required()
        ->check(CLI::IsMember({"degree", "eigenvector", "katz", "betweenness", "pagerank"}));
    cent_cmd->add_option("file", cent_file, "graph JSON")->required();
    cent_cmd->add_option("--mode", cent_mode, "hub|authority")
        ->check(CLI::IsMember({"hub", "authority"}))
        ->capture_default_str();
    cent_cmd->add_option("--beta", cent_beta, "Katz attenuation")->capture_default_str();
    cent_cmd->add_option("--damping", cent_damping, "PageRank damping")->capture_default_str();
    cent_cmd->add_flag("--weighted", cent_weighted, "use edge weights");
    cent_cmd->callback([&] {
        note_input(ctx, cent_file);
        ctx.params["measure"] = cent_measure;
        ctx.params["mode"] = cent_mode;
        const auto gf = econet::read_graph_json(cent_file);
        const econet::Matrix a = cent_weighted ? econet::adjacency(gf.graph)
                                               : econet::binarized_adjacency(gf.graph);
        const econet::CentralityMode mode = (cent_mode == "hub")
                                                ? econet::CentralityMode::Hub
                                                : econet::CentralityMode::Authority;
        econet::CentralityVector cv{{}, "", mode};
        if (cent_measure == "degree")
            cv = econet::degree_centrality(gf.graph, mode, cent_weighted);
        else if (cent_measure == "eigenvector")
            cv = econet::eigenvector_centrality(a, mode);
        else if (cent_measure == "katz") {
            ctx.params["beta"] = format_number(cent_beta);
            cv = econet::katz_centrality(a, cent_beta, mode);
        } else if (cent_measure == "betweenness")
            cv = econet::betweenness_centrality(gf.graph, cent_weighted);
        else {
            ctx.params["damping"] = format_number(cent_damping);
            cv = econet::pagerank(a, cent_damping);
        }
        emit_result(ctx, json{{"measure", cv.measure}, {"mode", cent_mode},
                              {"values", vector_json(cv.values)}},
                    vector_csv_rows(cv.values, gf.labels, "value"));
    });

    // ---- randnet --------------------------------------------------------
    auto* rand_cmd = app.add_subcommand("randnet", "random graphs and tail diagnostics");
    static int rn_n = 0, rn_m = 0, rn_reps = 51;
    static double rn_p = 0.5, rn_a = 1.0, rn_b = 1.0, rn_tail = 0.1;
    static std::uint64_t rn_seed = 0;
    static std::string rn_sampler = "pareto", rn_plot;
    auto* rn_er = rand_cmd->add_subcommand("er", "Erdos-Renyi graph");
    rn_er->add_option("--n", rn_n)->required();
    rn_er->add_option("--p", rn_p)->required();
    rn_er->add_option("--seed", rn_seed)->required();
    rn_er->add_option("--degree-hist", rn_plot, "also write a degree histogram CSV");
    rn_er->callback([&] {
        ctx.has_seed = true;
        ctx.seed = rn_seed;
        ctx.params["n"] = std::to_string(rn_n);
        ctx.params["p"] = format_number(rn_p);
        const auto g = econet::erdos_renyi(rn_n, rn_p, rn_seed);
        std::filesystem::create_directories(ctx.out_dir);
        econet::write_graph_json(ctx.out_dir + "/graph.json", g);
        if (!rn_plot.empty()) {
            const auto phi = econet::degree_distribution(g, econet::DegreeKind::Undirected);
            std::vector<econet::Vector> rows;
            for (std::size_t k = 0; k < phi.size(); ++k)
                rows.push_back({static_cast<double>(k), phi[k]});
            emit_plot_data("degree-hist", rows, rn_plot);
        }
        emit_result(ctx, json{{"n", rn_n}, {"edges", g.edges().size()}});
    });
    auto* rn_ba = rand_cmd->add_subcommand("ba", "Barabasi-Albert graph");
    rn_ba->add_option("--n", rn_n)->required();
    rn_ba->add_option("--m", rn_m)->required();
    rn_ba->add_option("--seed", rn_seed)->required();
    rn_ba->callback([&] {
        ctx.has_seed = true;
        ctx.seed = rn_seed;
        ctx.params["n"] = std::to_string(rn_n);
        ctx.params["m"] = std::to_string(rn_m);
        const auto g = econet::barabasi_albert(rn_n, rn_m, rn_seed);
        std::filesystem::create_directories(ctx.out_dir);
        econet::write_graph_json(ctx.out_dir + "/graph.json", g);
        emit_result(ctx, json{{"n", rn_n}, {"edges", g.edges().size()}});
    });
    auto* rn_h = rand_cmd->add_subcommand("herfindahl-mc", "median Herfindahl index");
    rn_h->add_option("--sampler", rn_sampler)->check(CLI::IsMember({"pareto", "lognormal"}));
    rn_h->add_option("--xbar", rn_a, "Pareto scale / lognormal mu");
    rn_h->add_option("--alpha", rn_b, "Pareto tail index / lognormal sigma");
    rn_h->add_option("--n", rn_n, "firms per replication")->required();
    rn_h->add_option("--m", rn_reps, "replications")->capture_default_str();
    rn_h->add_option("--seed", rn_seed)->required();
    rn_h->callback([&] {
        ctx.has_seed = true;
        ctx.seed = rn_seed;
        ctx.params["sampler"] = rn_sampler;
        ctx.params["n"] = std::to_string(rn_n);
        ctx.params["m"] = std::to_string(rn_reps);
        const double median = econet::herfindahl_median_mc(
            {rn_sampler, rn_a, rn_b}, static_cast<std::size_t>(rn_n), rn_reps, rn_seed);
        emit_result(ctx, json{{"median", median},
                              {"replications", rn_reps},
                              {"params", {{"sampler", rn_sampler}, {"a", rn_a}, {"b", rn_b},
                                          {"n", rn_n}}}});
    });
    auto* rn_ccdf = rand_cmd->add_subcommand("ccdf", "log-log tail fit of sampled sizes");
    rn_ccdf->add_option("--sampler", rn_sampler)->check(CLI::IsMember({"pareto", "lognormal"}));
    rn_ccdf->add_option("--xbar", rn_a);
    rn_ccdf->add_option("--alpha", rn_b);
    rn_ccdf->add_option("--n", rn_n)->required();
    rn_ccdf->add_option("--tail", rn_tail)->capture_default_str();
    rn_ccdf->add_option("--seed", rn_seed)->required();
    rn_ccdf->add_option("--plot", rn_plot, "write (log_x, log_ccdf) CSV");
    rn_ccdf->callback([&] {
        ctx.has_seed = true;
        ctx.seed = rn_seed;
        const econet::Vector samples =
            (rn_sampler == "pareto")
                ? econet::pareto_sample(rn_a, rn_b, rn_seed, rn_n)
                : econet::lognormal_sample(rn_a, rn_b, rn_seed, rn_n);
        const auto fit = econet::empirical_ccdf_loglog(samples, rn_tail);
        if (!rn_plot.empty()) {
            econet::Vector sorted = samples;
            std::sort(sorted.begin(), sorted.end());
            std::vector<econet::Vector> rows;
            for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
                rows.push_back({std::log(sorted[i]),
                                std::log(static_cast<double>(sorted.size() - i - 1) /
                                         sorted.size())});
            emit_plot_data("ccdf", rows, rn_plot);
        }
        emit_result(ctx, json{{"slope", fit.slope}, {"intercept", fit.intercept},
                              {"r_squared", fit.r_squared},
                              {"tail_fraction", fit.tail_fraction}});
    });

    // ---- markov ---------------------------------------------------------
    auto* markov_cmd = app.add_subcommand("markov", "finite Markov chains");
    static std::string mk_file;
    static unsigned mk_T = 100, mk_k = 1;
    static std::uint64_t mk_seed = 0;
    auto* mk_stat = markov_cmd->add_subcommand("stationary", "unique stationary distribution");
    mk_stat->add_option("file", mk_file, "stochastic matrix CSV")->required();
    mk_stat->callback([&] {
        note_input(ctx, mk_file);
        std::vector<std::string> log;
        const econet::StochasticMatrix p(econet::read_stochastic_csv(mk_file, log));
        const auto psi = econet::stationary_distribution(p);
        json r{{"stationary", vector_json(psi.probs())}};
        if (!log.empty()) r["input_notes"] = log;
        emit_result(ctx, r, vector_csv_rows(psi.probs(), {}, "probability"));
    });
    auto* mk_sim = markov_cmd->add_subcommand("simulate", "sample a chain path");
    mk_sim->add_option("file", mk_file)->required();
    mk_sim->add_option("--T", mk_T)->capture_default_str();
    mk_sim->add_option("--seed", mk_seed)->required();
    mk_sim->callback([&] {
        note_input(ctx, mk_file);
        ctx.has_seed = true;
        ctx.seed = mk_seed;
        ctx.params["T"] = std::to_string(mk_T);
        std::vector<std::string> log;
        const econet::StochasticMatrix p(econet::read_stochastic_csv(mk_file, log));
        const auto path = econet::simulate_chain(p, econet::Distribution::uniform(p.size()),
                                                 mk_T, mk_seed);
        emit_result(ctx, json{{"path", path}});
    });
    auto* mk_dob = markov_cmd->add_subcommand("dobrushin", "Markov-Dobrushin coefficient");
    mk_dob->add_option("file", mk_file)->required();
    mk_dob->add_option("--k", mk_k)->capture_default_str();
    mk_dob->callback([&] {
        note_input(ctx, mk_file);
        ctx.params["k"] = std::to_string(mk_k);
        std::vector<std::string> log;
        const econet::StochasticMatrix p(econet::read_stochastic_csv(mk_file, log));
        emit_result(ctx, json{{"alpha", econet::dobrushin_coefficient(p, mk_k)}, {"k", mk_k}});
    });

    // ---- degroot --------------------------------------------------------
    auto* dg_cmd = app.add_subcommand("degroot", "DeGroot learning");
    static std::string dg_file, dg_b0;
    static unsigned dg_steps = 0;
    auto* dg_run = dg_cmd->add_subcommand("run", "iterate beliefs");
    dg_run->add_option("file", dg_file, "trust matrix CSV")->required();
    dg_run->add_option("--b0", dg_b0, "comma-separated initial beliefs")->required();
    dg_run->add_option("--steps", dg_steps, "0 = iterate to consensus")->capture_default_str();
    dg_run->callback([&] {
        note_input(ctx, dg_file);
        ctx.params["steps"] = std::to_string(dg_steps);
        std::vector<std::string> log;
        const econet::StochasticMatrix trust(econet::read_stochastic_csv(dg_file, log));
        const econet::Vector b0 = parse_list(dg_b0);
        if (dg_steps > 0) {
            emit_result(ctx,
                        json{{"beliefs", vector_json(econet::degroot(trust, b0, dg_steps))},
                             {"steps", dg_steps}});
        } else {
            const auto res = econet::degroot_consensus(trust, b0);
            emit_result(ctx, json{{"beliefs", vector_json(res.beliefs)},
                                  {"steps", res.steps}, {"consensus", true}});
        }
    });

    // ---- io -------------------------------------------------------------
    auto* io_cmd = app.add_subcommand("io", "Leontief input-output analysis");
    static std::string io_file, io_plot;
    static int io_rounds = 10;
    auto add_io_sub = [&](const char* name, const char* desc) {
        auto* sub = io_cmd->add_subcommand(name, desc);
        sub->add_option("file", io_file, "IO table JSON")->required();
        return sub;
    };
    auto* io_leon = add_io_sub("leontief", "Leontief inverse and equilibrium output");
    io_leon->callback([&] {
        note_input(ctx, io_file);
        std::vector<std::string> sectors;
        const econet::IOTable t = econet::read_io_json(io_file, sectors);
        const auto coef = econet::io_coefficients(t);
        const econet::Matrix l = econet::leontief_inverse(coef.A);
        json r{{"A", matrix_json(coef.A)}, {"L", matrix_json(l)}};
        if (!t.d.empty())
            r["equilibrium_output"] = vector_json(econet::equilibrium_output(coef.A, t.d));
        emit_result(ctx, r);
    });
    auto* io_shock = add_io_sub("shocks", "demand-shock propagation rounds");
    io_shock->add_option("--rounds", io_rounds)->capture_default_str();
    io_shock->add_option("--plot", io_plot, "write shock-rounds CSV");
    io_shock->callback([&] {
        note_input(ctx, io_file);
        ctx.params["rounds"] = std::to_string(io_rounds);
        std::vector<std::string> sectors;
        const econet::IOTable t = econet::read_io_json(io_file, sectors);
        if (t.d.empty())
            throw econet::InvalidArgument("io shocks: table needs a final-demand vector");
        const auto coef = econet::io_coefficients(t);
        const auto rounds = econet::shock_rounds(coef.A, t.d, io_rounds);
        if (!io_plot.empty()) emit_plot_data("shock-rounds", rounds, io_plot);
        json r;
        r["rounds"] = json::array();
        for (const auto& v : rounds) r["rounds"].push_back(vector_json(v));
        emit_result(ctx, r);
    });
    auto* io_mult = add_io_sub("multipliers", "output multipliers");
    io_mult->callback([&] {
        note_input(ctx, io_file);
        std::vector<std::string> sectors;
        const auto coef = econet::io_coefficients(econet::read_io_json(io_file, sectors));
        const auto mu = econet::output_multipliers(coef.A);
        emit_result(ctx, json{{"multipliers", vector_json(mu)}},
                    vector_csv_rows(mu, sectors, "multiplier"));
    });
    auto* io_up = add_io_sub("upstreamness", "Ghosh upstreamness");
    io_up->callback([&] {
        note_input(ctx, io_file);
        std::vector<std::string> sectors;
        const econet::IOTable t = econet::read_io_json(io_file, sectors);
        const auto u = econet::upstreamness(econet::ghosh_matrix(t));
        emit_result(ctx, json{{"upstreamness", vector_json(u)}},
                    vector_csv_rows(u, sectors, "upstreamness"));
    });
    auto* io_domar = add_io_sub("domar", "Domar weights");
    io_domar->callback([&] {
        note_input(ctx, io_file);
        std::vector<std::string> sectors;
        const auto coef = econet::io_coefficients(econet::read_io_json(io_file, sectors));
        const auto h = econet::domar_weights(coef.A);
        emit_result(ctx, json{{"domar", vector_json(h)}},
                    vector_csv_rows(h, sectors, "domar_weight"));
    });

    // ---- lp ---------------------------------------------------------------
    auto* lp_cmd = app.add_subcommand("lp", "linear programming");
    static std::string lp_file;
    auto* lp_solve = lp_cmd->add_subcommand("solve", "solve a general-form LP");
    lp_solve->add_option("file", lp_file, "LP JSON")->required();
    lp_solve->callback([&] {
        note_input(ctx, lp_file);
        const auto sol = econet::solve_general(econet::read_lp_json(lp_file));
        json r;
        switch (sol.status) {
            case econet::LPStatus::Optimal: r["status"] = "optimal"; break;
            case econet::LPStatus::Infeasible: r["status"] = "infeasible"; break;
            case econet::LPStatus::Unbounded: r["status"] = "unbounded"; break;
        }
        if (sol.status == econet::LPStatus::Optimal) {
            r["x"] = vector_json(sol.x);
            r["theta"] = vector_json(sol.theta);
            r["objective"] = sol.objective;
            r["pivots"] = sol.pivots;
        }
        emit_result(ctx, r);
    });

    // ---- flow -------------------------------------------------------------
    auto* flow_cmd = app.add_subcommand("flow", "network flow problems");
    static std::string fl_file;
    static double fl_beta = 1.0;
    auto* fl_spath = flow_cmd->add_subcommand("spath", "minimum cost-to-go");
    fl_spath->add_option("file", fl_file, "flow JSON with destination")->required();
    fl_spath->add_option("--beta", fl_beta, "discount in (0, 1]")->capture_default_str();
    fl_spath->callback([&] {
        note_input(ctx, fl_file);
        ctx.params["beta"] = format_number(fl_beta);
        const auto net = econet::read_flow_json(fl_file);
        const auto res = econet::min_cost_to_go(net, fl_beta);
        const auto sigma = econet::greedy_policy(res.q, net, fl_beta);
        emit_result(ctx, json{{"cost_to_go", vector_json(res.q)},
                              {"iterations", res.iterations}, {"policy", sigma}});
    });
    auto* fl_mc = flow_cmd->add_subcommand("mincost", "minimum cost flow");
    fl_mc->add_option("file", fl_file)->required();
    fl_mc->callback([&] {
        note_input(ctx, fl_file);
        const auto net = econet::read_flow_json(fl_file);
        const auto res = econet::min_cost_flow(net);
        json r{{"status", res.status == econet::LPStatus::Optimal ? "optimal"
                          : res.status == econet::LPStatus::Infeasible ? "infeasible"
                                                                        : "unbounded"}};
        if (res.status == econet::LPStatus::Optimal) {
            r["flow"] = vector_json(res.flow);
            r["cost"] = res.cost;
            r["edges"] = json::array();
            for (const auto& e : net.graph.edges()) r["edges"].push_back({e.tail, e.head});
        }
        emit_result(ctx, r);
    });
    auto* fl_red = flow_cmd->add_subcommand("reduce-ot", "flow-to-OT reduction");
    fl_red->add_option("file", fl_file)->required();
    fl_red->callback([&] {
        note_input(ctx, fl_file);
        const auto net = econet::read_flow_json(fl_file);
        const auto red = econet::flow_to_ot_reduction(net);
        emit_result(ctx, json{{"suppliers", red.suppliers}, {"consumers", red.consumers},
                              {"phi", vector_json(red.phi)}, {"psi", vector_json(red.psi)},
                              {"cost", matrix_json(red.cost)},
                              {"plan", matrix_json(red.plan.pi)},
                              {"total_cost", red.plan.cost},
                              {"edge_flows", vector_json(red.edge_flows)},
                              {"has_unreachable", red.has_unreachable}});
    });

    // ---- ot ----------------------------------------------------------------
    auto* ot_cmd = app.add_subcommand("ot", "optimal transport");
    static std::string ot_phi, ot_psi, ot_cost;
    auto* ot_solve = ot_cmd->add_subcommand("solve", "Kantorovich problem");
    ot_solve->add_option("--phi", ot_phi, "comma-separated source marginal")->required();
    ot_solve->add_option("--psi", ot_psi, "comma-separated target marginal")->required();
    ot_solve->add_option("--cost", ot_cost, "cost matrix CSV")->required();
    ot_solve->callback([&] {
        note_input(ctx, ot_cost);
        const auto [plan, duals] = econet::solve_ot(parse_list(ot_phi), parse_list(ot_psi),
                                                    econet::read_matrix_csv(ot_cost));
        emit_result(ctx, json{{"plan", matrix_json(plan.pi)}, {"cost", plan.cost},
                              {"w", vector_json(duals.w)}, {"p", vector_json(duals.p)}});
    });

    // ---- fin ---------------------------------------------------------------
    auto* fin_cmd = app.add_subcommand("fin", "financial contagion");
    static std::string fin_file, fin_from = "both", fin_start = "above";
    auto* fin_clear = fin_cmd->add_subcommand("clear", "Eisenberg-Noe clearing vector");
    fin_clear->add_option("file", fin_file, "banking JSON")->required();
    fin_clear->add_option("--from", fin_from)->check(CLI::IsMember({"below", "above", "both"}))
        ->capture_default_str();
    fin_clear->callback([&] {
        note_input(ctx, fin_file);
        ctx.params["from"] = fin_from;
        const auto sys = econet::read_banking_json(fin_file);
        const econet::Matrix pi = econet::relative_liabilities(sys);
        const econet::ClearingStart from = fin_from == "below" ? econet::ClearingStart::Below
                                           : fin_from == "above" ? econet::ClearingStart::Above
                                                                  : econet::ClearingStart::Both;
        const auto state = econet::solve_clearing(pi, sys.net_external(),
                                                  sys.total_liabilities(), from);
        json r{{"p", vector_json(state.p)}, {"iterations", state.iterations}};
        if (state.bracket_computed) {
            r["least"] = vector_json(state.least);
            r["greatest"] = vector_json(state.greatest);
        }
        emit_result(ctx, r);
    });
    auto* fin_cert = fin_cmd->add_subcommand("certify", "uniqueness certificate");
    fin_cert->add_option("file", fin_file)->required();
    fin_cert->callback([&] {
        note_input(ctx, fin_file);
        const auto cert = econet::uniqueness_certificate(econet::read_banking_json(fin_file));
        const char* names[] = {"spectral-radius", "weakly-chained", "dag", "cash-accessible",
                               "none"};
        emit_result(ctx, json{{"certificate", names[static_cast<int>(cert.kind)]},
                              {"detail", cert.detail}});
    });
    auto* fin_casc = fin_cmd->add_subcommand("cascade", "cross-holding failure cascade");
    fin_casc->add_option("file", fin_file, "cross-holdings JSON")->required();
    fin_casc->add_option("--start", fin_start)->check(CLI::IsMember({"above", "below"}))
        ->capture_default_str();
    fin_casc->callback([&] {
        note_input(ctx, fin_file);
        ctx.params["start"] = fin_start;
        const auto ch = econet::read_crossholdings_json(fin_file);
        const auto state = econet::cascade(ch, fin_start == "above"
                                                    ? econet::CascadeStart::Above
                                                    : econet::CascadeStart::Below);
        std::vector<int> failed(state.failed.begin(), state.failed.end());
        emit_result(ctx, json{{"v", vector_json(state.v)}, {"failed", failed},
                              {"waves", state.waves}, {"iterations", state.iterations}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 2;
    }
    return 0;
}

json error_record(const std::string& code, const std::string& message,
                  const std::string& context) {
    return json{{"code", code}, {"message", message}, {"context", context}};
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const econet::IndexError& e) {
        std::cerr << error_record("index", e.what(), "domain").dump() << std::endl;
    } catch (const econet::InvalidArgument& e) {
        std::cerr << error_record("invalid-argument", e.what(), "domain").dump() << std::endl;
    } catch (const std::runtime_error& e) {
        std::cerr << error_record("runtime", e.what(), "domain").dump() << std::endl;
    } catch (const std::exception& e) {
        std::cerr << error_record("internal", e.what(), "unexpected").dump() << std::endl;
        return 2;
    }
    return 1;
}
