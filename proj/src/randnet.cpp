#include "econet/randnet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "econet/rng.hpp"

namespace econet {

int inverse_transform_sample(const Distribution& phi, double u) {
    if (!(u > 0.0) || u > 1.0)
        throw InvalidArgument("inverse_transform_sample: u must lie in (0, 1]");
    double cum = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        cum += phi[i];
        if (u <= cum && phi[i] > 0.0) return static_cast<int>(i);
    }
    for (std::size_t i = phi.size(); i-- > 0;)
        if (phi[i] > 0.0) return static_cast<int>(i);
    throw InvalidArgument("inverse_transform_sample: zero distribution");
}

WeightedDigraph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InvalidArgument("erdos_renyi: n must be >= 1");
    if (!(p > 0.0) || !(p < 1.0)) throw InvalidArgument("erdos_renyi: p must lie in (0, 1)");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.uniform01() < p) {
                edges.push_back({i, j, 1.0});
                edges.push_back({j, i, 1.0});
            }
        }
    }
    return WeightedDigraph(n, std::move(edges));
}

WeightedDigraph barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1) throw InvalidArgument("barabasi_albert: m must be >= 1");
    if (n <= m) throw InvalidArgument("barabasi_albert: need n > m");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<int> degree(n, 0);
    long total_degree = 0;
    auto link = [&](int u, int v) {
        edges.push_back({u, v, 1.0});
        edges.push_back({v, u, 1.0});
        ++degree[u];
        ++degree[v];
        total_degree += 2;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) link(i, j);
    if (m == 1 && n > 1) {
        // Degenerate seed: a single isolated vertex has degree zero, so give
        // the first arrival its link unconditionally.
        link(0, 1);
    }
    const int first = (m == 1) ? 2 : m;
    std::vector<int> chosen;
    for (int v = first; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < std::min(m, v)) {
            // Degree-proportional draw by inversion over cumulative degrees.
            double u = rng.uniform01() * static_cast<double>(total_degree);
            int target = 0;
            double cum = 0.0;
            for (int w = 0; w < v; ++w) {
                cum += degree[w];
                if (u < cum) {
                    target = w;
                    break;
                }
            }
            if (std::find(chosen.begin(), chosen.end(), target) != chosen.end())
                continue;  // rejection: sampling without replacement
            chosen.push_back(target);
        }
        for (int w : chosen) link(v, w);
    }
    return WeightedDigraph(n, std::move(edges));
}

Distribution degree_distribution(const WeightedDigraph& g, DegreeKind kind) {
    const int n = g.num_vertices();
    if (n == 0) throw InvalidArgument("degree_distribution: empty graph");
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) {
        switch (kind) {
            case DegreeKind::In: deg[v] = static_cast<int>(g.in_edges(v).size()); break;
            case DegreeKind::Out: deg[v] = static_cast<int>(g.out_edges(v).size()); break;
            case DegreeKind::Undirected: {
                // Symmetric storage keeps both directions; count neighbors once.
                int c = static_cast<int>(g.out_edges(v).size());
                for (int k : g.in_edges(v))
                    if (!g.has_edge(v, g.edges()[k].tail)) ++c;
                deg[v] = c;
                break;
            }
        }
    }
    Vector phi(static_cast<std::size_t>(n) + 1, 0.0);
    for (int v = 0; v < n; ++v) phi[deg[v]] += 1.0 / n;
    return Distribution(std::move(phi), 1e-9);
}

TailFit empirical_ccdf_loglog(const Vector& samples, double tail_fraction) {
    if (!(tail_fraction > 0.0) || tail_fraction > 1.0)
        throw InvalidArgument("empirical_ccdf_loglog: tail_fraction must lie in (0, 1]");
    for (double s : samples)
        if (!(s > 0.0)) throw InvalidArgument("empirical_ccdf_loglog: samples must be positive");
    Vector sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const std::size_t tail = static_cast<std::size_t>(std::floor(tail_fraction * n));
    if (tail < 20)
        throw InsufficientData("empirical_ccdf_loglog: only " + std::to_string(tail) +
                               " tail points, need >= 20");
    // Ghat(x_(i)) = (n - i) / n for the i-th order statistic (1-based); skip
    // the largest point where the empirical CCDF is zero.
    Vector lx, ly;
    for (std::size_t i = n - tail; i < n; ++i) {
        const double ccdf = static_cast<double>(n - (i + 1)) / n;
        if (ccdf <= 0.0) continue;
        lx.push_back(std::log(sorted[i]));
        ly.push_back(std::log(ccdf));
    }
    const std::size_t k = lx.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < k; ++i) sx += lx[i], sy += ly[i];
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0.0) throw DegenerateInput("empirical_ccdf_loglog: constant tail sample");
    const double slope = sxy / sxx;
    const double r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return {slope, my - slope * mx, r2, tail_fraction};
}

Vector pareto_sample(double xbar, double alpha, std::uint64_t seed, std::size_t n) {
    if (!(xbar > 0.0) || !(alpha > 0.0))
        throw InvalidArgument("pareto_sample: xbar and alpha must be positive");
    Rng rng(seed);
    Vector out(n);
    for (double& x : out) x = xbar * std::pow(rng.uniform_open_closed(), -1.0 / alpha);
    return out;
}

Vector lognormal_sample(double mu, double sigma, std::uint64_t seed, std::size_t n) {
    if (!(sigma > 0.0)) throw InvalidArgument("lognormal_sample: sigma must be positive");
    Rng rng(seed);
    Vector out(n);
    for (double& x : out) x = std::exp(mu + sigma * rng.normal());
    return out;
}

Distribution zeta_pmf(double gamma, int k_max) {
    if (!(gamma > 1.0)) throw InvalidArgument("zeta_pmf: gamma must exceed 1");
    if (k_max < 1) throw InvalidArgument("zeta_pmf: k_max must be >= 1");
    Vector p(k_max);
    double z = 0.0;
    for (int k = 1; k <= k_max; ++k) z += std::pow(k, -gamma);
    for (int k = 1; k <= k_max; ++k) p[k - 1] = std::pow(k, -gamma) / z;
    return Distribution(std::move(p), 1e-9);
}

double herfindahl(const Vector& sizes) {
    double y = 0.0;
    for (double s : sizes) {
        if (s < 0.0) throw InvalidArgument("herfindahl: negative firm size");
        y += s;
    }
    if (y == 0.0) throw InvalidArgument("herfindahl: all sizes are zero");
    double ss = 0.0;
    for (double s : sizes) ss += (s / y) * (s / y);
    return std::sqrt(ss);
}

namespace {

Vector draw_sizes(const SizeSampler& sampler, std::size_t n, Rng rng) {
    Vector out(n);
    if (sampler.kind == "pareto") {
        if (!(sampler.a > 0.0) || !(sampler.b > 0.0))
            throw InvalidArgument("herfindahl_median_mc: pareto needs xbar, alpha > 0");
        for (double& x : out)
            x = sampler.a * std::pow(rng.uniform_open_closed(), -1.0 / sampler.b);
    } else if (sampler.kind == "lognormal") {
        if (!(sampler.b > 0.0))
            throw InvalidArgument("herfindahl_median_mc: lognormal needs sigma > 0");
        for (double& x : out) x = std::exp(sampler.a + sampler.b * rng.normal());
    } else if (sampler.kind == "constant") {
        for (double& x : out) x = std::max(sampler.a, 1.0);
    } else {
        throw InvalidArgument("herfindahl_median_mc: unknown sampler '" + sampler.kind + "'");
    }
    return out;
}

int thread_budget() {
    if (const char* env = std::getenv("ECONNET_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

double herfindahl_median_mc(const SizeSampler& sampler, std::size_t n, int m,
                            std::uint64_t seed) {
    if (m < 1) throw InvalidArgument("herfindahl_median_mc: m must be >= 1");
    Vector results(m);
    const int threads = std::min(thread_budget(), m);
    if (threads <= 1) {
        for (int j = 0; j < m; ++j)
            results[j] = herfindahl(draw_sizes(sampler, n, Rng::substream(seed, j)));
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (int j = t; j < m; j += threads)
                    results[j] = herfindahl(draw_sizes(sampler, n, Rng::substream(seed, j)));
            });
        }
        for (auto& th : pool) th.join();
    }
    std::sort(results.begin(), results.end());
    // Even m: lower median, deterministic and within MC tolerance of the mid.
    return results[(m - 1) / 2];
}

}  // namespace econet
