#pragma once

#include <string>
#include <vector>

#include "econet/matrix.hpp"

namespace econet {

struct Edge {
    int tail;
    int head;
    double weight;
};

/// Finite weighted digraph on vertices 0..n-1. Immutable after construction.
/// A weight of zero means the edge is absent, so all stored weights are
/// strictly positive and (tail, head) pairs are unique.
class WeightedDigraph {
  public:
    WeightedDigraph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Successor lists: out_[v] holds indices into edges() of edges leaving v.
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_[v]; }

    bool has_edge(int tail, int head) const;
    double weight(int tail, int head) const;  // 0 when absent

    WeightedDigraph reversed() const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

enum class Direction { In, Out };

WeightedDigraph from_adjacency(const Matrix& a);
Matrix adjacency(const WeightedDigraph& g);
Matrix binarized_adjacency(const WeightedDigraph& g);

Vector degrees(const WeightedDigraph& g, Direction dir, bool weighted = false);

/// Maximal mutually-communicating classes, via Tarjan's single-pass algorithm.
/// Blocks are returned sorted by smallest member.
std::vector<std::vector<int>> strongly_connected_components(const WeightedDigraph& g);

bool is_strongly_connected(const WeightedDigraph& g);
bool is_irreducible(const Matrix& a);

/// True iff the gcd of all cycle lengths is 1. A graph with no cycles is
/// treated as periodic (aperiodic = false), since its period is undefined.
bool is_aperiodic(const WeightedDigraph& g);
bool is_primitive(const Matrix& a);

bool is_accessible(const WeightedDigraph& g, int u, int v);
bool is_absorbing(const WeightedDigraph& g, const std::vector<int>& absorbing_set);
bool is_dag(const WeightedDigraph& g);

}  // namespace econet
