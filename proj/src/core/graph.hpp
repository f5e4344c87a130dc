#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/bitset.hpp"

namespace emso {

/// Labeled simple undirected graph on vertices 0..n-1 (1-based in all
/// external formats). Immutable after construction; adjacency is stored
/// row-wise in bit-packed form.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    std::size_t words_per_row() const { return wpr_; }

    bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1;
    }
    const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * wpr_; }

    void add_edge(int u, int v); // construction only
    int edge_count() const;

    VertexSet neighbors(int u) const;
    Graph complement() const;
    Graph relabeled(const std::vector<int>& perm) const; // perm[old] = new

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_;
    std::size_t wpr_;
    std::vector<std::uint64_t> rows_;
};

/// G(n,p) sample. One draw per unordered pair in lexicographic order
/// ((1,2),(1,3),...,(2,3),...), so equal (n,p,seed) gives a bit-identical
/// graph on every platform.
Graph sample_gnp(int n, double p, std::uint64_t seed);

/// Streams all 2^(n(n-1)/2) labeled graphs exactly once, in lexicographic
/// edge-indicator order. Guarded at n <= 6.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n);
    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    int m_;
    std::uint64_t total_;
    std::uint64_t index_ = 0;
};

template <typename Fn>
void for_each_graph(int n, Fn&& fn) {
    GraphEnumerator en(n);
    while (auto g = en.next()) fn(*g);
}

// Structural predicates (pure; empty/singleton sets are cliques).
bool is_clique(const Graph& g, const VertexSet& s);
bool no_cross_edges(const Graph& g, const VertexSet& s, const VertexSet& t);
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

// Vertices outside s with zero edges into s.
VertexSet zero_edge_set(const Graph& g, const VertexSet& s);

// Edge-list text format: "n m" header, then m lines "u v" with
// 1 <= u < v <= n in lexicographic order, newline-terminated.
Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);

} // namespace emso
