#include "core/graph.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace emso {

Graph::Graph(int n) : n_(n), wpr_((static_cast<std::size_t>(n) + 63) / 64) {
    if (n < 1) throw InputError("graph must have at least one vertex");
    rows_.assign(static_cast<std::size_t>(n) * wpr_, 0);
}

void Graph::add_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    rows_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

int Graph::edge_count() const {
    int c = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) ++c;
    return c;
}

VertexSet Graph::neighbors(int u) const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < wpr_; ++i) s.word(i) = row(u)[i];
    return s;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("sample_gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("sample_gnp: p must lie in [0,1]");
    Graph g(n);
    std::mt19937_64 gen(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u53(gen) < p) g.add_edge(u, v);
    return g;
}

GraphEnumerator::GraphEnumerator(int n) : n_(n) {
    if (n < 1) throw InputError("enumerate_graphs: n must be >= 1");
    if (n > 6)
        throw GuardError("enumerate_graphs: exhaustive enumeration is guarded at n <= 6 "
                         "(2^(n(n-1)/2) graphs; n=" + std::to_string(n) + " requested)");
    m_ = n * (n - 1) / 2;
    total_ = std::uint64_t(1) << m_;
}

std::optional<Graph> GraphEnumerator::next() {
    if (index_ >= total_) return std::nullopt;
    Graph g(n_);
    int bit = m_ - 1; // first pair (1,2) is the most significant indicator
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, --bit)
            if ((index_ >> bit) & 1) g.add_edge(u, v);
    ++index_;
    return g;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u = s.next(0); u >= 0; u = s.next(u + 1)) {
        // every other member must be a neighbor of u
        for (std::size_t i = 0; i < g.words_per_row(); ++i) {
            std::uint64_t members = s.word(i);
            if (i == static_cast<std::size_t>(u >> 6)) members &= ~(std::uint64_t(1) << (u & 63));
            if (members & ~g.row(u)[i]) return false;
        }
    }
    return true;
}

bool no_cross_edges(const Graph& g, const VertexSet& s, const VertexSet& t) {
    for (int u = s.next(0); u >= 0; u = s.next(u + 1))
        for (std::size_t i = 0; i < g.words_per_row(); ++i)
            if (g.row(u)[i] & t.word(i)) return false;
    return true;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
    VertexSet acc = VertexSet::full(g.n());
    for (int u = s.next(0); u >= 0; u = s.next(u + 1))
        for (std::size_t i = 0; i < g.words_per_row(); ++i)
            acc.word(i) &= g.row(u)[i];
    acc.subtract(s);
    return acc;
}

VertexSet zero_edge_set(const Graph& g, const VertexSet& s) {
    VertexSet out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (s.test(v)) continue;
        bool touches = false;
        for (std::size_t i = 0; i < g.words_per_row(); ++i)
            if (g.row(v)[i] & s.word(i)) { touches = true; break; }
        if (!touches) out.set(v);
    }
    return out;
}

namespace {

int parse_int(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line) + ": malformed " + what + " '" + tok + "'");
    return value;
}

} // namespace

Graph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw InputError("line 1: malformed header (empty input)");
    ++lineno;
    std::istringstream hdr(line);
    std::string ntok, mtok, extra;
    if (!(hdr >> ntok >> mtok) || (hdr >> extra))
        throw InputError("line 1: malformed header (expected 'n m')");
    int n = parse_int(ntok, 1, "vertex count");
    int m = parse_int(mtok, 1, "edge count");
    if (n < 1) throw InputError("line 1: vertex count must be >= 1");
    if (m < 0 || m > n * (n - 1) / 2) throw InputError("line 1: edge count out of range");

    Graph g(n);
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < m; ++e) {
        if (!std::getline(in, line))
            throw InputError("line " + std::to_string(lineno + 1) + ": missing edge (header promised " +
                             std::to_string(m) + ")");
        ++lineno;
        std::istringstream es(line);
        std::string utok, vtok;
        if (!(es >> utok >> vtok) || (es >> extra))
            throw InputError("line " + std::to_string(lineno) + ": malformed edge (expected 'u v')");
        int u = parse_int(utok, lineno, "vertex");
        int v = parse_int(vtok, lineno, "vertex");
        if (u < 1 || u > n || v < 1 || v > n)
            throw InputError("line " + std::to_string(lineno) + ": vertex out of range 1.." + std::to_string(n));
        if (u == v) throw InputError("line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw InputError("line " + std::to_string(lineno) + ": duplicate edge " + std::to_string(key.first) +
                             " " + std::to_string(key.second));
        g.add_edge(u - 1, v - 1);
    }
    std::string rest;
    while (std::getline(in, rest)) {
        ++lineno;
        if (!rest.empty() && rest.find_first_not_of(" \t\r") != std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": trailing content after " +
                             std::to_string(m) + " edges");
    }
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

} // namespace emso
