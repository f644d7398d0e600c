#include "forge/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace forge {

void UndirectedGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("UndirectedGraph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("UndirectedGraph::add_edge: self-loop");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
    edge_list.emplace_back(std::min(u, v), std::max(u, v));
}

bool UndirectedGraph::is_regular(int* d_out) const {
    if (n == 0) return true;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return false;
    if (d_out) *d_out = d;
    return true;
}

bool UndirectedGraph::is_connected() const {
    if (n == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::deque<int> q{0};
    seen[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++cnt;
                q.push_back(w);
            }
        }
    }
    return cnt == n;
}

bool UndirectedGraph::has_parallel_edges() const {
    auto edges = canonical_edges();
    return std::adjacent_find(edges.begin(), edges.end()) != edges.end();
}

std::vector<std::pair<int, int>> UndirectedGraph::canonical_edges() const {
    auto edges = edge_list;
    std::sort(edges.begin(), edges.end());
    return edges;
}

UndirectedGraph UndirectedGraph::complete(int n) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

UndirectedGraph UndirectedGraph::cycle(int n) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

UndirectedGraph UndirectedGraph::petersen() {
    UndirectedGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

void DenseBipartiteGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n_left || v < 0 || v >= n_right)
        throw std::out_of_range("DenseBipartiteGraph::add_edge: index out of range");
    adj[static_cast<std::size_t>(u)].push_back(v);
}

std::size_t DenseBipartiteGraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& a : adj) m += a.size();
    return m;
}

std::vector<std::vector<int>> DenseBipartiteGraph::right_adjacency() const {
    std::vector<std::vector<int>> radj(static_cast<std::size_t>(n_right));
    for (int u = 0; u < n_left; ++u)
        for (int v : adj[static_cast<std::size_t>(u)]) radj[static_cast<std::size_t>(v)].push_back(u);
    return radj;
}

bool DenseBipartiteGraph::is_biregular(int* d_left, int* d_right) const {
    if (n_left == 0 || n_right == 0) return false;
    int dl = static_cast<int>(adj[0].size());
    for (const auto& a : adj)
        if (static_cast<int>(a.size()) != dl) return false;
    std::vector<int> rdeg(static_cast<std::size_t>(n_right), 0);
    for (const auto& a : adj)
        for (int v : a) ++rdeg[static_cast<std::size_t>(v)];
    int dr = rdeg[0];
    for (int d : rdeg)
        if (d != dr) return false;
    if (d_left) *d_left = dl;
    if (d_right) *d_right = dr;
    return true;
}

bool DenseBipartiteGraph::is_simple() const {
    for (const auto& a : adj) {
        auto s = a;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    }
    return true;
}

void DenseBipartiteGraph::sort_neighbor_lists() {
    for (auto& a : adj) std::sort(a.begin(), a.end());
}

UndirectedGraph DenseBipartiteGraph::as_undirected() const {
    UndirectedGraph g(n_left + n_right);
    for (int u = 0; u < n_left; ++u)
        for (int v : adj[static_cast<std::size_t>(u)]) g.add_edge(u, n_left + v);
    return g;
}

std::uint64_t DenseBipartiteGraph::checksum() const {
    std::string buf;
    buf.reserve(edge_count() * 8 + 32);
    buf += std::to_string(n_left);
    buf += ' ';
    buf += std::to_string(n_right);
    buf += '\n';
    for (int u = 0; u < n_left; ++u) {
        auto s = adj[static_cast<std::size_t>(u)];
        std::sort(s.begin(), s.end());
        for (int v : s) {
            buf += std::to_string(u);
            buf += ' ';
            buf += std::to_string(v);
            buf += '\n';
        }
    }
    return fnv1a64(buf);
}

bool DenseBipartiteGraph::operator==(const DenseBipartiteGraph& o) const {
    if (n_left != o.n_left || n_right != o.n_right) return false;
    for (int u = 0; u < n_left; ++u) {
        auto a = adj[static_cast<std::size_t>(u)];
        auto b = o.adj[static_cast<std::size_t>(u)];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

int BipartiteOracle::slot_of(Side s, std::int64_t v, std::int64_t nbr) const {
    int d = degree(s);
    for (int i = 0; i < d; ++i) {
        if (neighbor(s, v, i).vertex == nbr) return i;
    }
    throw std::invalid_argument("BipartiteOracle::slot_of: not adjacent");
}

DenseBipartiteGraph materialize(const BipartiteOracle& g, std::size_t max_edges) {
    std::int64_t nl = g.side_size(Side::left);
    std::int64_t nr = g.side_size(Side::right);
    int dl = g.degree(Side::left);
    if (static_cast<std::size_t>(nl) * static_cast<std::size_t>(dl) > max_edges)
        throw std::invalid_argument("materialize: graph too large");
    DenseBipartiteGraph out(static_cast<int>(nl), static_cast<int>(nr));
    for (std::int64_t u = 0; u < nl; ++u)
        for (int s = 0; s < dl; ++s)
            out.add_edge(static_cast<int>(u), static_cast<int>(g.neighbor(Side::left, u, s).vertex));
    return out;
}

DenseOracle::DenseOracle(DenseBipartiteGraph g) : g_(std::move(g)) {
    if (!g_.is_biregular(&dl_, &dr_)) throw std::invalid_argument("DenseOracle: graph must be biregular");
    if (!g_.is_simple()) throw std::invalid_argument("DenseOracle: graph must be simple");
    radj_ = g_.right_adjacency();
}

BipartiteOracle::Neighbor DenseOracle::neighbor(Side s, std::int64_t v, int slot) const {
    if (s == Side::left) {
        int w = g_.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)];
        return {w, slot_of(Side::right, w, v)};
    }
    int w = radj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)];
    return {w, slot_of(Side::left, w, v)};
}

int DenseOracle::slot_of(Side s, std::int64_t v, std::int64_t nbr) const {
    const auto& list = s == Side::left ? g_.adj[static_cast<std::size_t>(v)] : radj_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == nbr) return static_cast<int>(i);
    throw std::invalid_argument("DenseOracle::slot_of: not adjacent");
}

std::uint64_t fnv1a64(std::span<const unsigned char> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(std::span<const unsigned char>(reinterpret_cast<const unsigned char*>(s.data()), s.size()));
}

}  // namespace forge
