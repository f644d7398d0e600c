#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

enum class Side { left, right };

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }

// Plain undirected graph, multigraph-capable, loop-free.
struct UndirectedGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;           // entries repeat for parallel edges
    std::vector<std::pair<int, int>> edge_list;  // canonical: (min, max), insertion order

    explicit UndirectedGraph(int vertices = 0)
        : n(vertices), adj(static_cast<std::size_t>(vertices)) {}

    void add_edge(int u, int v);
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
    std::size_t edge_count() const { return edge_list.size(); }
    bool is_regular(int* d_out = nullptr) const;
    bool is_connected() const;
    bool has_parallel_edges() const;

    // Canonical edge order: lexicographic on (min endpoint, max endpoint).
    std::vector<std::pair<int, int>> canonical_edges() const;

    static UndirectedGraph complete(int n);
    static UndirectedGraph cycle(int n);
    static UndirectedGraph petersen();
};

// Materialized bipartite graph; neighbor lists live on the left side and
// repeated entries encode multiplicity.
struct DenseBipartiteGraph {
    int n_left = 0;
    int n_right = 0;
    std::vector<std::vector<int>> adj;

    DenseBipartiteGraph() = default;
    DenseBipartiteGraph(int nl, int nr)
        : n_left(nl), n_right(nr), adj(static_cast<std::size_t>(nl)) {}

    void add_edge(int u, int v);
    std::size_t edge_count() const;
    std::vector<std::vector<int>> right_adjacency() const;
    int side_count(Side s) const { return s == Side::left ? n_left : n_right; }

    bool is_biregular(int* d_left = nullptr, int* d_right = nullptr) const;
    bool is_simple() const;
    void sort_neighbor_lists();

    // Undirected view: left vertices 0..n_left-1, right vertices offset by n_left.
    UndirectedGraph as_undirected() const;

    // FNV-1a over the canonical serialization; stable across runs.
    std::uint64_t checksum() const;

    bool operator==(const DenseBipartiteGraph& o) const;
};

// The strongly explicit contract: neighbor queries without materializing.
class BipartiteOracle {
public:
    virtual ~BipartiteOracle() = default;

    virtual std::int64_t side_size(Side s) const = 0;
    virtual int degree(Side s) const = 0;

    struct Neighbor {
        std::int64_t vertex;
        int co_slot;  // slot of the queried vertex in the neighbor's list
    };
    virtual Neighbor neighbor(Side s, std::int64_t v, int slot) const = 0;

    // Default implementation scans the neighbor's slots.
    virtual int slot_of(Side s, std::int64_t v, std::int64_t nbr) const;
};

// Materializes an oracle. Throws if the graph exceeds `max_edges`.
DenseBipartiteGraph materialize(const BipartiteOracle& g, std::size_t max_edges = 50'000'000);

// Adapter presenting a materialized simple biregular graph as an oracle.
class DenseOracle final : public BipartiteOracle {
public:
    explicit DenseOracle(DenseBipartiteGraph g);

    std::int64_t side_size(Side s) const override { return g_.side_count(s); }
    int degree(Side s) const override { return s == Side::left ? dl_ : dr_; }
    Neighbor neighbor(Side s, std::int64_t v, int slot) const override;
    int slot_of(Side s, std::int64_t v, std::int64_t nbr) const override;

    const DenseBipartiteGraph& graph() const { return g_; }

private:
    DenseBipartiteGraph g_;
    std::vector<std::vector<int>> radj_;
    int dl_ = 0, dr_ = 0;
};

std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::uint64_t fnv1a64(const std::string& s);

}  // namespace forge
