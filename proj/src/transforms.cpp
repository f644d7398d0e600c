#include "forge/transforms.hpp"

#include <algorithm>

namespace forge {

DenseBipartiteGraph edge_vertex_incidence(const UndirectedGraph& g) {
    int d = 0;
    if (!g.is_regular(&d)) throw std::invalid_argument("edge_vertex_incidence: input must be regular");
    auto edges = g.canonical_edges();
    DenseBipartiteGraph out(static_cast<int>(edges.size()), g.n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out.add_edge(static_cast<int>(e), edges[e].first);
        out.add_edge(static_cast<int>(e), edges[e].second);
    }
    return out;
}

namespace {

void check_product_shapes(const BipartiteOracle& g1, const BipartiteOracle& g2, const DenseBipartiteGraph& g0) {
    if (g1.side_size(Side::right) != g2.side_size(Side::left))
        throw std::invalid_argument("tripartite: middle sets differ");
    if (g0.n_left != g1.degree(Side::right))
        throw std::invalid_argument("tripartite: gadget left size must equal right degree of G1");
    if (g0.n_right != g2.degree(Side::left))
        throw std::invalid_argument("tripartite: gadget right size must equal left degree of G2");
}

}  // namespace

DenseBipartiteGraph tripartite_product(const BipartiteOracle& g1, const BipartiteOracle& g2,
                                       const DenseBipartiteGraph& g0) {
    check_product_shapes(g1, g2, g0);
    DenseBipartiteGraph out(static_cast<int>(g1.side_size(Side::left)), static_cast<int>(g2.side_size(Side::right)));
    const std::int64_t middle = g1.side_size(Side::right);
    for (std::int64_t w = 0; w < middle; ++w) {
        for (int i = 0; i < g0.n_left; ++i) {
            std::int64_t x = g1.neighbor(Side::right, w, i).vertex;
            for (int j : g0.adj[static_cast<std::size_t>(i)]) {
                std::int64_t y = g2.neighbor(Side::left, w, j).vertex;
                out.add_edge(static_cast<int>(x), static_cast<int>(y));
            }
        }
    }
    return out;
}

TripartiteOracle::TripartiteOracle(const BipartiteOracle& g1, const BipartiteOracle& g2, DenseBipartiteGraph g0)
    : g1_(g1), g2_(g2), g0_(std::move(g0)) {
    check_product_shapes(g1_, g2_, g0_);
    if (!g0_.is_biregular(&g0_dl_, &g0_dr_))
        throw std::invalid_argument("TripartiteOracle: gadget must be biregular");
    g0_radj_ = g0_.right_adjacency();
}

std::int64_t TripartiteOracle::side_size(Side s) const {
    return s == Side::left ? g1_.side_size(Side::left) : g2_.side_size(Side::right);
}

int TripartiteOracle::degree(Side s) const {
    return s == Side::left ? g1_.degree(Side::left) * g0_dl_ : g2_.degree(Side::right) * g0_dr_;
}

BipartiteOracle::Neighbor TripartiteOracle::neighbor(Side s, std::int64_t v, int slot) const {
    if (slot < 0 || slot >= degree(s)) throw std::out_of_range("TripartiteOracle::neighbor: slot out of range");
    if (s == Side::left) {
        int base_slot = slot / g0_dl_;
        int gadget_slot = slot % g0_dl_;
        auto nb1 = g1_.neighbor(Side::left, v, base_slot);          // w in M, co_slot = gadget left vertex
        int i = nb1.co_slot;
        int j = g0_.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(gadget_slot)];
        auto nb2 = g2_.neighbor(Side::left, nb1.vertex, j);         // product right vertex
        // occurrence-aware co-slot within the gadget right adjacency
        int r = 0, seen = 0;
        const auto& back = g0_radj_[static_cast<std::size_t>(j)];
        for (std::size_t idx = 0; idx < g0_.adj[static_cast<std::size_t>(i)].size() &&
                                  static_cast<int>(idx) < gadget_slot; ++idx)
            if (g0_.adj[static_cast<std::size_t>(i)][idx] == j) ++seen;
        for (std::size_t idx = 0; idx < back.size(); ++idx) {
            if (back[idx] == i) {
                if (seen == 0) { r = static_cast<int>(idx); break; }
                --seen;
            }
        }
        return {nb2.vertex, nb2.co_slot * g0_dr_ + r};
    }
    int base_slot = slot / g0_dr_;
    int gadget_slot = slot % g0_dr_;
    auto nb2 = g2_.neighbor(Side::right, v, base_slot);             // w in M, co_slot = gadget right vertex
    int j = nb2.co_slot;
    int i = g0_radj_[static_cast<std::size_t>(j)][static_cast<std::size_t>(gadget_slot)];
    auto nb1 = g1_.neighbor(Side::right, nb2.vertex, i);            // product left vertex
    int r = 0, seen = 0;
    const auto& fwd = g0_.adj[static_cast<std::size_t>(i)];
    const auto& back = g0_radj_[static_cast<std::size_t>(j)];
    for (std::size_t idx = 0; idx < back.size() && static_cast<int>(idx) < gadget_slot; ++idx)
        if (back[idx] == i) ++seen;
    for (std::size_t idx = 0; idx < fwd.size(); ++idx) {
        if (fwd[idx] == j) {
            if (seen == 0) { r = static_cast<int>(idx); break; }
            --seen;
        }
    }
    return {nb1.vertex, nb1.co_slot * g0_dl_ + r};
}

}  // namespace forge
