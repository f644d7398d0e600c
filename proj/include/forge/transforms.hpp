#pragma once

#include <memory>

#include "forge/graph.hpp"

namespace forge {

// (2,d)-biregular incidence graph of a d-regular loop-free graph: left
// vertices are edges of G in canonical order (min endpoint, max endpoint),
// right vertices are the vertices of G.
DenseBipartiteGraph edge_vertex_incidence(const UndirectedGraph& g);

// Tripartite product of a D1-right-regular G1 = (L u M, E1), a
// D2-left-regular G2 = (M u R, E2) and a gadget G0 with D1 left and D2
// right vertices: one gadget copy per middle vertex, edge multiset
// {(n_G1(w,i), n_G2(w,j)) : w in M, (i,j) in E(G0)}. Multi-edges kept.
DenseBipartiteGraph tripartite_product(const BipartiteOracle& g1, const BipartiteOracle& g2,
                                       const DenseBipartiteGraph& g0);

// Oracle-composed form; edges at a vertex are ordered lexicographically by
// (base-graph slot, gadget slot). Requires a biregular gadget.
class TripartiteOracle final : public BipartiteOracle {
public:
    TripartiteOracle(const BipartiteOracle& g1, const BipartiteOracle& g2, DenseBipartiteGraph g0);

    std::int64_t side_size(Side s) const override;
    int degree(Side s) const override;
    Neighbor neighbor(Side s, std::int64_t v, int slot) const override;

private:
    const BipartiteOracle& g1_;
    const BipartiteOracle& g2_;
    DenseBipartiteGraph g0_;
    std::vector<std::vector<int>> g0_radj_;
    int g0_dl_ = 0, g0_dr_ = 0;
};

}  // namespace forge
