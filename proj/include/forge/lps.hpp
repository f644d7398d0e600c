#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "forge/graph.hpp"

namespace forge {

int legendre(std::uint64_t a, std::uint64_t p);
std::uint64_t find_primitive_root(std::uint64_t p);

// Smallest prime >= min_q in the residue class p + (3p+1)g mod 4p, where g
// is the smallest primitive root mod p. The returned q is re-verified to
// satisfy q = 1 mod 4 and (q|p) = -1.
std::uint64_t find_lps_q(std::uint64_t p, std::uint64_t min_q);

// Square root of -1 mod q (q = 1 mod 4), via the smallest quadratic
// non-residue; the search order is fixed so the result is deterministic.
std::uint64_t sqrt_minus_one_mod(std::uint64_t q);

struct LpsParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    static LpsParams make(std::uint64_t p, std::uint64_t q);
};

// 2x2 matrix over Z_q modulo scalars, canonicalized so the first nonzero
// entry (in a,b,c,d scan order) equals 1.
struct ProjMat {
    std::array<std::uint32_t, 4> m{0, 0, 0, 0};
    bool operator==(const ProjMat& o) const { return m == o.m; }
};

ProjMat proj_canonical(std::array<std::uint64_t, 4> raw, std::uint64_t q);
ProjMat proj_mul(const ProjMat& x, const ProjMat& y, std::uint64_t q);
ProjMat proj_inverse(const ProjMat& x, std::uint64_t q);
std::uint64_t proj_det(const ProjMat& x, std::uint64_t q);

// The p+1 projective generators from the four-square solutions of p
// (a odd positive, b,c,d even): [a+ib, c+id; -c+id, a-ib].
std::vector<ProjMat> lps_generators(std::uint64_t p, std::uint64_t q);

// Bipartite Cayley-style graph on PGL_2(Z_q): left side is the
// square-determinant class, right side its coset; neighbor(v, i) is the
// canonical form of generator_i * v. (p+1, p+1)-biregular with
// q(q^2-1)/2 vertices per side.
class LpsGraph final : public BipartiteOracle {
public:
    explicit LpsGraph(LpsParams params);

    const LpsParams& params() const { return params_; }
    std::uint64_t sqrt_minus_one() const { return i_; }
    const std::vector<ProjMat>& generators() const { return gens_; }

    std::int64_t side_size(Side s) const override;
    int degree(Side) const override { return static_cast<int>(gens_.size()); }
    Neighbor neighbor(Side s, std::int64_t v, int slot) const override;
    int slot_of(Side s, std::int64_t v, std::int64_t nbr) const override;

    const ProjMat& vertex_matrix(Side s, std::int64_t v) const;
    std::pair<Side, std::int64_t> locate(const ProjMat& m) const;

    std::string manifest_json() const;

private:
    std::uint64_t pack(const ProjMat& m) const;

    LpsParams params_;
    std::uint64_t i_;
    std::vector<ProjMat> gens_;
    std::vector<int> inverse_slot_;  // slot of g^-1 for each generator g
    std::vector<ProjMat> verts_[2];
    std::unordered_map<std::uint64_t, std::int64_t> index_;  // packed -> idx*2 + side
};

}  // namespace forge
