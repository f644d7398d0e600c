#include "forge/lps.hpp"

#include <cmath>
#include <sstream>

#include "forge/field.hpp"

namespace forge {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t find_primitive_root(std::uint64_t p) {
    if (!is_probable_prime(p)) throw std::invalid_argument("find_primitive_root: p must be prime");
    auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t f : factors) {
            if (powmod(g, (p - 1) / f, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive_root: none found");
}

std::uint64_t find_lps_q(std::uint64_t p, std::uint64_t min_q) {
    if (p % 4 != 1 || !is_probable_prime(p)) throw std::invalid_argument("find_lps_q: p must be a prime = 1 mod 4");
    std::uint64_t g = find_primitive_root(p);
    std::uint64_t mod = 4 * p;
    std::uint64_t res = (p + (3 * p + 1) % mod * g) % mod;
    std::uint64_t c = res;
    if (c < min_q) c += ((min_q - c + mod - 1) / mod) * mod;
    for (;; c += mod) {
        if (c == p || !is_probable_prime(c)) continue;
        if (c % 4 != 1) continue;            // re-verified directly
        if (legendre(c, p) != -1) continue;  // re-verified directly
        return c;
    }
}

std::uint64_t sqrt_minus_one_mod(std::uint64_t q) {
    if (q % 4 != 1 || !is_probable_prime(q)) throw std::invalid_argument("sqrt_minus_one_mod: q must be a prime = 1 mod 4");
    for (std::uint64_t n = 2; n < q; ++n) {
        if (legendre(n, q) == -1) {
            std::uint64_t x = powmod(n, (q - 1) / 4, q);
            if (mulmod(x, x, q) != q - 1) throw std::logic_error("sqrt_minus_one_mod: verification failed");
            return x;
        }
    }
    throw std::logic_error("sqrt_minus_one_mod: no non-residue found");
}

LpsParams LpsParams::make(std::uint64_t p, std::uint64_t q) {
    if (p % 4 != 1 || !is_probable_prime(p)) throw std::invalid_argument("LpsParams: p must be a prime = 1 mod 4");
    if (q % 4 != 1 || !is_probable_prime(q)) throw std::invalid_argument("LpsParams: q must be a prime = 1 mod 4");
    if (p == q) throw std::invalid_argument("LpsParams: p and q must differ");
    if (legendre(q, p) != -1) throw std::invalid_argument("LpsParams: q must be a quadratic non-residue mod p");
    if (static_cast<double>(q) <= 2.0 * std::sqrt(static_cast<double>(p)))
        throw std::invalid_argument("LpsParams: q must exceed 2*sqrt(p)");
    return {p, q};
}

ProjMat proj_canonical(std::array<std::uint64_t, 4> raw, std::uint64_t q) {
    for (auto& x : raw) x %= q;
    std::uint64_t lead = 0;
    for (auto x : raw) {
        if (x != 0) { lead = x; break; }
    }
    if (lead == 0) throw std::invalid_argument("proj_canonical: zero matrix");
    std::uint64_t inv = powmod(lead, q - 2, q);
    ProjMat out;
    for (int i = 0; i < 4; ++i) out.m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(mulmod(raw[static_cast<std::size_t>(i)], inv, q));
    return out;
}

ProjMat proj_mul(const ProjMat& x, const ProjMat& y, std::uint64_t q) {
    std::uint64_t a = x.m[0], b = x.m[1], c = x.m[2], d = x.m[3];
    std::uint64_t e = y.m[0], f = y.m[1], g = y.m[2], h = y.m[3];
    return proj_canonical({a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h}, q);
}

ProjMat proj_inverse(const ProjMat& x, std::uint64_t q) {
    // adjugate is the projective inverse
    std::uint64_t a = x.m[0], b = x.m[1], c = x.m[2], d = x.m[3];
    return proj_canonical({d, (q - b) % q, (q - c) % q, a}, q);
}

std::uint64_t proj_det(const ProjMat& x, std::uint64_t q) {
    std::uint64_t ad = mulmod(x.m[0], x.m[3], q);
    std::uint64_t bc = mulmod(x.m[1], x.m[2], q);
    return (ad + q - bc) % q;
}

std::vector<ProjMat> lps_generators(std::uint64_t p, std::uint64_t q) {
    std::uint64_t i = sqrt_minus_one_mod(q);
    auto fe = [&](long long v) {
        long long m = static_cast<long long>(q);
        long long r = v % m;
        if (r < 0) r += m;
        return static_cast<std::uint64_t>(r);
    };
    std::vector<ProjMat> gens;
    long long bound = static_cast<long long>(std::sqrt(static_cast<double>(p))) + 1;
    for (long long a = 1; a * a <= static_cast<long long>(p); a += 2) {
        for (long long b = -bound; b <= bound; ++b) {
            if (b % 2 != 0) continue;
            for (long long c = -bound; c <= bound; ++c) {
                if (c % 2 != 0) continue;
                for (long long d = -bound; d <= bound; ++d) {
                    if (d % 2 != 0) continue;
                    if (a * a + b * b + c * c + d * d != static_cast<long long>(p)) continue;
                    std::uint64_t ib = mulmod(i, fe(b), q);
                    std::uint64_t id = mulmod(i, fe(d), q);
                    gens.push_back(proj_canonical({fe(a) + ib, fe(c) + id, fe(-c) + id, fe(a) + q - ib}, q));
                }
            }
        }
    }
    if (gens.size() != p + 1) throw std::logic_error("lps_generators: expected p+1 solutions, got " + std::to_string(gens.size()));
    for (const auto& g : gens) {
        bool has_inverse = false;
        ProjMat gi = proj_inverse(g, q);
        for (const auto& h : gens)
            if (h == gi) { has_inverse = true; break; }
        if (!has_inverse) throw std::logic_error("lps_generators: set not inversion-closed");
    }
    return gens;
}

LpsGraph::LpsGraph(LpsParams params) : params_(params), i_(sqrt_minus_one_mod(params.q)) {
    const std::uint64_t q = params_.q;
    if (q * (q * q - 1) > 6'000'000) throw std::invalid_argument("LpsGraph: q too large for desk-scale enumeration");
    gens_ = lps_generators(params_.p, q);
    // inverse-slot permutation: neighbor via g has co-slot at g^-1
    inverse_slot_.resize(gens_.size());
    for (std::size_t a = 0; a < gens_.size(); ++a) {
        ProjMat gi = proj_inverse(gens_[a], q);
        bool found = false;
        for (std::size_t b = 0; b < gens_.size(); ++b) {
            if (gens_[b] == gi) {
                inverse_slot_[a] = static_cast<int>(b);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("LpsGraph: generator inverse missing");
    }
    // enumerate canonical invertible projective matrices in lexicographic order
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            for (std::uint64_t c = 0; c < q; ++c)
                for (std::uint64_t d = 0; d < q; ++d) {
                    std::uint64_t lead = a ? a : b ? b : c ? c : d;
                    if (lead != 1) continue;
                    ProjMat m;
                    m.m = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                           static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d)};
                    std::uint64_t det = proj_det(m, q);
                    if (det == 0) continue;
                    int side = legendre(det, q) == 1 ? 0 : 1;
                    index_[pack(m)] = static_cast<std::int64_t>(verts_[side].size()) * 2 + side;
                    verts_[side].push_back(m);
                }
    std::uint64_t expected = q * (q * q - 1) / 2;
    if (verts_[0].size() != expected || verts_[1].size() != expected)
        throw std::logic_error("LpsGraph: side sizes differ from q(q^2-1)/2");
    // every generator must flip the determinant class
    for (const auto& g : gens_)
        if (legendre(proj_det(g, q), q) != -1) throw std::logic_error("LpsGraph: generator does not flip sides");
}

std::uint64_t LpsGraph::pack(const ProjMat& m) const {
    const std::uint64_t q = params_.q;
    return ((static_cast<std::uint64_t>(m.m[0]) * q + m.m[1]) * q + m.m[2]) * q + m.m[3];
}

std::int64_t LpsGraph::side_size(Side s) const {
    return static_cast<std::int64_t>(verts_[s == Side::left ? 0 : 1].size());
}

const ProjMat& LpsGraph::vertex_matrix(Side s, std::int64_t v) const {
    return verts_[s == Side::left ? 0 : 1][static_cast<std::size_t>(v)];
}

std::pair<Side, std::int64_t> LpsGraph::locate(const ProjMat& m) const {
    auto it = index_.find(pack(m));
    if (it == index_.end()) throw std::invalid_argument("LpsGraph::locate: not a group element");
    return {(it->second & 1) == 0 ? Side::left : Side::right, it->second >> 1};
}

BipartiteOracle::Neighbor LpsGraph::neighbor(Side s, std::int64_t v, int slot) const {
    if (slot < 0 || slot >= degree(s)) throw std::out_of_range("LpsGraph::neighbor: slot out of range");
    ProjMat w = proj_mul(gens_[static_cast<std::size_t>(slot)], vertex_matrix(s, v), params_.q);
    auto [side, idx] = locate(w);
    if (side == s) throw std::logic_error("LpsGraph: neighbor landed on the same side");
    return {idx, inverse_slot_[static_cast<std::size_t>(slot)]};
}

int LpsGraph::slot_of(Side s, std::int64_t v, std::int64_t nbr) const {
    const ProjMat& target = vertex_matrix(other(s), nbr);
    const ProjMat& me = vertex_matrix(s, v);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (proj_mul(gens_[i], me, params_.q) == target) return static_cast<int>(i);
    throw std::invalid_argument("LpsGraph::slot_of: not adjacent");
}

std::string LpsGraph::manifest_json() const {
    std::ostringstream os;
    os << "{\"kind\":\"lps\",\"p\":" << params_.p << ",\"q\":" << params_.q << ",\"sqrt_minus_one\":" << i_
       << ",\"side_size\":" << side_size(Side::left) << ",\"degree\":" << degree(Side::left) << ",\"generators\":[";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        os << (i ? "," : "") << "[" << g.m[0] << "," << g.m[1] << "," << g.m[2] << "," << g.m[3] << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace forge
