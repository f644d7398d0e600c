#include "forge/dkq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace forge {

CoordSchema CoordSchema::make(int k) {
    if (k < 4) throw std::invalid_argument("CoordSchema: k must be at least 4");
    CoordSchema s;
    s.k = k;
    for (int pos = 0; pos < k; ++pos) s.labels.push_back(label_at(pos));
    return s;
}

CoordSchema::Label CoordSchema::label_at(int pos) {
    switch (pos) {
        case 0: return {0, 0, false, true};
        case 1: return {1, 1, false, false};
        case 2: return {1, 2, false, false};
        case 3: return {2, 1, false, false};
        default: break;
    }
    int i = pos / 4 + 1;
    switch (pos % 4) {
        case 0: return {i, i, false, false};
        case 1: return {i, i, true, false};
        case 2: return {i, i + 1, false, false};
        default: return {i + 1, i, false, false};
    }
}

int CoordSchema::position_in(int k, int row, int col, bool primed) {
    int pos = -1;
    if (primed) {
        if (row == col && row >= 2) pos = 4 * row - 3;
    } else if (row == 1 && col == 1) pos = 1;
    else if (row == 1 && col == 2) pos = 2;
    else if (row == 2 && col == 1) pos = 3;
    else if (row >= 2 && col == row) pos = 4 * row - 4;
    else if (row >= 2 && col == row + 1) pos = 4 * row - 2;
    else if (col >= 2 && row == col + 1) pos = 4 * col - 1;
    return (pos >= 0 && pos < k) ? pos : -1;
}

std::vector<std::string> CoordSchema::label_names(char side_char) const {
    std::vector<std::string> out;
    for (const Label& lab : labels) {
        std::ostringstream os;
        if (lab.first) {
            os << side_char << 1;
        } else {
            os << side_char;
            if (lab.primed) os << '\'';
            os << lab.row << lab.col;
        }
        out.push_back(os.str());
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> CoordSchema::boundary_constants() {
    return {
        {"u00", "-1"}, {"u'00", "1"},   {"u0-1", "0"},  {"u-10", "0"},
        {"p10", "0"},  {"l01", "0"},    {"p01", "p1"},  {"l10", "l1"},
        {"p'11", "p11"}, {"l'11", "l11"},
    };
}

std::optional<FieldElem> dkq_coord(const DkqVertex& u, int row, int col, bool primed) {
    const std::uint64_t q = u.q();
    if (primed) {
        if (row == 0 && col == 0) return FieldElem::one(q);
        if (row == 1 && col == 1) return u.coords[1];
    } else {
        if (row == 0 && col == 0) return -FieldElem::one(q);
        if ((row == 0 && col == -1) || (row == -1 && col == 0)) return FieldElem::zero(q);
        if (row == 0 && col == 1) return u.side == DkqSide::point ? u.coords[0] : FieldElem::zero(q);
        if (row == 1 && col == 0) return u.side == DkqSide::line ? u.coords[0] : FieldElem::zero(q);
    }
    int pos = CoordSchema::position_in(u.k(), row, col, primed);
    if (pos < 0) return std::nullopt;
    return u.coords[static_cast<std::size_t>(pos)];
}

DkqVertex dkq_neighbor(const DkqVertex& u, const FieldElem& t) {
    const int k = u.k();
    const std::uint64_t q = u.q();
    if (t.modulus() != q) throw std::invalid_argument("dkq_neighbor: modulus mismatch");
    if (k < 4) throw std::invalid_argument("dkq_neighbor: k must be at least 4");

    DkqVertex v{opposite(u.side), std::vector<FieldElem>(static_cast<std::size_t>(k), FieldElem::zero(q))};
    v.coords[0] = t;

    const bool building_line = u.side == DkqSide::point;
    const DkqVertex& pt = building_line ? u : v;
    const DkqVertex& ln = building_line ? v : u;
    const FieldElem p1 = pt.coords[0];
    const FieldElem l1 = ln.coords[0];

    // Work through the four equalities in schema order; by the time a term
    // references the vertex under construction, it has been computed.
    for (int pos = 1; pos < k; ++pos) {
        const CoordSchema::Label lab = CoordSchema::label_at(pos);
        FieldElem rhs = FieldElem::zero(q);
        if (lab.primed) {
            // l'_{i,i} - p'_{i,i} = p1 * l_{i,i-1}
            rhs = p1 * dkq_coord(ln, lab.row, lab.row - 1).value();
        } else if (lab.row == lab.col) {
            // l_{i,i} - p_{i,i} = l1 * p_{i-1,i}
            rhs = l1 * dkq_coord(pt, lab.row - 1, lab.row).value();
        } else if (lab.col == lab.row + 1) {
            // l_{i,i+1} - p_{i,i+1} = p1 * l_{i,i}
            rhs = p1 * dkq_coord(ln, lab.row, lab.row).value();
        } else {
            // l_{i+1,i} - p_{i+1,i} = l1 * p'_{i,i}
            rhs = l1 * dkq_coord(pt, lab.col, lab.col, true).value();
        }
        const FieldElem& known = u.coords[static_cast<std::size_t>(pos)];
        v.coords[static_cast<std::size_t>(pos)] = building_line ? known + rhs : known - rhs;
    }
    return v;
}

int dkq_certificate_rank(int k) { return (k + 2) / 4; }

std::vector<FieldElem> dkq_certificate(const DkqVertex& u, int r) {
    const int k = u.k();
    if (r < 1 || r > dkq_certificate_rank(k))
        throw std::invalid_argument("dkq_certificate: r out of range for k=" + std::to_string(k));
    const std::uint64_t q = u.q();
    std::vector<FieldElem> out;
    for (int t = 2; t <= r; ++t) {
        FieldElem bt = FieldElem::zero(q);
        for (int i = 0; i <= t; ++i) {
            FieldElem diag = dkq_coord(u, i, i).value();
            FieldElem diagp = dkq_coord(u, t - i, t - i, true).value();
            FieldElem upper = dkq_coord(u, i, i + 1).value();
            FieldElem lower = dkq_coord(u, t - i, t - i - 1).value();
            bt = bt + diag * diagp - upper * lower;
        }
        out.push_back(bt);
    }
    return out;
}

DkqGraph::DkqGraph(int k, std::uint64_t q) : k_(k), q_(q), schema_(CoordSchema::make(k)) {
    if (!is_probable_prime(q)) throw std::invalid_argument("DkqGraph: q must be prime");
    double bits = static_cast<double>(k) * std::log2(static_cast<double>(q));
    if (bits > 40) throw std::invalid_argument("DkqGraph: q^k too large to index");
}

std::uint64_t DkqGraph::side_count() const {
    std::uint64_t n = 1;
    for (int i = 0; i < k_; ++i) n *= q_;
    return n;
}

DkqVertex DkqGraph::vertex(DkqSide side, std::uint64_t index) const {
    std::vector<FieldElem> coords(static_cast<std::size_t>(k_), FieldElem::zero(q_));
    for (int pos = k_ - 1; pos >= 0; --pos) {
        coords[static_cast<std::size_t>(pos)] = FieldElem(index % q_, q_);
        index /= q_;
    }
    return {side, std::move(coords)};
}

std::uint64_t DkqGraph::index(const DkqVertex& u) const {
    std::uint64_t x = 0;
    for (const auto& c : u.coords) x = x * q_ + c.value();
    return x;
}

DenseBipartiteGraph DkqGraph::materialize(std::size_t max_edges) const {
    std::uint64_t n = side_count();
    if (n * q_ > max_edges) throw std::invalid_argument("DkqGraph::materialize: too large");
    DenseBipartiteGraph g(static_cast<int>(n), static_cast<int>(n));
    for (std::uint64_t i = 0; i < n; ++i) {
        DkqVertex p = vertex(DkqSide::point, i);
        for (std::uint64_t t = 0; t < q_; ++t) {
            DkqVertex l = dkq_neighbor(p, FieldElem(t, q_));
            g.add_edge(static_cast<int>(i), static_cast<int>(index(l)));
        }
    }
    return g;
}

CdParams CdParams::make(int k, std::uint64_t q, std::vector<std::uint32_t> A, std::vector<std::uint32_t> B) {
    if (k < 7 || k % 2 == 0) throw std::invalid_argument("CdParams: k must be odd and >= 7");
    if (!is_probable_prime(q)) throw std::invalid_argument("CdParams: q must be prime");
    for (auto* s : {&A, &B}) {
        if (s->empty()) throw std::invalid_argument("CdParams: A and B must be nonempty");
        std::sort(s->begin(), s->end());
        s->erase(std::unique(s->begin(), s->end()), s->end());
        if (s->front() == 0 || s->back() >= q)
            throw std::invalid_argument("CdParams: A, B must be subsets of {1..q-1}");
    }
    CdParams p;
    p.k = k;
    p.q = q;
    p.A = std::move(A);
    p.B = std::move(B);
    p.r = dkq_certificate_rank(k);
    return p;
}

CdGraph::CdGraph(CdParams params) : params_(std::move(params)), schema_(CoordSchema::make(params_.k)) {
    const int r = params_.r;
    auto pos = [&](int row, int col, bool primed) {
        int p = schema_.position(row, col, primed);
        if (p < 0) throw std::logic_error("CdGraph: coefficient label outside truncation");
        return p;
    };

    // Point side: digits (a1, a2..ar, b2..br, c1..cr), derived (d2..dr).
    point_.digit_positions.push_back(pos(1, 1, false));
    for (int i = 2; i <= r; ++i) point_.digit_positions.push_back(pos(i, i, false));
    for (int i = 2; i <= r; ++i) point_.digit_positions.push_back(pos(i, i, true));
    point_.digit_positions.push_back(pos(1, 2, false));
    for (int i = 2; i <= r; ++i) point_.digit_positions.push_back(pos(i, i + 1, false));
    point_.derived_positions.push_back(pos(2, 1, false));
    for (int i = 3; i <= r; ++i) point_.derived_positions.push_back(pos(i, i - 1, false));

    // Line side: digits (a1, a2..ar, b2..br, d2..dr, cr), derived (c1..c_{r-1}).
    line_.digit_positions.push_back(pos(1, 1, false));
    for (int i = 2; i <= r; ++i) line_.digit_positions.push_back(pos(i, i, false));
    for (int i = 2; i <= r; ++i) line_.digit_positions.push_back(pos(i, i, true));
    line_.digit_positions.push_back(pos(2, 1, false));
    for (int i = 3; i <= r; ++i) line_.digit_positions.push_back(pos(i, i - 1, false));
    line_.digit_positions.push_back(pos(r, r + 1, false));
    line_.derived_positions.push_back(pos(1, 2, false));
    for (int i = 2; i <= r - 1; ++i) line_.derived_positions.push_back(pos(i, i + 1, false));

    // Free coordinates: everything not referenced by a polynomial coefficient.
    std::vector<bool> taken(static_cast<std::size_t>(params_.k), false);
    taken[0] = true;
    for (int p : point_.digit_positions) taken[static_cast<std::size_t>(p)] = true;
    for (int p : point_.derived_positions) taken[static_cast<std::size_t>(p)] = true;
    for (int p : line_.digit_positions) taken[static_cast<std::size_t>(p)] = true;
    for (int p : line_.derived_positions) taken[static_cast<std::size_t>(p)] = true;
    for (int p = 0; p < params_.k; ++p)
        if (!taken[static_cast<std::size_t>(p)]) free_positions_.push_back(p);

    point_.digit_positions.insert(point_.digit_positions.end(), free_positions_.begin(), free_positions_.end());
    line_.digit_positions.insert(line_.digit_positions.end(), free_positions_.begin(), free_positions_.end());

    const std::size_t n_digits = point_.digit_positions.size();
    if (line_.digit_positions.size() != n_digits) throw std::logic_error("CdGraph: side digit count mismatch");
    __int128 space = 1;
    for (std::size_t i = 0; i < n_digits; ++i) {
        space *= static_cast<__int128>(params_.q);
        if (space > (static_cast<__int128>(1) << 62)) throw std::invalid_argument("CdGraph: index space too large");
    }
    coeff_space_ = static_cast<std::uint64_t>(space);
}

std::uint64_t CdGraph::vertex_count(DkqSide side) const {
    std::uint64_t sel = side == DkqSide::point ? params_.A.size() : params_.B.size();
    return sel * coeff_space_;
}

std::uint64_t CdGraph::closed_form_count(DkqSide side) const {
    std::uint64_t sel = side == DkqSide::point ? params_.A.size() : params_.B.size();
    __int128 n = sel;
    for (int i = 0; i < params_.k + 1 - params_.r; ++i) n *= static_cast<__int128>(params_.q);
    if (n > (static_cast<__int128>(1) << 62)) return 0;  // overflow; count not representable
    return static_cast<std::uint64_t>(n);
}

int CdGraph::degree(DkqSide side) const {
    return static_cast<int>(side == DkqSide::point ? params_.B.size() : params_.A.size());
}

DkqVertex CdGraph::decode(DkqSide side, std::uint64_t i) const {
    const auto& sel_set = side == DkqSide::point ? params_.A : params_.B;
    const auto& lay = layout(side);
    std::uint64_t sel_idx = i / coeff_space_;
    std::uint64_t rest = i % coeff_space_;
    DkqVertex u{side, std::vector<FieldElem>(static_cast<std::size_t>(params_.k), FieldElem::zero(params_.q))};
    u.coords[0] = FieldElem(sel_set[static_cast<std::size_t>(sel_idx)], params_.q);
    for (std::size_t d = lay.digit_positions.size(); d-- > 0;) {
        u.coords[static_cast<std::size_t>(lay.digit_positions[d])] = FieldElem(rest % params_.q, params_.q);
        rest /= params_.q;
    }
    return u;
}

// Reconstructs the polynomial-determined coordinates from the free ones.
// Point side: D_u = (A_u B_u + 1) C_u^{-1}; line side: with C_u = x*Chat
// and D_u = x*Dhat, Chat = ((A_u B_u + 1)/x^2) * Dhat^{-1} mod x^{r-1}.
std::vector<FieldElem> CdGraph::derived_values(const DkqVertex& u) const {
    const int r = params_.r;
    const std::uint64_t q = params_.q;
    TruncPoly a = TruncPoly::zero(q, r);
    TruncPoly b = TruncPoly::zero(q, r);
    for (int i = 0; i <= r; ++i) {
        a.set(i, dkq_coord(u, i, i).value());
        b.set(i, dkq_coord(u, i, i, true).value());
    }
    TruncPoly ab1 = a * b + TruncPoly::one(q, r);
    std::vector<FieldElem> out;
    if (u.side == DkqSide::point) {
        TruncPoly c = TruncPoly::zero(q, r);
        for (int i = 0; i <= r; ++i) c.set(i, dkq_coord(u, i, i + 1).value());
        TruncPoly d = ab1 * c.inverse();
        if (!d[0].is_zero() || !d[1].is_zero())
            throw std::logic_error("CdGraph: point solve produced nonzero d0/d1");
        for (int i = 2; i <= r; ++i) out.push_back(d[i]);
    } else {
        // Dhat has coefficients d_1..d_r; only d_1..d_{r-1} matter mod x^{r-1}.
        TruncPoly dhat = TruncPoly::zero(q, r - 2);
        for (int i = 0; i <= r - 2; ++i) dhat.set(i, dkq_coord(u, i + 1, i).value());
        TruncPoly f = TruncPoly::zero(q, r - 2);
        for (int i = 0; i <= r - 2; ++i) f.set(i, ab1[i + 2]);
        TruncPoly chat = f * dhat.inverse();
        for (int i = 0; i <= r - 2; ++i) out.push_back(chat[i]);  // c_1..c_{r-1}
    }
    return out;
}

void CdGraph::fill_derived(DkqVertex& u) const {
    const auto& lay = layout(u.side);
    std::vector<FieldElem> vals = derived_values(u);
    for (std::size_t i = 0; i < vals.size(); ++i)
        u.coords[static_cast<std::size_t>(lay.derived_positions[i])] = vals[i];
}

DkqVertex CdGraph::index_to_vertex(DkqSide side, std::uint64_t i) const {
    if (i >= vertex_count(side)) throw std::out_of_range("CdGraph::index_to_vertex: index out of range");
    DkqVertex u = decode(side, i);
    fill_derived(u);
    return u;
}

std::uint64_t CdGraph::vertex_to_index(const DkqVertex& u) const {
    if (u.k() != params_.k || u.q() != params_.q)
        throw std::invalid_argument("CdGraph::vertex_to_index: wrong k or q");
    const auto& sel_set = u.side == DkqSide::point ? params_.A : params_.B;
    const auto& lay = layout(u.side);
    auto it = std::lower_bound(sel_set.begin(), sel_set.end(), static_cast<std::uint32_t>(u.coords[0].value()));
    if (it == sel_set.end() || *it != u.coords[0].value())
        throw NotInComponentError("CdGraph: first coordinate not in the selector set");
    std::vector<FieldElem> vals = derived_values(u);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (u.coords[static_cast<std::size_t>(lay.derived_positions[i])] != vals[i])
            throw NotInComponentError("CdGraph: vertex has nonzero certificate");
    }
    std::uint64_t idx = static_cast<std::uint64_t>(it - sel_set.begin());
    for (int p : lay.digit_positions) idx = idx * params_.q + u.coords[static_cast<std::size_t>(p)].value();
    return idx;
}

bool CdGraph::is_member(const DkqVertex& u) const {
    const auto& sel_set = u.side == DkqSide::point ? params_.A : params_.B;
    if (!std::binary_search(sel_set.begin(), sel_set.end(), static_cast<std::uint32_t>(u.coords[0].value())))
        return false;
    for (const auto& b : dkq_certificate(u, params_.r))
        if (!b.is_zero()) return false;
    return true;
}

std::uint64_t CdGraph::neighbor(DkqSide side, std::uint64_t i, int slot) const {
    if (slot < 0 || slot >= degree(side)) throw std::out_of_range("CdGraph::neighbor: slot out of range");
    DkqVertex u = index_to_vertex(side, i);
    std::uint32_t t = side == DkqSide::point ? params_.B[static_cast<std::size_t>(slot)]
                                             : params_.A[static_cast<std::size_t>(slot)];
    DkqVertex v = dkq_neighbor(u, FieldElem(t, params_.q));
    return vertex_to_index(v);
}

DenseBipartiteGraph CdGraph::materialize(std::size_t max_edges) const {
    std::uint64_t nu = vertex_count(DkqSide::point);
    std::uint64_t nv = vertex_count(DkqSide::line);
    int d = degree(DkqSide::point);
    if (nu * static_cast<std::uint64_t>(d) > max_edges)
        throw std::invalid_argument("CdGraph::materialize: too large");
    DenseBipartiteGraph g(static_cast<int>(nu), static_cast<int>(nv));
    for (std::uint64_t i = 0; i < nu; ++i)
        for (int s = 0; s < d; ++s) g.add_edge(static_cast<int>(i), static_cast<int>(neighbor(DkqSide::point, i, s)));
    return g;
}

std::string CdGraph::manifest_json() const {
    std::ostringstream os;
    auto set_json = [](const std::vector<std::uint32_t>& s) {
        std::ostringstream o;
        o << '[';
        for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
        o << ']';
        return o.str();
    };
    std::uint64_t u_enum = vertex_count(DkqSide::point);
    std::uint64_t v_enum = vertex_count(DkqSide::line);
    std::uint64_t u_closed = closed_form_count(DkqSide::point);
    std::uint64_t v_closed = closed_form_count(DkqSide::line);
    os << "{\"kind\":\"cd\",\"k\":" << params_.k << ",\"q\":" << params_.q << ",\"A\":" << set_json(params_.A)
       << ",\"B\":" << set_json(params_.B) << ",\"r\":" << params_.r << ",\"r_rule\":\"floor((k+2)/4)\""
       << ",\"count_points_enumerated\":" << u_enum << ",\"count_points_closed_form\":" << u_closed
       << ",\"count_lines_enumerated\":" << v_enum << ",\"count_lines_closed_form\":" << v_closed
       << ",\"closed_form_matches\":" << ((u_enum == u_closed && v_enum == v_closed) ? "true" : "false") << "}";
    return os.str();
}

}  // namespace forge
