#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forge/field.hpp"
#include "forge/graph.hpp"

namespace forge {

enum class DkqSide { point, line };

inline DkqSide opposite(DkqSide s) { return s == DkqSide::point ? DkqSide::line : DkqSide::point; }

// Coordinate layout of a point/line vector: positions 0..k-1 hold
// u1, u_{1,1}, u_{1,2}, u_{2,1}, then blocks (u_{i,i}, u'_{i,i},
// u_{i,i+1}, u_{i+1,i}) for i = 2,3,... truncated at k entries.
struct CoordSchema {
    struct Label {
        int row;
        int col;
        bool primed;
        bool first;  // the u1 coordinate
    };

    int k = 0;
    std::vector<Label> labels;

    static CoordSchema make(int k);  // throws for k < 4

    // Label stored at a given position (formula, no allocation).
    static Label label_at(int pos);

    // Position of u_{row,col} (or u'_{row,row}) in the truncated vector,
    // or -1 when the label is outside the truncation. The u1 coordinate
    // is position 0 and is not addressed by (row, col).
    static int position_in(int k, int row, int col, bool primed);
    int position(int row, int col, bool primed) const { return position_in(k, row, col, primed); }

    // Human-readable label names, e.g. {"p1","p11","p12","p21","p22","p'22",...}.
    std::vector<std::string> label_names(char side_char) const;

    // The boundary-constant conventions shared by the incidence relation
    // and the certificate: name -> value ("p1"/"l1" mean the first coord).
    static std::vector<std::pair<std::string, std::string>> boundary_constants();
};

struct DkqVertex {
    DkqSide side;
    std::vector<FieldElem> coords;  // size k

    int k() const { return static_cast<int>(coords.size()); }
    std::uint64_t q() const { return coords.front().modulus(); }
};

// Value of u_{row,col} (primed: u'_{row,row}), applying the boundary
// constants; nullopt when the label falls outside the k-truncation.
std::optional<FieldElem> dkq_coord(const DkqVertex& u, int row, int col, bool primed = false);

// The unique opposite-side vertex v with v1 = t and (u, v) incident,
// obtained by iterating the four incidence equalities in schema order.
DkqVertex dkq_neighbor(const DkqVertex& u, const FieldElem& t);

// r-certificate (b_2 .. b_r); b_t is the x^t coefficient of
// A_u(x)B_u(x) - C_u(x)D_u(x) over Z_q[x]/(x^{r+1}).
std::vector<FieldElem> dkq_certificate(const DkqVertex& u, int r);

int dkq_certificate_rank(int k);  // floor((k+2)/4)

// Whole D(k,q): q^k vertices per side, (q,q)-biregular, girth >= k+4.
class DkqGraph {
public:
    DkqGraph(int k, std::uint64_t q);

    int k() const { return k_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t side_count() const;  // q^k

    DkqVertex vertex(DkqSide side, std::uint64_t index) const;
    std::uint64_t index(const DkqVertex& u) const;

    DenseBipartiteGraph materialize(std::size_t max_edges = 50'000'000) const;

private:
    int k_;
    std::uint64_t q_;
    CoordSchema schema_;
};

struct CdParams {
    int k = 0;               // odd, >= 7
    std::uint64_t q = 0;     // prime
    std::vector<std::uint32_t> A;  // nonempty subsets of Z_q \ {0}, kept sorted
    std::vector<std::uint32_t> B;
    int r = 0;               // floor((k+2)/4)

    static CdParams make(int k, std::uint64_t q, std::vector<std::uint32_t> A, std::vector<std::uint32_t> B);
};

struct NotInComponentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strongly explicit CD(k,q,A,B): the all-zero-certificate component
// restricted to first coordinates in A (points) / B (lines), with index
// bijections f_U, f_V and a polylog-time neighbor oracle.
class CdGraph {
public:
    explicit CdGraph(CdParams params);

    const CdParams& params() const { return params_; }

    // Count from the enumerated bijection structure: |sel| * q^(3r-1) * q^(#free).
    std::uint64_t vertex_count(DkqSide side) const;
    // The paper's closed form |sel| * q^(k+1-r), evaluated alongside.
    std::uint64_t closed_form_count(DkqSide side) const;

    int degree(DkqSide side) const;  // |B| for points, |A| for lines

    DkqVertex index_to_vertex(DkqSide side, std::uint64_t i) const;   // f_U / f_V
    std::uint64_t vertex_to_index(const DkqVertex& u) const;          // throws NotInComponentError

    // Membership by definition: first coordinate in A/B and zero certificate.
    bool is_member(const DkqVertex& u) const;

    // Index of the slot-th neighbor (slot < degree(side)).
    std::uint64_t neighbor(DkqSide side, std::uint64_t i, int slot) const;

    DenseBipartiteGraph materialize(std::size_t max_edges = 50'000'000) const;

    std::string manifest_json() const;

private:
    struct SideLayout {
        std::vector<int> digit_positions;    // after the selector, in fixed order
        std::vector<int> derived_positions;  // reconstructed from the polynomial solve
    };

    DkqVertex decode(DkqSide side, std::uint64_t i) const;
    void fill_derived(DkqVertex& u) const;
    std::vector<FieldElem> derived_values(const DkqVertex& u) const;

    const SideLayout& layout(DkqSide side) const { return side == DkqSide::point ? point_ : line_; }

    CdParams params_;
    CoordSchema schema_;
    SideLayout point_;
    SideLayout line_;
    std::vector<int> free_positions_;  // shared by both sides, schema order
    std::uint64_t coeff_space_;        // q^(3r-1+#free)
};

}  // namespace forge
