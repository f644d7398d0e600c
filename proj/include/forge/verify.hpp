#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forge/graph.hpp"
#include "forge/rng.hpp"

namespace forge {

// ---- girth and bicycle-freeness -------------------------------------------

struct Girth {
    bool infinite = false;
    int value = 0;  // meaningful only when !infinite

    bool at_least(int g) const { return infinite || value >= g; }
    bool operator==(const Girth& o) const { return infinite == o.infinite && (infinite || value == o.value); }
};

// Exact shortest cycle length via per-vertex BFS with cross-edge detection.
// Parallel edges count as 2-cycles.
Girth girth(const UndirectedGraph& g);
inline Girth girth(const DenseBipartiteGraph& g) { return girth(g.as_undirected()); }

// Independent oracle: shortest cycle through each edge (remove the edge,
// BFS the endpoint distance). Quadratic; for cross-checking small graphs.
Girth girth_reference(const UndirectedGraph& g);

struct BicycleResult {
    bool ok = false;
    int witness = -1;  // first vertex whose radius-r ball has 2+ cycles
};

// r-bicycle-freeness: the ball N^r(v) induces at most one cycle for every
// v. Balls are connected, so this is |E(ball)| <= |V(ball)|.
BicycleResult is_bicycle_free(const UndirectedGraph& g, int r);

// Largest r <= cap for which g is r-bicycle-free (0 if not even r=1... r=0
// is vacuously true and returned as 0).
int max_bicycle_free_radius(const UndirectedGraph& g, int cap);

// ---- unique neighbors ------------------------------------------------------

// Exact unique-neighbor set of S (subset of `side`), multiplicity-aware:
// an opposite-side vertex with e(v,S) = 1.
std::vector<int> unique_neighbors(const DenseBipartiteGraph& g, Side side, const std::vector<int>& S);

// |N(S)| and |UN(S)| in one pass; asserts |UN| <= |N| <= sum deg.
struct NeighborCounts {
    long neighbors = 0;
    long unique = 0;
};
NeighborCounts neighbor_counts(const std::vector<std::vector<int>>& side_adj, int n_opposite,
                               const std::vector<int>& S);

// ---- expansion audits ------------------------------------------------------

enum class AuditThreshold { neighbor_ratio, unique_neighbor_ratio };

struct AuditSizeResult {
    int t = 0;
    bool exhaustive = false;
    long checked = 0;
    double worst_ratio = 0.0;       // min over sets of |N(S)|/|S| (or UN)
    double threshold = 0.0;
    std::vector<int> witness;       // worst set (always recorded)
    bool pass = true;
};

struct AuditReport {
    std::string kind;
    std::uint64_t graph_checksum = 0;
    std::string params_json = "{}";
    std::vector<AuditSizeResult> sizes;
    bool pass = true;
    bool vacuous = false;           // no admissible sizes (bound < 1)
    double wall_ms = 0.0;

    std::string to_json() const;
};

struct ExpansionAuditConfig {
    Side side = Side::left;
    long size_bound = 0;            // audit t = 1..size_bound
    AuditThreshold kind = AuditThreshold::neighbor_ratio;
    double epsilon = 0.0;           // neighbor-ratio: |N(S)| >= (1-eps) d |S|
    double delta = 0.0;             // unique-neighbor-ratio: |UN(S)| >= delta d |S|
    std::uint64_t seed = 0;
    long exhaustive_budget = 2'000'000;  // max subsets per size before sampling
    long samples_per_size = 10'000;
};

AuditReport expansion_audit(const DenseBipartiteGraph& g, const ExpansionAuditConfig& cfg);

// Size bound from the girth-to-expansion reduction: the proof constant is
// delta = (eps*d/d' - 1)/5 and the bound delta * g * d'^floor(g/4).
// Requires 1 < d' < eps*d; throws otherwise. `g` is girth minus one.
long girth_expansion_size_bound(double epsilon, double d, double dprime, int g);

// ---- simple path counting ---------------------------------------------------

// Exact number of simple paths of length exactly 2k with both endpoints in
// the left side, each undirected path counted once. Refuses when the
// walk-based estimate exceeds 10^8.
long count_lr_simple_paths(const DenseBipartiteGraph& g, int two_k);

// ---- spectral ----------------------------------------------------------------

struct SpectralReport {
    double top = 0.0;
    double lambda2 = 0.0;   // nontrivial second value; bipartite: +-top excluded
    std::string method;     // "dense" | "iterative"
    double residual = 0.0;
    bool connected = false;

    std::string to_json() const;
};

// Nontrivial second-largest adjacency eigenvalue magnitude. Bipartite
// inputs use singular values of the biadjacency (dense to ~3000 vertices,
// then power iteration with deflation, residual tolerance 1e-8).
SpectralReport lambda2(const DenseBipartiteGraph& g);
SpectralReport lambda2(const UndirectedGraph& g);

// Full adjacency spectrum, descending (dense solver; small graphs).
std::vector<double> dense_spectrum(const UndirectedGraph& g);

// All singular values of the biadjacency, descending.
std::vector<double> biadjacency_singular_values(const DenseBipartiteGraph& g);

// ---- subgraph density and Bethe-Hessian -------------------------------------

struct DensityCheck {
    bool pass = false;
    bool degenerate = false;  // empty induced edge set or an empty side
    double d_left = 0.0, d_right = 0.0;
    double lhs = 0.0, rhs = 0.0;
};

// Inequality (d_L-1)(d_R-1) <= lambda^2 - (sqrt(c-1)-sqrt(d-1))^2 with
// lambda = max(lambda2, sqrt(c-1)+sqrt(d-1))*(1+5 eps), evaluated on the
// subgraph induced by S (vertex ids of the undirected view: right side
// offset by n_left). No size gate.
DensityCheck subgraph_density_inequality(const DenseBipartiteGraph& g, const std::vector<int>& S,
                                         double lambda2_value, int c, int d, double epsilon);

// Full check with the theorem preconditions: 2 <= c <= d, cd > 6,
// 0 < eps < 0.01 and |S| <= d^(-1/eps) |V|. Violations throw
// std::invalid_argument naming the clause.
DensityCheck subgraph_density_check(const DenseBipartiteGraph& g, const std::vector<int>& S,
                                    double lambda2_value, int c, int d, double epsilon);

// Positive definiteness of H_{G[S]}(t) = (D-I)t^2 - At + I via LDL^T with
// pivot tolerance 1e-12.
bool bethe_hessian_pd(const UndirectedGraph& g, const std::vector<int>& S, double t);

// Average left/right degrees of the bipartite graph induced by S.
struct InducedDegrees {
    bool degenerate = false;
    double d_left = 0.0, d_right = 0.0;
};
InducedDegrees induced_average_degrees(const DenseBipartiteGraph& g, const std::vector<int>& S);

int worker_count();  // FORGE_WORKERS, default 1

}  // namespace forge
