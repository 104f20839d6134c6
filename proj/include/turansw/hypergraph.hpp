#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "turansw/rational.hpp"
#include "turansw/two_graph.hpp"

namespace turansw {

// r-uniform edge set on n labeled vertices; edges kept sorted (as sorted
// vertex lists in lex order) and mirrored as bitmasks for subset scans.
class Hypergraph {
public:
    Hypergraph(int n, int r);
    static Hypergraph from_edges(int n, int r, const std::vector<std::vector<int>>& edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    long long edge_count() const { return static_cast<long long>(masks_.size()); }
    bool contains(uint32_t mask) const;
    void add_edge_mask(uint32_t mask);  // popcount must equal r
    const std::vector<uint32_t>& edge_masks() const { return masks_; }
    std::vector<std::vector<int>> edges() const;

    bool operator==(const Hypergraph& rhs) const;

private:
    int n_, r_;
    std::vector<uint32_t> masks_;  // sorted ascending
};

// Edges are exactly the r-subsets A of V(G) whose restriction G|_A is
// isomorphic to g. 3 <= r < n, r within the canonical-form budget.
Hypergraph pattern_hypergraph(const OrientedTwoGraph& G, const OrientedTwoGraph& g);

struct TriangleFreeResult {
    bool triangle_free = false;
    std::optional<std::vector<int>> witness;  // an (r+1)-set spanning >= 3 edges
};

// No r+1 vertices span three edges (no copy of the r-triangle).
TriangleFreeResult triangle_free_check(const Hypergraph& h);

struct DeCaenResult {
    long long edge_count = 0;
    Rational bound;        // (n/r^2) * C(n, r-1)
    bool tight = false;    // edge_count equals the bound
    bool design_ok = false;  // every (r-1)-set lies in exactly n/r edges (needs r | n)
};
DeCaenResult decaen_check(const Hypergraph& h);

// Distribution of the number of edges spanned by k-sets, over all C(n,k).
std::map<long long, long long> span_profile(const Hypergraph& h, int k);

// Lambda when every t-subset lies in exactly lambda edges, otherwise nothing.
std::optional<long long> design_parameters(const Hypergraph& h, int t);

}  // namespace turansw
