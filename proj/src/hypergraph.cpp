#include "turansw/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "turansw/util.hpp"

namespace turansw {

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    if (r < 2 || r > n) throw std::invalid_argument("uniformity out of range");
}

Hypergraph Hypergraph::from_edges(int n, int r, const std::vector<std::vector<int>>& edges) {
    Hypergraph h(n, r);
    for (const auto& e : edges) {
        uint32_t m = 0;
        for (int v : e) {
            if (v < 0 || v >= n) throw std::invalid_argument("edge vertex out of range");
            m |= 1u << v;
        }
        h.add_edge_mask(m);
    }
    return h;
}

bool Hypergraph::contains(uint32_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

void Hypergraph::add_edge_mask(uint32_t mask) {
    if (std::popcount(mask) != r_) throw std::invalid_argument("edge size != uniformity");
    auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
    if (it != masks_.end() && *it == mask) throw std::invalid_argument("duplicate edge");
    masks_.insert(it, mask);
}

std::vector<std::vector<int>> Hypergraph::edges() const {
    // numeric mask order is colex; reports want lex order of the vertex lists
    std::vector<std::vector<int>> out;
    out.reserve(masks_.size());
    for (uint32_t m : masks_) {
        std::vector<int> e;
        for (int v = 0; v < n_; ++v)
            if ((m >> v) & 1u) e.push_back(v);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Hypergraph::operator==(const Hypergraph& rhs) const {
    return n_ == rhs.n_ && r_ == rhs.r_ && masks_ == rhs.masks_;
}

Hypergraph pattern_hypergraph(const OrientedTwoGraph& G, const OrientedTwoGraph& g) {
    const int n = G.size();
    const int r = g.size();
    if (!(3 <= r && r < n)) throw std::invalid_argument("need 3 <= r < n");
    const auto target = g.canonical_form();
    Hypergraph h(n, r);
    for_each_combination(n, r, [&](const std::vector<int>& A) {
        if (G.restriction(A).canonical_form() == target) {
            uint32_t m = 0;
            for (int v : A) m |= 1u << v;
            h.add_edge_mask(m);
        }
    });
    return h;
}

TriangleFreeResult triangle_free_check(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int r = h.uniformity();
    TriangleFreeResult res;
    res.triangle_free = true;
    if (r + 1 > n) return res;

    std::unordered_set<uint32_t> edge_set(h.edge_masks().begin(), h.edge_masks().end());
    bool done = false;
    for_each_combination(n, r + 1, [&](const std::vector<int>& S) {
        if (done) return;
        int inside = 0;
        uint32_t full = 0;
        for (int v : S) full |= 1u << v;
        for (int v : S)
            if (edge_set.count(full & ~(1u << v))) ++inside;
        if (inside >= 3) {
            res.triangle_free = false;
            res.witness = S;
            done = true;
        }
    });
    return res;
}

DeCaenResult decaen_check(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int r = h.uniformity();
    DeCaenResult res;
    res.edge_count = h.edge_count();
    res.bound = Rational(n, checked_mul(r, r)) * Rational(binomial(n, r - 1));
    res.tight = Rational(res.edge_count) == res.bound;
    if (n % r == 0) {
        auto lambda = design_parameters(h, r - 1);
        res.design_ok = lambda.has_value() && *lambda == n / r;
    }
    return res;
}

std::map<long long, long long> span_profile(const Hypergraph& h, int k) {
    const int n = h.vertex_count();
    if (k < h.uniformity() || k > n) throw std::invalid_argument("span_profile: k out of range");
    std::map<long long, long long> hist;
    for_each_combination(n, k, [&](const std::vector<int>& S) {
        uint32_t full = 0;
        for (int v : S) full |= 1u << v;
        long long inside = 0;
        for (uint32_t e : h.edge_masks())
            if ((e & ~full) == 0) ++inside;
        ++hist[inside];
    });
    return hist;
}

std::optional<long long> design_parameters(const Hypergraph& h, int t) {
    const int n = h.vertex_count();
    if (t < 1 || t >= h.uniformity()) throw std::invalid_argument("design_parameters: t out of range");
    long long lambda = -1;
    bool uniform = true;
    for_each_combination(n, t, [&](const std::vector<int>& S) {
        if (!uniform) return;
        uint32_t m = 0;
        for (int v : S) m |= 1u << v;
        long long c = 0;
        for (uint32_t e : h.edge_masks())
            if ((e & m) == m) ++c;
        if (lambda == -1) lambda = c;
        if (c != lambda) uniform = false;
    });
    if (!uniform) return std::nullopt;
    return lambda;
}

}  // namespace turansw
