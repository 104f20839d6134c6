#include "turansw/tournament.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "turansw/util.hpp"

namespace turansw {

namespace {
void check_vertex(const Tournament& t, int v) {
    if (v < 0 || v >= t.size()) throw std::invalid_argument("vertex out of range");
}
}  // namespace

Tournament::Tournament(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) row_[i] |= 1u << j;
}

Tournament Tournament::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Tournament t(n);
    if (static_cast<int>(edges.size()) != pair_count(n))
        throw std::invalid_argument("edge list does not cover every pair once");
    std::vector<bool> covered(pair_count(n), false);
    for (auto [x, y] : edges) {
        check_vertex(t, x);
        check_vertex(t, y);
        if (x == y) throw std::invalid_argument("loop edge");
        int idx = pair_index(n, std::min(x, y), std::max(x, y));
        if (covered[idx]) throw std::invalid_argument("duplicate pair in edge list");
        covered[idx] = true;
        t.set_edge(x, y);
    }
    return t;
}

int Tournament::edge_sign(int x, int y) const {
    check_vertex(*this, x);
    check_vertex(*this, y);
    if (x == y) throw std::invalid_argument("edge_sign needs distinct vertices");
    return has_edge(x, y) ? 1 : -1;
}

void Tournament::set_edge(int x, int y) {
    check_vertex(*this, x);
    check_vertex(*this, y);
    if (x == y) throw std::invalid_argument("loop edge");
    row_[x] |= 1u << y;
    row_[y] &= ~(1u << x);
}

int Tournament::out_degree(int v) const {
    check_vertex(*this, v);
    return std::popcount(row_[v]);
}

Tournament Tournament::switched(uint32_t subset_mask) const {
    Tournament t(*this);
    const uint32_t all = (n_ == 32) ? ~0u : ((1u << n_) - 1);
    subset_mask &= all;
    for (int v = 0; v < n_; ++v) {
        const uint32_t other = (subset_mask >> v) & 1u ? all & ~subset_mask : subset_mask;
        // edges between v and `other` flip orientation
        t.row_[v] = (row_[v] & ~other) | (~row_[v] & other & all & ~(1u << v));
    }
    return t;
}

Tournament Tournament::switched(const std::vector<int>& subset) const {
    uint32_t m = 0;
    for (int v : subset) {
        check_vertex(*this, v);
        m |= 1u << v;
    }
    return switched(m);
}

Tournament Tournament::augmented() const {
    if (n_ + 1 > kMaxVertices) throw std::invalid_argument("augmented: capacity exceeded");
    Tournament t(n_ + 1);
    for (int i = 0; i < n_; ++i) t.row_[i] = row_[i] | (1u << n_);
    t.row_[n_] = 0;
    return t;
}

Tournament Tournament::induced(const std::vector<int>& S) const {
    const int m = static_cast<int>(S.size());
    if (m < 1) throw std::invalid_argument("induced: empty subset");
    uint32_t seen = 0;
    for (int v : S) {
        check_vertex(*this, v);
        if ((seen >> v) & 1u) throw std::invalid_argument("induced: duplicate vertex");
        seen |= 1u << v;
    }
    Tournament t(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && has_edge(S[i], S[j])) t.set_edge(i, j);
    return t;
}

Tournament Tournament::relabeled(const Permutation& sigma) const {
    if (sigma.size() != n_) throw std::invalid_argument("relabeled: size mismatch");
    Tournament t(n_);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (x != y && has_edge(x, y)) t.set_edge(sigma(x), sigma(y));
    return t;
}

bool Tournament::operator==(const Tournament& rhs) const {
    if (n_ != rhs.n_) return false;
    return std::equal(row_.begin(), row_.begin() + n_, rhs.row_.begin());
}

bool Tournament::operator<(const Tournament& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return std::lexicographical_compare(row_.begin(), row_.begin() + n_, rhs.row_.begin(),
                                        rhs.row_.begin() + n_);
}

std::vector<uint8_t> Tournament::pair_bytes() const {
    std::vector<uint8_t> out((pair_count(n_) + 7) / 8, 0);
    int idx = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j, ++idx)
            if (has_edge(i, j)) out[idx / 8] |= uint8_t(0x80u >> (idx % 8));
    return out;
}

Tournament Tournament::from_pair_bytes(int n, const std::vector<uint8_t>& bytes) {
    if (static_cast<int>(bytes.size()) != (pair_count(n) + 7) / 8)
        throw std::invalid_argument("pair byte length mismatch");
    Tournament t(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx) {
            bool bit = (bytes[idx / 8] >> (7 - idx % 8)) & 1u;
            if (bit)
                t.set_edge(i, j);
            else
                t.set_edge(j, i);
        }
    return t;
}

// ---------------------------------------------------------------------------
// Canonical labeling: depth-first search for the relabeling minimizing the
// pair-order bit string. Position 0 is forced to a vertex of maximum
// in-degree (the minimal first row is 0^indeg 1^outdeg), positions inside
// row 0 are forced to respect the in/out split of that vertex, and partial
// assignments are cut against the best-known encoding: unknown bits read as
// 0, so a partial string already greater than the best cannot improve.

namespace {

constexpr int kEncWords = 2;  // C(12,2) = 66 bits

struct CanonSearch {
    const Tournament& t;
    int n;
    std::array<std::array<int, kCanonicalBudget>, kCanonicalBudget> pair_pos;
    std::array<int, kCanonicalBudget> pos2old{};
    std::array<uint64_t, kEncWords> opt{};
    std::array<uint64_t, kEncWords> best{};
    std::array<int, kCanonicalBudget> best_assign{};
    bool found = false;
    int anchor = -1;  // old vertex at position 0
    int anchor_indeg = 0;

    explicit CanonSearch(const Tournament& tt) : t(tt), n(tt.size()) {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx) pair_pos[i][j] = idx;
    }

    static bool words_greater(const std::array<uint64_t, kEncWords>& a,
                              const std::array<uint64_t, kEncWords>& b) {
        for (int w = 0; w < kEncWords; ++w) {
            if (a[w] != b[w]) return a[w] > b[w];
        }
        return false;
    }

    void dfs(int depth, uint32_t used) {
        if (depth == n) {
            if (!found || words_greater(best, opt)) {
                best = opt;
                best_assign = pos2old;
                found = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            if (depth == 0) {
                if (t.in_degree(v) != anchor_indeg) continue;
                anchor = v;
            } else {
                // keep row 0 at its minimum: in-neighbours of the anchor
                // fill positions 1..indeg, out-neighbours the rest
                bool is_in = t.has_edge(v, anchor);
                if (is_in != (depth <= anchor_indeg)) continue;
            }
            auto saved = opt;
            for (int q = 0; q < depth; ++q) {
                if (t.has_edge(pos2old[q], v)) {
                    int p = pair_pos[q][depth];
                    opt[p / 64] |= 0x8000000000000000ull >> (p % 64);
                }
            }
            if (!found || !words_greater(opt, best)) {
                pos2old[depth] = v;
                dfs(depth + 1, used | (1u << v));
            }
            opt = saved;
        }
    }
};

}  // namespace

Tournament::CanonicalLabeling Tournament::canonical_labeling() const {
    if (n_ > kCanonicalBudget)
        throw std::invalid_argument("canonical_labeling: n exceeds backtracking budget");
    CanonSearch s(*this);
    int maxin = 0;
    for (int v = 0; v < n_; ++v) maxin = std::max(maxin, in_degree(v));
    s.anchor_indeg = maxin;
    s.dfs(0, 0);
    std::vector<int> to_canonical(n_);
    for (int p = 0; p < n_; ++p) to_canonical[s.best_assign[p]] = p;
    Permutation sigma(std::move(to_canonical));
    return {relabeled(sigma).pair_bytes(), sigma};
}

std::vector<uint8_t> Tournament::canonical_form() const { return canonical_labeling().form; }

// ---------------------------------------------------------------------------
// Automorphisms: map vertex 0, 1, ... in order; images must preserve
// in-degree and every edge into the already-mapped prefix.

namespace {

void aut_dfs(const Tournament& t, std::vector<int>& image, uint32_t used, int depth,
             std::vector<Permutation>& out) {
    const int n = t.size();
    if (depth == n) {
        out.emplace_back(image);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (t.in_degree(w) != t.in_degree(depth)) continue;
        bool ok = true;
        for (int q = 0; q < depth && ok; ++q)
            ok = t.has_edge(depth, q) == t.has_edge(w, image[q]);
        if (!ok) continue;
        image[depth] = w;
        aut_dfs(t, image, used | (1u << w), depth + 1, out);
    }
}

}  // namespace

std::vector<Permutation> Tournament::automorphism_group() const {
    if (n_ > kCanonicalBudget)
        throw std::invalid_argument("automorphism_group: n exceeds backtracking budget");
    std::vector<Permutation> out;
    std::vector<int> image(n_);
    aut_dfs(*this, image, 0, 0, out);
    if (out.size() % 2 == 0)
        throw std::logic_error("tournament automorphism group has even order");
    return out;
}

std::vector<int> indegree_switch_witness(const Tournament& t, int v, int target) {
    const int n = t.size();
    check_vertex(t, v);
    if (target < 0 || target > n - 1) throw std::invalid_argument("target in-degree out of range");

    std::vector<int> ins, outs;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        (t.has_edge(u, v) ? ins : outs).push_back(u);
    }
    const int d = static_cast<int>(ins.size());
    const int o = static_cast<int>(outs.size());

    // in-degree of v in T^X is |ins \ X| + |outs ∩ X|; pick a of the former,
    // b of the latter with (d - a) + b = target, smallest vertices first
    bool have = false;
    std::vector<int> bestX;
    for (int b = 0; b <= o; ++b) {
        int a = d - target + b;
        if (a < 0 || a > d) continue;
        std::vector<int> X(ins.begin(), ins.begin() + a);
        X.insert(X.end(), outs.begin(), outs.begin() + b);
        std::sort(X.begin(), X.end());
        if (!have || X < bestX) {
            bestX = std::move(X);
            have = true;
        }
    }
    if (!have) throw std::logic_error("no switching witness exists");  // unreachable
    if (t.switched(bestX).in_degree(v) != target)
        throw std::logic_error("switching witness failed verification");
    return bestX;
}

DoublyRegularCheck is_doubly_regular(const Tournament& t) {
    const int n = t.size();
    if (n < 3) throw std::invalid_argument("is_doubly_regular needs n >= 3");
    const int deg = t.out_degree(0);
    for (int v = 1; v < n; ++v)
        if (t.out_degree(v) != deg) return {};
    int common = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = std::popcount(t.out_mask(u) & t.out_mask(v));
            if (common == -1) common = c;
            if (c != common) return {};
        }
    if (deg != (n - 1) / 2 || common != (n - 3) / 4)
        throw std::logic_error("doubly regular tournament violates (n-1)/2, (n-3)/4");
    return {true, deg, common};
}

}  // namespace turansw
