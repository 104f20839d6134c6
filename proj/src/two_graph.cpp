#include "turansw/two_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "turansw/util.hpp"

namespace turansw {

namespace {
constexpr int kTwoGraphCanonicalBudget = 10;
constexpr int kTwoGraphAutBudget = 12;  // the Paley class on 12 vertices fits

// sorts three distinct values, returns the parity sign of the sort
int sort3(int& a, int& b, int& c) {
    int parity = 1;
    if (a > b) std::swap(a, b), parity = -parity;
    if (b > c) std::swap(b, c), parity = -parity;
    if (a > b) std::swap(a, b), parity = -parity;
    return parity;
}
}  // namespace

OrientedTwoGraph::OrientedTwoGraph(int n) : n_(n) {
    if (n < 3 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    bits_.assign((triple_count(n) + 63) / 64, 0);
    for (int t = 0; t < triple_count(n); ++t) bits_[t / 64] |= 0x8000000000000000ull >> (t % 64);
}

int OrientedTwoGraph::lex_sign(int i, int j, int k) const {
    int t = triple_index(n_, i, j, k);
    return (bits_[t / 64] >> (63 - t % 64)) & 1u ? 1 : -1;
}

void OrientedTwoGraph::set_lex_sign(int i, int j, int k, int sign) {
    int t = triple_index(n_, i, j, k);
    uint64_t m = 0x8000000000000000ull >> (t % 64);
    if (sign > 0)
        bits_[t / 64] |= m;
    else
        bits_[t / 64] &= ~m;
}

int OrientedTwoGraph::sign(int x, int y, int z) const {
    if (x == y || y == z || x == z) throw std::invalid_argument("sign needs distinct vertices");
    if (x < 0 || y < 0 || z < 0 || x >= n_ || y >= n_ || z >= n_)
        throw std::invalid_argument("vertex out of range");
    int parity = sort3(x, y, z);
    return parity * lex_sign(x, y, z);
}

bool OrientedTwoGraph::is_valid() const {
    // On a 4-set {x<y<z<w} the cocycle product g(x,y,z)g(y,x,w)g(z,y,w)g(x,z,w)
    // reduces to the product of the four stored lex signs.
    bool ok = true;
    for_each_combination(n_, 4, [&](const std::vector<int>& q) {
        int p = lex_sign(q[0], q[1], q[2]) * lex_sign(q[0], q[1], q[3]) *
                lex_sign(q[0], q[2], q[3]) * lex_sign(q[1], q[2], q[3]);
        if (p != 1) ok = false;
    });
    return ok;
}

OrientedTwoGraph OrientedTwoGraph::restriction(const std::vector<int>& W) const {
    const int m = static_cast<int>(W.size());
    if (m < 3) throw std::invalid_argument("restriction needs at least 3 vertices");
    for (int v : W)
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    OrientedTwoGraph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) g.set_lex_sign(i, j, k, sign(W[i], W[j], W[k]));
    return g;
}

OrientedTwoGraph OrientedTwoGraph::relabeled(const Permutation& sigma) const {
    if (sigma.size() != n_) throw std::invalid_argument("relabeled: size mismatch");
    OrientedTwoGraph g(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k) {
                int a = sigma(i), b = sigma(j), c = sigma(k);
                int parity = sort3(a, b, c);
                g.set_lex_sign(a, b, c, parity * lex_sign(i, j, k));
            }
    return g;
}

OrientedTwoGraph OrientedTwoGraph::negated() const {
    OrientedTwoGraph g(*this);
    for (auto& w : g.bits_) w = ~w;
    // clear padding past the last triple
    int pad = static_cast<int>(g.bits_.size()) * 64 - triple_count(n_);
    if (pad > 0) g.bits_.back() &= ~0ull << pad;
    return g;
}

bool OrientedTwoGraph::operator==(const OrientedTwoGraph& rhs) const {
    return n_ == rhs.n_ && bits_ == rhs.bits_;
}

bool OrientedTwoGraph::operator<(const OrientedTwoGraph& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    return bits_ < rhs.bits_;
}

std::vector<uint8_t> OrientedTwoGraph::sign_bytes() const {
    std::vector<uint8_t> out((triple_count(n_) + 7) / 8, 0);
    for (int t = 0; t < triple_count(n_); ++t)
        if ((bits_[t / 64] >> (63 - t % 64)) & 1u) out[t / 8] |= uint8_t(0x80u >> (t % 8));
    return out;
}

OrientedTwoGraph OrientedTwoGraph::from_sign_bytes(int n, const std::vector<uint8_t>& bytes) {
    if (static_cast<int>(bytes.size()) != (triple_count(n) + 7) / 8)
        throw std::invalid_argument("sign byte length mismatch");
    OrientedTwoGraph g(n);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t)
                g.set_lex_sign(i, j, k, (bytes[t / 8] >> (7 - t % 8)) & 1u ? 1 : -1);
    return g;
}

uint64_t OrientedTwoGraph::sign_word() const {
    if (triple_count(n_) > 64) throw std::invalid_argument("sign_word: too many triples");
    return bits_.empty() ? 0 : bits_[0];
}

// ---------------------------------------------------------------------------
// Canonical form search. Same idea as for tournaments: the first encoding
// block consists of the signs g(v0,v1,w), so (v0,v1) is forced to an ordered
// pair with the maximum number of -1 values in its link row and those -1
// vertices fill the early positions. Beyond that, partial encodings
// (unknown bits read as 0) are cut against the best complete encoding.

namespace {

struct TgCanonSearch {
    const OrientedTwoGraph& g;
    int n;
    int block_neg;  // forced count of -1 signs in the (v0,v1,*) block
    std::array<int, kTwoGraphCanonicalBudget> pos2old{};
    std::array<uint64_t, 2> opt{};
    std::array<uint64_t, 2> best{};
    bool found = false;

    explicit TgCanonSearch(const OrientedTwoGraph& gg) : g(gg), n(gg.size()) {}

    static bool greater(const std::array<uint64_t, 2>& a, const std::array<uint64_t, 2>& b) {
        if (a[0] != b[0]) return a[0] > b[0];
        return a[1] > b[1];
    }

    int link_neg_count(int a, int b) const {
        int c = 0;
        for (int w = 0; w < n; ++w)
            if (w != a && w != b && g.sign(a, b, w) < 0) ++c;
        return c;
    }

    void dfs(int depth, uint32_t used) {
        if (depth == n) {
            if (!found || greater(best, opt)) {
                best = opt;
                found = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            if (depth == 1 && link_neg_count(pos2old[0], v) != block_neg) continue;
            if (depth >= 2) {
                bool neg = g.sign(pos2old[0], pos2old[1], v) < 0;
                if (neg != (depth < 2 + block_neg)) continue;
            }
            auto saved = opt;
            for (int i = 0; i < depth; ++i)
                for (int j = i + 1; j < depth; ++j) {
                    if (g.sign(pos2old[i], pos2old[j], v) > 0) {
                        int t = triple_index(n, i, j, depth);
                        opt[t / 64] |= 0x8000000000000000ull >> (t % 64);
                    }
                }
            if (!found || !greater(opt, best)) {
                pos2old[depth] = v;
                dfs(depth + 1, used | (1u << v));
            }
            opt = saved;
        }
    }
};

}  // namespace

std::vector<uint8_t> OrientedTwoGraph::canonical_form() const {
    if (n_ > kTwoGraphCanonicalBudget)
        throw std::invalid_argument("canonical_form: n exceeds backtracking budget");
    TgCanonSearch s(*this);
    int best_neg = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b) best_neg = std::max(best_neg, s.link_neg_count(a, b));
    s.block_neg = best_neg;
    s.dfs(0, 0);

    std::vector<uint8_t> out((triple_count(n_) + 7) / 8, 0);
    for (int t = 0; t < triple_count(n_); ++t)
        if ((s.best[t / 64] >> (63 - t % 64)) & 1u) out[t / 8] |= uint8_t(0x80u >> (t % 8));
    return out;
}

namespace {

void tg_aut_dfs(const OrientedTwoGraph& g, std::vector<int>& image, uint32_t used, int depth,
                std::vector<Permutation>& out) {
    const int n = g.size();
    if (depth == n) {
        out.emplace_back(image);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        bool ok = true;
        for (int i = 0; i < depth && ok; ++i)
            for (int j = i + 1; j < depth && ok; ++j)
                ok = g.lex_sign(i, j, depth) == g.sign(image[i], image[j], w);
        if (!ok) continue;
        image[depth] = w;
        tg_aut_dfs(g, image, used | (1u << w), depth + 1, out);
    }
}

}  // namespace

std::vector<Permutation> OrientedTwoGraph::automorphism_group() const {
    if (n_ > kTwoGraphAutBudget)
        throw std::invalid_argument("automorphism_group: n exceeds backtracking budget");
    std::vector<Permutation> out;
    std::vector<int> image(n_);
    tg_aut_dfs(*this, image, 0, 0, out);
    return out;
}

// ---------------------------------------------------------------------------

OrientedTwoGraph two_graph_of(const Tournament& t) {
    const int n = t.size();
    if (n < 3) throw std::invalid_argument("two_graph_of needs n >= 3");
    OrientedTwoGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                g.set_lex_sign(i, j, k,
                               t.edge_sign(i, j) * t.edge_sign(j, k) * t.edge_sign(k, i));
    return g;
}

Tournament anchored_representative(const OrientedTwoGraph& g) {
    if (!g.is_valid()) throw std::invalid_argument("not an oriented two-graph");
    const int n = g.size();
    const int inf = n - 1;
    Tournament t(n);
    for (int x = 0; x < inf; ++x) t.set_edge(x, inf);
    for (int x = 0; x < inf; ++x)
        for (int y = 0; y < inf; ++y) {
            if (x == y) continue;
            if (g.sign(inf, y, x) > 0) t.set_edge(x, y);
        }
    return t;
}

std::vector<Tournament> class_members(const OrientedTwoGraph& g) {
    const int n = g.size();
    if (n > 12) throw std::invalid_argument("class_members: class too large to materialize");
    Tournament t0 = anchored_representative(g);
    std::vector<Tournament> out;
    out.reserve(1ull << (n - 1));
    for (uint32_t x = 0; x < (1u << (n - 1)); ++x) out.push_back(t0.switched(x));
    return out;
}

SwitchingClassStats switching_class_stats(const OrientedTwoGraph& g) {
    const int n = g.size();
    SwitchingClassStats st;
    st.class_size = 1ll << (n - 1);
    st.class_aut_order = static_cast<long long>(g.automorphism_group().size());

    std::map<std::vector<uint8_t>, long long> groups;
    for (const auto& m : class_members(g)) {
        auto cf = m.canonical_form();
        auto it = groups.find(cf);
        if (it == groups.end()) {
            long long aut = static_cast<long long>(
                Tournament::from_pair_bytes(n, cf).automorphism_group().size());
            groups.emplace(std::move(cf), aut);
        }
    }
    Rational acc(0);
    for (const auto& [cf, aut] : groups) {
        st.iso_reps.emplace_back(Tournament::from_pair_bytes(n, cf), aut);
        acc += Rational(1, aut);
    }
    st.iso_class_count = static_cast<long long>(st.iso_reps.size());
    if (acc != Rational(st.class_size, st.class_aut_order))
        throw std::logic_error("coset identity failed for switching class");
    return st;
}

long long iso_class_count_formula(const OrientedTwoGraph& g) {
    auto aut = g.automorphism_group();
    long long sum = 0;
    for (const auto& sigma : aut) {
        bool odd_order = true;
        int ncyc = 0;
        for (const auto& c : sigma.cycles()) {
            ++ncyc;
            if (c.size() % 2 == 0) odd_order = false;
        }
        if (odd_order) sum += pow2ll(ncyc - 1);
    }
    if (sum % static_cast<long long>(aut.size()) != 0)
        throw std::logic_error("class-count formula is not an integer");
    return sum / static_cast<long long>(aut.size());
}

Rational expected_class_subtournaments(const OrientedTwoGraph& g, int n) {
    const int r = g.size();
    if (n <= r) throw std::invalid_argument("need n > pattern size");
    long long aut = static_cast<long long>(g.automorphism_group().size());
    return Rational(binomial(n, r)) * Rational(factorial(r), aut) /
           Rational(pow2ll(pair_count(r - 1)));
}

// ---------------------------------------------------------------------------
// Monte Carlo sampler.

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

SampleEstimate sample_class_subtournaments(const OrientedTwoGraph& g, int n, long long samples,
                                           uint64_t seed, int threads) {
    const int r = g.size();
    if (n <= r) throw std::invalid_argument("need n > pattern size");
    if (n > kMaxVertices) throw std::invalid_argument("n out of range");
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (triple_count(r) > 64) throw std::invalid_argument("pattern too large for the sampler");

    // every labeled copy of g, as a packed sign word
    std::unordered_set<uint64_t> orbit;
    for_each_permutation_images(r, [&](const std::vector<int>& im) {
        orbit.insert(g.relabeled(Permutation(im)).sign_word());
    });
    const int tbits = triple_count(r);
    std::vector<uint8_t> orbit_table;
    const bool use_table = tbits <= 20;
    if (use_table) {
        orbit_table.assign(1ull << tbits, 0);
        for (uint64_t w : orbit) orbit_table[w >> (64 - tbits)] = 1;
    }

    // per r-subset: triple -> the three pair indices of its edges (a,b),(b,c),(a,c)
    struct SubsetPlan {
        std::vector<uint16_t> pairs;  // 3 per triple
    };
    std::vector<SubsetPlan> plans;
    for_each_combination(n, r, [&](const std::vector<int>& S) {
        SubsetPlan plan;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (int k = j + 1; k < r; ++k) {
                    plan.pairs.push_back(uint16_t(pair_index(n, S[i], S[j])));
                    plan.pairs.push_back(uint16_t(pair_index(n, S[j], S[k])));
                    plan.pairs.push_back(uint16_t(pair_index(n, S[i], S[k])));
                }
        plans.push_back(std::move(plan));
    });

    const int npairs = pair_count(n);
    const long long shard_size = 4096;
    const long long nshards = (samples + shard_size - 1) / shard_size;
    std::vector<long long> shard_sum(nshards, 0);
    std::vector<unsigned long long> shard_sumsq(nshards, 0);

    parallel_for(nshards, threads, [&](long long shard) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<uint64_t>(shard))));
        long long in_shard = std::min(shard_size, samples - shard * shard_size);
        uint8_t bit[300];
        long long sum = 0;
        unsigned long long sumsq = 0;
        for (long long s = 0; s < in_shard; ++s) {
            uint64_t word = 0;
            int left = 0;
            for (int p = 0; p < npairs; ++p) {
                if (left == 0) {
                    word = rng();
                    left = 64;
                }
                bit[p] = word & 1u;
                word >>= 1;
                --left;
            }
            long long count = 0;
            for (const auto& plan : plans) {
                uint64_t wsig = 0;
                const uint16_t* q = plan.pairs.data();
                for (int t = 0; t < tbits; ++t, q += 3) {
                    // sign of the triple is +1 iff bit(a,b) ^ bit(b,c) ^ bit(a,c) ^ 1
                    wsig = (wsig << 1) | uint64_t(bit[q[0]] ^ bit[q[1]] ^ bit[q[2]] ^ 1u);
                }
                bool hit = use_table ? orbit_table[wsig] != 0 : orbit.count(wsig << (64 - tbits)) > 0;
                if (hit) ++count;
            }
            sum += count;
            sumsq += static_cast<unsigned long long>(count) * count;
        }
        shard_sum[shard] = sum;
        shard_sumsq[shard] = sumsq;
    });

    long double total = 0, totalsq = 0;
    for (long long i = 0; i < nshards; ++i) {
        total += shard_sum[i];
        totalsq += shard_sumsq[i];
    }
    SampleEstimate est;
    est.samples = samples;
    est.mean = static_cast<double>(total / samples);
    if (samples > 1) {
        long double var = (totalsq - total * total / samples) / (samples - 1);
        est.std_error = static_cast<double>(std::sqrt(var / samples));
    }
    return est;
}

}  // namespace turansw
