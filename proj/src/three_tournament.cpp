#include "turansw/three_tournament.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "turansw/rational.hpp"
#include "turansw/util.hpp"

namespace turansw {

TwoGraph::TwoGraph(int n) : n_(n) {
    if (n < 3 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    bits_.assign((triple_count(n) + 63) / 64, 0);
}

TwoGraph TwoGraph::complete(int n) {
    TwoGraph x(n);
    for (auto& w : x.bits_) w = ~0ull;
    int pad = static_cast<int>(x.bits_.size()) * 64 - triple_count(n);
    if (pad > 0) x.bits_.back() &= ~0ull << pad;
    return x;
}

bool TwoGraph::contains(int x, int y, int z) const {
    if (x == y || y == z || x == z) throw std::invalid_argument("needs distinct vertices");
    int a = std::min({x, y, z});
    int c = std::max({x, y, z});
    int b = x + y + z - a - c;
    int t = triple_index(n_, a, b, c);
    return (bits_[t / 64] >> (63 - t % 64)) & 1u;
}

void TwoGraph::set_member(int i, int j, int k, bool member) {
    int t = triple_index(n_, i, j, k);
    uint64_t m = 0x8000000000000000ull >> (t % 64);
    if (member)
        bits_[t / 64] |= m;
    else
        bits_[t / 64] &= ~m;
}

long long TwoGraph::member_count() const {
    long long c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

bool TwoGraph::is_valid() const {
    bool ok = true;
    for_each_combination(n_, 4, [&](const std::vector<int>& q) {
        int c = 0;
        c += contains(q[0], q[1], q[2]);
        c += contains(q[0], q[1], q[3]);
        c += contains(q[0], q[2], q[3]);
        c += contains(q[1], q[2], q[3]);
        if (c % 2 != 0) ok = false;
    });
    return ok;
}

std::vector<uint8_t> TwoGraph::membership_bytes() const {
    std::vector<uint8_t> out((triple_count(n_) + 7) / 8, 0);
    for (int t = 0; t < triple_count(n_); ++t)
        if ((bits_[t / 64] >> (63 - t % 64)) & 1u) out[t / 8] |= uint8_t(0x80u >> (t % 8));
    return out;
}

TwoGraph TwoGraph::from_membership_bytes(int n, const std::vector<uint8_t>& bytes) {
    if (static_cast<int>(bytes.size()) != (triple_count(n) + 7) / 8)
        throw std::invalid_argument("membership byte length mismatch");
    TwoGraph x(n);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t)
                x.set_member(i, j, k, (bytes[t / 8] >> (7 - t % 8)) & 1u);
    return x;
}

std::vector<TwoGraph> enumerate_two_graphs(int n) {
    if (n < 3 || n > 7) throw std::invalid_argument("enumerate_two_graphs: n out of range");
    // graphs on {1..n-1}, vertex 0 isolated: a transversal of the coboundary
    // kernel, so each graph yields a distinct two-graph
    const int m = n - 1;
    const int gbits = pair_count(m);
    std::vector<TwoGraph> out;
    out.reserve(1ull << gbits);
    for (uint64_t code = 0; code < (1ull << gbits); ++code) {
        auto has = [&](int u, int v) {  // graph edge between u,v in {1..n-1}
            if (u == 0 || v == 0) return false;
            int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
            return ((code >> pair_index(m, a, b)) & 1u) != 0;
        };
        TwoGraph x(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    int deg = has(i, j) + has(j, k) + has(i, k);
                    x.set_member(i, j, k, deg % 2 == 1);
                }
        out.push_back(std::move(x));
    }
    return out;
}

ThreeTournament switch3(const ThreeTournament& g, const TwoGraph& x) {
    if (g.size() != x.size()) throw std::invalid_argument("size mismatch");
    if (!x.is_valid()) throw std::invalid_argument("switching set is not a two-graph");
    const int n = g.size();
    ThreeTournament out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int s = g.lex_sign(i, j, k);
                out.set_lex_sign(i, j, k, x.contains(i, j, k) ? s : -s);
            }
    return out;
}

Hypergraph coherent_quadruples(const ThreeTournament& g) {
    const int n = g.size();
    if (n < 4) throw std::invalid_argument("coherent_quadruples needs n >= 4");
    Hypergraph h(n, 4);
    for_each_combination(n, 4, [&](const std::vector<int>& q) {
        int p = g.lex_sign(q[0], q[1], q[2]) * g.lex_sign(q[0], q[1], q[3]) *
                g.lex_sign(q[0], q[2], q[3]) * g.lex_sign(q[1], q[2], q[3]);
        if (p == 1) {
            uint32_t m = 0;
            for (int v : q) m |= 1u << v;
            h.add_edge_mask(m);
        }
    });
    return h;
}

std::vector<Permutation> tri_automorphism_group(const ThreeTournament& g) {
    const int n = g.size();
    if (n > 8) throw std::invalid_argument("tri_automorphism_group: n out of range");
    const Hypergraph h = coherent_quadruples(g);
    std::unordered_set<uint32_t> edges(h.edge_masks().begin(), h.edge_masks().end());

    std::vector<Permutation> out;
    for_each_permutation_images(n, [&](const std::vector<int>& im) {
        for (uint32_t e : h.edge_masks()) {
            uint32_t mapped = 0;
            for (int v = 0; v < n; ++v)
                if ((e >> v) & 1u) mapped |= 1u << im[v];
            if (!edges.count(mapped)) return;
        }
        out.emplace_back(im);
    });
    return out;
}

namespace {

// triple-indicator word (bit t = triple index t, low bits) for sets of triples
uint64_t two_graph_word(const TwoGraph& x) {
    uint64_t w = 0;
    const int n = x.size();
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t)
                if (x.contains(i, j, k)) w |= 1ull << t;
    return w;
}

// basis of the two-graph space: coboundaries of single edges on {1..n-1}
std::vector<uint64_t> two_graph_space_basis(int n) {
    std::vector<uint64_t> basis;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            TwoGraph x(n);
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                int a = std::min({u, v, w}), c = std::max({u, v, w});
                int b = u + v + w - a - c;
                x.set_member(a, b, c, true);
            }
            basis.push_back(two_graph_word(x));
        }
    return basis;
}

uint64_t permute_triples(uint64_t w, const Permutation& sigma, int n) {
    uint64_t out = 0;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t) {
                if (!((w >> t) & 1ull)) continue;
                int a = sigma(i), b = sigma(j), c = sigma(k);
                int lo = std::min({a, b, c}), hi = std::max({a, b, c});
                out |= 1ull << triple_index(n, lo, a + b + c - lo - hi, hi);
            }
    return out;
}

// Whether sigma fixes any member of the class of g. Members are g with signs
// flipped along vectors of the two-graph space V0, and sigma carries g^w to
// (sigma g)^(sigma w), so a fixed member means (sigma + id) w = a over GF(2)
// with w in V0, where a flags the triples on which sigma(g) differs from g.
bool fixes_a_member(const ThreeTournament& g, const Permutation& sigma,
                    const std::vector<uint64_t>& basis) {
    const int n = g.size();
    const auto image = g.relabeled(sigma);
    uint64_t a = 0;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k, ++t)
                if (image.lex_sign(i, j, k) != g.lex_sign(i, j, k)) a |= 1ull << t;

    uint64_t pivot[64] = {0};
    auto insert = [&](uint64_t v) {
        for (int b = 63; b >= 0 && v; --b) {
            if (!((v >> b) & 1ull)) continue;
            if (!pivot[b]) {
                pivot[b] = v;
                return;
            }
            v ^= pivot[b];
        }
    };
    for (uint64_t b : basis) insert(b ^ permute_triples(b, sigma, n));
    for (int b = 63; b >= 0 && a; --b)
        if (((a >> b) & 1ull) && pivot[b]) a ^= pivot[b];
    return a == 0;
}

}  // namespace

long long count_tri_iso_classes(const ThreeTournament& g) {
    const auto aut = tri_automorphism_group(g);
    const auto basis = two_graph_space_basis(g.size());
    long long sum = 0;
    for (const auto& sigma : aut) {
        // non-level permutations fix no 3-tournament at all; level ones fix
        // 2^(orb2-orb+delta) members, provided they fix any member of this
        // class (a permutation can move the class along its own fibre)
        if (!sigma.is_level()) continue;
        if (!fixes_a_member(g, sigma, basis)) continue;
        auto st = sigma.orbit_stats();
        sum += pow2ll(st.orb2 - st.orb + st.delta);
    }
    if (sum % static_cast<long long>(aut.size()) != 0)
        throw std::logic_error("level-permutation count is not an integer");
    return sum / static_cast<long long>(aut.size());
}

TriClassEnumeration brute_force_tri_count(const ThreeTournament& g) {
    const int n = g.size();
    if (n > 5) throw std::invalid_argument("brute_force_tri_count: n out of range");

    std::vector<ThreeTournament> members;
    for (const auto& x : enumerate_two_graphs(n)) members.push_back(switch3(g, x));
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::logic_error("switching class members are not distinct");

    std::map<std::vector<uint8_t>, long long> groups;
    for (const auto& m : members) {
        auto cf = m.canonical_form();
        if (!groups.count(cf)) {
            auto rep = ThreeTournament::from_sign_bytes(n, cf);
            groups.emplace(std::move(cf), static_cast<long long>(rep.automorphism_group().size()));
        }
    }

    TriClassEnumeration res;
    Rational acc(0);
    for (const auto& [cf, aut] : groups) {
        res.reps.emplace_back(ThreeTournament::from_sign_bytes(n, cf), aut);
        acc += Rational(1, aut);
    }
    res.count = static_cast<long long>(res.reps.size());

    const long long class_aut = static_cast<long long>(tri_automorphism_group(g).size());
    if (acc != Rational(static_cast<long long>(members.size()), class_aut))
        throw std::logic_error("coset identity failed for the 3-tournament class");
    if (res.count != count_tri_iso_classes(g))
        throw std::logic_error("level-permutation formula disagrees with enumeration");
    return res;
}

ThreeTournament random_three_tournament(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    ThreeTournament g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) g.set_lex_sign(i, j, k, rng() & 1u ? 1 : -1);
    return g;
}

}  // namespace turansw
