#include "turansw/admissible.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "turansw/paley.hpp"
#include "turansw/util.hpp"

namespace turansw {

AdmissibleFunction::AdmissibleFunction(int p, std::vector<int> values)
    : p_(p), values_(std::move(values)) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("modulus must be odd and >= 3");
    if (static_cast<int>(values_.size()) != p) throw std::invalid_argument("value table size");
    if (values_[0] != 0) throw std::invalid_argument("f(0) must be 0");
    for (int a = 1; a < p; ++a) {
        if (values_[a] != 1 && values_[a] != -1)
            throw std::invalid_argument("f must be ±1 away from 0");
        if (values_[p - a] != -values_[a]) throw std::invalid_argument("f must be odd");
    }
}

AdmissibleFunction AdmissibleFunction::from_free_signs(int p, uint64_t signs) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("modulus must be odd and >= 3");
    std::vector<int> v(p, 0);
    for (int a = 1; a <= (p - 1) / 2; ++a) {
        int s = (signs >> (a - 1)) & 1u ? 1 : -1;
        v[a] = s;
        v[p - a] = -s;
    }
    return AdmissibleFunction(p, std::move(v));
}

int AdmissibleFunction::value(int a) const { return values_[((a % p_) + p_) % p_]; }

uint64_t AdmissibleFunction::free_signs() const {
    uint64_t bits = 0;
    for (int a = 1; a <= (p_ - 1) / 2; ++a)
        if (values_[a] == 1) bits |= 1ull << (a - 1);
    return bits;
}

AdmissibleFunction AdmissibleFunction::negated() const {
    std::vector<int> v(values_);
    for (int& x : v) x = -x;
    return AdmissibleFunction(p_, std::move(v));
}

std::vector<long long> convolve(const std::vector<int>& f, const std::vector<int>& g) {
    if (f.size() != g.size()) throw std::invalid_argument("modulus mismatch");
    const int p = static_cast<int>(f.size());
    std::vector<long long> out(p, 0);
    for (int b = 0; b < p; ++b)
        for (int a = 0; a < p; ++a) out[b] += static_cast<long long>(f[((b - a) % p + p) % p]) * g[a];
    return out;
}

std::vector<long long> convolve(const AdmissibleFunction& f, const AdmissibleFunction& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("modulus mismatch");
    return convolve(f.values(), g.values());
}

std::vector<AdmissibleFunction> enumerate_admissible(int p) {
    if (!is_prime(p) || p == 2 || p > 31)
        throw std::invalid_argument("enumerate_admissible: p out of range");
    const int half = (p - 1) / 2;
    std::vector<AdmissibleFunction> out;
    out.reserve(1ull << half);
    for (uint64_t bits = 0; bits < (1ull << half); ++bits)
        out.push_back(AdmissibleFunction::from_free_signs(p, bits));
    return out;
}

OrientedTwoGraph two_graph_from_admissible(const AdmissibleFunction& f) {
    const int p = f.modulus();
    if (p > 23) throw std::invalid_argument("modulus out of range");
    const int n = p + 1;  // vertex p is the dominated one
    OrientedTwoGraph g(n);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            for (int k = j + 1; k < p; ++k)
                g.set_lex_sign(i, j, k,
                               f.value(j - i) * f.value(k - j) * f.value(i - k));
            // e(i,j) e(j,inf) e(inf,i) = f(j-i) * 1 * (-1)
            g.set_lex_sign(i, j, p, -f.value(j - i));
        }
    return g;
}

namespace {

// 16-entry table over the packed 4-triple sign pattern: is it a labeled copy
// of the special two-graph on 4 vertices?
const std::array<uint8_t, 16>& special_quad_table() {
    static const std::array<uint8_t, 16> table = [] {
        std::array<uint8_t, 16> t{};
        const OrientedTwoGraph g3 = paley_two_graph(3);
        for_each_permutation_images(4, [&](const std::vector<int>& im) {
            uint64_t w = g3.relabeled(Permutation(im)).sign_word();
            t[w >> 60] = 1;
        });
        return t;
    }();
    return table;
}

}  // namespace

Hypergraph hypergraph_from_admissible(const AdmissibleFunction& f) {
    const auto g = two_graph_from_admissible(f);
    const int n = g.size();
    const auto& table = special_quad_table();
    Hypergraph h(n, 4);
    std::vector<uint32_t> masks;
    for_each_combination(n, 4, [&](const std::vector<int>& A) {
        unsigned pattern = (g.lex_sign(A[0], A[1], A[2]) > 0 ? 8u : 0u) |
                           (g.lex_sign(A[0], A[1], A[3]) > 0 ? 4u : 0u) |
                           (g.lex_sign(A[0], A[2], A[3]) > 0 ? 2u : 0u) |
                           (g.lex_sign(A[1], A[2], A[3]) > 0 ? 1u : 0u);
        if (table[pattern]) {
            uint32_t m = 0;
            for (int v : A) m |= 1u << v;
            h.add_edge_mask(m);
        }
    });
    return h;
}

std::vector<AdmissibleFunction> uniqueness_search(int p, int threads) {
    if (!is_prime(p) || p % 4 != 3 || p > 23)
        throw std::invalid_argument("uniqueness_search: p out of range");
    const auto chi = character_function(p);
    const auto target = convolve(chi, chi);
    const auto candidates = enumerate_admissible(p);
    std::vector<uint8_t> hit(candidates.size(), 0);
    parallel_for(static_cast<long long>(candidates.size()), threads, [&](long long i) {
        hit[i] = convolve(candidates[i], candidates[i]) == target ? 1 : 0;
    });
    std::vector<AdmissibleFunction> out;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (hit[i]) out.push_back(candidates[i]);
    return out;
}

ExtremalityResult extremality_check(const AdmissibleFunction& f) {
    const int p = f.modulus();
    if (!is_prime(p) || p % 4 != 3 || p > 23)
        throw std::invalid_argument("extremality_check: p out of range");
    ExtremalityResult res;
    const auto h = hypergraph_from_admissible(f);
    res.edge_count = h.edge_count();
    res.triangle_free = triangle_free_check(h).triangle_free;
    const auto dc = decaen_check(h);
    res.is_extremal = res.triangle_free && dc.tight;

    const auto ff = convolve(f, f);
    res.convolution_ok = true;
    for (int x = 1; x < p; ++x)
        if (ff[x] != 1) res.convolution_ok = false;
    return res;
}

UniquenessReport verify_uniqueness_theorem(int p, int threads) {
    if (p != 3 && p != 7 && p != 11 && p != 19 && p != 23)
        throw std::invalid_argument("verify_uniqueness_theorem: p out of range");
    UniquenessReport rep;
    rep.p = p;

    const auto chi = character_function(p);
    const auto minus_chi = chi.negated();
    const auto target = convolve(chi, chi);
    const auto candidates = enumerate_admissible(p);
    rep.candidates = static_cast<long long>(candidates.size());

    struct Flags {
        uint8_t conv_match, extremal, conv_ok, zero_ok;
    };
    std::vector<Flags> flags(candidates.size());
    parallel_for(static_cast<long long>(candidates.size()), threads, [&](long long i) {
        const auto& f = candidates[i];
        const auto ff = convolve(f, f);
        const auto ext = extremality_check(f);
        flags[i].conv_match = ff == target ? 1 : 0;
        flags[i].extremal = ext.is_extremal ? 1 : 0;
        flags[i].conv_ok = ext.convolution_ok ? 1 : 0;
        flags[i].zero_ok = ff[0] == -(p - 1) ? 1 : 0;
    });

    rep.implication_ok = true;
    rep.zero_value_ok = true;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (flags[i].conv_match) rep.convolution_matches.push_back(candidates[i]);
        if (flags[i].extremal) rep.extremal.push_back(candidates[i]);
        if (flags[i].extremal && !flags[i].conv_ok) rep.implication_ok = false;
        if (!flags[i].zero_ok) rep.zero_value_ok = false;
    }

    auto is_pm_chi = [&](const std::vector<AdmissibleFunction>& v) {
        if (v.size() != 2) return false;
        return (v[0] == chi && v[1] == minus_chi) || (v[0] == minus_chi && v[1] == chi);
    };
    rep.convolution_matches_pm_chi = is_pm_chi(rep.convolution_matches);
    rep.extremal_is_pm_chi = is_pm_chi(rep.extremal);

    // the fast path against the definitional restriction route, and H_{-chi}
    const auto h_chi = hypergraph_from_admissible(chi);
    const auto g_chi = two_graph_from_admissible(chi);
    const auto quad_form = paley_two_graph(3).canonical_form();
    Hypergraph h_slow(p + 1, 4);
    for_each_combination(p + 1, 4, [&](const std::vector<int>& A) {
        if (g_chi.restriction(A).canonical_form() == quad_form) {
            uint32_t m = 0;
            for (int v : A) m |= 1u << v;
            h_slow.add_edge_mask(m);
        }
    });
    rep.chi_hypergraph_equal = h_chi == h_slow;
    rep.minus_chi_hypergraph_match = hypergraph_from_admissible(minus_chi) == h_chi;

    rep.overall = rep.convolution_matches_pm_chi && rep.extremal_is_pm_chi &&
                  rep.chi_hypergraph_equal && rep.minus_chi_hypergraph_match &&
                  rep.implication_ok && rep.zero_value_ok;
    return rep;
}

}  // namespace turansw
