#include "turansw/special.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "turansw/census.hpp"
#include "turansw/util.hpp"

namespace turansw {

bool is_special(const OrientedTwoGraph& g) {
    const int r = g.size();
    if (r > 8) throw std::invalid_argument("is_special: r out of range");

    const auto members = class_members(g);
    std::unordered_set<std::vector<uint8_t>, BytesHash> member_forms;
    for (const auto& t : members) member_forms.insert(t.canonical_form());

    std::vector<int> keep(r);
    for (const auto& t : members) {
        const Tournament aug = t.augmented();
        int hits = 0;
        for (int v = 0; v < r; ++v) {
            int w = 0;
            for (int u = 0; u <= r; ++u)
                if (u != v) keep[w++] = u;
            if (member_forms.count(aug.induced(keep).canonical_form())) ++hits;
            if (hits > 1) return false;
        }
    }
    return true;
}

bool is_special_oracle(const OrientedTwoGraph& g) {
    const int r = g.size();
    if (r > 6) throw std::invalid_argument("is_special_oracle: r out of range");
    const auto target = g.canonical_form();

    // anchored representatives: every labeled oriented two-graph on r+1
    // vertices arises from exactly one tournament with vertex r dominated
    const int bits = pair_count(r);
    std::vector<int> A(r);
    for (uint64_t code = 0; code < (1ull << bits); ++code) {
        Tournament t(r + 1);
        int idx = 0;
        for (int i = 0; i < r; ++i) {
            t.set_edge(i, r);
            for (int j = i + 1; j < r; ++j, ++idx) {
                if ((code >> idx) & 1u)
                    t.set_edge(i, j);
                else
                    t.set_edge(j, i);
            }
        }
        const auto h = two_graph_of(t);
        int copies = 0;
        bool bad = false;
        for_each_combination(r + 1, r, [&](const std::vector<int>& S) {
            if (bad) return;
            if (h.restriction(S).canonical_form() == target && ++copies > 2) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

Rational turan_lower_bound(const OrientedTwoGraph& g) {
    if (!is_special(g)) throw std::invalid_argument("two-graph is not special");
    const int r = g.size();
    const long long aut = static_cast<long long>(g.automorphism_group().size());
    return Rational(factorial(r)) / Rational(checked_mul(aut, pow2ll(pair_count(r - 1))));
}

SpecialSearchResult find_special(int r, bool full_scan, int threads) {
    if (r < 4 || r > 8) throw std::invalid_argument("find_special: r out of range");
    SpecialSearchResult res;
    res.r = r;
    res.scanned_all = r < 8 || full_scan;

    const auto classes = enumerate_switching_classes(r);
    res.classes_scanned = static_cast<long long>(classes.size());

    std::vector<long long> aut_order(classes.size());
    std::vector<uint8_t> special(classes.size(), 0);
    parallel_for(static_cast<long long>(classes.size()), threads, [&](long long i) {
        aut_order[i] = static_cast<long long>(classes[i].automorphism_group().size());
        if (res.scanned_all || aut_order[i] == 1) special[i] = is_special(classes[i]) ? 1 : 0;
    });

    for (size_t i = 0; i < classes.size(); ++i) {
        if (aut_order[i] == 1) {
            ++res.trivial_aut_classes;
            if (special[i]) ++res.trivial_aut_specials;
        }
        if (special[i]) {
            SpecialClass sc{classes[i], aut_order[i],
                            Rational(factorial(r)) /
                                Rational(checked_mul(aut_order[i], pow2ll(pair_count(r - 1)))),
                            false};
            res.specials.push_back(std::move(sc));
        }
    }
    if (!res.specials.empty()) {
        Rational best(0);
        for (const auto& sc : res.specials) best = std::max(best, sc.lower_bound);
        for (auto& sc : res.specials) sc.is_best = sc.lower_bound == best;
    }
    return res;
}

}  // namespace turansw
