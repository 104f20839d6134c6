#include "turansw/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "turansw/util.hpp"

namespace turansw {

namespace {

uint32_t apply_to_pattern(const Permutation& sigma, uint32_t pattern, int m) {
    uint32_t out = 0;
    for (int u = 0; u < m; ++u)
        if ((pattern >> u) & 1u) out |= 1u << sigma(u);
    return out;
}

// parent on m vertices plus a new vertex m; pattern bit u set means u -> m
Tournament extend(const Tournament& parent, uint32_t pattern) {
    const int m = parent.size();
    Tournament child = parent.augmented();
    for (int u = 0; u < m; ++u)
        if (!((pattern >> u) & 1u)) child.set_edge(m, u);
    return child;
}

}  // namespace

std::vector<Tournament> enumerate_tournaments(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumerate_tournaments: n out of range");
    std::vector<Tournament> level{Tournament(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<Tournament> next;
        for (const auto& parent : level) {
            const auto parent_aut = parent.automorphism_group();
            for (uint32_t pattern = 0; pattern < (1u << (m - 1)); ++pattern) {
                // one pattern per orbit of Aut(parent)
                bool minimal = true;
                for (const auto& sigma : parent_aut) {
                    if (apply_to_pattern(sigma, pattern, m - 1) < pattern) {
                        minimal = false;
                        break;
                    }
                }
                if (!minimal) continue;

                Tournament child = extend(parent, pattern);
                auto labeling = child.canonical_labeling();
                int wstar = -1;
                for (int v = 0; v < m; ++v)
                    if (labeling.to_canonical(v) == m - 1) wstar = v;

                // accept only when the new vertex is equivalent to the
                // canonically deleted one
                bool accept = false;
                for (const auto& sigma : child.automorphism_group())
                    if (sigma(wstar) == m - 1) {
                        accept = true;
                        break;
                    }
                if (accept) next.push_back(Tournament::from_pair_bytes(m, labeling.form));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const Tournament& a, const Tournament& b) { return a < b; });
        level = std::move(next);
    }
    return level;
}

std::vector<OrientedTwoGraph> enumerate_switching_classes(int n) {
    if (n < 3 || n > 8)
        throw std::invalid_argument("enumerate_switching_classes: n out of range");
    std::map<std::vector<uint8_t>, OrientedTwoGraph> classes;
    for (const auto& t : enumerate_tournaments(n)) {
        auto cf = two_graph_of(t).canonical_form();
        classes.emplace(cf, OrientedTwoGraph::from_sign_bytes(n, cf));
    }
    std::vector<OrientedTwoGraph> out;
    out.reserve(classes.size());
    for (auto& [cf, g] : classes) out.push_back(std::move(g));
    return out;
}

CensusReport census_report(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("census_report: n out of range");
    CensusReport rep;
    rep.n = n;

    const auto tournaments = enumerate_tournaments(n);
    rep.tournament_iso_count = static_cast<long long>(tournaments.size());

    Rational mass(0);
    for (const auto& t : tournaments)
        mass += Rational(1, static_cast<long long>(t.automorphism_group().size()));
    if (mass * Rational(factorial(n)) != Rational(pow2ll(pair_count(n))))
        throw std::logic_error("mass formula failed");

    if (n < 3) {
        rep.switching_class_iso_count = 1;  // a single degenerate class
        rep.aut_order_histogram = {{factorial(n), 1}};
        return rep;
    }

    std::map<long long, long long> hist;
    const auto classes = enumerate_switching_classes(n);
    rep.switching_class_iso_count = static_cast<long long>(classes.size());
    for (const auto& g : classes) {
        auto st = switching_class_stats(g);  // re-checks the coset identity
        if (iso_class_count_formula(g) != st.iso_class_count)
            throw std::logic_error("class-count formula disagrees with enumeration");
        ++hist[st.class_aut_order];
    }
    rep.aut_order_histogram.assign(hist.begin(), hist.end());
    return rep;
}

}  // namespace turansw
