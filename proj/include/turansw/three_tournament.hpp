#pragma once

#include <cstdint>
#include <vector>

#include "turansw/hypergraph.hpp"
#include "turansw/permutation.hpp"
#include "turansw/two_graph.hpp"

namespace turansw {

// Alternating ±1 function on triples with no coherence requirement. Shares the
// sign-table representation (and canonicalizer) with OrientedTwoGraph; an
// oriented two-graph is exactly a 3-tournament whose quadruple hypergraph is
// complete.
class ThreeTournament {
public:
    explicit ThreeTournament(int n) : table_(n) {}
    explicit ThreeTournament(OrientedTwoGraph table) : table_(std::move(table)) {}

    int size() const { return table_.size(); }
    int sign(int x, int y, int z) const { return table_.sign(x, y, z); }
    int lex_sign(int i, int j, int k) const { return table_.lex_sign(i, j, k); }
    void set_lex_sign(int i, int j, int k, int s) { table_.set_lex_sign(i, j, k, s); }

    ThreeTournament relabeled(const Permutation& sigma) const {
        return ThreeTournament(table_.relabeled(sigma));
    }
    ThreeTournament negated() const { return ThreeTournament(table_.negated()); }

    bool operator==(const ThreeTournament&) const = default;
    bool operator<(const ThreeTournament& rhs) const { return table_ < rhs.table_; }

    std::vector<uint8_t> sign_bytes() const { return table_.sign_bytes(); }
    static ThreeTournament from_sign_bytes(int n, const std::vector<uint8_t>& bytes) {
        return ThreeTournament(OrientedTwoGraph::from_sign_bytes(n, bytes));
    }

    std::vector<uint8_t> canonical_form() const { return table_.canonical_form(); }
    std::vector<Permutation> automorphism_group() const { return table_.automorphism_group(); }

    const OrientedTwoGraph& table() const { return table_; }

private:
    OrientedTwoGraph table_;
};

// 3-graph in which every 4-subset contains 0, 2 or 4 member triples; the
// switching alphabet for 3-tournaments.
class TwoGraph {
public:
    explicit TwoGraph(int n);  // empty
    static TwoGraph complete(int n);

    int size() const { return n_; }
    bool contains(int x, int y, int z) const;  // unordered
    void set_member(int i, int j, int k, bool member);
    long long member_count() const;

    // parity condition on every 4-subset (vacuous below n = 4)
    bool is_valid() const;

    bool operator==(const TwoGraph&) const = default;

    std::vector<uint8_t> membership_bytes() const;
    static TwoGraph from_membership_bytes(int n, const std::vector<uint8_t>& bytes);

private:
    int n_;
    std::vector<uint64_t> bits_;
};

// All 2^C(n-1,2) two-graphs, one per graph on {1..n-1} (vertex 0 isolated):
// the member triples are those spanning an odd number of graph edges. n <= 7.
std::vector<TwoGraph> enumerate_two_graphs(int n);

// Sign kept on member triples, flipped elsewhere.
ThreeTournament switch3(const ThreeTournament& g, const TwoGraph& x);

// H(g): 4-sets whose four stored signs multiply to +1. Invariant under
// switching; complete iff g is an oriented two-graph. n >= 4.
Hypergraph coherent_quadruples(const ThreeTournament& g);

// Aut of the switching class = Aut(H(g)). n <= 8.
std::vector<Permutation> tri_automorphism_group(const ThreeTournament& g);

// Isomorphism classes inside the switching class, from level permutations:
// (1/|Aut|) * sum over level sigma of 2^(orb2 - orb + delta).
long long count_tri_iso_classes(const ThreeTournament& g);

struct TriClassEnumeration {
    long long count = 0;
    std::vector<std::pair<ThreeTournament, long long>> reps;  // canonical rep, |Aut|
};

// Materializes all 2^C(n-1,2) class members, groups them by canonical form
// and checks the coset identity sum 1/|Aut(g_i)| = 2^C(n-1,2)/|Aut(C)|. n <= 5.
TriClassEnumeration brute_force_tri_count(const ThreeTournament& g);

ThreeTournament random_three_tournament(int n, uint64_t seed);

}  // namespace turansw
