#pragma once

#include <cstdint>
#include <vector>

#include "turansw/permutation.hpp"
#include "turansw/rational.hpp"
#include "turansw/tournament.hpp"

namespace turansw {

// Alternating ±1 function on ordered triples of distinct vertices. Signs are
// stored on sorted triples in lex order (bit 1 = +1) and extended to arbitrary
// orderings by permutation parity, so the function is alternating by
// construction. Validity (the four-point cocycle identity) is a separate
// check: see is_valid().
class OrientedTwoGraph {
public:
    explicit OrientedTwoGraph(int n);  // all triples +1

    int size() const { return n_; }
    int lex_sign(int i, int j, int k) const;  // requires i<j<k
    void set_lex_sign(int i, int j, int k, int sign);
    int sign(int x, int y, int z) const;  // any distinct ordering

    // Cocycle identity on every 4-subset; vacuous for n = 3.
    bool is_valid() const;

    OrientedTwoGraph restriction(const std::vector<int>& W) const;  // |W| >= 3
    OrientedTwoGraph relabeled(const Permutation& sigma) const;
    OrientedTwoGraph negated() const;

    bool operator==(const OrientedTwoGraph& rhs) const;
    bool operator<(const OrientedTwoGraph& rhs) const;

    // Triple-order sign bits (lex triples, 1 = +1), MSB-first packed bytes.
    std::vector<uint8_t> sign_bytes() const;
    static OrientedTwoGraph from_sign_bytes(int n, const std::vector<uint8_t>& bytes);

    // Lexicographically minimal sign_bytes() over all relabelings. n <= 10.
    std::vector<uint8_t> canonical_form() const;
    // All sign-preserving permutations. n <= 10.
    std::vector<Permutation> automorphism_group() const;

    // Sign bits as one word (high bits first); needs C(n,3) <= 64.
    uint64_t sign_word() const;

private:
    int n_;
    std::vector<uint64_t> bits_;
};

// g_T(x,y,z) = e(x,y)e(y,z)e(z,x); invariant under switching of T. n >= 3.
OrientedTwoGraph two_graph_of(const Tournament& t);

// The unique class member whose last vertex is dominated (plays "infinity"):
// e(x, n-1) = +1 for all x and e(x,y) = g(n-1, y, x) otherwise. g must be valid.
Tournament anchored_representative(const OrientedTwoGraph& g);

// All 2^(n-1) tournaments of the switching class, as switches of the anchored
// representative by subsets avoiding the anchor. n <= 12.
std::vector<Tournament> class_members(const OrientedTwoGraph& g);

struct SwitchingClassStats {
    long long class_size = 0;      // 2^(n-1)
    std::vector<std::pair<Tournament, long long>> iso_reps;  // canonical member, |Aut|
    long long class_aut_order = 0; // |Aut(C)| = |Aut(g)|
    long long iso_class_count = 0;
};

// Groups the class members by canonical form and checks the coset identity
// sum 1/|Aut(T_i)| = 2^(n-1)/|Aut(C)| in exact rationals. n <= 10.
SwitchingClassStats switching_class_stats(const OrientedTwoGraph& g);

// Number of tournament isomorphism classes inside the switching class,
// from the automorphism group alone: (1/|Aut C|) * sum over odd-order
// sigma of 2^(c(sigma)-1). Must match switching_class_stats().
long long iso_class_count_formula(const OrientedTwoGraph& g);

// Expected number of r-subsets of a uniform random tournament on n vertices
// inducing a member of the class of g: C(n,r) * [r! / |Aut C|] / 2^C(r-1,2).
Rational expected_class_subtournaments(const OrientedTwoGraph& g, int n);

struct SampleEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

// Monte Carlo estimate of expected_class_subtournaments. Sampling is sharded
// and each shard's mt19937_64 stream is derived from (seed, shard index), so
// the result depends only on the seed, never on the thread count.
SampleEstimate sample_class_subtournaments(const OrientedTwoGraph& g, int n, long long samples,
                                           uint64_t seed, int threads = 0);

}  // namespace turansw
