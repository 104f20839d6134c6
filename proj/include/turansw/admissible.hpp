#pragma once

#include <cstdint>
#include <vector>

#include "turansw/hypergraph.hpp"
#include "turansw/two_graph.hpp"

namespace turansw {

// Odd ±1-valued function on Z_p (p odd) vanishing exactly at 0. Determined by
// the free sign choices on 1..(p-1)/2.
class AdmissibleFunction {
public:
    AdmissibleFunction(int p, std::vector<int> values);  // validates all invariants
    // bit a of `signs` gives the value at a+1, for a+1 in 1..(p-1)/2 (1 = +1)
    static AdmissibleFunction from_free_signs(int p, uint64_t signs);

    int modulus() const { return p_; }
    int value(int a) const;  // index reduced mod p
    const std::vector<int>& values() const { return values_; }
    uint64_t free_signs() const;
    AdmissibleFunction negated() const;

    bool operator==(const AdmissibleFunction&) const = default;

private:
    int p_;
    std::vector<int> values_;
};

// (f*g)(b) = sum_a f(b-a) g(a), computed literally in exact integers.
std::vector<long long> convolve(const std::vector<int>& f, const std::vector<int>& g);
std::vector<long long> convolve(const AdmissibleFunction& f, const AdmissibleFunction& g);

// All 2^((p-1)/2) admissible functions on Z_p, in binary-counter order of the
// free signs. p odd prime, p <= 31.
std::vector<AdmissibleFunction> enumerate_admissible(int p);

// The oriented two-graph of T_f augmented: vertices Z_p plus a dominated
// vertex p; works for any admissible f, p <= 23.
OrientedTwoGraph two_graph_from_admissible(const AdmissibleFunction& f);

// H_f: 4-subsets of Z_p ∪ {p} whose restriction is a copy of the special
// two-graph on 4 vertices. p <= 23.
Hypergraph hypergraph_from_admissible(const AdmissibleFunction& f);

// Admissible functions with f*f = chi*chi; expected output is {chi, -chi}.
// p prime, p ≡ 3 (mod 4), p <= 23.
std::vector<AdmissibleFunction> uniqueness_search(int p, int threads = 0);

struct ExtremalityResult {
    bool is_extremal = false;      // H_f triangle-free and meeting the edge bound
    bool convolution_ok = false;   // (f*f)(x) = 1 for all x != 0
    long long edge_count = 0;
    bool triangle_free = false;
};
ExtremalityResult extremality_check(const AdmissibleFunction& f);

struct UniquenessReport {
    int p = 0;
    long long candidates = 0;
    std::vector<AdmissibleFunction> convolution_matches;
    std::vector<AdmissibleFunction> extremal;
    bool extremal_is_pm_chi = false;
    bool convolution_matches_pm_chi = false;
    bool chi_hypergraph_equal = false;       // H_chi edge set reproduced identically
    bool minus_chi_hypergraph_match = false; // H_{-chi} equals H_chi (hence isomorphic)
    bool implication_ok = false;             // extremal => convolution_ok, exhaustively
    bool zero_value_ok = false;              // (f*f)(0) = -(p-1) for every candidate
    bool overall = false;
};

// Exhaustive verification over all admissible f on F_p: the extremal set and
// the convolution-equation solutions are exactly {chi, -chi}, and both giving
// the Paley 4-graph. p in {3,7,11,19,23}.
UniquenessReport verify_uniqueness_theorem(int p, int threads = 0);

}  // namespace turansw
