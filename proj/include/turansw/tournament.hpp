#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turansw/permutation.hpp"

namespace turansw {

inline constexpr int kMaxVertices = 24;
inline constexpr int kCanonicalBudget = 12;

// Complete oriented graph on n labeled vertices. Rows are out-neighbour
// bitmasks, so every edge query is a single bit test.
class Tournament {
public:
    // All pairs i<j oriented i->j (the transitive tournament).
    explicit Tournament(int n);
    static Tournament from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    bool has_edge(int x, int y) const { return (row_[x] >> y) & 1u; }
    int edge_sign(int x, int y) const;  // +1 iff x->y, throws on x == y
    void set_edge(int x, int y);        // orients x->y
    uint32_t out_mask(int v) const { return row_[v]; }
    int out_degree(int v) const;
    int in_degree(int v) const { return n_ - 1 - out_degree(v); }

    // Reverses all edges between X and its complement.
    Tournament switched(uint32_t subset_mask) const;
    Tournament switched(const std::vector<int>& subset) const;

    // Adds a new dominated vertex n: every old vertex points at it.
    Tournament augmented() const;

    // Tournament on |S| vertices with edge i->j iff S[i]->S[j].
    Tournament induced(const std::vector<int>& S) const;

    // Edge sigma(x)->sigma(y) in the result iff x->y here.
    Tournament relabeled(const Permutation& sigma) const;

    bool operator==(const Tournament& rhs) const;
    bool operator<(const Tournament& rhs) const;

    // Pair-order bits ((i,j) i<j lex, 1 = i->j), MSB-first packed bytes.
    std::vector<uint8_t> pair_bytes() const;
    static Tournament from_pair_bytes(int n, const std::vector<uint8_t>& bytes);

    // Lexicographically minimal pair_bytes() over all relabelings, found by
    // backtracking with in-degree pruning. n <= 12.
    std::vector<uint8_t> canonical_form() const;

    struct CanonicalLabeling {
        std::vector<uint8_t> form;
        Permutation to_canonical;  // relabeled(to_canonical) has encoding == form
    };
    CanonicalLabeling canonical_labeling() const;

    // All sigma with relabeled(sigma) == *this. Order is always odd. n <= 12.
    std::vector<Permutation> automorphism_group() const;

private:
    int n_;
    std::array<uint32_t, kMaxVertices> row_{};
};

// Lexicographically least X (as a sorted vertex list, v excluded) such that
// v has in-degree `target` in switched(X). Always exists; verified before return.
std::vector<int> indegree_switch_witness(const Tournament& t, int v, int target);

struct DoublyRegularCheck {
    bool doubly_regular = false;
    int out_degree = -1;       // (n-1)/2 when doubly regular
    int common_out_count = -1; // (n-3)/4 when doubly regular
};
DoublyRegularCheck is_doubly_regular(const Tournament& t);

}  // namespace turansw
