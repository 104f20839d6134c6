#pragma once

#include <vector>

#include "turansw/two_graph.hpp"

namespace turansw {

// One canonical representative per isomorphism class, ordered by canonical
// form, generated by canonical augmentation (extend by one vertex, keep a
// child only when the new vertex sits in the canonically deleted orbit).
// 1 <= n <= 9.
std::vector<Tournament> enumerate_tournaments(int n);

// One canonical representative per isomorphism class of oriented two-graphs
// on n vertices: tournament representatives mapped through two_graph_of,
// canonicalized and deduplicated. 3 <= n <= 8.
std::vector<OrientedTwoGraph> enumerate_switching_classes(int n);

struct CensusReport {
    int n = 0;
    long long tournament_iso_count = 0;
    long long switching_class_iso_count = 0;
    // (|Aut(C)|, number of classes) sorted by order
    std::vector<std::pair<long long, long long>> aut_order_histogram;
};

// Aggregates both censuses; checks the mass formula sum n!/|Aut(T)| = 2^C(n,2)
// and re-verifies the coset identity inside every switching class. n <= 8.
CensusReport census_report(int n);

}  // namespace turansw
