#pragma once

#include <vector>

#include "turansw/rational.hpp"
#include "turansw/two_graph.hpp"

namespace turansw {

// A two-graph g on r vertices is special when every oriented two-graph on r+1
// vertices restricts to a copy of g at most twice. Tested classwise: for every
// member T of the switching class, at most one vertex v may have T⁺ - v
// isomorphic to a class member again. r <= 8.
bool is_special(const OrientedTwoGraph& g);

// Same predicate straight from the definition: enumerate all 2^C(r,2) labeled
// oriented two-graphs on r+1 vertices (via anchored representatives) and count
// restriction copies. Independent of is_special; r <= 6.
bool is_special_oracle(const OrientedTwoGraph& g);

// r!/(|Aut(g)| 2^C(r-1,2)); g must be special.
Rational turan_lower_bound(const OrientedTwoGraph& g);

struct SpecialClass {
    OrientedTwoGraph rep;
    long long aut_order = 0;
    Rational lower_bound;
    bool is_best = false;
};

struct SpecialSearchResult {
    int r = 0;
    std::vector<SpecialClass> specials;
    long long classes_scanned = 0;
    long long trivial_aut_classes = 0;   // classes with |Aut(C)| = 1
    long long trivial_aut_specials = 0;  // special ones among those
    bool scanned_all = false;            // false when the r=8 scan was trivial-Aut only
};

// Scans the switching classes on r vertices for special ones and their
// density lower bounds. 4 <= r <= 8. At r = 8 only trivial-automorphism
// classes are scanned unless full_scan is set (they carry the best bound).
SpecialSearchResult find_special(int r, bool full_scan = false, int threads = 0);

}  // namespace turansw
