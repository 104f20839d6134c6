#pragma once

#include <vector>

#include "turansw/admissible.hpp"
#include "turansw/tournament.hpp"
#include "turansw/two_graph.hpp"

namespace turansw {

bool is_prime(int p);

// Quadratic-residue values over {0..p-1}: 0 at 0, +1 on nonzero squares,
// -1 otherwise. p an odd prime.
struct CharacterTable {
    int p = 0;
    std::vector<int> values;
};
CharacterTable quadratic_character(int p);

// chi as an admissible function; requires p ≡ 3 (mod 4) so that chi is odd.
AdmissibleFunction character_function(int p);

// Vertices Z_p with x -> y iff f(y-x) = 1. Needs p within tournament capacity.
Tournament tournament_from_function(const AdmissibleFunction& f);

Tournament paley_tournament(int p);        // T_chi, p ≡ 3 (mod 4) prime
OrientedTwoGraph paley_two_graph(int p);   // two-graph of the augmented T_chi

// Same two-graph built on the projective line: vertices are the normalized
// points (x,1) for x in F_p plus (1,0), a triple's sign is
// chi(det(x:y)det(y:z)det(z:x)) with det(x:y) = x2*y1 - x1*y2. Agrees with
// paley_two_graph sign for sign under x -> (x,1), infinity -> (1,0).
OrientedTwoGraph projective_two_graph(int p);

struct Mat2 {
    int a, b, c, d;  // row-major [[a,b],[c,d]] over F_p
};

// Vertex permutation induced by right multiplication on the projective line.
Permutation projective_action(int p, const Mat2& m);

// Checks chi(det m) * g(x,y,z) = g(x m, y m, z m) on every vertex triple.
// Matrices of square determinant therefore act as automorphisms.
bool psl2_action_check(int p, const Mat2& m);

// Bundled representatives of known special switching classes, r in {6,7,8}:
// class automorphism orders 5, 9 and 1 respectively.
Tournament special_example_tournament(int r);

}  // namespace turansw
