#include "turansw/paley.hpp"

#include <stdexcept>

namespace turansw {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CharacterTable quadratic_character(int p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("need an odd prime");
    CharacterTable chi;
    chi.p = p;
    chi.values.assign(p, -1);
    chi.values[0] = 0;
    for (int y = 1; y < p; ++y) chi.values[static_cast<long long>(y) * y % p] = 1;
    return chi;
}

AdmissibleFunction character_function(int p) {
    if (p % 4 != 3) throw std::invalid_argument("chi is odd only for p ≡ 3 (mod 4)");
    return AdmissibleFunction(p, quadratic_character(p).values);
}

Tournament tournament_from_function(const AdmissibleFunction& f) {
    const int p = f.modulus();
    if (p > kMaxVertices) throw std::invalid_argument("modulus exceeds tournament capacity");
    Tournament t(p);
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            if (x != y && f.value(y - x) == 1) t.set_edge(x, y);
    return t;
}

Tournament paley_tournament(int p) { return tournament_from_function(character_function(p)); }

OrientedTwoGraph paley_two_graph(int p) {
    return two_graph_of(paley_tournament(p).augmented());
}

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

struct ProjectivePoint {
    int x1, x2;  // normalized: (x,1) or (1,0)
};

// vertex i < p is the point (i,1); vertex p is (1,0)
ProjectivePoint point_of_vertex(int v, int p) {
    return v == p ? ProjectivePoint{1, 0} : ProjectivePoint{v, 1};
}

int vertex_of_point(int x1, int x2, int p) {
    if (mod(x2, p) == 0) return p;
    // scale so the second coordinate is 1
    int inv = 1;
    int base = mod(x2, p);
    for (int e = p - 2; e > 0; e >>= 1) {  // base^(p-2) by square and multiply
        if (e & 1) inv = static_cast<long long>(inv) * base % p;
        base = static_cast<long long>(base) * base % p;
    }
    return static_cast<long long>(mod(x1, p)) * inv % p;
}

// det(x:y) = x2*y1 - x1*y2; scales by det(m) under right multiplication
int pair_det(const ProjectivePoint& x, const ProjectivePoint& y, int p) {
    return mod(x.x2 * y.x1 - x.x1 * y.x2, p);
}

}  // namespace

OrientedTwoGraph projective_two_graph(int p) {
    if (!is_prime(p) || p % 4 != 3) throw std::invalid_argument("need a prime p ≡ 3 (mod 4)");
    const auto chi = quadratic_character(p);
    OrientedTwoGraph g(p + 1);
    for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            for (int k = j + 1; k <= p; ++k) {
                auto x = point_of_vertex(i, p), y = point_of_vertex(j, p),
                     z = point_of_vertex(k, p);
                long long prod = static_cast<long long>(pair_det(x, y, p)) *
                                 pair_det(y, z, p) % p * pair_det(z, x, p) % p;
                g.set_lex_sign(i, j, k, chi.values[prod]);
            }
    return g;
}

Permutation projective_action(int p, const Mat2& m) {
    int det = mod(m.a * m.d - m.b * m.c, p);
    if (det == 0) throw std::invalid_argument("singular matrix");
    std::vector<int> images(p + 1);
    for (int v = 0; v <= p; ++v) {
        auto pt = point_of_vertex(v, p);
        // row vector times matrix
        int w1 = mod(pt.x1 * m.a + pt.x2 * m.c, p);
        int w2 = mod(pt.x1 * m.b + pt.x2 * m.d, p);
        images[v] = vertex_of_point(w1, w2, p);
    }
    return Permutation(std::move(images));
}

bool psl2_action_check(int p, const Mat2& m) {
    const auto chi = quadratic_character(p);
    int det = mod(m.a * m.d - m.b * m.c, p);
    if (det == 0) throw std::invalid_argument("singular matrix");
    const int chi_det = chi.values[det];
    const auto g = projective_two_graph(p);
    const auto sigma = projective_action(p, m);
    for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            for (int k = j + 1; k <= p; ++k)
                if (chi_det * g.lex_sign(i, j, k) != g.sign(sigma(i), sigma(j), sigma(k)))
                    return false;
    return true;
}

Tournament special_example_tournament(int r) {
    // 5-cycle with chords plus a dominating vertex
    static const std::vector<std::pair<int, int>> six = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}, {4, 2}, {2, 0}, {0, 3}, {3, 1},
        {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    static const std::vector<std::pair<int, int>> seven = {
        {0, 2}, {1, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {3, 5}, {4, 0}, {4, 1}, {4, 2},
        {4, 3}, {5, 0}, {5, 1}, {5, 2}, {5, 4}, {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4},
        {6, 5}};
    static const std::vector<std::pair<int, int>> eight = {
        {0, 3}, {0, 5}, {1, 0}, {1, 3}, {1, 6}, {2, 0}, {2, 1}, {2, 3}, {3, 4}, {3, 5},
        {3, 6}, {4, 0}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 4}, {6, 0}, {6, 2}, {6, 4},
        {6, 5}, {7, 0}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6}};
    switch (r) {
        case 6: return Tournament::from_edges(6, six);
        case 7: return Tournament::from_edges(7, seven);
        case 8: return Tournament::from_edges(8, eight);
        default: throw std::invalid_argument("bundled examples exist for r in {6,7,8}");
    }
}

}  // namespace turansw
