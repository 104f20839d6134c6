#include "turansw/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turansw/util.hpp"

namespace turansw {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> im(size());
    for (int i = 0; i < size(); ++i) im[i] = images_[rhs.images_[i]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int x = s; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;  // starts are discovered in increasing order already
}

namespace {
int two_adic_valuation(int m) {
    int v = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++v;
    }
    return v;
}
}  // namespace

bool Permutation::is_level() const {
    int val = -1;
    for (const auto& c : cycles()) {
        int v = two_adic_valuation(static_cast<int>(c.size()));
        if (val == -1) val = v;
        if (v != val) return false;
    }
    return true;
}

Permutation::OrbitStats Permutation::orbit_stats() const {
    const int n = size();
    if (n < 2) throw std::invalid_argument("orbit_stats needs n >= 2");
    const auto cyc = cycles();

    int delta = 0;
    for (const auto& c : cyc)
        if (c.size() % 2 != 0) delta = 1;

    // orbits of <sigma> on unordered pairs, by direct orbit tracing
    int orb2 = 0;
    std::vector<bool> seen(pair_count(n), false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (seen[pair_index(n, i, j)]) continue;
            ++orb2;
            int a = i, b = j;
            do {
                int x = std::min(a, b), y = std::max(a, b);
                seen[pair_index(n, x, y)] = true;
                a = images_[a];
                b = images_[b];
            } while (std::min(a, b) != i || std::max(a, b) != j);
        }
    }
    return {static_cast<int>(cyc.size()), orb2, delta};
}

std::string Permutation::cycle_notation() const {
    std::string out;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        out += '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(c[k]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

int pair_orbit_count_from_cycle_lengths(const std::vector<int>& lengths) {
    int total = 0;
    for (size_t i = 0; i < lengths.size(); ++i) {
        total += lengths[i] / 2;
        for (size_t j = i + 1; j < lengths.size(); ++j)
            total += std::gcd(lengths[i], lengths[j]);
    }
    return total;
}

std::vector<Permutation> symmetric_group(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("symmetric_group: n out of range");
    std::vector<Permutation> out;
    for_each_permutation_images(n, [&](const std::vector<int>& im) { out.emplace_back(im); });
    return out;
}

}  // namespace turansw
