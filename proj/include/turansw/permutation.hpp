#pragma once

#include <string>
#include <vector>

namespace turansw {

// Bijection on {0..n-1}, stored as the image array: images[i] is where i goes.
// Immutable value; cycle statistics are computed on demand.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    // (this ∘ rhs)(i) = this(rhs(i))
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

    // Cycles partition {0..n-1}; fixed points kept as length-1 cycles;
    // each cycle starts at its minimum, cycles sorted by minimum element.
    std::vector<std::vector<int>> cycles() const;

    // True iff the 2-adic valuations of all cycle lengths agree.
    bool is_level() const;

    struct OrbitStats {
        int orb;    // number of cycles
        int orb2;   // orbits of <sigma> on unordered pairs
        int delta;  // 0 iff every cycle has even length
    };
    OrbitStats orbit_stats() const;

    // "(0 1 2)(3 4)"; the identity renders as "()". Fixed points omitted.
    std::string cycle_notation() const;

private:
    std::vector<int> images_;
};

// orb2 from cycle lengths alone: sum of floor(len/2) plus pairwise gcds.
int pair_orbit_count_from_cycle_lengths(const std::vector<int>& lengths);

// All n! permutations, lexicographic by image array. 1 <= n <= 10.
std::vector<Permutation> symmetric_group(int n);

}  // namespace turansw
