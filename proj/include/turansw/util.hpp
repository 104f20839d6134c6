#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

namespace turansw {

// Index of pair (i,j), i<j, in row-major order (0,1),(0,2),...,(1,2),...
inline int pair_index(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }
inline int triple_count(int n) { return n * (n - 1) * (n - 2) / 6; }

// Index of triple (i,j,k), i<j<k, in row-major order (0,1,2),(0,1,3),...
inline int triple_index(int n, int i, int j, int k) {
    // triples starting below i, then pairs (j,k) inside {i+1..n-1}
    int before = triple_count(n) - triple_count(n - i);
    return before + pair_index(n - i - 1, j - i - 1, k - i - 1);
}

// Visits all k-subsets of {0..n-1} as sorted index vectors, lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(c));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

// All n! image arrays in lexicographic order.
template <class F>
void for_each_permutation_images(int n, F&& fn) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    do {
        fn(static_cast<const std::vector<int>&>(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

struct BytesHash {
    size_t operator()(const std::vector<uint8_t>& b) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t c : b) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Runs fn(i) for i in [0, count) over `threads` workers (0 = hardware).
// Per-index outputs land in deterministic slots regardless of thread count;
// the callee must only write state owned by index i.
inline void parallel_for(long long count, int threads, const std::function<void(long long)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || count < 2) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<long long> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace turansw
