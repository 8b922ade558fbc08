#pragma once

#include <random>
#include <vector>

#include "pinnsort/permutation.hpp"
#include "pinnsort/types.hpp"

namespace fixtures {

using pinnsort::Permutation;
using pinnsort::Reversal;
using pinnsort::Value;

// Worked example, n = 10: (11 8 6 7 4 3 2 1 5 10 9 12) framed.
inline Permutation example1() {
    return Permutation::from_interior({8, 6, 7, 4, 3, 2, 1, 5, 10, 9});
}

// Worked example, n = 7, pinnacles 3 < 5 < 7 already ordered.
inline Permutation example3() {
    return Permutation::from_interior({2, 3, 1, 5, 4, 7, 6});
}

// The n = 19 execution table: start permutation, its published reversal
// sequence, and selected intermediate states (interiors).
inline Permutation table2_initial() {
    return Permutation::from_interior(
        {16, 10, 11, 6, 17, 18, 7, 8, 1, 3, 2, 5, 4, 13, 12, 9, 15, 14, 19});
}

inline std::vector<Reversal> table2_reversals() {
    return {{16, 14}, {14, 7}, {7, 4},   {4, 1},   {13, 11}, {17, 13}, {7, 6},  {14, 10},
            {9, 14},  {12, 9}, {14, 16}, {12, 14}, {17, 18}, {18, 18}, {17, 12}};
}

// After the published phase-1 segment (six reversals).
inline Permutation table2_post_step1() {
    return Permutation::from_interior(
        {1, 3, 2, 5, 4, 8, 7, 11, 6, 13, 12, 9, 15, 14, 18, 17, 10, 16, 19});
}

// After the published phase-2 segment.
inline Permutation table2_pre_step3() {
    return Permutation::from_interior(
        {1, 3, 2, 5, 4, 8, 6, 11, 7, 13, 9, 15, 10, 17, 18, 14, 12, 16, 19});
}

// After the published row rho(4,1).
inline Permutation table2_after_r4_1() {
    return Permutation::from_interior(
        {1, 3, 2, 5, 4, 8, 7, 13, 12, 9, 15, 14, 18, 17, 6, 11, 10, 16, 19});
}

// After the published row rho(14,10), the state feeding the two lemma-3
// reversals rho(9,14), rho(12,9).
inline Permutation table2_after_r14_10() {
    return Permutation::from_interior(
        {1, 3, 2, 5, 4, 8, 6, 11, 7, 13, 12, 9, 15, 10, 17, 18, 14, 16, 19});
}

// After the published row rho(12,14), the state feeding rho(17,18).
inline Permutation table2_after_r12_14() {
    return Permutation::from_interior(
        {1, 3, 2, 5, 4, 8, 6, 11, 7, 13, 9, 15, 10, 17, 18, 16, 14, 12, 19});
}

inline Permutation table2_final() {
    return Permutation::from_interior(
        {1, 3, 2, 5, 4, 8, 6, 11, 7, 13, 9, 15, 10, 18, 12, 14, 16, 17, 19});
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<Value> interior(n);
    for (int i = 0; i < n; ++i) interior[i] = i + 1;
    std::shuffle(interior.begin(), interior.end(), rng);
    return Permutation::from_interior(interior);
}

// Calls fn on every permutation of size n.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<Value> interior(n);
    for (int i = 0; i < n; ++i) interior[i] = i + 1;
    do {
        fn(Permutation::from_interior(interior));
    } while (std::next_permutation(interior.begin(), interior.end()));
}

}  // namespace fixtures
