#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pinnsort/permutation.hpp"

// Independent brute-force reference computations. Everything here works on
// plain framed vectors by the raw definitions, deliberately sharing no code
// with the library paths it checks.
namespace oracles {

using pinnsort::Permutation;
using pinnsort::Value;

inline std::vector<Value> framed(const Permutation& p) {
    return {p.seq().begin(), p.seq().end()};
}

inline std::vector<Value> brute_pinnacles(const std::vector<Value>& seq) {
    std::vector<Value> out;
    for (size_t i = 1; i + 1 < seq.size(); ++i) {
        if (seq[i - 1] < seq[i] && seq[i] > seq[i + 1]) out.push_back(seq[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Value> brute_dells(const std::vector<Value>& seq) {
    std::vector<Value> out;
    for (size_t i = 1; i + 1 < seq.size(); ++i) {
        if (seq[i - 1] > seq[i] && seq[i] < seq[i + 1]) out.push_back(seq[i]);
    }
    return out;  // positional order
}

inline size_t index_of(const std::vector<Value>& seq, Value x) {
    return std::find(seq.begin(), seq.end(), x) - seq.begin();
}

// Largest candidate below z where the candidates are the elements of the
// inclusive segment [a, b] that are neither dell nor pinnacle, plus the
// dell delimiter itself.
inline std::optional<Value> brute_cut(const std::vector<Value>& seq, Value z, Value dell,
                                      Value top) {
    const size_t pd = index_of(seq, dell);
    const size_t pt = index_of(seq, top);
    const size_t a = std::min(pd, pt);
    const size_t b = std::max(pd, pt);
    std::optional<Value> best;
    auto is_shape = [&](size_t i) {
        if (i == 0 || i + 1 == seq.size()) return false;
        const bool pin = seq[i - 1] < seq[i] && seq[i] > seq[i + 1];
        const bool dl = seq[i - 1] > seq[i] && seq[i] < seq[i + 1];
        return pin || dl;
    };
    for (size_t i = a; i <= b; ++i) {
        const Value x = seq[i];
        const bool candidate = (x == dell) || !is_shape(i);
        if (candidate && x != top && x < z && (!best || x > *best)) best = x;
    }
    return best;
}

// The balancedness oracle on raw vectors: reverse and compare pinnacle sets.
inline bool brute_balanced(const std::vector<Value>& seq, Value w1, Value w2) {
    std::vector<Value> after = seq;
    const size_t a = index_of(after, w1);
    const size_t b = index_of(after, w2);
    std::reverse(after.begin() + a, after.begin() + b + 1);
    return brute_pinnacles(seq) == brute_pinnacles(after);
}

// Removes u and reinserts it so that it lands immediately after `anchor`
// (after = true) or immediately before it.
inline std::vector<Value> splice(const std::vector<Value>& seq, Value u, Value anchor,
                                 bool after) {
    std::vector<Value> out;
    out.reserve(seq.size());
    for (const Value x : seq) {
        if (x == u) continue;
        if (!after && x == anchor) out.push_back(u);
        out.push_back(x);
        if (after && x == anchor) out.push_back(u);
    }
    return out;
}

}  // namespace oracles
