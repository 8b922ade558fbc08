#include "pinnsort/reversal.hpp"

namespace pinnsort {

namespace {

const char* kTypeNames[] = {
    "A1", "A2", "A2s", "A3", "A3s",
    "B1", "B2", "B2s", "B3", "B3s",
    "C1", "C1s", "C2", "C3",
    "AA", "DD",
    "Trivial",
};

}  // namespace

const char* to_string(BalancedType t) { return kTypeNames[static_cast<int>(t)]; }

std::optional<BalancedType> balanced_type_from_string(const std::string& s) {
    for (int i = 0; i < static_cast<int>(std::size(kTypeNames)); ++i) {
        if (s == kTypeNames[i]) return static_cast<BalancedType>(i);
    }
    return std::nullopt;
}

void apply_inplace(Permutation& p, Reversal r) {
    detail::check_endpoints(p, r);
    p.reverse_block_at(p.position(r.w1), p.position(r.w2));
}

Permutation apply(const Permutation& p, Reversal r) {
    Permutation out = p;
    apply_inplace(out, r);
    return out;
}

bool is_balanced(const Permutation& p, Reversal r) {
    return pinnacle_set(p) == pinnacle_set(apply(p, r));
}

std::optional<BalancedType> classify(const Permutation& p, Reversal r) {
    detail::check_endpoints(p, r);
    return detail::classify_on(p, r);
}

}  // namespace pinnsort
