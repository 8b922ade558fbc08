#pragma once

#include "pinnsort/permutation.hpp"
#include "pinnsort/types.hpp"

namespace pinnsort {

namespace detail {

// Endpoint role: each element of the framed permutation is a pinnacle, a
// dell, or a member of exactly one ascending or descending run.
enum class Role { Ascending, Descending, Dell, Pinnacle };

template <PermutationView V>
Role role_of(const V& v, Value x) {
    if (v.is_pinnacle(x)) return Role::Pinnacle;
    if (v.is_dell(x)) return Role::Dell;
    return v.prec(x) < x ? Role::Ascending : Role::Descending;
}

// Decides whether the reversal with endpoints (w1, w2) preserves the
// pinnacle set, and names its category when it does. Works on the current
// arrangement only; the caller guarantees both endpoints interior and w1 at
// or left of w2.
//
// A reversal changes the neighborhood of exactly four elements: prec(w1),
// w1, w2 and next(w2). Everything strictly inside the block keeps its
// neighbor set (sides swapped), so the reversal is balanced iff each of the
// four keeps its pinnacle status. Specializing that to the endpoint roles
// gives one condition per side:
//
//   w1 ascending:   if prec(w1) is not the run's dell then w2 > prec(w1)
//   w1 descending:  w1 < next(w2), and if prec(w1) is a pinnacle then
//                   w2 < prec(w1)
//   w1 dell:        if prec(w1) is a pinnacle then w2 < prec(w1)
//   w1 pinnacle:    w1 > next(w2), and if prec(w1) is not a dell then
//                   w2 > prec(w1)
//
// and mirrored for w2 with next(w2). A guard whose premise fails is
// vacuously satisfied. The role pair then names the category.
template <PermutationView V>
std::optional<BalancedType> classify_on(const V& v, Reversal r) {
    using enum BalancedType;
    if (r.w1 == r.w2) return Trivial;

    const Role r1 = role_of(v, r.w1);
    const Role r2 = role_of(v, r.w2);
    const Value w1 = r.w1;
    const Value w2 = r.w2;
    const Value pw1 = v.prec(w1);
    const Value nw2 = v.next(w2);

    const bool pw1_pinn = v.is_pinnacle(pw1);
    const bool pw1_dell = v.is_dell(pw1);
    const bool nw2_pinn = v.is_pinnacle(nw2);
    const bool nw2_dell = v.is_dell(nw2);

    bool ok1 = false;
    switch (r1) {
    case Role::Ascending:
        ok1 = pw1_dell || w2 > pw1;
        break;
    case Role::Descending:
        ok1 = w1 < nw2 && (!pw1_pinn || w2 < pw1);
        break;
    case Role::Dell:
        ok1 = !pw1_pinn || w2 < pw1;
        break;
    case Role::Pinnacle:
        ok1 = w1 > nw2 && (pw1_dell || w2 > pw1);
        break;
    }
    bool ok2 = false;
    switch (r2) {
    case Role::Descending:
        ok2 = nw2_dell || w1 > nw2;
        break;
    case Role::Ascending:
        ok2 = w2 < pw1 && (!nw2_pinn || w1 < nw2);
        break;
    case Role::Dell:
        ok2 = !nw2_pinn || w1 < nw2;
        break;
    case Role::Pinnacle:
        ok2 = w2 > pw1 && (nw2_dell || w1 > nw2);
        break;
    }
    if (!ok1 || !ok2) return std::nullopt;

    switch (r1) {
    case Role::Ascending:
        switch (r2) {
        case Role::Descending: return A1;
        case Role::Pinnacle: return A2s;
        case Role::Dell: return A3s;
        case Role::Ascending: return AA;
        }
        break;
    case Role::Descending:
        switch (r2) {
        case Role::Ascending: return B1;
        case Role::Pinnacle: return B2s;
        case Role::Dell: return B3s;
        case Role::Descending: return DD;
        }
        break;
    case Role::Pinnacle:
        switch (r2) {
        case Role::Descending: return A2;
        case Role::Ascending: return B2;
        case Role::Dell: return C1s;
        case Role::Pinnacle: return C3;
        }
        break;
    case Role::Dell:
        switch (r2) {
        case Role::Descending: return A3;
        case Role::Ascending: return B3;
        case Role::Pinnacle: return C1;
        case Role::Dell: return C2;
        }
        break;
    }
    return std::nullopt;
}

// Validates endpoints for apply/classify/is_balanced: both must be interior
// elements with w1 at or left of w2.
template <PermutationView V>
void check_endpoints(const V& v, Reversal r) {
    const int n = v.n();
    for (const Value w : {r.w1, r.w2}) {
        if (w == n + 1 || w == n + 2) {
            throw domain_error("reversal endpoint " + std::to_string(w) + " is a sentinel");
        }
        if (w < 1 || w > n) {
            throw domain_error("reversal endpoint " + std::to_string(w) + " is absent");
        }
    }
    if (v.position(r.w1) > v.position(r.w2)) {
        throw domain_error("reversal endpoint " + std::to_string(r.w1) + " lies right of " +
                           std::to_string(r.w2));
    }
}

}  // namespace detail

// Applies the reversal to a copy of p. Endpoints must be interior values
// with w1 at or left of w2.
Permutation apply(const Permutation& p, Reversal r);

// In-place variant of apply.
void apply_inplace(Permutation& p, Reversal r);

// Decides balancedness by the oracle: apply the reversal and compare
// pinnacle sets. Independent of the taxonomy.
bool is_balanced(const Permutation& p, Reversal r);

// Places the reversal into the taxonomy, or returns nullopt when it is not
// balanced. Uses only the endpoint roles and their outer neighbors.
std::optional<BalancedType> classify(const Permutation& p, Reversal r);

}  // namespace pinnsort
