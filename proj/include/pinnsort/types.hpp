#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

namespace pinnsort {

// Element values. Interior elements are 1..n; the frame elements n+1 (front)
// and n+2 (back) are stored explicitly and never move.
using Value = int;

// A reversal names the block to reverse by its endpoint VALUES, not
// positions. At application time w1 must sit at or left of w2.
struct Reversal {
    Value w1;
    Value w2;
    bool operator==(const Reversal&) const = default;
};

// The categories of pinnacle-preserving reversals, plus the trivial
// one-element reversal. The category is determined by the roles of the two
// endpoints (run member / dell / pinnacle) and side conditions on the
// endpoint neighbors. AA and DD cover the same-direction pairs (both
// endpoints in ascending runs, respectively both in descending runs), which
// admit balanced reversals when the relevant boundary neighbor is a dell.
enum class BalancedType {
    A1, A2, A2s, A3, A3s,
    B1, B2, B2s, B3, B3s,
    C1, C1s, C2, C3,
    AA, DD,
    Trivial,
};

const char* to_string(BalancedType t);
std::optional<BalancedType> balanced_type_from_string(const std::string& s);

// Invalid input or violated operation precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: the sorter produced a reversal that fails
// classification, a structural assertion of the pipeline does not hold, etc.
// Always a bug, never expected on valid input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// The query surface shared by Permutation and the sequence backends. The
// reversal classifier and the sorting pipeline are written against it.
template <typename V>
concept PermutationView = requires(const V& v, Value x) {
    { v.n() } -> std::convertible_to<int>;
    { v.position(x) } -> std::convertible_to<int>;
    { v.prec(x) } -> std::convertible_to<Value>;
    { v.next(x) } -> std::convertible_to<Value>;
    { v.is_dell(x) } -> std::convertible_to<bool>;
    { v.is_pinnacle(x) } -> std::convertible_to<bool>;
};

}  // namespace pinnsort
