#pragma once

#include <utility>
#include <vector>

#include "pinnsort/backend.hpp"
#include "pinnsort/permutation.hpp"
#include "pinnsort/reversal.hpp"
#include "pinnsort/types.hpp"

namespace pinnsort {

enum class Phase { Step1, Step2, Step3, TransformBack };

const char* to_string(Phase ph);
std::optional<Phase> phase_from_string(const std::string& s);

struct TraceStep {
    Reversal rev;
    BalancedType type;
    Phase phase;
    bool operator==(const TraceStep&) const = default;
};

// A certified sequence of balanced reversals: replaying steps from start
// yields end, and every intermediate permutation keeps the pinnacle set of
// start.
struct Trace {
    Permutation start;
    Permutation end;
    std::vector<TraceStep> steps;
};

// Reversal-count ceilings, by phase and end to end.
int step1_bound(int p);           // 0 for p<=1, 1 for p=2, 2p-4 for p>=3
int step2_bound(int p);           // 2p+2
int step3_bound(int n, int p);    // 2(n-2p)-1
int sort_bound(int n, int p);     // 2n - min{p,3} for p>=1, 2n-1 for p=0
int transform_bound(int n, int p);  // 4n - 2min{p,3} for p>=1, 4n-2 for p=0

// Phase 1: order the pinnacles increasingly, left to right. No-op when the
// permutation has at most one pinnacle.
std::pair<Permutation, std::vector<TraceStep>> step1_sort_pinnacles(const Permutation& p);

// Phase 2: make the dells the p+1 smallest non-pinnacle values, increasing
// left to right. Requires the pinnacles already increasing.
std::pair<Permutation, std::vector<TraceStep>> step2_place_dells(const Permutation& p);

// Phase 3: move every remaining run member to its final place. Requires the
// pinnacles increasing and the dells already the canonical ones.
std::pair<Permutation, std::vector<TraceStep>> step3_finalize(const Permutation& p);

// Two balanced reversals that move prec(vi) out of its place: into the
// ascending run after vq (when prec(vi) > vq) or directly after vq, making
// it the new dell there (when prec(vi) < vq). Nothing else moves.
std::pair<Permutation, std::vector<TraceStep>> apply_lemma3(const Permutation& p, Value vi,
                                                            Value vq);

// The mirror image: moves next(vi) into the descending run before vq, or
// directly before vq.
std::pair<Permutation, std::vector<TraceStep>> apply_lemma4(const Permutation& p, Value vi,
                                                            Value vq);

// Sorts p to the canonical permutation of its pinnacle set using balanced
// reversals only.
Trace balanced_sort(const Permutation& p, BackendKind kind = BackendKind::Auto);

// Same pipeline over a caller-owned backend, which ends up holding the
// canonical permutation; the caller keeps access to its counters.
Trace balanced_sort_on(SequenceBackend& b);

// Transforms p into q (same size, same pinnacle set): sort p, then replay
// the reversals that sort q in reverse order with swapped endpoints.
Trace balanced_transform(const Permutation& p, const Permutation& q,
                         BackendKind kind = BackendKind::Auto);

struct VerifyReport {
    bool accepted = false;
    std::size_t steps_total = 0;
    std::size_t steps_checked = 0;
    std::optional<std::size_t> failed_step;  // 1-based
    std::string reason;
    std::vector<std::optional<BalancedType>> step_types;
    std::vector<std::pair<std::string, int>> phase_counts;  // by first appearance
    bool target_checked = false;
    bool target_matched = false;
    Permutation end;
};

// Replays the reversals from start, checking each one with the pinnacle-set
// oracle. Stops at the first invalid or unbalanced step. When a target is
// given, also reports whether the final permutation equals it. phase_labels,
// when present and of matching length, feeds the per-phase step counts.
VerifyReport verify_trace(const Permutation& start, const std::vector<Reversal>& steps,
                          const std::optional<Permutation>& target = std::nullopt,
                          const std::vector<std::string>* phase_labels = nullptr);

}  // namespace pinnsort
