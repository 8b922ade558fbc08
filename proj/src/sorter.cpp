#include "pinnsort/sorter.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace pinnsort {

namespace {

const char* kPhaseNames[] = {"Step1", "Step2", "Step3", "TransformBack"};

// Emits one reversal: classifies it against the current arrangement, aborts
// on an unbalanced product (always a pipeline bug), applies it and records
// the trace step.
struct TraceSink {
    SequenceBackend& b;
    std::vector<TraceStep>& steps;
    Phase phase = Phase::Step1;
    int phase_count = 0;

    void begin_phase(Phase ph) {
        phase = ph;
        phase_count = 0;
    }

    void emit(Value w1, Value w2) {
        auto fail = [&](const char* why) {
            std::ostringstream os;
            os << to_string(phase) << " produced reversal (" << w1 << "," << w2 << "): " << why;
            if (b.n() <= 64) {
                os << "; state:";
                for (const Value x : b.contents()) os << ' ' << x;
            }
            throw internal_error(os.str());
        };
        if (w1 < 1 || w1 > b.n() || w2 < 1 || w2 > b.n()) fail("endpoint out of range");
        if (b.position(w1) > b.position(w2)) fail("endpoints out of order");
        const auto type = detail::classify_on(b, Reversal{w1, w2});
        if (!type) fail("not a balanced reversal");
        b.reverse(w1, w2);
        steps.push_back(TraceStep{Reversal{w1, w2}, *type, phase});
        ++phase_count;
    }
};

void require(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}

Value pinnacle_or_back_bound(const SequenceBackend& b, int i) {
    return i <= b.pinnacle_count() ? b.pinnacle_at(i) : Value(b.n() + 2);
}

Value pinnacle_or_front_bound(const SequenceBackend& b, int i) {
    return i >= 1 ? b.pinnacle_at(i) : Value(b.n() + 1);
}

// The two-reversal displacement of prec(vi) relative to vq.
void lemma3_moves(SequenceBackend& b, TraceSink& sink, Value vi, Value vq) {
    const Value u = b.prec(vi);
    if (u > vq) {
        const Value yq = pinnacle_or_back_bound(b, b.dell_index(vq));
        const Value e = b.cut_a(u, vq, yq);
        sink.emit(u, e);
        sink.emit(e, vi);
    } else {
        sink.emit(vi, vq);
        sink.emit(u, vi);
    }
}

// The two-reversal displacement of next(vi) relative to vq.
void lemma4_moves(SequenceBackend& b, TraceSink& sink, Value vi, Value vq) {
    const Value u = b.next(vi);
    if (u > vq) {
        const Value yqm1 = pinnacle_or_front_bound(b, b.dell_index(vq) - 1);
        const Value e = b.cut_d(u, yqm1, vq);
        const Value f = b.prec(e);
        const Value t = b.next(u);
        sink.emit(u, f);
        sink.emit(f, t);
    } else {
        const Value s = b.prec(vq);
        const Value t = b.next(u);
        sink.emit(u, s);
        sink.emit(s, t);
    }
}

// Phase 1. First bring the lowest pinnacle to the leftmost slot: when it is
// below the first dell and no pinnacle right of it exceeds v1, one full
// rotation of the dell range (Case 1); then repeated prefix rotations
// rho(v1, vh) while a qualifying pinnacle exists (Case 2, with strictly
// decreasing h); finally a block rotation through the first ascending run
// (Case 3). Afterwards each next-lowest pinnacle is rotated into place the
// same way Case 3 works.
void run_step1(SequenceBackend& b, TraceSink& sink) {
    const int p = b.pinnacle_count();
    if (p <= 1) return;

    std::vector<Value> sorted_pinnacles;
    sorted_pinnacles.reserve(p);
    for (int i = 1; i <= p; ++i) sorted_pinnacles.push_back(b.pinnacle_at(i));
    std::sort(sorted_pinnacles.begin(), sorted_pinnacles.end());

    const Value x = sorted_pinnacles.front();
    int phase_a = 0;

    {
        const int i = b.pinnacle_index(x);
        const Value v1 = b.dell_at(1);
        if (i != 1 && x < v1) {
            int h = 0;
            for (int hh = i + 1; hh <= p; ++hh) {
                if (b.pinnacle_at(hh) > v1) {
                    h = hh;
                    break;
                }
            }
            if (h == 0) {  // Case 1
                sink.emit(v1, b.dell_at(p + 1));
                ++phase_a;
            }
        }
    }

    int last_h = INT_MAX;
    while (b.pinnacle_at(1) != x) {
        require(phase_a < p - 1, "step1: more than p-1 reversals while placing the lowest pinnacle");
        const int i = b.pinnacle_index(x);
        const Value v1 = b.dell_at(1);
        if (x < v1) {  // Case 2
            int h = 0;
            for (int hh = i + 1; hh <= p; ++hh) {
                if (b.pinnacle_at(hh) > v1) {
                    h = hh;
                    break;
                }
            }
            require(h != 0, "step1: no pinnacle above v1 right of the target");
            require(h < last_h, "step1: prefix-rotation indices must strictly decrease");
            last_h = h;
            sink.emit(v1, b.dell_at(h));
        } else {  // Case 3
            const Value e = b.cut_a(x, v1, b.pinnacle_at(1));
            sink.emit(b.next(e), x);
            require(b.pinnacle_at(1) == x, "step1: rotation failed to expose the lowest pinnacle");
        }
        ++phase_a;
    }

    if (p >= 3 && phase_a == p - 1) {
        // Only possible when the rightmost pinnacle already is the maximum.
        require(b.pinnacle_at(p) == sorted_pinnacles.back(),
                "step1: p-1 reversals used but the rightmost pinnacle is not the maximum");
    }

    for (int k = 1; k <= p - 2; ++k) {
        const Value want = sorted_pinnacles[k];
        const int t = b.pinnacle_index(want);
        if (t != k + 1) {
            const Value e = b.cut_a(want, b.dell_at(k + 1), b.pinnacle_at(k + 1));
            sink.emit(b.next(e), want);
            require(b.pinnacle_at(k + 1) == want, "step1: pinnacle not moved to its slot");
        }
    }
    for (int i = 1; i <= p; ++i) {
        require(b.pinnacle_at(i) == sorted_pinnacles[i - 1], "step1: pinnacles not sorted");
    }
}

// The p+1 smallest values that are not pinnacles, increasing: the dells of
// the canonical permutation.
std::vector<Value> wished_dells(const SequenceBackend& b) {
    const int p = b.pinnacle_count();
    std::vector<Value> out;
    out.reserve(p + 1);
    for (Value x = 1; x <= b.n() && static_cast<int>(out.size()) < p + 1; ++x) {
        if (!b.is_pinnacle(x)) out.push_back(x);
    }
    require(static_cast<int>(out.size()) == p + 1, "step2: fewer than p+1 non-pinnacle values");
    return out;
}

// Phase 2. For k = 0..p the next wished dell w is either adjacent to an
// already placed dell (two reversals through lemma 3 or 4) or itself a dell
// at a later slot (one rotation, plus a second one to restore the pinnacle
// at slot k+1 unless the rotated block held a single pinnacle).
void run_step2(SequenceBackend& b, TraceSink& sink) {
    const int p = b.pinnacle_count();
    const std::vector<Value> wished = wished_dells(b);
    for (int k = 0; k <= p; ++k) {
        const Value w = wished[k];
        if (b.is_dell(b.next(w))) {
            lemma3_moves(b, sink, b.next(w), b.dell_at(k + 1));
        } else if (b.is_dell(b.prec(w))) {
            lemma4_moves(b, sink, b.prec(w), b.dell_at(k + 1));
        } else {
            require(b.is_dell(w), "step2: wished dell neither a dell nor adjacent to one");
            const int j = b.dell_index(w);
            if (j != k + 1) {
                require(j > k + 1, "step2: wished dell already behind the frontier");
                const Value vk1 = b.dell_at(k + 1);
                const Value yj = pinnacle_or_back_bound(b, j);
                const Value yk1_old = b.pinnacle_at(k + 1);
                const Value e = b.cut_a(vk1, w, yj);
                sink.emit(vk1, e);
                if (k + 1 != j - 1) {
                    require(b.dell_index(w) == k + 1, "step2: rotation misplaced the wished dell");
                    const Value e2 = b.cut_a(yk1_old, w, b.pinnacle_at(k + 1));
                    sink.emit(b.next(e2), yk1_old);
                }
            }
        }
        require(b.dell_at(k + 1) == w, "step2: wished dell not in place after its round");
    }
}

// Phase 3. (a) funnel the low members of the last ascending run into the
// descending run before the last dell; (b) empty every other ascending run
// into it as well; (c) one reversal concatenates that descending run onto
// the front of the last ascending run; (d) empty every remaining descending
// run into the tail.
void run_step3(SequenceBackend& b, TraceSink& sink) {
    const int p = b.pinnacle_count();
    const Value yp = pinnacle_or_front_bound(b, p);

    while (true) {  // (a)
        const Value vlast = b.dell_at(p + 1);
        const Value u = b.next(vlast);
        if (u >= yp) break;
        const Value e = b.cut_d(u, yp, vlast);
        sink.emit(e, u);
        sink.emit(vlast, e);
    }
    for (int i = 1; i <= p; ++i) {  // (b)
        const Value yi = b.pinnacle_at(i);
        while (b.next(b.dell_at(i)) != yi) {
            lemma4_moves(b, sink, b.dell_at(i), b.dell_at(p + 1));
        }
    }
    {  // (c)
        const Value after_yp = b.next(yp);
        const Value vlast = b.dell_at(p + 1);
        if (after_yp != vlast) sink.emit(after_yp, vlast);
    }
    for (int i = 1; i <= p; ++i) {  // (d)
        const Value yim1 = pinnacle_or_front_bound(b, i - 1);
        while (b.prec(b.dell_at(i)) != yim1) {
            lemma3_moves(b, sink, b.dell_at(i), b.dell_at(p + 1));
        }
    }
}

void check_pinnacles_increasing(const SequenceBackend& b, const char* who) {
    const int p = b.pinnacle_count();
    for (int i = 2; i <= p; ++i) {
        if (!(b.pinnacle_at(i - 1) < b.pinnacle_at(i))) {
            throw domain_error(std::string(who) + ": pinnacles are not increasing left to right");
        }
    }
}

void check_dells_canonical(const SequenceBackend& b, const char* who) {
    const std::vector<Value> wished = wished_dells(b);
    for (int i = 1; i <= b.pinnacle_count() + 1; ++i) {
        if (b.dell_at(i) != wished[i - 1]) {
            throw domain_error(std::string(who) + ": dells are not the canonical ones in order");
        }
    }
}

void check_lemma_args(const SequenceBackend& b, Value vi, Value vq, const char* who) {
    for (const Value v : {vi, vq}) {
        if (v < 1 || v > b.n() || !b.is_dell(v)) {
            throw domain_error(std::string(who) + ": " + std::to_string(v) + " is not a dell");
        }
    }
    if (!(vi <= vq)) {
        throw domain_error(std::string(who) + ": need value vi <= vq");
    }
}

}  // namespace

const char* to_string(Phase ph) { return kPhaseNames[static_cast<int>(ph)]; }

std::optional<Phase> phase_from_string(const std::string& s) {
    for (int i = 0; i < static_cast<int>(std::size(kPhaseNames)); ++i) {
        if (s == kPhaseNames[i]) return static_cast<Phase>(i);
    }
    return std::nullopt;
}

int step1_bound(int p) { return p <= 1 ? 0 : (p == 2 ? 1 : 2 * p - 4); }
int step2_bound(int p) { return 2 * p + 2; }
int step3_bound(int n, int p) { return 2 * (n - 2 * p) - 1; }
int sort_bound(int n, int p) { return p >= 1 ? 2 * n - std::min(p, 3) : 2 * n - 1; }
int transform_bound(int n, int p) { return p >= 1 ? 4 * n - 2 * std::min(p, 3) : 4 * n - 2; }

std::pair<Permutation, std::vector<TraceStep>> step1_sort_pinnacles(const Permutation& p) {
    auto b = make_backend(BackendKind::Auto, p);
    std::vector<TraceStep> steps;
    TraceSink sink{*b, steps};
    sink.begin_phase(Phase::Step1);
    run_step1(*b, sink);
    require(sink.phase_count <= step1_bound(b->pinnacle_count()), "step1 exceeded its bound");
    return {b->to_permutation(), std::move(steps)};
}

std::pair<Permutation, std::vector<TraceStep>> step2_place_dells(const Permutation& p) {
    auto b = make_backend(BackendKind::Auto, p);
    check_pinnacles_increasing(*b, "step2");
    std::vector<TraceStep> steps;
    TraceSink sink{*b, steps};
    sink.begin_phase(Phase::Step2);
    run_step2(*b, sink);
    require(sink.phase_count <= step2_bound(b->pinnacle_count()), "step2 exceeded its bound");
    return {b->to_permutation(), std::move(steps)};
}

std::pair<Permutation, std::vector<TraceStep>> step3_finalize(const Permutation& p) {
    auto b = make_backend(BackendKind::Auto, p);
    check_pinnacles_increasing(*b, "step3");
    check_dells_canonical(*b, "step3");
    std::vector<TraceStep> steps;
    TraceSink sink{*b, steps};
    sink.begin_phase(Phase::Step3);
    run_step3(*b, sink);
    require(sink.phase_count <= step3_bound(p.n(), b->pinnacle_count()),
            "step3 exceeded its bound");
    return {b->to_permutation(), std::move(steps)};
}

std::pair<Permutation, std::vector<TraceStep>> apply_lemma3(const Permutation& p, Value vi,
                                                            Value vq) {
    auto b = make_backend(BackendKind::Auto, p);
    check_lemma_args(*b, vi, vq, "apply_lemma3");
    if (b->dell_index(vi) > b->dell_index(vq)) {
        throw domain_error("apply_lemma3: vi must not lie right of vq");
    }
    const Value u = b->prec(vi);
    if (u == p.front_sentinel() || b->is_pinnacle(u)) {
        throw domain_error("apply_lemma3: prec(vi) must be a movable run member");
    }
    if (u >= pinnacle_or_back_bound(*b, b->dell_index(vq))) {
        throw domain_error("apply_lemma3: need prec(vi) below the pinnacle closing vq's run");
    }
    std::vector<TraceStep> steps;
    TraceSink sink{*b, steps};
    sink.begin_phase(Phase::Step2);
    lemma3_moves(*b, sink, vi, vq);
    return {b->to_permutation(), std::move(steps)};
}

std::pair<Permutation, std::vector<TraceStep>> apply_lemma4(const Permutation& p, Value vi,
                                                            Value vq) {
    auto b = make_backend(BackendKind::Auto, p);
    check_lemma_args(*b, vi, vq, "apply_lemma4");
    if (b->dell_index(vi) >= b->dell_index(vq)) {
        throw domain_error("apply_lemma4: vi must lie strictly left of vq");
    }
    const Value u = b->next(vi);
    if (b->is_pinnacle(u)) {
        throw domain_error("apply_lemma4: next(vi) must be a movable run member");
    }
    if (u >= pinnacle_or_front_bound(*b, b->dell_index(vq) - 1)) {
        throw domain_error("apply_lemma4: need next(vi) below the pinnacle opening vq's run");
    }
    std::vector<TraceStep> steps;
    TraceSink sink{*b, steps};
    sink.begin_phase(Phase::Step2);
    lemma4_moves(*b, sink, vi, vq);
    return {b->to_permutation(), std::move(steps)};
}

Trace balanced_sort_on(SequenceBackend& b) {
    const int n = b.n();
    const int pc = b.pinnacle_count();

    Trace tr;
    tr.start = b.to_permutation();
    TraceSink sink{b, tr.steps};

    sink.begin_phase(Phase::Step1);
    run_step1(b, sink);
    require(sink.phase_count <= step1_bound(pc), "step1 exceeded its bound");

    sink.begin_phase(Phase::Step2);
    run_step2(b, sink);
    require(sink.phase_count <= step2_bound(pc), "step2 exceeded its bound");

    sink.begin_phase(Phase::Step3);
    run_step3(b, sink);
    require(sink.phase_count <= step3_bound(n, pc), "step3 exceeded its bound");

    tr.end = b.to_permutation();
    require(tr.end == canonical(pinnacle_set(tr.start), n),
            "sort did not reach the canonical permutation");
    require(static_cast<int>(tr.steps.size()) <= sort_bound(n, pc),
            "sort exceeded the end-to-end bound");
    return tr;
}

Trace balanced_sort(const Permutation& p, BackendKind kind) {
    auto b = make_backend(kind, p);
    return balanced_sort_on(*b);
}

Trace balanced_transform(const Permutation& p, const Permutation& q, BackendKind kind) {
    if (p.n() != q.n()) {
        throw domain_error("transform: sizes differ (" + std::to_string(p.n()) + " vs " +
                           std::to_string(q.n()) + ")");
    }
    if (!(pinnacle_set(p) == pinnacle_set(q))) {
        throw domain_error("transform: pinnacle sets differ");
    }

    Trace sort_p = balanced_sort(p, kind);
    const Trace sort_q = balanced_sort(q, kind);

    Trace tr;
    tr.start = p;
    tr.steps = std::move(sort_p.steps);

    auto b = make_backend(kind, sort_p.end);
    TraceSink sink{*b, tr.steps};
    sink.begin_phase(Phase::TransformBack);
    for (auto it = sort_q.steps.rbegin(); it != sort_q.steps.rend(); ++it) {
        sink.emit(it->rev.w2, it->rev.w1);
    }

    tr.end = b->to_permutation();
    require(tr.end == q, "transform did not reach the target");
    require(static_cast<int>(tr.steps.size()) <=
                transform_bound(p.n(), static_cast<int>(pinnacle_set(p).values.size())),
            "transform exceeded its bound");
    return tr;
}

VerifyReport verify_trace(const Permutation& start, const std::vector<Reversal>& steps,
                          const std::optional<Permutation>& target,
                          const std::vector<std::string>* phase_labels) {
    VerifyReport rep;
    rep.steps_total = steps.size();
    const PinnacleSet s0 = pinnacle_set(start);
    Permutation cur = start;

    auto count_phase = [&](std::size_t idx) {
        const std::string label = (phase_labels && phase_labels->size() == steps.size())
                                      ? (*phase_labels)[idx]
                                      : std::string("unphased");
        for (auto& [name, cnt] : rep.phase_counts) {
            if (name == label) {
                ++cnt;
                return;
            }
        }
        rep.phase_counts.emplace_back(label, 1);
    };

    for (std::size_t idx = 0; idx < steps.size(); ++idx) {
        try {
            rep.step_types.push_back(classify(cur, steps[idx]));
            Permutation after = apply(cur, steps[idx]);
            if (!(pinnacle_set(after) == s0)) {
                rep.failed_step = idx + 1;
                rep.reason = "reversal is not balanced";
                break;
            }
            cur = std::move(after);
        } catch (const domain_error& e) {
            rep.failed_step = idx + 1;
            rep.reason = e.what();
            break;
        }
        ++rep.steps_checked;
        count_phase(idx);
    }

    rep.end = cur;
    if (rep.failed_step) {
        rep.accepted = false;
        return rep;
    }
    rep.accepted = true;
    if (target) {
        rep.target_checked = true;
        rep.target_matched = (cur == *target);
        if (!rep.target_matched) {
            rep.accepted = false;
            rep.reason = "final permutation differs from target";
        }
    }
    return rep;
}

}  // namespace pinnsort
