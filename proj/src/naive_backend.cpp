#include <algorithm>

#include "pinnsort/backend.hpp"
#include "pinnsort/reversal.hpp"

namespace pinnsort {

std::vector<std::pair<std::string, std::uint64_t>> BackendCounters::report() const {
    return {
        {"reversals", reversals},
        {"queries", queries},
        {"node_touches", node_touches},
        {"last_reversal_touches", last_reversal_touches},
        {"max_reversal_touches", max_reversal_touches},
    };
}

Permutation SequenceBackend::to_permutation() const {
    return Permutation::from_sentinel_form(contents());
}

namespace {

// Reference backend: a flat array with a value->position index. Reversals
// cost the block length, cutpoints a run scan, and the shape lists are
// rebuilt lazily after each mutation.
class NaiveBackend final : public SequenceBackend {
public:
    explicit NaiveBackend(const Permutation& p) : perm_(p) {}

    int n() const override { return perm_.n(); }

    Value at(int pos) const override {
        bump_query();
        return perm_.at(pos);
    }
    int position(Value x) const override {
        bump_query();
        return perm_.position(x);
    }
    Value prec(Value x) const override {
        bump_query();
        return perm_.prec(x);
    }
    Value next(Value x) const override {
        bump_query();
        return perm_.next(x);
    }
    bool is_dell(Value x) const override {
        bump_query();
        return perm_.is_dell(x);
    }
    bool is_pinnacle(Value x) const override {
        bump_query();
        return perm_.is_pinnacle(x);
    }

    int pinnacle_count() const override {
        refresh_shape();
        return static_cast<int>(pinnacles_.size());
    }
    Value pinnacle_at(int i) const override {
        refresh_shape();
        if (i < 1 || i > static_cast<int>(pinnacles_.size())) {
            throw domain_error("pinnacle index " + std::to_string(i) + " out of range");
        }
        return pinnacles_[i - 1];
    }
    Value dell_at(int i) const override {
        refresh_shape();
        if (i < 1 || i > static_cast<int>(dells_.size())) {
            throw domain_error("dell index " + std::to_string(i) + " out of range");
        }
        return dells_[i - 1];
    }
    int pinnacle_index(Value x) const override {
        refresh_shape();
        const auto it = std::find(pinnacles_.begin(), pinnacles_.end(), x);
        if (it == pinnacles_.end()) {
            throw domain_error("element " + std::to_string(x) + " is not a pinnacle");
        }
        return static_cast<int>(it - pinnacles_.begin()) + 1;
    }
    int dell_index(Value x) const override {
        refresh_shape();
        const auto it = std::find(dells_.begin(), dells_.end(), x);
        if (it == dells_.end()) {
            throw domain_error("element " + std::to_string(x) + " is not a dell");
        }
        return static_cast<int>(it - dells_.begin()) + 1;
    }

    Value cut_a(Value z, Value v, Value y) const override {
        bump_query();
        return pinnsort::cut_a(perm_, z, v, y);
    }
    Value cut_d(Value z, Value y, Value v) const override {
        bump_query();
        return pinnsort::cut_d(perm_, z, y, v);
    }

    void reverse(Value w1, Value w2) override {
        apply_inplace(perm_, Reversal{w1, w2});
        shape_dirty_ = true;
        ++counters_.reversals;
    }

    std::vector<Value> contents() const override {
        return std::vector<Value>(perm_.seq().begin(), perm_.seq().end());
    }

    const BackendCounters& counters() const override { return counters_; }

private:
    void bump_query() const { ++counters_.queries; }

    void refresh_shape() const {
        if (!shape_dirty_) return;
        pinnacles_.clear();
        dells_.clear();
        const auto seq = perm_.seq();
        for (int i = 1; i <= perm_.n(); ++i) {
            if (seq[i - 1] < seq[i] && seq[i] > seq[i + 1]) pinnacles_.push_back(seq[i]);
            if (seq[i - 1] > seq[i] && seq[i] < seq[i + 1]) dells_.push_back(seq[i]);
        }
        shape_dirty_ = false;
    }

    Permutation perm_;
    mutable std::vector<Value> pinnacles_;
    mutable std::vector<Value> dells_;
    mutable bool shape_dirty_ = true;
    mutable BackendCounters counters_;
};

}  // namespace

std::unique_ptr<SequenceBackend> make_naive_backend(const Permutation& p) {
    return std::make_unique<NaiveBackend>(p);
}

std::unique_ptr<SequenceBackend> make_backend(BackendKind kind, const Permutation& p) {
    switch (kind) {
    case BackendKind::Naive:
        return make_naive_backend(p);
    case BackendKind::Fast:
        return make_fast_backend(p);
    case BackendKind::Auto:
        return p.n() <= 1024 ? make_naive_backend(p) : make_fast_backend(p);
    }
    throw domain_error("unknown backend kind");
}

}  // namespace pinnsort
