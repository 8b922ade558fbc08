#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "pinnsort/permutation.hpp"
#include "pinnsort/types.hpp"

namespace pinnsort {

// Instrumentation shared by the backends. node_touches counts tree-node
// visits in the fast backend and stays zero in the naive one; the
// per-reversal figures back the logarithmic-cost property checks.
struct BackendCounters {
    std::uint64_t reversals = 0;
    std::uint64_t queries = 0;
    std::uint64_t node_touches = 0;
    std::uint64_t last_reversal_touches = 0;
    std::uint64_t max_reversal_touches = 0;

    std::vector<std::pair<std::string, std::uint64_t>> report() const;
};

// The sequence store behind the sorting pipeline. Both implementations keep
// the framed sequence and answer the same queries; they differ only in cost.
// A backend instance is single-writer; concurrent reads during a write are
// not supported.
class SequenceBackend {
public:
    virtual ~SequenceBackend() = default;

    virtual int n() const = 0;

    // Element/position queries.
    virtual Value at(int pos) const = 0;
    virtual int position(Value x) const = 0;
    virtual Value prec(Value x) const = 0;
    virtual Value next(Value x) const = 0;

    // Role and shape queries. Pinnacles are indexed 1..p and dells 1..p+1 in
    // left-to-right order.
    virtual bool is_dell(Value x) const = 0;
    virtual bool is_pinnacle(Value x) const = 0;
    virtual int pinnacle_count() const = 0;
    virtual Value pinnacle_at(int i) const = 0;
    virtual Value dell_at(int i) const = 0;
    virtual int pinnacle_index(Value x) const = 0;
    virtual int dell_index(Value x) const = 0;

    // Cutpoint queries, with the same contracts as the core operations.
    virtual Value cut_a(Value z, Value v, Value y) const = 0;
    virtual Value cut_d(Value z, Value y, Value v) const = 0;

    // Reverses the block delimited by the two interior values.
    virtual void reverse(Value w1, Value w2) = 0;

    virtual std::vector<Value> contents() const = 0;  // framed sequence

    virtual const BackendCounters& counters() const = 0;

    Permutation to_permutation() const;
};

enum class BackendKind { Auto, Naive, Fast };

// Auto picks the flat-array backend up to n = 1024 and the tree-based one
// beyond that.
std::unique_ptr<SequenceBackend> make_backend(BackendKind kind, const Permutation& p);

std::unique_ptr<SequenceBackend> make_naive_backend(const Permutation& p);
std::unique_ptr<SequenceBackend> make_fast_backend(const Permutation& p);

}  // namespace pinnsort
