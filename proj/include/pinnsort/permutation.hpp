#pragma once

#include <span>
#include <vector>

#include "pinnsort/types.hpp"

namespace pinnsort {

// A permutation of 1..n framed by n+1 at the front and n+2 at the back.
// The frame guarantees that the first and last dells exist and that the
// boundary runs are well defined. Positions are 0..n+1; a value->position
// index is kept alongside the sequence so that all operations can be keyed
// by element values.
class Permutation {
public:
    Permutation() = default;

    // Builds from the interior form (no frame elements). Throws domain_error
    // naming the offending index on duplicates, out-of-range values or a
    // length mismatch.
    static Permutation from_interior(std::span<const Value> values, int n);
    static Permutation from_interior(std::span<const Value> values);
    static Permutation from_interior(std::initializer_list<Value> values);

    // Builds from the full framed sequence (n+2 entries).
    static Permutation from_sentinel_form(std::span<const Value> seq);

    int n() const { return n_; }
    int size() const { return n_ + 2; }
    Value front_sentinel() const { return n_ + 1; }
    Value back_sentinel() const { return n_ + 2; }

    Value at(int pos) const;
    int position(Value x) const;
    bool contains(Value x) const { return x >= 1 && x <= n_ + 2; }

    // Immediate neighbors by position. prec is defined for every element but
    // the front frame element, next for every element but the back one.
    Value prec(Value x) const;
    Value next(Value x) const;

    bool is_dell(Value x) const;
    bool is_pinnacle(Value x) const;

    std::span<const Value> seq() const { return seq_; }
    std::vector<Value> interior() const;

    // Reverses the block between two positions, inclusive. Low-level and
    // unchecked beyond bounds; reversal::apply is the validated entry point.
    void reverse_block_at(int a, int b);

    bool operator==(const Permutation&) const = default;

private:
    int n_ = 0;
    std::vector<Value> seq_;
    std::vector<int> pos_;  // pos_[value] = index in seq_

    void rebuild_positions();
};

// A strictly increasing set of candidate pinnacle values. Admissibility (is
// there a permutation of a given size with exactly this pinnacle set) is a
// checked property, not an invariant of the type.
struct PinnacleSet {
    std::vector<Value> values;  // strictly increasing
    bool operator==(const PinnacleSet&) const = default;
};

// The subsequence of bounds, dells and pinnacles in permutation order:
// (y0 v1 y1 v2 ... yp v(p+1) y(p+1)) with y0 = n+1 and y(p+1) = n+2.
struct Shape {
    std::vector<Value> pinnacles;  // y1..yp, left to right
    std::vector<Value> dells;      // v1..v(p+1), left to right
    Value front_bound = 0;         // n+1
    Value back_bound = 0;          // n+2

    int p() const { return static_cast<int>(pinnacles.size()); }
    std::vector<Value> interleaved() const;
    bool operator==(const Shape&) const = default;
};

enum class RunKind { Ascending, Descending };

// One maximal monotone segment between consecutive shape elements, holding
// the members that are neither dell nor pinnacle. The frame elements count
// as members of the two boundary runs.
struct Run {
    RunKind kind;
    Value left;   // delimiting dell (ascending) or pinnacle/bound (descending)
    Value right;  // delimiting pinnacle/bound (ascending) or dell (descending)
    std::vector<Value> members;  // in positional order
    bool operator==(const Run&) const = default;
};

PinnacleSet pinnacle_set(const Permutation& p);
Shape shape(const Permutation& p);

// All 2p+2 runs, alternating D(y0,v1), A(v1,y1), ..., D(yp,v(p+1)),
// A(v(p+1),y(p+1)) from left to right.
std::vector<Run> runs(const Permutation& p);

// Cutpoint of z on the ascending run delimited by dell v and pinnacle-or-
// bound y: the largest element of A(v,y) together with v itself that is
// smaller than z. Preconditions (v dell, y pinnacle or back bound, the two
// adjacent in the shape, v < z < y, z outside the run) are checked.
Value cut_a(const Permutation& p, Value z, Value v, Value y);

// Cutpoint of z on the descending run delimited by pinnacle-or-bound y and
// dell v, defined symmetrically.
Value cut_d(const Permutation& p, Value z, Value y, Value v);

// The canonical permutation for pinnacle set S and size n: the elements of S
// at interior positions 2, 4, ..., 2|S| in increasing order, everything else
// increasing across the remaining positions. Requires n > 2|S|.
Permutation canonical(const PinnacleSet& s, int n);

// True iff some permutation of size n has pinnacle set exactly S. Checked
// operationally: build the canonical permutation and compare pinnacle sets.
bool is_admissible(const PinnacleSet& s, int n);

}  // namespace pinnsort
