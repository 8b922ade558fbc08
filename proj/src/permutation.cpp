#include "pinnsort/permutation.hpp"

#include <algorithm>
#include <string>

namespace pinnsort {

namespace {

std::string fmt_value(Value x) { return std::to_string(x); }

}  // namespace

Permutation Permutation::from_interior(std::span<const Value> values, int n) {
    if (static_cast<int>(values.size()) != n) {
        throw domain_error("interior has length " + std::to_string(values.size()) +
                           ", expected n=" + std::to_string(n));
    }
    return from_interior(values);
}

Permutation Permutation::from_interior(std::span<const Value> values) {
    const int n = static_cast<int>(values.size());
    if (n < 1) throw domain_error("interior must hold at least one element");
    std::vector<int> seen(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        const Value x = values[i];
        if (x < 1 || x > n) {
            throw domain_error("value " + fmt_value(x) + " at index " + std::to_string(i) +
                               " out of range [1," + std::to_string(n) + "]");
        }
        if (seen[x] >= 0) {
            throw domain_error("duplicate value " + fmt_value(x) + " at index " +
                               std::to_string(i) + " (first at index " +
                               std::to_string(seen[x]) + ")");
        }
        seen[x] = i;
    }
    Permutation p;
    p.n_ = n;
    p.seq_.reserve(n + 2);
    p.seq_.push_back(n + 1);
    p.seq_.insert(p.seq_.end(), values.begin(), values.end());
    p.seq_.push_back(n + 2);
    p.rebuild_positions();
    return p;
}

Permutation Permutation::from_interior(std::initializer_list<Value> values) {
    return from_interior(std::span<const Value>(values.begin(), values.size()));
}

Permutation Permutation::from_sentinel_form(std::span<const Value> seq) {
    if (seq.size() < 2) {
        throw domain_error("sentinel form needs at least the two frame elements");
    }
    const int n = static_cast<int>(seq.size()) - 2;
    if (seq.front() != n + 1) {
        throw domain_error("front sentinel is " + fmt_value(seq.front()) + ", expected " +
                           std::to_string(n + 1));
    }
    if (seq.back() != n + 2) {
        throw domain_error("back sentinel is " + fmt_value(seq.back()) + ", expected " +
                           std::to_string(n + 2));
    }
    return from_interior(seq.subspan(1, n));
}

void Permutation::rebuild_positions() {
    pos_.assign(n_ + 3, -1);
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) pos_[seq_[i]] = i;
}

Value Permutation::at(int pos) const {
    if (pos < 0 || pos > n_ + 1) {
        throw domain_error("position " + std::to_string(pos) + " out of range [0," +
                           std::to_string(n_ + 1) + "]");
    }
    return seq_[pos];
}

int Permutation::position(Value x) const {
    if (!contains(x)) throw domain_error("element " + fmt_value(x) + " not present");
    return pos_[x];
}

Value Permutation::prec(Value x) const {
    const int i = position(x);
    if (i == 0) throw domain_error("prec of the front sentinel is undefined");
    return seq_[i - 1];
}

Value Permutation::next(Value x) const {
    const int i = position(x);
    if (i == n_ + 1) throw domain_error("next of the back sentinel is undefined");
    return seq_[i + 1];
}

bool Permutation::is_dell(Value x) const {
    const int i = position(x);
    if (i == 0 || i == n_ + 1) return false;
    return seq_[i - 1] > x && x < seq_[i + 1];
}

bool Permutation::is_pinnacle(Value x) const {
    const int i = position(x);
    if (i == 0 || i == n_ + 1) return false;
    return seq_[i - 1] < x && x > seq_[i + 1];
}

std::vector<Value> Permutation::interior() const {
    return std::vector<Value>(seq_.begin() + 1, seq_.end() - 1);
}

void Permutation::reverse_block_at(int a, int b) {
    if (a < 0 || b > n_ + 1 || a > b) {
        throw domain_error("bad block [" + std::to_string(a) + "," + std::to_string(b) + "]");
    }
    std::reverse(seq_.begin() + a, seq_.begin() + b + 1);
    for (int i = a; i <= b; ++i) pos_[seq_[i]] = i;
}

std::vector<Value> Shape::interleaved() const {
    std::vector<Value> out;
    out.reserve(2 * pinnacles.size() + 3);
    out.push_back(front_bound);
    for (size_t i = 0; i < dells.size(); ++i) {
        out.push_back(dells[i]);
        out.push_back(i < pinnacles.size() ? pinnacles[i] : back_bound);
    }
    return out;
}

PinnacleSet pinnacle_set(const Permutation& p) {
    PinnacleSet s;
    const auto seq = p.seq();
    for (int i = 1; i <= p.n(); ++i) {
        if (seq[i - 1] < seq[i] && seq[i] > seq[i + 1]) s.values.push_back(seq[i]);
    }
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Shape shape(const Permutation& p) {
    Shape sh;
    sh.front_bound = p.front_sentinel();
    sh.back_bound = p.back_sentinel();
    const auto seq = p.seq();
    for (int i = 1; i <= p.n(); ++i) {
        if (seq[i - 1] < seq[i] && seq[i] > seq[i + 1]) {
            sh.pinnacles.push_back(seq[i]);
        } else if (seq[i - 1] > seq[i] && seq[i] < seq[i + 1]) {
            sh.dells.push_back(seq[i]);
        }
    }
    return sh;
}

std::vector<Run> runs(const Permutation& p) {
    const Shape sh = shape(p);
    const auto seq = p.seq();
    std::vector<Run> out;
    out.reserve(2 * sh.dells.size());

    // Shape positions: bounds, dells and pinnacles in permutation order.
    std::vector<int> marks;  // positions of shape elements
    marks.push_back(0);
    for (int i = 1; i <= p.n(); ++i) {
        const bool pin = seq[i - 1] < seq[i] && seq[i] > seq[i + 1];
        const bool dell = seq[i - 1] > seq[i] && seq[i] < seq[i + 1];
        if (pin || dell) marks.push_back(i);
    }
    marks.push_back(p.n() + 1);

    // Members of a run are all elements of the inclusive block between the
    // two delimiters that are neither dell nor pinnacle; by construction the
    // interior pinnacle/dell delimiters drop out and the frame elements stay.
    for (size_t k = 0; k + 1 < marks.size(); ++k) {
        const int a = marks[k];
        const int b = marks[k + 1];
        Run r;
        r.kind = (k % 2 == 0) ? RunKind::Descending : RunKind::Ascending;
        r.left = seq[a];
        r.right = seq[b];
        for (int i = a; i <= b; ++i) {
            const bool boundary = (i == a || i == b);
            const bool frame = (i == 0 || i == p.n() + 1);
            if (!boundary || frame) r.members.push_back(seq[i]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Shared precondition checks for the two cutpoint queries. The delimiters
// must be adjacent in the shape with the stated roles, and z has to fall
// strictly between the dell and the pinnacle without lying inside the run.
void check_cut_preconditions(const Permutation& p, Value z, Value dell, Value top,
                             int run_lo, int run_hi, const char* name) {
    if (!p.is_dell(dell)) {
        throw domain_error(std::string(name) + ": " + fmt_value(dell) + " is not a dell");
    }
    if (!p.is_pinnacle(top) && top != p.front_sentinel() && top != p.back_sentinel()) {
        throw domain_error(std::string(name) + ": " + fmt_value(top) +
                           " is neither a pinnacle nor a bound");
    }
    const auto seq = p.seq();
    for (int i = run_lo + 1; i < run_hi; ++i) {
        const Value x = seq[i];
        if (p.is_dell(x) || p.is_pinnacle(x)) {
            throw domain_error(std::string(name) + ": delimiters " + fmt_value(dell) + "," +
                               fmt_value(top) + " do not bound a single run (found " +
                               fmt_value(x) + " between them)");
        }
    }
    if (!(dell < z)) {
        throw domain_error(std::string(name) + ": need " + fmt_value(dell) + " < z, got z=" +
                           fmt_value(z));
    }
    if (!(z < top)) {
        throw domain_error(std::string(name) + ": need z < " + fmt_value(top) + ", got z=" +
                           fmt_value(z));
    }
    const int pz = p.position(z);
    if (pz > run_lo && pz < run_hi) {
        throw domain_error(std::string(name) + ": z=" + fmt_value(z) + " lies inside the run");
    }
}

}  // namespace

Value cut_a(const Permutation& p, Value z, Value v, Value y) {
    const int pv = p.position(v);
    const int py = p.position(y);
    if (pv >= py) {
        throw domain_error("cut_a: dell " + fmt_value(v) + " is not left of " + fmt_value(y));
    }
    check_cut_preconditions(p, z, v, y, pv, py, "cut_a");
    // Candidates are v and the run members, i.e. positions pv..py-1, with
    // values increasing; the back bound (when y = n+2) never wins since
    // every candidate must be below z <= n.
    const auto seq = p.seq();
    Value best = v;
    for (int i = pv + 1; i < py; ++i) {
        if (seq[i] < z) best = seq[i];
    }
    return best;
}

Value cut_d(const Permutation& p, Value z, Value y, Value v) {
    const int py = p.position(y);
    const int pv = p.position(v);
    if (py >= pv) {
        throw domain_error("cut_d: " + fmt_value(y) + " is not left of dell " + fmt_value(v));
    }
    check_cut_preconditions(p, z, v, y, py, pv, "cut_d");
    // Candidates are the run members and v, positions py+1..pv, with values
    // decreasing; the first one below z is the largest such.
    const auto seq = p.seq();
    for (int i = py + 1; i <= pv; ++i) {
        if (seq[i] < z) return seq[i];
    }
    throw internal_error("cut_d: no candidate below z despite v < z");
}

Permutation canonical(const PinnacleSet& s, int n) {
    const int d = static_cast<int>(s.values.size());
    if (n <= 2 * d) {
        throw domain_error("canonical: need n > 2|S|, got n=" + std::to_string(n) +
                           ", |S|=" + std::to_string(d));
    }
    std::vector<bool> in_s(n + 1, false);
    Value prev = 0;
    for (const Value x : s.values) {
        if (x < 1 || x > n) {
            throw domain_error("canonical: pinnacle " + fmt_value(x) + " out of range [1," +
                               std::to_string(n) + "]");
        }
        if (x <= prev) throw domain_error("canonical: pinnacle set not strictly increasing");
        prev = x;
        in_s[x] = true;
    }
    std::vector<Value> rest;
    rest.reserve(n - d);
    for (Value x = 1; x <= n; ++x) {
        if (!in_s[x]) rest.push_back(x);
    }
    std::vector<Value> interior(n);
    size_t next_rest = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (pos % 2 == 0 && pos <= 2 * d) {
            interior[pos - 1] = s.values[pos / 2 - 1];
        } else {
            interior[pos - 1] = rest[next_rest++];
        }
    }
    return Permutation::from_interior(interior);
}

bool is_admissible(const PinnacleSet& s, int n) {
    if (n <= 2 * static_cast<int>(s.values.size())) return false;
    for (const Value x : s.values) {
        if (x < 1 || x > n) return false;
    }
    return pinnacle_set(canonical(s, n)) == s;
}

}  // namespace pinnsort
