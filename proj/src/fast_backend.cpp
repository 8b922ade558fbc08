#include <random>
#include <string>
#include <vector>

#include "pinnsort/backend.hpp"

namespace pinnsort {

namespace {

// Tree-based backend. The framed sequence lives in one implicit treap with
// a lazy reversal flag per node, so reversing a block is three splits, one
// flag flip and two joins. Each node carries its element's current role
// (dell / pinnacle); these flags cannot change inside a reversed block, so a
// reversal only recomputes them for the four elements adjacent to the block
// boundaries. Subtree counts of flagged nodes give the shape queries
// (i-th dell, i-th pinnacle, ranks), and cutpoint queries ride a single
// root-to-leaf descent: inside a run the values are monotone in position,
// so one comparison per node decides the direction.
//
// Nodes are indexed by element value in a flat array; the value->node handle
// is therefore implicit and stable.
class FastBackend final : public SequenceBackend {
public:
    explicit FastBackend(const Permutation& p) : n_(p.n()), nodes_(p.n() + 3) {
        std::mt19937 rng(0x9E3779B9u);  // fixed: structure is deterministic
        const auto seq = p.seq();
        for (const Value x : seq) {
            Node& node = nodes_[x];
            node.value = x;
            node.prio = rng();
            node.dell = p.is_dell(x);
            node.pinn = p.is_pinnacle(x);
        }
        // Cartesian-tree build over the sequence with the rightmost spine on
        // a stack, then one bottom-up pass to set the aggregates.
        std::vector<Node*> spine;
        spine.reserve(seq.size());
        for (const Value x : seq) {
            Node* z = &nodes_[x];
            Node* last = nullptr;
            while (!spine.empty() && spine.back()->prio < z->prio) {
                last = spine.back();
                spine.pop_back();
            }
            z->ch[0] = last;
            if (last) last->parent = z;
            if (!spine.empty()) {
                spine.back()->ch[1] = z;
                z->parent = spine.back();
            }
            spine.push_back(z);
        }
        root_ = spine.front();
        pull_all(root_);
    }

    int n() const override { return n_; }

    Value at(int pos) const override {
        bump_query();
        if (pos < 0 || pos > n_ + 1) {
            throw domain_error("position " + std::to_string(pos) + " out of range [0," +
                               std::to_string(n_ + 1) + "]");
        }
        Node* u = root_;
        while (true) {
            push(u);
            const int left = size(u->ch[0]);
            if (pos < left) {
                u = u->ch[0];
            } else if (pos == left) {
                return u->value;
            } else {
                pos -= left + 1;
                u = u->ch[1];
            }
        }
    }

    int position(Value x) const override {
        bump_query();
        return position_of(node_of(x));
    }

    Value prec(Value x) const override {
        bump_query();
        Node* u = neighbor(node_of(x), 0);
        if (!u) throw domain_error("prec of the front sentinel is undefined");
        return u->value;
    }

    Value next(Value x) const override {
        bump_query();
        Node* u = neighbor(node_of(x), 1);
        if (!u) throw domain_error("next of the back sentinel is undefined");
        return u->value;
    }

    bool is_dell(Value x) const override {
        bump_query();
        return node_of(x)->dell;
    }
    bool is_pinnacle(Value x) const override {
        bump_query();
        return node_of(x)->pinn;
    }

    int pinnacle_count() const override {
        bump_query();
        return root_->cnt_pinn;
    }

    Value pinnacle_at(int i) const override {
        bump_query();
        if (i < 1 || i > root_->cnt_pinn) {
            throw domain_error("pinnacle index " + std::to_string(i) + " out of range");
        }
        return select_flagged(i, /*pinnacle=*/true);
    }

    Value dell_at(int i) const override {
        bump_query();
        if (i < 1 || i > root_->cnt_dell) {
            throw domain_error("dell index " + std::to_string(i) + " out of range");
        }
        return select_flagged(i, /*pinnacle=*/false);
    }

    int pinnacle_index(Value x) const override {
        bump_query();
        Node* u = node_of(x);
        if (!u->pinn) throw domain_error("element " + std::to_string(x) + " is not a pinnacle");
        return flag_rank(u, /*pinnacle=*/true);
    }

    int dell_index(Value x) const override {
        bump_query();
        Node* u = node_of(x);
        if (!u->dell) throw domain_error("element " + std::to_string(x) + " is not a dell");
        return flag_rank(u, /*pinnacle=*/false);
    }

    Value cut_a(Value z, Value v, Value y) const override {
        bump_query();
        const int pv = position_of(node_of(v));
        const int py = position_of(node_of(y));
        if (pv >= py) {
            throw domain_error("cut_a: dell " + std::to_string(v) + " is not left of " +
                               std::to_string(y));
        }
        check_cut(z, v, y, pv, py, /*back_bound=*/true, "cut_a");
        // Candidates v..last member occupy [pv, py-1] with ascending values;
        // the cutpoint is the last one below z.
        const Value best = range_monotone_search(pv, py - 1, z, /*take_rightmost=*/true);
        if (best < 0) throw internal_error("cut_a: no candidate below z despite v < z");
        return best;
    }

    Value cut_d(Value z, Value y, Value v) const override {
        bump_query();
        const int py = position_of(node_of(y));
        const int pv = position_of(node_of(v));
        if (py >= pv) {
            throw domain_error("cut_d: " + std::to_string(y) + " is not left of dell " +
                               std::to_string(v));
        }
        check_cut(z, v, y, py, pv, /*back_bound=*/false, "cut_d");
        // Candidates first member..v occupy [py+1, pv] with descending
        // values; the cutpoint is the first one below z.
        const Value best = range_monotone_search(py + 1, pv, z, /*take_rightmost=*/false);
        if (best < 0) throw internal_error("cut_d: no candidate below z despite v < z");
        return best;
    }

    void reverse(Value w1, Value w2) override {
        const std::uint64_t before = counters_.node_touches;
        check_interior(w1);
        check_interior(w2);
        const int a = position_of(node_of(w1));
        const int b = position_of(node_of(w2));
        if (a > b) {
            throw domain_error("reversal endpoint " + std::to_string(w1) + " lies right of " +
                               std::to_string(w2));
        }
        if (a < b) {
            const Value outer_left = neighbor(node_of(w1), 0)->value;
            const Value outer_right = neighbor(node_of(w2), 1)->value;

            auto [lm, r] = split(root_, b + 1);
            auto [l, m] = split(lm, a);
            m->rev ^= 1;
            root_ = merge(merge(l, m), r);
            root_->parent = nullptr;

            repair_role(outer_left);
            repair_role(w1);
            repair_role(w2);
            repair_role(outer_right);
        }
        ++counters_.reversals;
        counters_.last_reversal_touches = counters_.node_touches - before;
        counters_.max_reversal_touches =
            std::max(counters_.max_reversal_touches, counters_.last_reversal_touches);
    }

    std::vector<Value> contents() const override {
        std::vector<Value> out;
        out.reserve(n_ + 2);
        collect(root_, out);
        return out;
    }

    const BackendCounters& counters() const override { return counters_; }

private:
    struct Node {
        Value value = 0;
        Node* ch[2] = {nullptr, nullptr};
        Node* parent = nullptr;
        std::uint32_t prio = 0;
        int size = 1;
        int cnt_dell = 0;
        int cnt_pinn = 0;
        bool rev = false;
        bool dell = false;
        bool pinn = false;
    };

    static int size(const Node* u) { return u ? u->size : 0; }
    static int cntd(const Node* u) { return u ? u->cnt_dell : 0; }
    static int cntp(const Node* u) { return u ? u->cnt_pinn : 0; }

    void touch() const { ++counters_.node_touches; }
    void bump_query() const { ++counters_.queries; }

    Node* node_of(Value x) const {
        if (x < 1 || x > n_ + 2) throw domain_error("element " + std::to_string(x) + " not present");
        return const_cast<Node*>(&nodes_[x]);
    }

    void check_interior(Value w) const {
        if (w == n_ + 1 || w == n_ + 2) {
            throw domain_error("reversal endpoint " + std::to_string(w) + " is a sentinel");
        }
        if (w < 1 || w > n_) {
            throw domain_error("reversal endpoint " + std::to_string(w) + " is absent");
        }
    }

    void push(Node* u) const {
        touch();
        if (!u->rev) return;
        std::swap(u->ch[0], u->ch[1]);
        for (Node* c : u->ch) {
            if (c) c->rev = !c->rev;
        }
        u->rev = false;
    }

    void pull(Node* u) const {
        touch();
        u->size = 1 + size(u->ch[0]) + size(u->ch[1]);
        u->cnt_dell = (u->dell ? 1 : 0) + cntd(u->ch[0]) + cntd(u->ch[1]);
        u->cnt_pinn = (u->pinn ? 1 : 0) + cntp(u->ch[0]) + cntp(u->ch[1]);
    }

    void pull_all(Node* u) {
        if (!u) return;
        pull_all(u->ch[0]);
        pull_all(u->ch[1]);
        pull(u);
    }

    // Clears pending flags on the root->u path so that the parent/child
    // orientation along it is definitive.
    void path_push(Node* u) const {
        thread_local std::vector<Node*> path;
        path.clear();
        for (Node* w = u; w; w = w->parent) path.push_back(w);
        for (auto it = path.rbegin(); it != path.rend(); ++it) push(*it);
    }

    int position_of(Node* u) const {
        path_push(u);
        int pos = size(u->ch[0]);
        for (Node* w = u; w->parent; w = w->parent) {
            touch();
            if (w == w->parent->ch[1]) pos += size(w->parent->ch[0]) + 1;
        }
        return pos;
    }

    Node* neighbor(Node* u, int side) const {
        path_push(u);
        if (u->ch[side]) {
            Node* w = u->ch[side];
            while (true) {
                push(w);
                if (!w->ch[side ^ 1]) return w;
                w = w->ch[side ^ 1];
            }
        }
        Node* w = u;
        while (w->parent && w == w->parent->ch[side]) {
            touch();
            w = w->parent;
        }
        return w->parent;
    }

    Value select_flagged(int i, bool pinnacle) const {
        Node* u = root_;
        while (u) {
            push(u);
            const int left = pinnacle ? cntp(u->ch[0]) : cntd(u->ch[0]);
            const bool self = pinnacle ? u->pinn : u->dell;
            if (i <= left) {
                u = u->ch[0];
            } else if (self && i == left + 1) {
                return u->value;
            } else {
                i -= left + (self ? 1 : 0);
                u = u->ch[1];
            }
        }
        throw internal_error("select_flagged: rank out of range");
    }

    int flag_rank(Node* u, bool pinnacle) const {
        path_push(u);
        int r = (pinnacle ? cntp(u->ch[0]) : cntd(u->ch[0])) + 1;
        for (Node* w = u; w->parent; w = w->parent) {
            touch();
            Node* par = w->parent;
            if (w == par->ch[1]) {
                r += (pinnacle ? cntp(par->ch[0]) + (par->pinn ? 1 : 0)
                               : cntd(par->ch[0]) + (par->dell ? 1 : 0));
            }
        }
        return r;
    }

    // Number of dell or pinnacle nodes at positions <= pos.
    int prefix_shape(int pos) const {
        Node* u = root_;
        int acc = 0;
        while (u) {
            push(u);
            const int here = size(u->ch[0]);
            if (here <= pos) {
                acc += cntd(u->ch[0]) + cntp(u->ch[0]) + (u->dell ? 1 : 0) + (u->pinn ? 1 : 0);
                pos -= here + 1;
                u = u->ch[1];
            } else {
                u = u->ch[0];
            }
        }
        return acc;
    }

    void check_cut(Value z, Value v, Value y, int lo_pos, int hi_pos, bool back_bound,
                   const char* name) const {
        if (!node_of(v)->dell) {
            throw domain_error(std::string(name) + ": " + std::to_string(v) + " is not a dell");
        }
        const Value bound = back_bound ? n_ + 2 : n_ + 1;
        if (!node_of(y)->pinn && y != bound) {
            throw domain_error(std::string(name) + ": " + std::to_string(y) +
                               " is neither a pinnacle nor a bound");
        }
        if (hi_pos - lo_pos > 1 && prefix_shape(hi_pos - 1) - prefix_shape(lo_pos) != 0) {
            throw domain_error(std::string(name) + ": delimiters " + std::to_string(v) + "," +
                               std::to_string(y) + " do not bound a single run");
        }
        if (!(v < z)) {
            throw domain_error(std::string(name) + ": need " + std::to_string(v) + " < z, got z=" +
                               std::to_string(z));
        }
        if (!(z < y)) {
            throw domain_error(std::string(name) + ": need z < " + std::to_string(y) + ", got z=" +
                               std::to_string(z));
        }
        const int pz = position_of(node_of(z));
        if (pz > lo_pos && pz < hi_pos) {
            throw domain_error(std::string(name) + ": z=" + std::to_string(z) +
                               " lies inside the run");
        }
    }

    // One descent for a cutpoint: positions in [lo, hi] hold a value-monotone
    // segment. With take_rightmost the segment ascends and we want the last
    // value below z; otherwise it descends and we want the first one.
    Value range_monotone_search(int lo, int hi, Value z, bool take_rightmost) const {
        Node* u = root_;
        int offset = 0;
        Value best = -1;
        while (u) {
            push(u);
            const int pos = offset + size(u->ch[0]);
            int dir;
            if (pos < lo) {
                dir = 1;
            } else if (pos > hi) {
                dir = 0;
            } else if (u->value < z) {
                best = u->value;
                dir = take_rightmost ? 1 : 0;
            } else {
                dir = take_rightmost ? 0 : 1;
            }
            if (dir == 1) offset = pos + 1;
            u = u->ch[dir];
        }
        return best;
    }

    Node* merge(Node* a, Node* b) {
        if (!a) return b;
        if (!b) return a;
        if (a->prio >= b->prio) {
            push(a);
            Node* r = merge(a->ch[1], b);
            a->ch[1] = r;
            r->parent = a;
            pull(a);
            return a;
        }
        push(b);
        Node* l = merge(a, b->ch[0]);
        b->ch[0] = l;
        l->parent = b;
        pull(b);
        return b;
    }

    // Splits off the first k elements.
    std::pair<Node*, Node*> split(Node* t, int k) {
        if (!t) return {nullptr, nullptr};
        push(t);
        const int left = size(t->ch[0]);
        if (k <= left) {
            auto [l, r] = split(t->ch[0], k);
            t->ch[0] = r;
            if (r) r->parent = t;
            pull(t);
            if (l) l->parent = nullptr;
            return {l, t};
        }
        auto [l, r] = split(t->ch[1], k - left - 1);
        t->ch[1] = l;
        if (l) l->parent = t;
        pull(t);
        if (r) r->parent = nullptr;
        return {t, r};
    }

    void repair_role(Value x) {
        if (x > n_) return;  // frame elements never change role
        Node* u = node_of(x);
        const Node* left = neighbor(u, 0);
        const Node* right = neighbor(u, 1);
        const bool dell = left->value > x && x < right->value;
        const bool pinn = left->value < x && x > right->value;
        if (dell == u->dell && pinn == u->pinn) return;
        u->dell = dell;
        u->pinn = pinn;
        for (Node* w = u; w; w = w->parent) pull(w);
    }

    void collect(const Node* u, std::vector<Value>& out) const {
        if (!u) return;
        push(const_cast<Node*>(u));
        collect(u->ch[0], out);
        out.push_back(u->value);
        collect(u->ch[1], out);
    }

    int n_;
    // Lazy maintenance rewrites the representation under const queries.
    mutable std::vector<Node> nodes_;
    mutable Node* root_ = nullptr;
    mutable BackendCounters counters_;
};

}  // namespace

std::unique_ptr<SequenceBackend> make_fast_backend(const Permutation& p) {
    return std::make_unique<FastBackend>(p);
}

}  // namespace pinnsort
