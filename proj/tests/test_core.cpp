#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pinnsort/permutation.hpp"

using namespace pinnsort;
using fixtures::for_each_permutation;
using fixtures::random_permutation;

namespace {

std::vector<Value> interior_of(const Permutation& p) { return p.interior(); }

void check_shape_invariants(const Permutation& p) {
    const Shape sh = shape(p);
    REQUIRE(sh.dells.size() == sh.pinnacles.size() + 1);

    // Dells and pinnacles strictly alternate, dell first and dell last.
    std::vector<std::pair<int, bool>> marks;  // position, is_dell
    for (const Value v : sh.dells) marks.emplace_back(p.position(v), true);
    for (const Value y : sh.pinnacles) marks.emplace_back(p.position(y), false);
    std::sort(marks.begin(), marks.end());
    for (size_t i = 0; i < marks.size(); ++i) {
        REQUIRE(marks[i].second == (i % 2 == 0));
    }
    REQUIRE(!marks.empty());
    REQUIRE(marks.back().second);

    // Each dell below both neighbors, each pinnacle above both.
    for (const Value v : sh.dells) {
        REQUIRE(p.prec(v) > v);
        REQUIRE(p.next(v) > v);
    }
    for (const Value y : sh.pinnacles) {
        REQUIRE(p.prec(y) < y);
        REQUIRE(p.next(y) < y);
    }
}

void check_runs_partition(const Permutation& p) {
    const Shape sh = shape(p);
    const auto rs = runs(p);
    const int pc = sh.p();
    REQUIRE(static_cast<int>(rs.size()) == 2 * pc + 2);

    size_t member_total = 0;
    for (size_t k = 0; k < rs.size(); ++k) {
        const Run& r = rs[k];
        REQUIRE(r.kind == (k % 2 == 0 ? RunKind::Descending : RunKind::Ascending));
        member_total += r.members.size();
        for (size_t i = 1; i < r.members.size(); ++i) {
            if (r.kind == RunKind::Ascending) {
                REQUIRE(r.members[i - 1] < r.members[i]);
            } else {
                REQUIRE(r.members[i - 1] > r.members[i]);
            }
        }
        for (const Value m : r.members) {
            REQUIRE(!p.is_dell(m));
            REQUIRE(!p.is_pinnacle(m));
        }
    }
    REQUIRE(member_total == static_cast<size_t>(p.n() + 2 - pc - (pc + 1)));
}

void check_cuts_against_scan(const Permutation& p, std::mt19937& rng) {
    const auto rs = runs(p);
    const auto seq = oracles::framed(p);
    for (const Run& r : rs) {
        const Value dell = r.kind == RunKind::Ascending ? r.left : r.right;
        const Value top = r.kind == RunKind::Ascending ? r.right : r.left;
        if (dell + 1 > top - 1) continue;  // no admissible z between them
        for (int tries = 0; tries < 8; ++tries) {
            const Value z = std::uniform_int_distribution<Value>(dell + 1, top - 1)(rng);
            const int pz = p.position(z);
            const int lo = std::min(p.position(dell), p.position(top));
            const int hi = std::max(p.position(dell), p.position(top));
            if (pz > lo && pz < hi) continue;  // z inside the run
            const auto expect = oracles::brute_cut(seq, z, dell, top);
            REQUIRE(expect.has_value());
            const Value got = r.kind == RunKind::Ascending ? cut_a(p, z, dell, top)
                                                           : cut_d(p, z, top, dell);
            REQUIRE(got == *expect);
        }
    }
}

}  // namespace

TEST_CASE("from_interior attaches the frame") {
    const Permutation p = Permutation::from_interior({2, 1, 3});
    REQUIRE(oracles::framed(p) == std::vector<Value>{4, 2, 1, 3, 5});

    const Permutation ex1 = fixtures::example1();
    REQUIRE(oracles::framed(ex1) == std::vector<Value>{11, 8, 6, 7, 4, 3, 2, 1, 5, 10, 9, 12});
}

TEST_CASE("from_interior rejects bad input with the offending index") {
    REQUIRE_THROWS_WITH_AS(Permutation::from_interior({1, 1, 2}),
                           doctest::Contains("duplicate value 1 at index 1"), domain_error);
    REQUIRE_THROWS_WITH_AS(Permutation::from_interior({1, 5, 2}),
                           doctest::Contains("value 5 at index 1"), domain_error);
    const std::vector<Value> two{1, 2};
    REQUIRE_THROWS_AS(Permutation::from_interior(two, 3), domain_error);
    REQUIRE_THROWS_AS(Permutation::from_interior(std::initializer_list<Value>{}), domain_error);
}

TEST_CASE("sentinel form rejects a broken frame") {
    const std::vector<Value> good{4, 2, 1, 3, 5};
    REQUIRE(Permutation::from_sentinel_form(good) == Permutation::from_interior({2, 1, 3}));
    const std::vector<Value> bad{5, 2, 1, 3, 4};
    REQUIRE_THROWS_AS(Permutation::from_sentinel_form(bad), domain_error);
}

TEST_CASE("pinnacle_set on the worked examples") {
    REQUIRE(pinnacle_set(fixtures::example1()).values == std::vector<Value>{7, 10});
    REQUIRE(pinnacle_set(Permutation::from_interior({2, 1, 3})).values.empty());
    REQUIRE(pinnacle_set(fixtures::table2_initial()).values ==
            std::vector<Value>{3, 5, 8, 11, 13, 15, 18});
}

TEST_CASE("shape on the worked examples") {
    const Shape s1 = shape(fixtures::example1());
    REQUIRE(s1.interleaved() == std::vector<Value>{11, 6, 7, 1, 10, 9, 12});

    const Shape s2 = shape(Permutation::from_interior({2, 1, 3}));
    REQUIRE(s2.pinnacles.empty());
    REQUIRE(s2.dells == std::vector<Value>{1});

    const Shape s3 = shape(canonical(PinnacleSet{{7, 10}}, 10));
    REQUIRE(s3.interleaved() == std::vector<Value>{11, 1, 7, 2, 10, 3, 12});
}

TEST_CASE("runs on the worked examples") {
    const auto rs = runs(fixtures::example1());
    REQUIRE(rs.size() == 6);
    REQUIRE(rs[0] == Run{RunKind::Descending, 11, 6, {11, 8}});
    REQUIRE(rs[1] == Run{RunKind::Ascending, 6, 7, {}});
    REQUIRE(rs[2] == Run{RunKind::Descending, 7, 1, {4, 3, 2}});
    REQUIRE(rs[3] == Run{RunKind::Ascending, 1, 10, {5}});
    REQUIRE(rs[4] == Run{RunKind::Descending, 10, 9, {}});
    REQUIRE(rs[5] == Run{RunKind::Ascending, 9, 12, {12}});

    const auto rs2 = runs(Permutation::from_interior({2, 1, 3}));
    REQUIRE(rs2.size() == 2);
    REQUIRE(rs2[0] == Run{RunKind::Descending, 4, 1, {4, 2}});
    REQUIRE(rs2[1] == Run{RunKind::Ascending, 1, 5, {3, 5}});

    // The frame elements belong to the two boundary runs, so the first
    // descending run of the canonical permutation holds exactly n+1.
    const auto rs3 = runs(canonical(PinnacleSet{{7, 10}}, 10));
    REQUIRE(rs3.size() == 6);
    REQUIRE(rs3[0] == Run{RunKind::Descending, 11, 1, {11}});
    REQUIRE(rs3[1].members.empty());
    REQUIRE(rs3[2].members.empty());
    REQUIRE(rs3[3].members.empty());
    REQUIRE(rs3[4].members.empty());
    REQUIRE(rs3[5] == Run{RunKind::Ascending, 3, 12, {4, 5, 6, 8, 9, 12}});
}

TEST_CASE("prec and next") {
    const Permutation p = fixtures::example1();
    REQUIRE(p.prec(6) == 8);
    REQUIRE(p.next(6) == 7);
    REQUIRE_THROWS_AS(p.prec(p.front_sentinel()), domain_error);
    REQUIRE_THROWS_AS(p.next(p.back_sentinel()), domain_error);
    REQUIRE(fixtures::table2_pre_step3().next(12) == 16);
}

TEST_CASE("cutpoints on the worked examples") {
    REQUIRE(cut_a(fixtures::example1(), 6, 1, 10) == 5);

    // Empty run: the dell is the only candidate.
    const Permutation gap = Permutation::from_interior({1, 5, 2, 3, 4});
    REQUIRE(cut_a(gap, 3, 1, 5) == 1);
    REQUIRE(cut_d(gap, 4, 5, 2) == 2);

    REQUIRE(cut_a(fixtures::table2_after_r4_1(), 11, 7, 13) == 7);
    REQUIRE(cut_d(fixtures::table2_pre_step3(), 16, 18, 12) == 14);
    REQUIRE(cut_d(fixtures::table2_after_r12_14(), 17, 18, 12) == 16);
}

TEST_CASE("cutpoint preconditions are checked") {
    const Permutation p = fixtures::example1();
    REQUIRE_THROWS_AS(cut_a(p, 6, 1, 9), domain_error);   // 9 is a dell, not a pinnacle
    REQUIRE_THROWS_AS(cut_a(p, 12, 1, 10), domain_error); // z >= y
    REQUIRE_THROWS_AS(cut_a(p, 5, 1, 10), domain_error);  // z inside the run
    REQUIRE_THROWS_AS(cut_a(p, 6, 1, 12), domain_error);  // (1,12) spans several runs
    REQUIRE_THROWS_AS(cut_d(p, 3, 7, 9), domain_error);   // (7,9) spans several runs
}

TEST_CASE("canonical construction") {
    REQUIRE(interior_of(canonical(PinnacleSet{{7, 10}}, 10)) ==
            std::vector<Value>{1, 7, 2, 10, 3, 4, 5, 6, 8, 9});
    REQUIRE(interior_of(canonical(PinnacleSet{}, 4)) == std::vector<Value>{1, 2, 3, 4});
    REQUIRE(canonical(PinnacleSet{{3, 5, 8, 11, 13, 15, 18}}, 19) == fixtures::table2_final());

    REQUIRE_THROWS_AS(canonical(PinnacleSet{{7, 10}}, 4), domain_error);
    REQUIRE_THROWS_AS(canonical(PinnacleSet{{7, 10}}, 8), domain_error);
}

TEST_CASE("admissibility via the canonical construction") {
    REQUIRE(is_admissible(PinnacleSet{{7, 10}}, 10));
    REQUIRE(is_admissible(PinnacleSet{{3, 5, 7}}, 7));
    for (int n = 3; n <= 12; ++n) {
        REQUIRE_FALSE(is_admissible(PinnacleSet{{2}}, n));
    }
    REQUIRE_FALSE(is_admissible(PinnacleSet{{7, 10}}, 4));  // n <= 2|S|
    REQUIRE_FALSE(is_admissible(PinnacleSet{{12}}, 10));    // value out of range
}

TEST_CASE("shape and run invariants over all small permutations") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            check_shape_invariants(p);
            check_runs_partition(p);
        });
    }
}

TEST_CASE("shape and run invariants on random large permutations") {
    std::mt19937 rng(20240811);
    for (const int n : {50, 200, 1000}) {
        for (int rep = 0; rep < 5; ++rep) {
            const Permutation p = random_permutation(n, rng);
            check_shape_invariants(p);
            check_runs_partition(p);
        }
    }
}

TEST_CASE("canonical permutations have pinnacle set S and the smallest dells") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        // Random candidate set, kept only when admissible.
        std::vector<Value> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        const int d = std::uniform_int_distribution<int>(0, (n - 1) / 2)(rng);
        PinnacleSet s;
        s.values.assign(pool.begin(), pool.begin() + d);
        std::sort(s.values.begin(), s.values.end());
        if (!is_admissible(s, n)) continue;

        const Permutation c = canonical(s, n);
        REQUIRE(pinnacle_set(c) == s);
        const Shape sh = shape(c);
        std::vector<Value> expected_dells;
        for (Value x = 1; x <= n && static_cast<int>(expected_dells.size()) < sh.p() + 1; ++x) {
            if (!std::binary_search(s.values.begin(), s.values.end(), x)) {
                expected_dells.push_back(x);
            }
        }
        REQUIRE(sh.dells == expected_dells);
    }
}

TEST_CASE("cutpoints agree with a linear scan") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& p) { check_cuts_against_scan(p, rng); });
    }
    for (int rep = 0; rep < 50; ++rep) {
        check_cuts_against_scan(random_permutation(60, rng), rng);
    }
}
