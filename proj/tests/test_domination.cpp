#include "doctest.h"
#include "levelcover/constructions.hpp"
#include "levelcover/domination.hpp"
#include "oracles.hpp"

using namespace levelcover;

namespace {

DominatingPair hand_pair() {
    return DominatingPair(4, 3, 2, Family(2, {Subset{1, 4}}), Family(3, {Subset{1, 2, 3}, Subset{2, 3, 4}}));
}

std::vector<std::vector<int>> witnesses(const DominationVerdict& v, Side side) {
    std::vector<std::vector<int>> out;
    for (const auto& x : v.violations) {
        if (x.side == side) out.emplace_back(x.witness.begin(), x.witness.end());
    }
    return out;
}

}  // namespace

TEST_CASE("pair validation") {
    CHECK_THROWS_AS(DominatingPair(3, 3, 2, Family(2), Family(3)), std::invalid_argument);
    CHECK_THROWS_AS(DominatingPair(4, 3, 2, Family(3), Family(3)), std::invalid_argument);
    CHECK_THROWS_AS(DominatingPair(4, 3, 2, Family(2, {Subset{1, 5}}), Family(3)), std::invalid_argument);
    CHECK(hand_pair().size() == 3);
}

TEST_CASE("hand instance is dominating") {
    const auto v = check_domination(hand_pair());
    CHECK(v.dominating);
    CHECK(v.violations.empty());
    const auto c = condition_counts(hand_pair());
    CHECK(c.ksets_via_lsets == 2);
    CHECK(c.lsets_via_ksets == 5);
}

TEST_CASE("all pairs dominate") {
    for (int n = 4; n <= 7; ++n) {
        DominatingPair d(n, 3, 2, all_ksubsets(n, 2), Family(3));
        CHECK(check_domination(d).dominating);
        const auto c = condition_counts(d);
        CHECK(c.ksets_via_lsets == oracle::pascal(n, 3));
        CHECK(c.lsets_via_ksets == 0);
    }
}

TEST_CASE("missing pair is reported on the lower side") {
    DominatingPair d(4, 3, 2, Family(2, {Subset{1, 2}, Subset{3, 4}}), Family(3));
    const auto v = check_domination(d);
    CHECK_FALSE(v.dominating);
    const auto lower = witnesses(v, Side::lower);
    CHECK(std::find(lower.begin(), lower.end(), std::vector<int>{1, 3}) != lower.end());
    CHECK(v.lower_violations == 4);
    CHECK(v.upper_violations == 0);
}

TEST_CASE("empty pair") {
    DominatingPair d(5, 3, 2, Family(2), Family(3));
    const auto v = check_domination(d);
    CHECK_FALSE(v.dominating);
    CHECK(v.lower_violations == 10);
    CHECK(v.upper_violations == 10);
    CHECK(condition_counts(d) == ConditionCounts{0, 0});
}

TEST_CASE("violation cap keeps the colex-smallest witnesses, lower side first") {
    DominatingPair d(7, 4, 2, Family(2), Family(4));
    const auto v = check_domination(d, 25);
    REQUIRE(v.violations.size() == 25);
    CHECK(v.lower_violations == 21);
    CHECK(v.upper_violations == 35);
    auto lower = oracle::colex_subsets(7, 2);
    auto upper = oracle::colex_subsets(7, 4);
    for (std::size_t i = 0; i < 21; ++i) {
        CHECK(v.violations[i].side == Side::lower);
        CHECK(std::vector<int>(v.violations[i].witness.begin(), v.violations[i].witness.end()) == lower[i]);
    }
    for (std::size_t i = 21; i < 25; ++i) {
        CHECK(v.violations[i].side == Side::upper);
        CHECK(std::vector<int>(v.violations[i].witness.begin(), v.violations[i].witness.end()) == upper[i - 21]);
    }
}

TEST_CASE("agrees with the naive double loop for every small instance") {
    std::mt19937_64 rng(2024);
    for (int n = 3; n <= 7; ++n) {
        for (int k = 2; k < n; ++k) {
            for (int l = 1; l < k; ++l) {
                const auto lower = all_ksubsets(n, l);
                const auto upper = all_ksubsets(n, k);
                for (int trial = 0; trial < 12; ++trial) {
                    std::vector<Subset> ls, ks;
                    const unsigned pl = static_cast<unsigned>(rng() % 100), pk = static_cast<unsigned>(rng() % 30);
                    for (const auto& s : lower) {
                        if (rng() % 100 < pl) ls.push_back(s);
                    }
                    for (const auto& s : upper) {
                        if (rng() % 100 < pk) ks.push_back(s);
                    }
                    DominatingPair d(n, k, l, Family(l, ls), Family(k, ks));
                    const auto v = check_domination(d, 1000);
                    const auto naive = oracle::naive_domination(d);
                    auto nl = naive.lower, nu = naive.upper;
                    std::sort(nl.begin(), nl.end(), oracle::colex_vec_less);
                    std::sort(nu.begin(), nu.end(), oracle::colex_vec_less);
                    CHECK(witnesses(v, Side::lower) == nl);
                    CHECK(witnesses(v, Side::upper) == nu);
                    CHECK(v.dominating == (nl.empty() && nu.empty()));
                    const auto c = condition_counts(d);
                    CHECK(c.ksets_via_lsets == naive.ksets_via_lsets);
                    CHECK(c.lsets_via_ksets == naive.lsets_via_ksets);
                }
            }
        }
    }
}

TEST_CASE("adding members preserves domination") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = oracle::random_dominating_pair(6, 3, 2, rng, 30);
        REQUIRE(check_domination(d).dominating);
        const auto lower = all_ksubsets(6, 2);
        const auto upper = all_ksubsets(6, 3);
        std::vector<Subset> ls(d.lsets.begin(), d.lsets.end()), ks(d.ksets.begin(), d.ksets.end());
        const auto extra_l = lower[rng() % lower.size()];
        const auto extra_k = upper[rng() % upper.size()];
        if (!d.lsets.contains(extra_l)) ls.push_back(extra_l);
        if (!d.ksets.contains(extra_k)) ks.push_back(extra_k);
        CHECK(check_domination(DominatingPair(6, 3, 2, Family(2, ls), d.ksets)).dominating);
        CHECK(check_domination(DominatingPair(6, 3, 2, d.lsets, Family(3, ks))).dominating);
    }
}

TEST_CASE("gk1 witness dominates for every small instance") {
    for (int n = 3; n <= 30; ++n) {
        for (int k = 2; k < n; ++k) {
            const auto d = gk1_construct(n, k);
            CHECK(d.size() == static_cast<std::size_t>(n - k + 1));
            CHECK(check_domination(d).dominating);
        }
    }
}

TEST_CASE("free k-sets are enumerated in colex order") {
    const Family e(2, {Subset{1, 2}, Subset{3, 4}});
    std::vector<std::vector<int>> seen;
    for_each_free_kset(5, 3, e, [&](std::span<const int> s) { seen.emplace_back(s.begin(), s.end()); });
    std::vector<std::vector<int>> expected;
    for (const auto& s : oracle::colex_subsets(5, 3)) {
        const bool has12 = oracle::is_subset({1, 2}, s), has34 = oracle::is_subset({3, 4}, s);
        if (!has12 && !has34) expected.push_back(s);
    }
    CHECK(seen == expected);
}
