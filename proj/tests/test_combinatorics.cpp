#include <sstream>

#include "doctest.h"
#include "levelcover/combinatorics.hpp"
#include "levelcover/family_io.hpp"
#include "levelcover/solver.hpp"
#include "oracles.hpp"

using namespace levelcover;

namespace {
std::vector<std::vector<int>> listing(const Family& f) {
    std::vector<std::vector<int>> out;
    for (const auto& s : f) out.emplace_back(s.begin(), s.end());
    return out;
}
}  // namespace

TEST_CASE("subset validation") {
    CHECK_THROWS_AS(Subset({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Subset({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Subset({1, 1}), std::invalid_argument);
    CHECK(Subset::from_unsorted({3, 1, 2}) == Subset{1, 2, 3});
    CHECK(Subset{1, 2, 4}.includes(Subset{2, 4}));
    CHECK_FALSE(Subset{1, 2, 4}.includes(Subset{3}));
}

TEST_CASE("family keeps colex order and rejects bad members") {
    Family f(2, {Subset{2, 3}, Subset{1, 2}, Subset{1, 3}});
    CHECK(listing(f) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(Family(2, {Subset{1, 2}, Subset{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Family(2, {Subset{1, 2, 3}}), std::invalid_argument);
    CHECK(f.index_of(Subset{1, 3}) == 1u);
    CHECK_FALSE(f.contains(Subset{3, 4}));
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(3, 5) == 0);
    for (int n = 0; n <= 40; ++n) {
        for (int r = 0; r <= n; ++r) CHECK(binomial_u64(n, r) == oracle::pascal(n, r));
    }
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    CHECK_THROWS_AS(binomial_u64(100, 50), std::overflow_error);
}

TEST_CASE("colex enumeration") {
    CHECK(listing(all_ksubsets(3, 2)) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    const Family empty_set = all_ksubsets(4, 0);
    REQUIRE(empty_set.size() == 1);
    CHECK(empty_set[0].empty());
    const Family six = all_ksubsets(6, 3);
    CHECK(six.size() == 20);
    CHECK(six[0] == Subset{1, 2, 3});
    CHECK(six[19] == Subset{4, 5, 6});
    for (std::size_t i = 0; i + 1 < six.size(); ++i) CHECK(colex_less(six[i], six[i + 1]));
    CHECK(listing(six) == oracle::colex_subsets(6, 3));
}

TEST_CASE("rank and unrank") {
    CHECK(rank_colex(Subset{1, 2, 3}) == 0);
    CHECK(unrank_colex(2, 0) == Subset{1, 2});
    CHECK(rank_colex(unrank_colex(3, 17)) == 17);
    CHECK_THROWS_AS(unrank_colex_checked(5, 3, 10), std::out_of_range);
    for (int n = 1; n <= 12; ++n) {
        for (int r = 0; r <= std::min(n, 6); ++r) {
            std::uint64_t expected = 0;
            for (const auto& s : enumerate_ksubsets(n, r)) {
                CHECK(rank_colex(s) == expected);
                CHECK(unrank_colex(r, expected) == s);
                ++expected;
            }
            CHECK(expected == oracle::pascal(n, r));
        }
    }
}

TEST_CASE("near-equal partition") {
    auto p = near_equal_partition(6, 3);
    CHECK(p.part(0) == Subset{1, 2});
    CHECK(p.part(1) == Subset{3, 4});
    CHECK(p.part(2) == Subset{5, 6});
    auto q = near_equal_partition(7, 3);
    CHECK(q.part(0).size() == 3);
    CHECK(q.part(1).size() == 2);
    CHECK(q.part(2).size() == 2);
    auto h = near_equal_partition(10, 2);
    CHECK(h.part(0) == Subset{1, 2, 3, 4, 5});
    CHECK(h.part(1) == Subset{6, 7, 8, 9, 10});
    CHECK(h.part_of(6) == 1);
    CHECK_THROWS_AS(near_equal_partition(3, 4), std::invalid_argument);
}

TEST_CASE("turan graph") {
    CHECK(turan_count(5, 2) == 6);
    CHECK(turan_count(7, 3) == 16);
    CHECK(turan_graph(4, 4) == all_ksubsets(4, 2));
    for (int n = 1; n <= 50; ++n) {
        for (int s = 1; s <= n; ++s) {
            const auto p = near_equal_partition(n, s);
            std::uint64_t inside = 0;
            for (const auto& part : p.parts()) inside += oracle::pascal(part.size(), 2);
            CHECK(turan_count(n, s) == oracle::pascal(n, 2) - inside);
            if (n <= 20) CHECK(turan_graph(n, s).size() == turan_count(n, s));
        }
    }
    for (int n = 2; n <= 12; ++n) {
        for (int s = 1; s <= std::min(n, 4); ++s) {
            const auto g = turan_graph(n, s);
            CHECK(count_cliques(g, n, s + 1) == 0);
            CHECK(count_cliques(g, n, s) == oracle::brute_cliques(g, n, s));
        }
    }
}

TEST_CASE("2-shadow") {
    CHECK(shadow2(Family(4, {Subset{1, 2, 3, 4}})).size() == 6);
    const auto chain = shadow2(Family(3, {Subset{1, 2, 3}, Subset{2, 3, 4}}));
    CHECK(listing(chain) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(shadow2(Family(3)).empty());
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 3 + static_cast<int>(rng() % 3);
        const auto f = oracle::random_connected(9, r, 1 + static_cast<int>(rng() % 8), rng);
        const auto sh = shadow2(f);
        CHECK(sh.size() <= f.size() * static_cast<std::size_t>(r * (r - 1) / 2));
        std::vector<std::vector<int>> expected = oracle::shadow_pairs(f);
        std::sort(expected.begin(), expected.end(), oracle::colex_vec_less);
        CHECK(listing(sh) == expected);
    }
}

TEST_CASE("complement pairs") {
    CHECK(complement_pairs(all_ksubsets(4, 2), 4).empty());
    CHECK(complement_pairs(Family(2), 4) == all_ksubsets(4, 2));
    const auto rest = complement_pairs(Family(2, {Subset{1, 4}}), 4);
    CHECK(rest.size() == 5);
    CHECK_FALSE(rest.contains(Subset{1, 4}));
}

TEST_CASE("family text and json round trip") {
    const Family f(2, {Subset{2, 3}, Subset{1, 4}});
    const std::string text = family_to_text(f, 5);
    CHECK(text == "n 5 r 2\n2 3\n1 4\n");
    const auto back = family_from_text("n 5 r 2\n1 4\n2 3\n");
    CHECK(back.n == 5);
    CHECK(back.family == f);
    CHECK_THROWS_AS(family_from_text("n 3 r 2\n1 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(family_from_text("garbage"), FormatError);
    const auto j = family_to_json(f, 5);
    CHECK(j.dump() == R"({"n":5,"r":2,"members":[[2,3],[1,4]]})");
    CHECK(family_from_json(nlohmann::json::parse(j.dump())).family == f);
}
