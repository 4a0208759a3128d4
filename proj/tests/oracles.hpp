#pragma once

// Independent reference implementations used only by the tests. They avoid the library's
// ranking, bitset and search code so that agreement means something.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "levelcover/combinatorics.hpp"
#include "levelcover/domination.hpp"

namespace oracle {

using levelcover::DominatingPair;
using levelcover::Family;
using levelcover::Subset;

// Pascal's triangle in unsigned 64-bit arithmetic; fine for n <= 60.
inline std::uint64_t pascal(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::vector<std::vector<std::uint64_t>> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        row[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return row[n][r];
}

// All r-subsets of [n] as plain vectors, lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int e = start; e <= n; ++e) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::set<std::vector<int>> as_set(const Family& f) {
    std::set<std::vector<int>> out;
    for (const auto& s : f) out.insert(std::vector<int>(s.begin(), s.end()));
    return out;
}

struct NaiveVerdict {
    std::vector<std::vector<int>> lower;  // undominated l-sets
    std::vector<std::vector<int>> upper;  // undominated k-sets
    std::uint64_t ksets_via_lsets = 0;
    std::uint64_t lsets_via_ksets = 0;
};

// Double loop over every vertex of G_{k,l} and every chosen vertex.
inline NaiveVerdict naive_domination(const DominatingPair& d) {
    const auto ls = as_set(d.lsets);
    const auto ks = as_set(d.ksets);
    NaiveVerdict v;
    for (const auto& L : subsets(d.n, d.l)) {
        bool covered = false;
        for (const auto& K : ks) covered = covered || is_subset(L, K);
        if (ls.count(L)) continue;
        if (covered)
            ++v.lsets_via_ksets;
        else
            v.lower.push_back(L);
    }
    for (const auto& K : subsets(d.n, d.k)) {
        bool covered = false;
        for (const auto& L : ls) covered = covered || is_subset(L, K);
        if (ks.count(K)) continue;
        if (covered)
            ++v.ksets_via_lsets;
        else
            v.upper.push_back(K);
    }
    return v;
}

struct GammaOracle {
    int value;
    // vertex indices: l-sets in colex order, then k-sets in colex order
    std::vector<int> vertices;
};

inline bool colex_vec_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

inline std::vector<std::vector<int>> colex_subsets(int n, int r) {
    auto v = subsets(n, r);
    std::sort(v.begin(), v.end(), colex_vec_less);
    return v;
}

// Masks of a fixed popcount in increasing numeric order (Gosper's hack); numeric order of
// masks is colex order of the index sets, so the first hit is the colex-least optimum.
inline GammaOracle exhaustive_gamma(int n, int k, int l) {
    const auto lower = colex_subsets(n, l);
    const auto upper = colex_subsets(n, k);
    const int v = static_cast<int>(lower.size() + upper.size());
    if (v > 63) throw std::invalid_argument("oracle limited to 63 vertices");
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) closed[i] = std::uint64_t{1} << i;
    for (std::size_t a = 0; a < lower.size(); ++a) {
        for (std::size_t b = 0; b < upper.size(); ++b) {
            if (is_subset(lower[a], upper[b])) {
                const std::size_t bi = lower.size() + b;
                closed[a] |= std::uint64_t{1} << bi;
                closed[bi] |= std::uint64_t{1} << a;
            }
        }
    }
    const std::uint64_t all = (std::uint64_t{1} << v) - 1;
    for (int size = 1; size <= v; ++size) {
        std::uint64_t mask = (std::uint64_t{1} << size) - 1;
        while (mask <= all) {
            std::uint64_t dom = 0;
            for (std::uint64_t m = mask; m; m &= m - 1) dom |= closed[static_cast<std::size_t>(std::countr_zero(m))];
            if (dom == all) {
                GammaOracle out{size, {}};
                for (std::uint64_t m = mask; m; m &= m - 1) out.vertices.push_back(std::countr_zero(m));
                return out;
            }
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw std::logic_error("unreachable");
}

inline DominatingPair oracle_pair(int n, int k, int l, const std::vector<int>& vertices) {
    const auto lower = colex_subsets(n, l);
    const auto upper = colex_subsets(n, k);
    std::vector<Subset> ls, ks;
    for (int v : vertices) {
        if (v < static_cast<int>(lower.size()))
            ls.emplace_back(lower[v]);
        else
            ks.emplace_back(upper[v - lower.size()]);
    }
    return DominatingPair(n, k, l, Family(l, std::move(ls)), Family(k, std::move(ks)));
}

// ex(n, K_k^(l)) by trying every l-uniform family; needs C(n,l) <= 24.
inline int brute_turan(int n, int k, int l) {
    const auto lsets = subsets(n, l);
    const auto ksets = subsets(n, k);
    const int m = static_cast<int>(lsets.size());
    if (m > 24) throw std::invalid_argument("brute_turan limited to 24 l-sets");
    std::vector<std::uint32_t> clique_masks;
    for (const auto& K : ksets) {
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i) {
            if (is_subset(lsets[i], K)) mask |= std::uint32_t{1} << i;
        }
        clique_masks.push_back(mask);
    }
    int best = 0;
    for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << m); ++fam) {
        const int size = std::popcount(fam);
        if (size <= best) continue;
        bool free = true;
        for (auto c : clique_masks) free = free && (fam & c) != c;
        if (free) best = size;
    }
    return best;
}

// Number of k-sets whose pairs all lie in `edges` (edges given as sorted pairs).
inline std::uint64_t brute_cliques(const Family& edges, int n, int k) {
    const auto es = as_set(edges);
    std::uint64_t count = 0;
    for (const auto& S : subsets(n, k)) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < S.size(); ++i) {
            for (std::size_t j = i + 1; ok && j < S.size(); ++j) ok = es.count({S[i], S[j]}) > 0;
        }
        count += ok;
    }
    return count;
}

inline std::vector<std::vector<int>> shadow_pairs(const Family& f) {
    std::set<std::vector<int>> pairs;
    for (const auto& s : f) {
        for (int i = 0; i < s.size(); ++i) {
            for (int j = i + 1; j < s.size(); ++j) pairs.insert({s[i], s[j]});
        }
    }
    return {pairs.begin(), pairs.end()};
}

// Seeded random dominating pair: start from all l-sets and no k-sets, then apply random
// removals of l-sets and additions/removals of k-sets, keeping only steps that leave the
// pair dominating (re-checked with the naive oracle).
inline DominatingPair random_dominating_pair(int n, int k, int l, std::mt19937_64& rng, int steps = 40) {
    auto lower = subsets(n, l);
    auto upper = subsets(n, k);
    std::set<std::vector<int>> ls(lower.begin(), lower.end()), ks;
    auto build = [&](const std::set<std::vector<int>>& a, const std::set<std::vector<int>>& b) {
        std::vector<Subset> x, y;
        for (const auto& s : a) x.emplace_back(s);
        for (const auto& s : b) y.emplace_back(s);
        return DominatingPair(n, k, l, Family(l, std::move(x)), Family(k, std::move(y)));
    };
    auto ok = [&](const DominatingPair& d) {
        const auto v = naive_domination(d);
        return v.lower.empty() && v.upper.empty();
    };
    for (int step = 0; step < steps; ++step) {
        auto nls = ls;
        auto nks = ks;
        const int move = static_cast<int>(rng() % 4);
        if (move <= 1 && !nls.empty()) {
            auto it = nls.begin();
            std::advance(it, static_cast<long>(rng() % nls.size()));
            nls.erase(it);
        } else if (move == 2 || nks.empty()) {
            nks.insert(upper[rng() % upper.size()]);
        } else {
            auto it = nks.begin();
            std::advance(it, static_cast<long>(rng() % nks.size()));
            nks.erase(it);
        }
        if (ok(build(nls, nks))) {
            ls = std::move(nls);
            ks = std::move(nks);
        } else if (rng() % 2 == 0) {
            // repair: cover an undominated l-set by one random k-set containing it
            const auto v = naive_domination(build(nls, nks));
            if (!v.lower.empty() && v.upper.empty()) {
                for (const auto& L : v.lower) {
                    std::vector<std::vector<int>> hosts;
                    for (const auto& K : upper) {
                        if (is_subset(L, K)) hosts.push_back(K);
                    }
                    nks.insert(hosts[rng() % hosts.size()]);
                }
                if (ok(build(nls, nks))) {
                    ls = std::move(nls);
                    ks = std::move(nks);
                }
            }
        }
    }
    return build(ls, ks);
}

// Seeded random family of t k-sets on [n] whose Q graph is connected.
inline Family random_connected(int n, int k, int t, std::mt19937_64& rng) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> members;
    std::vector<int> ground(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    std::shuffle(ground.begin(), ground.end(), rng);
    std::vector<int> first(ground.begin(), ground.begin() + k);
    std::sort(first.begin(), first.end());
    members.push_back(first);
    seen.insert(first);
    int guard = 0;
    while (static_cast<int>(members.size()) < t && guard++ < 10000) {
        const auto& base = members[rng() % members.size()];
        const int keep = 2 + static_cast<int>(rng() % static_cast<unsigned>(k - 1));
        std::vector<int> pool(base);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::set<int> next(pool.begin(), pool.begin() + std::min(keep, k));
        while (static_cast<int>(next.size()) < k) next.insert(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
        std::vector<int> cand(next.begin(), next.end());
        if (seen.insert(cand).second) members.push_back(cand);
    }
    std::vector<Subset> out;
    for (auto& m : members) out.emplace_back(m);
    return Family(k, std::move(out));
}

}  // namespace oracle
