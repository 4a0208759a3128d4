#include "levelcover/solver.hpp"

#include <stdexcept>

#include "cover_search.hpp"
#include "levelcover/bits.hpp"
#include "levelcover/bounds.hpp"
#include "levelcover/constructions.hpp"

namespace levelcover {

namespace {

constexpr std::uint64_t kMaxMaterialised = 20000;
constexpr std::uint64_t kExhaustiveCap = 30;

// Vertex indices: l-sets by colex rank, then k-sets by colex rank offset by C(n,l).
struct LevelGraph {
    int n, k, l;
    std::uint64_t lower_count;
    std::uint64_t upper_count;

    std::uint64_t vertex_count() const { return lower_count + upper_count; }

    template <class F>
    void for_each_edge(F&& fn) const {
        std::uint64_t j = 0;
        for (const auto& K : enumerate_ksubsets(n, k)) {
            for_each_subset_of(K.elements(), l, [&](std::span<const int> L) { fn(rank_colex(L), lower_count + j); });
            ++j;
        }
    }

    DominatingPair pair_from(const std::vector<std::size_t>& vertices) const {
        std::vector<Subset> ls, ks;
        for (auto v : vertices) {
            if (v < lower_count)
                ls.push_back(unrank_colex(l, v));
            else
                ks.push_back(unrank_colex(k, v - lower_count));
        }
        return DominatingPair(n, k, l, Family(l, std::move(ls)), Family(k, std::move(ks)));
    }
};

LevelGraph level_graph(int n, int k, int l) {
    require_levels(n, k, l);
    return {n, k, l, binomial_u64(n, l), binomial_u64(n, k)};
}

SolveResult unmaterialised(const LevelGraph& g) {
    SolveResult r{SolveStatus::node_limit, counting_lower_bound(g.n, g.k, g.l), g.lower_count, std::nullopt, 0};
    if (g.l == 1) {
        r.upper = static_cast<std::uint64_t>(g.n - g.k + 1);
        r.certificate = gk1_construct(g.n, g.k);
    }
    return r;
}

}  // namespace

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::bounds_only: return "bounds-only";
        case SolveStatus::node_limit: return "node-limit";
    }
    return "?";
}

SolveResult exhaustive_gamma(int n, int k, int l) {
    const LevelGraph g = level_graph(n, k, l);
    const std::uint64_t v = g.vertex_count();
    if (v > kExhaustiveCap)
        throw std::invalid_argument("exhaustive_gamma is capped at C(n,l) + C(n,k) <= 30 (got " + std::to_string(v) + ")");
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(v));
    for (std::size_t i = 0; i < closed.size(); ++i) closed[i] = std::uint32_t{1} << i;
    g.for_each_edge([&](std::uint64_t a, std::uint64_t b) {
        closed[a] |= std::uint32_t{1} << b;
        closed[b] |= std::uint32_t{1} << a;
    });
    const std::uint32_t all = v == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << v) - 1;
    std::uint64_t tried = 0;
    for (int size = 0; size <= static_cast<int>(v); ++size) {
        for (const auto& pick : enumerate_ksubsets(static_cast<int>(v), size)) {
            ++tried;
            std::uint32_t dom = 0;
            for (int idx : pick) dom |= closed[static_cast<std::size_t>(idx - 1)];
            if (dom != all) continue;
            std::vector<std::size_t> verts;
            for (int idx : pick) verts.push_back(static_cast<std::size_t>(idx - 1));
            return {SolveStatus::optimal, static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(size),
                    g.pair_from(verts), tried};
        }
    }
    throw std::logic_error("no dominating set found");
}

SolveResult exact_gamma(int n, int k, int l, std::uint64_t node_limit) {
    const LevelGraph g = level_graph(n, k, l);
    if (g.vertex_count() > kMaxMaterialised) return unmaterialised(g);
    const std::size_t v = static_cast<std::size_t>(g.vertex_count());
    std::vector<Bits> covers(v, Bits(v));
    for (std::size_t i = 0; i < v; ++i) covers[i].set(i);
    g.for_each_edge([&](std::uint64_t a, std::uint64_t b) {
        covers[a].set(b);
        covers[b].set(a);
    });
    detail::CoverSearch search(std::move(covers), v);
    search.set_budget(node_limit);
    auto outcome = search.minimise(search.greedy(), counting_lower_bound(n, k, l));
    if (!outcome.complete) {
        return {SolveStatus::bounds_only, outcome.lower, outcome.best.size(), g.pair_from(outcome.best), search.nodes()};
    }
    auto canonical = search.canonical(outcome.best.size());
    return {SolveStatus::optimal, canonical.size(), canonical.size(), g.pair_from(canonical), search.nodes()};
}

TuranResult exact_turan_ex(int n, int k, int l, std::uint64_t node_limit) {
    if (!(k > l && l >= 1 && n >= 1)) throw std::invalid_argument("exact_turan_ex requires k > l >= 1 and n >= 1");
    const std::uint64_t lcount = binomial_u64(n, l);
    if (n < k) return {SolveStatus::optimal, lcount, lcount, n < l ? Family(l) : all_ksubsets(n, l), 0};
    const std::uint64_t kcount = binomial_u64(n, k);
    if (lcount > kMaxMaterialised || kcount > kMaxMaterialised)
        return {SolveStatus::node_limit, 0, lcount, Family(l), 0};

    // candidate l-set -> the k-sets it meets; a transversal's complement is K_k-free
    std::vector<Bits> covers(static_cast<std::size_t>(lcount), Bits(static_cast<std::size_t>(kcount)));
    std::size_t j = 0;
    for (const auto& K : enumerate_ksubsets(n, k)) {
        for_each_subset_of(K.elements(), l, [&](std::span<const int> L) { covers[rank_colex(L)].set(j); });
        ++j;
    }
    detail::CoverSearch search(std::move(covers), static_cast<std::size_t>(kcount));
    search.set_budget(node_limit);
    auto outcome = search.minimise(search.greedy(), 0);

    std::vector<char> removed(static_cast<std::size_t>(lcount), 0);
    for (auto c : outcome.best) removed[c] = 1;
    std::vector<Subset> keep;
    for (std::uint64_t r = 0; r < lcount; ++r) {
        if (!removed[static_cast<std::size_t>(r)]) keep.push_back(unrank_colex(l, r));
    }
    const std::uint64_t best = lcount - outcome.best.size();
    const std::uint64_t ceiling = lcount - outcome.lower;
    return {outcome.complete ? SolveStatus::optimal : SolveStatus::bounds_only, best, outcome.complete ? best : ceiling,
            Family(l, std::move(keep)), search.nodes()};
}

namespace {

std::uint64_t count_cliques_in(const std::vector<Bits>& forward, const Bits& pool, int remaining) {
    if (remaining == 0) return 1;
    if (static_cast<int>(pool.count()) < remaining) return 0;
    if (remaining == 1) return pool.count();
    std::uint64_t total = 0;
    pool.for_each([&](std::size_t v) {
        Bits next = pool;
        next &= forward[v];
        total += count_cliques_in(forward, next, remaining - 1);
    });
    return total;
}

// forward[v] = neighbours u > v
std::uint64_t count_k_cliques(const std::vector<Bits>& forward, int n, int k) {
    if (k < 0) throw std::invalid_argument("clique size must be nonnegative");
    if (k == 0) return 1;
    Bits all(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) all.set(static_cast<std::size_t>(v));
    return count_cliques_in(forward, all, k);
}

std::vector<Bits> forward_adjacency(const Family& edges, int n, bool complement) {
    if (edges.rank() != 2) throw std::invalid_argument("edge family must have rank 2");
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<Bits> fwd(width, Bits(width));
    if (complement) {
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) fwd[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
        }
    }
    for (const auto& e : edges) {
        if (e.back() > n) throw std::invalid_argument("edge " + e.to_string() + " outside [1,n]");
        if (complement)
            fwd[static_cast<std::size_t>(e[0])].reset(static_cast<std::size_t>(e[1]));
        else
            fwd[static_cast<std::size_t>(e[0])].set(static_cast<std::size_t>(e[1]));
    }
    return fwd;
}

}  // namespace

std::uint64_t count_cliques(const Family& edges, int n, int k) {
    return count_k_cliques(forward_adjacency(edges, n, false), n, k);
}

std::uint64_t count_independent(const Family& edges, int n, int k) {
    return count_k_cliques(forward_adjacency(edges, n, true), n, k);
}

}  // namespace levelcover
