#include "levelcover/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace levelcover {

namespace {

// Maps colex ranks of r-sets on [n] to universe indices (-1 when absent).
class UniverseIndex {
  public:
    UniverseIndex(const Family& universe, int n) : slot_(binomial_u64(n, universe.rank()), -1) {
        for (std::size_t i = 0; i < universe.size(); ++i) slot_[rank_colex(universe[i])] = static_cast<std::int32_t>(i);
    }
    std::int32_t operator()(std::span<const int> s) const { return slot_[rank_colex(s)]; }

  private:
    std::vector<std::int32_t> slot_;
};

struct PendingBlock {
    std::uint64_t id;
    std::size_t offset;
};

// Collects blocks in discovery order, then hands them to a CoverInstance sorted by id.
class BlockCollector {
  public:
    void add(std::uint64_t id, std::span<const std::uint32_t> pts) {
        pending_.push_back({id, points_.size()});
        points_.insert(points_.end(), pts.begin(), pts.end());
        width_ = pts.size();
    }

    CoverInstance finish(Family universe, int m) {
        std::sort(pending_.begin(), pending_.end(), [](const PendingBlock& a, const PendingBlock& b) { return a.id < b.id; });
        CoverInstance inst(std::move(universe), m);
        for (const auto& b : pending_) inst.add_block(b.id, {points_.data() + b.offset, width_});
        return inst;
    }

  private:
    std::vector<PendingBlock> pending_;
    std::vector<std::uint32_t> points_;
    std::size_t width_ = 0;
};

// Calls fn on each r-subset of [n] (colex order) without allocating per subset.
template <class F>
void for_each_combination(int n, int r, F&& fn) {
    std::vector<int> a(static_cast<std::size_t>(r));
    std::iota(a.begin(), a.end(), 1);
    if (r > n) return;
    while (true) {
        fn(std::span<const int>(a));
        std::size_t i = 0;
        while (i < a.size()) {
            int ceiling = i + 1 < a.size() ? a[i + 1] : n + 1;
            if (a[i] + 1 < ceiling) break;
            ++i;
        }
        if (i == a.size()) return;
        ++a[i];
        for (std::size_t j = 0; j < i; ++j) a[j] = static_cast<int>(j) + 1;
    }
}

BigInt ipow(const BigInt& base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// coef * q^exp, with a zero coefficient short-circuiting a negative exponent.
BigInt term(const BigInt& coef, const BigInt& q, int exp) {
    if (coef == 0) return 0;
    if (exp < 0) throw std::logic_error("negative exponent with nonzero coefficient");
    return coef * ipow(q, exp);
}

std::array<int, 3> part_counts(const Partition& parts, std::span<const int> s) {
    std::array<int, 3> c{0, 0, 0};
    for (int e : s) ++c[static_cast<std::size_t>(parts.part_of(e))];
    return c;
}

std::vector<std::uint32_t> universe_points_in(std::span<const int> block, int r, const UniverseIndex& index) {
    std::vector<std::uint32_t> pts;
    for_each_subset_of(block, r, [&](std::span<const int> t) {
        auto u = index(t);
        if (u >= 0) pts.push_back(static_cast<std::uint32_t>(u));
    });
    return pts;
}

Construction assemble(int n, int k, int l, Family lsets, const CoverInstance& inst) {
    CoverResult cover = greedy_cover(inst);
    std::vector<Subset> ks;
    ks.reserve(cover.chosen_ids.size());
    for (auto id : cover.chosen_ids) ks.push_back(unrank_colex(k, id));
    CoverStats stats{cover.points, cover.design_size, cover.chosen.size(), cover.ratio};
    return {DominatingPair(n, k, l, std::move(lsets), Family(k, std::move(ks))), stats};
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::gk1: return "gk1";
        case Method::gk2: return "gk2";
        case Method::g53: return "g53";
        case Method::g43: return "g43";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "gk1") return Method::gk1;
    if (name == "gk2") return Method::gk2;
    if (name == "g53") return Method::g53;
    if (name == "g43") return Method::g43;
    throw std::invalid_argument("unknown construction method `" + name + "`");
}

DominatingPair gk1_construct(int n, int k) {
    if (!(k >= 2 && k < n)) throw std::invalid_argument("gk1_construct requires 2 <= k < n");
    std::vector<Subset> singles;
    for (int i = 1; i <= n - k; ++i) singles.push_back(Subset{i});
    std::vector<int> top(static_cast<std::size_t>(k));
    std::iota(top.begin(), top.end(), n - k + 1);
    return DominatingPair(n, k, 1, Family(1, std::move(singles)), Family(k, {Subset(std::move(top))}));
}

Family partition_edges(int n, int k) {
    if (k < 3 || n < k - 1) throw std::invalid_argument("partition_edges requires k >= 3 and n >= k-1");
    const Partition parts = near_equal_partition(n, k - 1);
    std::vector<Subset> edges;
    for (const auto& p : parts.parts()) {
        for (int j = 1; j < p.size(); ++j) {
            for (int i = 0; i < j; ++i) edges.push_back(Subset{p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]});
        }
    }
    return Family(2, std::move(edges));
}

CoverInstance block_family(const Partition& parts, int k) {
    const int n = parts.n();
    const int p = static_cast<int>(parts.part_count());
    if (k < 3 || p != k - 1) throw std::invalid_argument("block_family needs k >= 3 and k-1 parts");

    std::vector<Subset> cross;
    for (int b = 2; b <= n; ++b) {
        for (int a = 1; a < b; ++a) {
            if (parts.part_of(a) != parts.part_of(b)) cross.push_back(Subset{a, b});
        }
    }
    Family universe(2, std::move(cross));
    const UniverseIndex index(universe, n);

    BlockCollector collector;
    std::vector<int> members(static_cast<std::size_t>(k));
    std::vector<std::uint32_t> pts;
    std::vector<std::size_t> odo(static_cast<std::size_t>(p), 0);
    for (int d = 0; d < p; ++d) {
        const Subset& doubled = parts.part(static_cast<std::size_t>(d));
        std::vector<int> others;
        for (int i = 0; i < p; ++i) {
            if (i != d) others.push_back(i);
        }
        for (int j = 1; j < doubled.size(); ++j) {
            for (int i = 0; i < j; ++i) {
                const int a = doubled[static_cast<std::size_t>(i)];
                const int b = doubled[static_cast<std::size_t>(j)];
                std::fill(odo.begin(), odo.end(), 0);
                while (true) {
                    members[0] = a;
                    members[1] = b;
                    for (std::size_t o = 0; o < others.size(); ++o)
                        members[o + 2] = parts.part(static_cast<std::size_t>(others[o]))[odo[o]];
                    std::vector<int> sorted = members;
                    std::sort(sorted.begin(), sorted.end());
                    pts.clear();
                    for (std::size_t y = 1; y < sorted.size(); ++y) {
                        for (std::size_t x = 0; x < y; ++x) {
                            if (parts.part_of(sorted[x]) == parts.part_of(sorted[y])) continue;
                            const int pair[2] = {sorted[x], sorted[y]};
                            pts.push_back(static_cast<std::uint32_t>(index(pair)));
                        }
                    }
                    collector.add(rank_colex(sorted), pts);
                    // advance the odometer over the other parts
                    std::size_t o = 0;
                    for (; o < others.size(); ++o) {
                        if (++odo[o] < static_cast<std::size_t>(parts.part(static_cast<std::size_t>(others[o])).size())) break;
                        odo[o] = 0;
                    }
                    if (o == others.size()) break;
                }
            }
        }
    }
    return collector.finish(std::move(universe), k * (k - 1) / 2 - 1);
}

CoverInstance block_family(int n, int k) {
    if (k < 3) throw std::invalid_argument("block_family requires k >= 3");
    if (n % (k - 1) != 0)
        throw std::invalid_argument("block_family requires k-1 to divide n (n=" + std::to_string(n) + ", k=" +
                                    std::to_string(k) + ")");
    if (n / (k - 1) < 2) throw std::invalid_argument("block_family requires parts of size >= 2");
    return block_family(near_equal_partition(n, k - 1), k);
}

DegreeProfile degree_profile(int n, int k) {
    if (k < 3 || n % (k - 1) != 0 || n / (k - 1) < 2)
        throw std::invalid_argument("degree_profile requires k >= 3, (k-1) | n, and parts of size >= 2");
    const BigInt q = n / (k - 1);
    const BigInt pairs_in_part = q * (q - 1) / 2;
    DegreeProfile prof;
    prof.point = term(2 * (q - 1), q, k - 3) + term((k - 3) * pairs_in_part, q, k - 4);
    prof.pair_cases["overlap-2parts"] = term(1, q, k - 3);
    prof.pair_cases["disjoint-2parts"] = 0;
    if (k >= 4) {
        prof.pair_cases["overlap-3parts"] = term(3 * (q - 1), q, k - 4) + term((k - 4) * pairs_in_part, q, k - 5);
        prof.pair_cases["disjoint-3parts"] = term(1, q, k - 4);
    }
    if (k >= 5) {
        prof.pair_cases["disjoint-4parts"] = term(4 * (q - 1), q, k - 5) + term((k - 5) * pairs_in_part, q, k - 6);
    }
    return prof;
}

DegreeProfile degree_bruteforce(int n, int k) {
    const CoverInstance inst = block_family(n, k);
    const Partition parts = near_equal_partition(n, k - 1);
    const std::size_t npts = inst.point_count();
    std::vector<std::uint64_t> point_deg(npts, 0);
    std::vector<std::uint64_t> pair_deg(npts * npts, 0);
    for (std::size_t b = 0; b < inst.block_count(); ++b) {
        auto blk = inst.block(b);
        for (std::size_t i = 0; i < blk.size(); ++i) {
            ++point_deg[blk[i]];
            for (std::size_t j = 0; j < blk.size(); ++j) {
                if (i != j) ++pair_deg[blk[i] * npts + blk[j]];
            }
        }
    }

    DegreeProfile prof;
    for (std::size_t u = 0; u < npts; ++u) {
        if (u == 0)
            prof.point = point_deg[0];
        else if (prof.point != point_deg[u])
            throw std::logic_error("point degree is not uniform");
    }
    const Family& uni = inst.universe();
    for (std::size_t u = 0; u < npts; ++u) {
        for (std::size_t v = u + 1; v < npts; ++v) {
            const Subset& a = uni[u];
            const Subset& b = uni[v];
            std::set<int> elems(a.begin(), a.end());
            elems.insert(b.begin(), b.end());
            std::set<int> touched;
            for (int e : elems) touched.insert(parts.part_of(e));
            const bool overlap = elems.size() == 3;
            const std::string label =
                std::string(overlap ? "overlap-" : "disjoint-") + std::to_string(touched.size()) + "parts";
            const BigInt value = pair_deg[u * npts + v];
            auto [it, fresh] = prof.pair_cases.emplace(label, value);
            if (!fresh && it->second != value) throw std::logic_error("two-degree not uniform in case " + label);
        }
    }
    return prof;
}

Construction build_gk2(int n, int k) {
    if (k < 3 || n <= k) throw std::invalid_argument("gk2_construct requires k >= 3 and n > k");
    const Partition parts = near_equal_partition(n, k - 1);
    return assemble(n, k, 2, partition_edges(n, k), block_family(parts, k));
}

DominatingPair gk2_construct(int n, int k) { return build_gk2(n, k).pair; }

CoverInstance g53_block_family(int n) {
    if (n % 2 != 0 || n < 10) throw std::invalid_argument("g53_construct requires even n >= 10");
    const Partition halves = near_equal_partition(n, 2);
    std::vector<Subset> cross;
    for_each_combination(n, 3, [&](std::span<const int> t) {
        int in_first = 0;
        for (int e : t) in_first += halves.part_of(e) == 0;
        if (in_first == 1 || in_first == 2) cross.push_back(Subset(std::vector<int>(t.begin(), t.end())));
    });
    Family universe(3, std::move(cross));
    const UniverseIndex index(universe, n);
    CoverInstance inst(universe, 9);
    for_each_combination(n, 5, [&](std::span<const int> f) {
        int in_first = 0;
        for (int e : f) in_first += halves.part_of(e) == 0;
        if (in_first != 2 && in_first != 3) return;
        auto pts = universe_points_in(f, 3, index);
        inst.add_block(rank_colex(f), pts);
    });
    return inst;
}

Construction build_g53(int n) {
    CoverInstance inst = g53_block_family(n);
    const Partition halves = near_equal_partition(n, 2);
    std::vector<Subset> inside;
    for_each_combination(n, 3, [&](std::span<const int> t) {
        if (halves.part_of(t[0]) == halves.part_of(t[2])) inside.push_back(Subset(std::vector<int>(t.begin(), t.end())));
    });
    return assemble(n, 5, 3, Family(3, std::move(inside)), inst);
}

DominatingPair g53_construct(int n) { return build_g53(n).pair; }

bool has_cyclic_type(const Partition& parts, std::span<const int> s, std::array<int, 3> type) {
    const auto c = part_counts(parts, s);
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] == type[0] && c[(i + 1) % 3] == type[1] && c[(i + 2) % 3] == type[2]) return true;
    }
    return false;
}

CoverInstance g43_block_family(int n) {
    if (n % 3 != 0 || n < 12) throw std::invalid_argument("g43_construct requires 3 | n and n >= 12");
    const Partition parts = near_equal_partition(n, 3);
    std::vector<Subset> open;
    for_each_combination(n, 3, [&](std::span<const int> t) {
        if (has_cyclic_type(parts, t, {1, 1, 1}) || has_cyclic_type(parts, t, {1, 2, 0}))
            open.push_back(Subset(std::vector<int>(t.begin(), t.end())));
    });
    Family universe(3, std::move(open));
    const UniverseIndex index(universe, n);
    CoverInstance inst(universe, 3);
    for_each_combination(n, 4, [&](std::span<const int> f) {
        bool take = has_cyclic_type(parts, f, {1, 3, 0});
        if (!take && has_cyclic_type(parts, f, {2, 1, 1})) {
            const int sum = std::accumulate(f.begin(), f.end(), 0);
            take = sum % 2 == 0;
        }
        if (!take) return;
        inst.add_block(rank_colex(f), universe_points_in(f, 3, index));
    });
    return inst;
}

Construction build_g43(int n) {
    CoverInstance inst = g43_block_family(n);
    const Partition parts = near_equal_partition(n, 3);
    std::vector<Subset> chosen;
    for_each_combination(n, 3, [&](std::span<const int> t) {
        if (has_cyclic_type(parts, t, {3, 0, 0}) || has_cyclic_type(parts, t, {2, 1, 0}))
            chosen.push_back(Subset(std::vector<int>(t.begin(), t.end())));
    });
    return assemble(n, 4, 3, Family(3, std::move(chosen)), inst);
}

DominatingPair g43_construct(int n) { return build_g43(n).pair; }

Construction construct(Method m, int n, int k, int l) {
    require_levels(n, k, l);
    switch (m) {
        case Method::gk1:
            if (l != 1) throw std::invalid_argument("method gk1 requires l = 1");
            return {gk1_construct(n, k), std::nullopt};
        case Method::gk2:
            if (l != 2) throw std::invalid_argument("method gk2 requires l = 2");
            return build_gk2(n, k);
        case Method::g53:
            if (k != 5 || l != 3) throw std::invalid_argument("method g53 requires k = 5, l = 3");
            return build_g53(n);
        case Method::g43:
            if (k != 4 || l != 3) throw std::invalid_argument("method g43 requires k = 4, l = 3");
            return build_g43(n);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace levelcover
