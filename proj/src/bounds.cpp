#include "levelcover/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "levelcover/cover.hpp"
#include "levelcover/solver.hpp"

namespace levelcover {

namespace {

BigInt pairs_in(int k) { return BigInt(k) * (k - 1) / 2; }

bool contains_member(const Subset& s, const Family& f) {
    if (f.empty()) return false;
    bool found = false;
    for_each_subset_of(s.elements(), f.rank(), [&](std::span<const int> sub) {
        if (!found && f.contains(Subset(std::vector<int>(sub.begin(), sub.end())))) found = true;
    });
    return found;
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

std::vector<std::vector<std::size_t>> group(DisjointSets& ds, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = ds.find(i);
        if (slot[root] == n) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(i);
    }
    return out;
}

Family pick(const Family& f, const std::vector<std::size_t>& idx) {
    std::vector<Subset> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(f[i]);
    return Family(f.rank(), std::move(out));
}

}  // namespace

Rational coeff_gk2(int k) {
    if (k < 3) throw std::invalid_argument("coeff_gk2 requires k >= 3");
    return Rational(BigInt(k + 3), BigInt(2) * (k - 1) * (k + 1));
}

InequalityCheck ineq6_check(const Family& lsets, const Family& ksets, int n, int k) {
    const int l = lsets.rank();
    const BigInt lhs = binomial(n - l, k - l) * lsets.size() + ksets.size();
    const BigInt rhs = binomial(n, k);
    return {lhs, rhs, lhs >= rhs};
}

InequalityCheck ineq7_check(const Family& lsets, const Family& ksets, int n, int k) {
    const int l = lsets.rank();
    const BigInt lhs = BigInt(lsets.size()) + binomial(k, l) * ksets.size();
    const BigInt rhs = binomial(n, l);
    return {lhs, rhs, lhs >= rhs};
}

std::uint64_t counting_lower_bound(int n, int k, int l) {
    require_levels(n, k, l);
    const std::uint64_t top = binomial_u64(n, k);
    const std::uint64_t per_lset = binomial_u64(n - l, k - l);
    const std::uint64_t bottom = binomial_u64(n, l);
    const std::uint64_t per_kset = binomial_u64(k, l);
    const std::uint64_t kmax = (bottom + per_kset - 1) / per_kset;
    std::uint64_t best = bottom;
    for (std::uint64_t K = 0; K <= kmax && K < best; ++K) {
        const std::uint64_t by_top = K >= top ? 0 : (top - K + per_lset - 1) / per_lset;
        const std::uint64_t by_bottom = K * per_kset >= bottom ? 0 : bottom - K * per_kset;
        best = std::min(best, K + std::max(by_top, by_bottom));
    }
    return best;
}

QGraph q_graph(const Family& t) {
    QGraph q;
    q.adjacency.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(t[i].begin(), t[i].end(), t[j].begin(), t[j].end(), std::back_inserter(common));
            if (common.size() >= 2) {
                q.adjacency[i].push_back(j);
                q.adjacency[j].push_back(i);
            }
        }
    }
    return q;
}

std::vector<std::vector<std::size_t>> components(const QGraph& q) {
    const std::size_t n = q.adjacency.size();
    DisjointSets ds(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto j : q.adjacency[i]) ds.unite(i, j);
    }
    return group(ds, n);
}

std::vector<std::vector<std::size_t>> q_components(const Family& t) {
    DisjointSets ds(t.size());
    std::unordered_map<std::uint64_t, std::size_t> first_holder;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for_each_subset_of(t[i].elements(), 2, [&](std::span<const int> p) {
            auto [it, fresh] = first_holder.emplace(rank_colex(p), i);
            if (!fresh) ds.unite(it->second, i);
        });
    }
    return group(ds, t.size());
}

SplitFamilies split_families(const Family& lsets, const Family& ksets, int s) {
    if (s <= 1) throw std::invalid_argument("split_families requires s > 1");
    std::vector<Subset> k0, rest;
    for (const auto& K : ksets) (contains_member(K, lsets) ? k0 : rest).push_back(K);
    Family remaining(ksets.rank(), std::move(rest));
    std::vector<std::size_t> small, large;
    for (const auto& comp : q_components(remaining)) {
        auto& bucket = static_cast<int>(comp.size()) >= s ? large : small;
        bucket.insert(bucket.end(), comp.begin(), comp.end());
    }
    std::sort(small.begin(), small.end());
    std::sort(large.begin(), large.end());
    return {Family(ksets.rank(), std::move(k0)), pick(remaining, small), pick(remaining, large), s};
}

ShadowBound lemma7_verify(const Family& t) {
    if (t.empty()) throw std::invalid_argument("lemma7_verify requires a nonempty family");
    if (q_components(t).size() != 1) throw std::invalid_argument("lemma7_verify requires Q(T) to be connected");
    const std::uint64_t k = static_cast<std::uint64_t>(t.rank());
    const std::uint64_t shadow = shadow2(t).size();
    const std::uint64_t bound = t.size() * (k * (k - 1) / 2 - 1) + 1;
    return {shadow, bound, shadow <= bound};
}

ShadowRatioBound lemma8_verify(const SplitFamilies& split, int k) {
    const std::uint64_t lhs = split.k2.empty() ? 0 : shadow2(split.k2).size();
    const Rational per_member = Rational(pairs_in(k) - 1) + Rational(1, split.s);
    const Rational rhs = per_member * static_cast<long long>(split.k2.size());
    return {lhs, rhs, Rational(lhs) <= rhs};
}

Ineq11Eval ineq11_eval(const Family& e, const Family& ksets, int s, int n, int k) {
    if (e.rank() != 2) throw std::invalid_argument("ineq11_eval requires a pair family");
    const SplitFamilies split = split_families(e, ksets, s);
    Ineq11Eval out;
    out.edges = e.size();
    out.k0_term = (pairs_in(k) - 1) * split.k0.size();
    out.k1_shadow = split.k1.empty() ? 0 : shadow2(split.k1).size();
    out.k2_shadow = split.k2.empty() ? 0 : shadow2(split.k2).size();
    out.lhs = BigInt(out.edges) + out.k0_term + out.k1_shadow + out.k2_shadow;
    out.rhs = binomial(n, 2);
    out.holds = out.lhs >= out.rhs;
    return out;
}

Family critical_family(const Family& e, int n, int k) {
    if (e.rank() != 2) throw std::invalid_argument("critical_family requires a pair family");
    std::vector<Subset> crit;
    for_each_free_kset(n, k, e, [&](std::span<const int> s) { crit.push_back(Subset(std::vector<int>(s.begin(), s.end()))); });
    return Family(k, std::move(crit));
}

Family greedy_hitting(const Family& crit, const Family& f) {
    if (f.rank() != 2) throw std::invalid_argument("greedy_hitting requires a pair family");
    if (crit.empty()) return Family(2);
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> holders;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        for_each_subset_of(crit[i].elements(), 2,
                           [&](std::span<const int> p) { holders[rank_colex(p)].push_back(static_cast<std::uint32_t>(i)); });
    }
    CoverInstance inst(crit, static_cast<int>(crit.rank() * (crit.rank() - 1) / 2));
    for (const auto& pair : f) {
        const auto id = rank_colex(pair);
        auto it = holders.find(id);
        if (it != holders.end()) inst.add_block(id, it->second);
    }
    const CoverResult cover = greedy_cover(inst);
    std::vector<Subset> hits;
    for (auto id : cover.chosen_ids) hits.push_back(unrank_colex(2, id));
    return Family(2, std::move(hits));
}

Rational theorem8_lower(int k, int l, const Rational& alpha) {
    if (!(k > l && l >= 2)) throw std::invalid_argument("theorem8_lower requires k > l >= 2");
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must lie in [0, 1]");
    return alpha + (1 - alpha) / Rational(binomial(k, l) - 1);
}

Rational prop9_upper(int k, int l) {
    if (!(k > l && l >= 3)) throw std::invalid_argument("prop9_upper requires k > l >= 3");
    Rational power = 1;
    const Rational base = 1 - Rational(1, l);
    for (int i = 0; i < l - 1; ++i) power *= base;
    return 1 - Rational(k - l, k - l + 1) * power;
}

std::optional<Rational> alpha_known(int k, int l) {
    if (l == 2 && k > 2) return Rational(1, k - 1);
    return std::nullopt;
}

bool BoundReport::all_hold() const {
    bool ok = ineq6.holds && ineq7.holds;
    if (pairs) {
        ok = ok && pairs->ineq11.holds && pairs->lemma8.holds && pairs->turan.holds && pairs->new_edges.holds &&
             pairs->fh_kcliques == 0;
    }
    return ok;
}

BoundReport bound_report(const DominatingPair& pair, int s, std::optional<Rational> alpha) {
    if (!check_domination(pair, 1).dominating) throw std::invalid_argument("bound_report requires a dominating pair");
    const int n = pair.n, k = pair.k, l = pair.l;
    BoundReport r{n, k, l, pair.lsets.size(), pair.ksets.size(), ineq6_check(pair.lsets, pair.ksets, n, k),
                  ineq7_check(pair.lsets, pair.ksets, n, k), std::nullopt, std::nullopt, false, std::nullopt, 0};
    const Rational size(static_cast<long long>(pair.size()));
    r.size_over_choose = size / Rational(binomial(n, l));

    if (alpha) {
        r.alpha = alpha;
        r.alpha_conjectural = !alpha_known(k, l).has_value();
    } else {
        r.alpha = alpha_known(k, l);
    }
    if (r.alpha && l >= 2) r.theorem8_coeff = theorem8_lower(k, l, *r.alpha);

    if (l == 2) {
        const Family& e = pair.lsets;
        PairLevelReport p;
        p.s = s;
        const SplitFamilies split = split_families(e, pair.ksets, s);
        p.k0 = split.k0.size();
        p.k1 = split.k1.size();
        p.k2 = split.k2.size();
        p.ineq11 = ineq11_eval(e, pair.ksets, s, n, k);
        p.lemma8 = lemma8_verify(split, k);

        const Family f = complement_pairs(e, n);
        const Family crit = critical_family(e, n, k);
        const Family h = greedy_hitting(crit, f);
        p.critical = crit.size();
        p.hitting = h.size();

        const BigInt eh = BigInt(e.size()) + h.size();
        const BigInt turan_rhs = binomial(n, 2) - turan_count(n, k - 1);
        p.turan = {eh, turan_rhs, eh >= turan_rhs};
        p.turan_main_term = Rational(BigInt(n) * n, BigInt(2) * (k - 1));
        p.turan_residual = Rational(eh) - p.turan_main_term;
        const BigInt new_lhs = eh + (pairs_in(k) - 1) * pair.ksets.size();
        p.new_edges = {new_lhs, binomial(n, 2), new_lhs >= binomial(n, 2)};

        std::vector<Subset> merged(e.begin(), e.end());
        merged.insert(merged.end(), h.begin(), h.end());
        p.fh_kcliques = count_independent(Family(2, std::move(merged)), n, k);
        p.size_over_n2 = size / Rational(BigInt(n) * n);
        p.coeff = coeff_gk2(k);
        r.pairs = std::move(p);
    }
    return r;
}

}  // namespace levelcover
