#include "levelcover/domination.hpp"

#include <limits>
#include <stdexcept>

#include "levelcover/bits.hpp"
#include "levelcover/family_io.hpp"
#include "levelcover/parallel.hpp"

namespace levelcover {

namespace {

constexpr std::uint64_t kMaxLevelBits = std::uint64_t{1} << 32;

Bits rank_mask(const Family& f, int n) {
    const std::uint64_t width = binomial_u64(n, f.rank());
    if (width > kMaxLevelBits) throw std::length_error("level too large to index by rank");
    Bits mask(static_cast<std::size_t>(width));
    for (const auto& m : f) mask.set(rank_colex(m));
    return mask;
}

// Depth-first enumeration of lsets-free k-sets. Elements are placed from the top
// position down, each smaller than the ones already placed, which yields colex order.
class FreeScan {
  public:
    FreeScan(int n, int k, const Family& lsets) : n_(n), k_(k), l_(lsets.rank()), lmask_(rank_mask(lsets, n)) {
        binom_.assign(static_cast<std::size_t>(n + 1) * (static_cast<std::size_t>(l_) + 1), 0);
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= l_; ++b) binom_[idx(a, b)] = binomial_u64(a, b);
        }
    }

    template <class F>
    void run_top(int top, F&& fn) const {
        std::vector<int> slots(static_cast<std::size_t>(k_));
        if (closes_lset(top, slots, k_ - 1)) return;
        slots[static_cast<std::size_t>(k_ - 1)] = top;
        descend(k_ - 2, slots, fn);
    }

  private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * (static_cast<std::size_t>(l_) + 1) + b; }

    template <class F>
    void descend(int pos, std::vector<int>& slots, F& fn) const {
        if (pos < 0) {
            fn(std::span<const int>(slots));
            return;
        }
        const int ceiling = slots[static_cast<std::size_t>(pos + 1)];
        for (int x = pos + 1; x < ceiling; ++x) {
            if (closes_lset(x, slots, pos)) continue;
            slots[static_cast<std::size_t>(pos)] = x;
            descend(pos - 1, slots, fn);
        }
    }

    // Does x together with some (l-1)-subset of slots[pos+1 ..] form a member of lsets?
    bool closes_lset(int x, const std::vector<int>& slots, int pos) const {
        const int above = k_ - 1 - pos;
        if (above < l_ - 1) return false;
        return search(slots, pos + 1, 0, static_cast<std::uint64_t>(x - 1));
    }

    bool search(const std::vector<int>& slots, int from, int picked, std::uint64_t partial) const {
        if (picked == l_ - 1) return lmask_.test(static_cast<std::size_t>(partial));
        const int need = l_ - 1 - picked;
        for (int i = from; i + need <= k_; ++i) {
            const int t = slots[static_cast<std::size_t>(i)];
            if (search(slots, i + 1, picked + 1, partial + binom_[idx(t - 1, picked + 2)])) return true;
        }
        return false;
    }

    int n_;
    int k_;
    int l_;
    Bits lmask_;
    std::vector<std::uint64_t> binom_;
};

struct ScanOutcome {
    DominationVerdict verdict;
    ConditionCounts counts;
};

ScanOutcome scan(const DominatingPair& d, std::size_t cap) {
    ScanOutcome out;
    std::vector<Violation> lower;

    // l-sets: every rank not in lsets must be covered by some member of ksets
    const Bits lmask = rank_mask(d.lsets, d.n);
    Bits covered(lmask.size());
    for (const auto& K : d.ksets) {
        for_each_subset_of(K.elements(), d.l, [&](std::span<const int> s) { covered.set(rank_colex(s)); });
    }
    for (std::size_t r = 0; r < lmask.size(); ++r) {
        if (lmask.test(r)) continue;
        if (covered.test(r)) {
            ++out.counts.lsets_via_ksets;
        } else {
            ++out.verdict.lower_violations;
            if (lower.size() < cap) lower.push_back({Side::lower, unrank_colex(d.l, r)});
        }
    }

    // k-sets: only lsets-free ones can fail, and only if they are not in ksets
    struct TopResult {
        std::vector<Violation> violations;
        std::uint64_t free = 0;
        std::uint64_t free_in_k = 0;
        std::uint64_t missing = 0;
    };
    const FreeScan free_scan(d.n, d.k, d.lsets);
    const int tops = d.n - d.k + 1;
    std::vector<TopResult> results(static_cast<std::size_t>(tops));
    parallel_for(results.size(), [&](std::size_t i) {
        TopResult& res = results[i];
        free_scan.run_top(d.k + static_cast<int>(i), [&](std::span<const int> s) {
            ++res.free;
            Subset candidate(std::vector<int>(s.begin(), s.end()));
            if (d.ksets.contains(candidate)) {
                ++res.free_in_k;
            } else {
                ++res.missing;
                if (res.violations.size() < cap) res.violations.push_back({Side::upper, std::move(candidate)});
            }
        });
    });

    std::uint64_t free_total = 0;
    std::uint64_t free_in_k = 0;
    out.verdict.violations = std::move(lower);
    for (auto& res : results) {
        free_total += res.free;
        free_in_k += res.free_in_k;
        out.verdict.upper_violations += res.missing;
        for (auto& v : res.violations) {
            if (out.verdict.violations.size() >= cap) break;
            out.verdict.violations.push_back(std::move(v));
        }
    }
    const std::uint64_t containing = binomial_u64(d.n, d.k) - free_total;
    out.counts.ksets_via_lsets = containing - (d.ksets.size() - free_in_k);
    out.verdict.dominating = out.verdict.lower_violations == 0 && out.verdict.upper_violations == 0;
    return out;
}

}  // namespace

void require_levels(int n, int k, int l) {
    if (!(n > k && k > l && l >= 1))
        throw std::invalid_argument("levels must satisfy n > k > l >= 1 (got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
}

DominatingPair::DominatingPair(int n_, int k_, int l_, Family lsets_, Family ksets_)
    : n(n_), k(k_), l(l_), lsets(std::move(lsets_)), ksets(std::move(ksets_)) {
    require_levels(n, k, l);
    if (lsets.rank() != l) throw std::invalid_argument("lsets rank must equal l");
    if (ksets.rank() != k) throw std::invalid_argument("ksets rank must equal k");
    require_within(lsets, n, "lsets");
    require_within(ksets, n, "ksets");
}

DominationVerdict check_domination(const DominatingPair& d, std::size_t cap) { return scan(d, cap).verdict; }

ConditionCounts condition_counts(const DominatingPair& d) { return scan(d, 0).counts; }

void for_each_free_kset(int n, int k, const Family& lsets, const std::function<void(std::span<const int>)>& fn) {
    if (k < 1 || k > n) throw std::invalid_argument("for_each_free_kset requires 1 <= k <= n");
    if (lsets.rank() < 1 || lsets.rank() > k) throw std::invalid_argument("for_each_free_kset requires 1 <= rank <= k");
    require_within(lsets, n, "lsets");
    const FreeScan free_scan(n, k, lsets);
    for (int top = k; top <= n; ++top) free_scan.run_top(top, fn);
}

}  // namespace levelcover
