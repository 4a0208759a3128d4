#include "cover_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace levelcover::detail {

namespace {
constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max() / 2;
}

CoverSearch::CoverSearch(std::vector<Bits> covers, std::size_t element_count)
    : covers_(std::move(covers)), elements_(element_count) {
    dominators_.assign(elements_, Bits(covers_.size()));
    for (std::size_t c = 0; c < covers_.size(); ++c) {
        if (covers_[c].size() != elements_) throw std::invalid_argument("cover bitset has the wrong width");
        covers_[c].for_each([&](std::size_t e) { dominators_[e].set(c); });
    }
}

std::vector<std::size_t> CoverSearch::greedy() const {
    Bits uncovered(elements_);
    uncovered.set_all();
    std::vector<std::size_t> picked;
    while (!uncovered.none()) {
        std::size_t best = covers_.size();
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < covers_.size(); ++c) {
            std::size_t g = covers_[c].count_and(uncovered);
            if (g > best_gain) {
                best_gain = g;
                best = c;
            }
        }
        if (best_gain == 0) throw std::invalid_argument("cover instance has an uncoverable element");
        picked.push_back(best);
        uncovered.subtract(covers_[best]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::size_t CoverSearch::lower_bound(const Bits& uncovered, const Bits& allowed) const {
    const std::size_t open = uncovered.count();
    if (open == 0) return 0;
    std::size_t max_gain = 0;
    allowed.for_each([&](std::size_t c) { max_gain = std::max(max_gain, covers_[c].count_and(uncovered)); });
    if (max_gain == 0) return kInfeasible;
    const std::size_t by_count = (open + max_gain - 1) / max_gain;

    // elements with pairwise disjoint dominator sets each need their own pick
    Bits used(covers_.size());
    std::size_t packed = 0;
    bool dead = false;
    uncovered.for_each([&](std::size_t e) {
        if (dead) return;
        if (!dominators_[e].intersects(allowed)) {
            dead = true;
            return;
        }
        if (!used.intersects_and(dominators_[e], allowed)) {
            ++packed;
            used.or_and(dominators_[e], allowed);
        }
    });
    if (dead) return kInfeasible;
    return std::max(by_count, packed);
}

bool CoverSearch::dfs(Bits& uncovered, Bits& allowed, std::vector<std::size_t>& chosen, std::size_t limit,
                      bool stop_at_first) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (uncovered.none()) {
        if (chosen.size() < limit) {
            found_ = chosen;
            return true;
        }
        return false;
    }
    const std::size_t lb = lower_bound(uncovered, allowed);
    if (lb >= kInfeasible || chosen.size() + lb >= limit) return false;

    std::size_t pick = elements_;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](std::size_t e) {
        std::size_t d = dominators_[e].count_and(allowed);
        if (d < fewest) {
            fewest = d;
            pick = e;
        }
    });
    if (fewest == 0) return false;

    Bits branches = dominators_[pick];
    branches &= allowed;
    bool improved = false;
    for (std::size_t d = branches.first(); d < branches.size(); d = branches.next(d + 1)) {
        allowed.reset(d);
        Bits rest = uncovered;
        rest.subtract(covers_[d]);
        chosen.push_back(d);
        const bool hit = dfs(rest, allowed, chosen, limit, stop_at_first);
        chosen.pop_back();
        if (hit) {
            improved = true;
            if (stop_at_first) break;
            limit = found_.size();
            if (chosen.size() + lb >= limit) break;
        }
    }
    allowed |= branches;
    return improved;
}

CoverSearch::Outcome CoverSearch::minimise(std::vector<std::size_t> incumbent, std::uint64_t root_lower) {
    Outcome out;
    found_.clear();
    std::sort(incumbent.begin(), incumbent.end());
    out.best = incumbent;
    out.lower = root_lower;
    Bits uncovered(elements_);
    uncovered.set_all();
    Bits allowed(covers_.size());
    allowed.set_all();
    out.lower = std::max<std::uint64_t>(out.lower, lower_bound(uncovered, allowed));
    if (out.lower >= out.best.size()) {
        out.lower = out.best.size();
        out.complete = true;
        return out;
    }
    std::vector<std::size_t> chosen;
    try {
        if (dfs(uncovered, allowed, chosen, out.best.size(), false)) {
            out.best = found_;
            std::sort(out.best.begin(), out.best.end());
        }
        out.complete = true;
        out.lower = out.best.size();
    } catch (const BudgetExhausted&) {
        if (!found_.empty() && found_.size() < out.best.size()) {
            out.best = found_;
            std::sort(out.best.begin(), out.best.end());
        }
    }
    return out;
}

std::optional<std::vector<std::size_t>> CoverSearch::feasible(std::size_t target, const std::vector<std::size_t>& forced,
                                                              const Bits& allowed_in) {
    Bits uncovered(elements_);
    uncovered.set_all();
    Bits allowed = allowed_in;
    for (auto f : forced) {
        uncovered.subtract(covers_[f]);
        allowed.reset(f);
    }
    std::vector<std::size_t> chosen = forced;
    if (!dfs(uncovered, allowed, chosen, target + 1, true)) return std::nullopt;
    auto sol = found_;
    std::sort(sol.begin(), sol.end());
    return sol;
}

std::vector<std::size_t> CoverSearch::canonical(std::size_t optimum) {
    const std::uint64_t saved = budget_;
    budget_ = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::size_t> fixed;
    std::size_t ceiling = covers_.size();  // exclusive bound on the next index
    for (std::size_t step = 0; step < optimum; ++step) {
        const std::size_t still = optimum - step;
        std::size_t lo = still - 1;
        std::size_t hi = ceiling - 1;  // hi is known feasible
        auto feasible_upto = [&](std::size_t m) {
            Bits allowed(covers_.size());
            for (std::size_t c = 0; c <= m; ++c) allowed.set(c);
            return feasible(optimum, fixed, allowed).has_value();
        };
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (feasible_upto(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        fixed.push_back(hi);
        ceiling = hi;
    }
    budget_ = saved;
    std::sort(fixed.begin(), fixed.end());
    return fixed;
}

}  // namespace levelcover::detail
