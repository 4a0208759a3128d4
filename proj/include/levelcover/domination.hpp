#pragma once

#include <cstdint>
#include <vector>

#include "levelcover/combinatorics.hpp"

namespace levelcover {

/// A candidate dominating set of G_{k,l}: an l-uniform family plus a k-uniform family on [n].
struct DominatingPair {
    int n;
    int k;
    int l;
    Family lsets;
    Family ksets;

    DominatingPair(int n, int k, int l, Family lsets, Family ksets);

    std::size_t size() const { return lsets.size() + ksets.size(); }
    bool operator==(const DominatingPair&) const = default;
};

/// Throws std::invalid_argument unless n > k > l >= 1.
void require_levels(int n, int k, int l);

enum class Side { lower, upper };

/// An undominated vertex: an l-set (lower) or a k-set (upper).
struct Violation {
    Side side;
    Subset witness;

    bool operator==(const Violation&) const = default;
};

struct DominationVerdict {
    bool dominating = false;
    /// Capped list: lower-side witnesses first, each side in colex order.
    std::vector<Violation> violations;
    std::uint64_t lower_violations = 0;
    std::uint64_t upper_violations = 0;
};

struct ConditionCounts {
    /// k-sets outside ksets that contain a member of lsets.
    std::uint64_t ksets_via_lsets = 0;
    /// l-sets outside lsets that lie in a member of ksets.
    std::uint64_t lsets_via_ksets = 0;

    bool operator==(const ConditionCounts&) const = default;
};

constexpr std::size_t kDefaultViolationCap = 100;

/// Every k-set not in ksets must contain a member of lsets, and every l-set not in
/// lsets must lie inside a member of ksets.
DominationVerdict check_domination(const DominatingPair& d, std::size_t cap = kDefaultViolationCap);
ConditionCounts condition_counts(const DominatingPair& d);

/// Invokes fn on every k-subset of [n] that contains no member of the l-uniform family
/// `lsets`, in colex order. Visits only lsets-free partial sets.
void for_each_free_kset(int n, int k, const Family& lsets, const std::function<void(std::span<const int>)>& fn);

}  // namespace levelcover
