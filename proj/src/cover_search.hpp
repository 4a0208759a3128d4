#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "levelcover/bits.hpp"

namespace levelcover::detail {

// Exact minimum set cover by depth-first branch and bound.
//
// Elements and candidates are indexed densely; covers[c] is the element set of candidate c
// and dominators[e] the candidate set able to cover element e. Branching takes the uncovered
// element with the fewest allowed dominators and tries those dominators in ascending order,
// forbidding earlier siblings in later branches.
class CoverSearch {
  public:
    CoverSearch(std::vector<Bits> covers, std::size_t element_count);

    std::size_t element_count() const { return elements_; }
    std::size_t candidate_count() const { return covers_.size(); }

    /// Greedy cover (max new elements, smallest index on ties).
    std::vector<std::size_t> greedy() const;

    struct Outcome {
        bool complete = false;                // search finished within the budget
        std::vector<std::size_t> best;        // best cover found (sorted)
        std::uint64_t lower = 0;              // proven lower bound on the optimum
    };

    /// Minimises cover size starting from `incumbent` (must be a valid cover).
    Outcome minimise(std::vector<std::size_t> incumbent, std::uint64_t root_lower);

    /// Looks for a cover of size <= target that contains `forced` and otherwise uses only allowed
    /// candidates. Returns nullopt when none exists; throws BudgetExhausted when the budget runs out.
    std::optional<std::vector<std::size_t>> feasible(std::size_t target, const std::vector<std::size_t>& forced,
                                                     const Bits& allowed);

    /// Colex-least cover of size `optimum` (sorted ascending), by fixing the largest index first.
    std::vector<std::size_t> canonical(std::size_t optimum);

    void set_budget(std::uint64_t nodes) { budget_ = nodes; }
    std::uint64_t nodes() const { return nodes_; }

    struct BudgetExhausted {};

  private:
    std::size_t lower_bound(const Bits& uncovered, const Bits& allowed) const;
    bool dfs(Bits& uncovered, Bits& allowed, std::vector<std::size_t>& chosen, std::size_t limit, bool stop_at_first);

    std::vector<Bits> covers_;
    std::vector<Bits> dominators_;
    std::size_t elements_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = UINT64_MAX;
    std::vector<std::size_t> found_;
};

}  // namespace levelcover::detail
