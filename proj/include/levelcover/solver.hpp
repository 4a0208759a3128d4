#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "levelcover/combinatorics.hpp"
#include "levelcover/domination.hpp"

namespace levelcover {

// optimal: lower == upper, certificate is the colex-least optimum.
// bounds-only: the node budget ran out; lower/upper are valid, certificate is the best pair found.
// node-limit: the vertex universe is too large to materialise; closed-form bounds only.
enum class SolveStatus { optimal, bounds_only, node_limit };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status;
    std::uint64_t lower;
    std::uint64_t upper;
    std::optional<DominatingPair> certificate;
    std::uint64_t nodes;
};

constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

/// Vertices are ordered l-sets (colex) then k-sets (colex); "colex-least" compares the
/// sorted vertex-index sets of candidate dominating sets in colex order.
///
/// Tries all vertex subsets by increasing size. Requires C(n,l) + C(n,k) <= 30.
SolveResult exhaustive_gamma(int n, int k, int l);

/// Branch and bound over the same vertex set, seeded with the counting lower bound and a
/// greedy upper bound.
SolveResult exact_gamma(int n, int k, int l, std::uint64_t node_limit = kDefaultNodeLimit);

struct TuranResult {
    SolveStatus status;
    std::uint64_t lower;
    std::uint64_t upper;
    /// Largest K_k^{(l)}-free family found (extremal when status is optimal).
    Family witness;
    std::uint64_t nodes;
};

/// Maximum size of an l-uniform family on [n] with no k-set all of whose l-subsets are
/// members. Solved as a minimum transversal of the k-sets.
TuranResult exact_turan_ex(int n, int k, int l, std::uint64_t node_limit = kDefaultNodeLimit);

/// Number of k-vertex cliques of the graph `edges` on [n].
std::uint64_t count_cliques(const Family& edges, int n, int k);
/// Number of k-vertex independent sets of the graph `edges` on [n].
std::uint64_t count_independent(const Family& edges, int n, int k);

}  // namespace levelcover
