#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "levelcover/combinatorics.hpp"
#include "levelcover/cover.hpp"
#include "levelcover/domination.hpp"

namespace levelcover {

enum class Method { gk1, gk2, g53, g43 };

std::string to_string(Method m);
/// Throws std::invalid_argument for an unknown name.
Method parse_method(const std::string& name);

/// Summary of the greedy cover step behind a construction.
struct CoverStats {
    std::size_t points;  // N
    int design_size;     // m
    std::size_t blocks_chosen;
    Rational ratio;      // blocks_chosen * m / N
};

struct Construction {
    DominatingPair pair;
    std::optional<CoverStats> cover;
};

/// Singletons {1}..{n-k} plus the top k-set {n-k+1..n}; size n-k+1.
DominatingPair gk1_construct(int n, int k);

/// Pairs inside the parts of near_equal_partition(n, k-1).
Family partition_edges(int n, int k);

/// Universe: cross pairs between parts of the equal partition of [n] into k-1 parts.
/// One block per k-set meeting every part, one part twice; it covers the C(k,2)-1 cross
/// pairs of that k-set. Block id = colex rank of the k-set. Requires (k-1) | n.
CoverInstance block_family(int n, int k);
/// Same over an arbitrary near-equal partition into k-1 parts.
CoverInstance block_family(const Partition& parts, int k);

/// Exact element degree and pair two-degrees of the block family, keyed by case:
/// overlap-2parts, overlap-3parts, disjoint-2parts, disjoint-3parts, disjoint-4parts.
/// Cases that cannot occur for the given k are omitted.
struct DegreeProfile {
    BigInt point;
    std::map<std::string, BigInt> pair_cases;

    bool operator==(const DegreeProfile&) const = default;
};

/// Closed forms with q = n/(k-1).
DegreeProfile degree_profile(int n, int k);
/// Direct count over block_family(n, k); throws std::logic_error if a case is not uniform.
DegreeProfile degree_bruteforce(int n, int k);

/// Pairs inside parts plus a greedy cover of the cross pairs; valid for n > k >= 3.
DominatingPair gk2_construct(int n, int k);
Construction build_gk2(int n, int k);

/// Triples inside either half plus a greedy cover of the cross triples by 5-sets split 2+3.
DominatingPair g53_construct(int n);
Construction build_g53(int n);

/// Three equal parts; triples of types (3,0,0) and (2,1,0) plus a greedy cover of the
/// (1,1,1) and (1,2,0) triples by 4-sets of type (1,3,0) and even-sum 4-sets of type (2,1,1).
DominatingPair g43_construct(int n);
Construction build_g43(int n);

/// The g43 block family on its own (universe = the uncovered triple types).
CoverInstance g43_block_family(int n);
/// The g53 block family on its own (universe = cross triples).
CoverInstance g53_block_family(int n);

/// Label counts of `s` per part, read cyclically: does (c[i], c[i+1], c[i+2]) equal `type`
/// for some i? Parts are those of near_equal_partition(n, 3).
bool has_cyclic_type(const Partition& parts, std::span<const int> s, std::array<int, 3> type);

/// Dispatch on method; l must match the method (1 for gk1, 2 for gk2, 3 for g53/g43).
Construction construct(Method m, int n, int k, int l);

}  // namespace levelcover
