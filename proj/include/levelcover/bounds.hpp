#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "levelcover/combinatorics.hpp"
#include "levelcover/domination.hpp"

namespace levelcover {

using Rational = boost::multiprecision::cpp_rational;

/// (k+3) / (2(k-1)(k+1)), the leading coefficient of gamma(G_{k,2}) in n^2.
Rational coeff_gk2(int k);

struct InequalityCheck {
    BigInt lhs;
    BigInt rhs;
    bool holds;
};

/// C(n-l, k-l)|L| + |K| >= C(n,k), where l is the rank of `lsets` (pairs give C(n-2,k-2)|E|).
InequalityCheck ineq6_check(const Family& lsets, const Family& ksets, int n, int k);
/// |L| + C(k,l)|K| >= C(n,l).
InequalityCheck ineq7_check(const Family& lsets, const Family& ksets, int n, int k);

/// Smallest |L| + |K| allowed by the two counting inequalities above.
std::uint64_t counting_lower_bound(int n, int k, int l);

/// Members of a k-uniform family joined when they share at least two elements.
struct QGraph {
    std::vector<std::vector<std::size_t>> adjacency;
};

QGraph q_graph(const Family& t);
/// Components as ascending index lists, ordered by their smallest index.
std::vector<std::vector<std::size_t>> components(const QGraph& q);
/// Same components computed through shared pairs, without materialising Q.
std::vector<std::vector<std::size_t>> q_components(const Family& t);

struct SplitFamilies {
    Family k0;  // members containing an lset
    Family k1;  // the rest, in components of Q smaller than s
    Family k2;  // the rest, in components of size at least s
    int s;
};

SplitFamilies split_families(const Family& lsets, const Family& ksets, int s);

struct ShadowBound {
    std::uint64_t shadow;
    std::uint64_t bound;
    bool holds;
};

/// |sigma_2(T)| <= |T|(C(k,2)-1) + 1 for T with connected Q(T). Throws on disconnected or empty T.
ShadowBound lemma7_verify(const Family& t);

struct ShadowRatioBound {
    std::uint64_t lhs;
    Rational rhs;
    bool holds;
};

/// |sigma_2(K2)| <= (C(k,2) - 1 + 1/s)|K2|.
ShadowRatioBound lemma8_verify(const SplitFamilies& split, int k);

struct Ineq11Eval {
    std::uint64_t edges;
    BigInt k0_term;  // (C(k,2)-1)|K0|
    std::uint64_t k1_shadow;
    std::uint64_t k2_shadow;
    BigInt lhs;
    BigInt rhs;
    bool holds;
};

/// |E| + (C(k,2)-1)|K0| + |sigma_2(K1)| + |sigma_2(K2)| >= C(n,2).
Ineq11Eval ineq11_eval(const Family& e, const Family& ksets, int s, int n, int k);

/// k-sets of [n] none of whose pairs lies in e.
Family critical_family(const Family& e, int n, int k);
/// Pairs of f hitting every member of crit; greedy by hit count, smallest colex rank on ties.
Family greedy_hitting(const Family& crit, const Family& f);

/// alpha + (1 - alpha)/(C(k,l) - 1).
Rational theorem8_lower(int k, int l, const Rational& alpha);
/// 1 - (k-l)/(k-l+1) * (1 - 1/l)^(l-1).
Rational prop9_upper(int k, int l);
/// 1/(k-1) for l = 2; unknown otherwise.
std::optional<Rational> alpha_known(int k, int l);

/// Quantities only defined for l = 2.
struct PairLevelReport {
    int s;
    std::size_t k0, k1, k2;
    Ineq11Eval ineq11;
    ShadowRatioBound lemma8;
    std::size_t critical;
    std::size_t hitting;
    /// |E| + |H| >= C(n,2) - t(n, k-1)
    InequalityCheck turan;
    Rational turan_main_term;  // n^2 / (2(k-1))
    Rational turan_residual;   // |E| + |H| - main term
    /// |E| + |H| + (C(k,2)-1)|K| >= C(n,2)
    InequalityCheck new_edges;
    /// k-cliques of the graph F - H; always 0 once H hits every critical set.
    std::uint64_t fh_kcliques;
    Rational size_over_n2;
    Rational coeff;  // coeff_gk2(k)
};

struct BoundReport {
    int n, k, l;
    std::size_t lsets, ksets;
    InequalityCheck ineq6;
    InequalityCheck ineq7;
    std::optional<PairLevelReport> pairs;
    std::optional<Rational> alpha;
    bool alpha_conjectural = false;
    std::optional<Rational> theorem8_coeff;
    Rational size_over_choose;  // size / C(n,l)

    /// Conjunction of every verdict above.
    bool all_hold() const;
};

constexpr int kDefaultComponentThreshold = 10;

/// Requires a dominating pair (std::invalid_argument otherwise). `alpha` overrides the known
/// Turan density and is marked conjectural when none is known.
BoundReport bound_report(const DominatingPair& pair, int s = kDefaultComponentThreshold,
                         std::optional<Rational> alpha = std::nullopt);

}  // namespace levelcover
