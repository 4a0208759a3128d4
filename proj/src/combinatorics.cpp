#include "levelcover/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace levelcover {

namespace {

constexpr int kTableRows = 256;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Pascal triangle with saturation; kSaturated marks values past 64 bits.
const std::vector<std::uint64_t>& pascal_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t(static_cast<std::size_t>(kTableRows) * kTableRows, 0);
        auto at = [&](int n, int r) -> std::uint64_t& { return t[static_cast<std::size_t>(n) * kTableRows + r]; };
        for (int n = 0; n < kTableRows; ++n) {
            at(n, 0) = 1;
            for (int r = 1; r <= n; ++r) {
                std::uint64_t a = at(n - 1, r - 1);
                std::uint64_t b = r <= n - 1 ? at(n - 1, r) : 0;
                if (a == kSaturated || b == kSaturated || a > kSaturated - 1 - b)
                    at(n, r) = kSaturated;
                else
                    at(n, r) = a + b;
            }
        }
        return t;
    }();
    return table;
}

std::uint64_t binom_fast(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (n < kTableRows) {
        std::uint64_t v = pascal_table()[static_cast<std::size_t>(n) * kTableRows + r];
        if (v == kSaturated) throw std::overflow_error("binomial coefficient exceeds 64 bits");
        return v;
    }
    return binomial_u64(n, r);
}

}  // namespace

Subset::Subset(std::vector<int> elements) : elems_(std::move(elements)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw std::invalid_argument("subset element must be >= 1");
        if (i > 0 && elems_[i - 1] >= elems_[i])
            throw std::invalid_argument("subset elements must be strictly increasing");
    }
}

Subset::Subset(std::initializer_list<int> elements) : Subset(std::vector<int>(elements)) {}

Subset Subset::from_unsorted(std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    return Subset(std::move(elements));
}

bool Subset::contains(int element) const { return std::binary_search(elems_.begin(), elems_.end(), element); }

bool Subset::includes(const Subset& other) const {
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

std::string Subset::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
    os << '}';
    return os.str();
}

bool colex_less(std::span<const int> a, std::span<const int> b) {
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return a.size() < b.size();
}

Family::Family(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("family rank must be nonnegative");
}

Family::Family(int rank, std::vector<Subset> members) : Family(rank) {
    for (const auto& m : members) {
        if (m.size() != rank)
            throw std::invalid_argument("family member " + m.to_string() + " does not have size " + std::to_string(rank));
    }
    std::sort(members.begin(), members.end(), ColexLess{});
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i - 1] == members[i])
            throw std::invalid_argument("duplicate family member " + members[i].to_string());
    }
    members_ = std::move(members);
}

std::optional<std::size_t> Family::index_of(const Subset& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, ColexLess{});
    if (it == members_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

int Family::max_element() const {
    int m = 0;
    for (const auto& s : members_) {
        if (!s.empty()) m = std::max(m, s.back());
    }
    return m;
}

Partition::Partition(int n, std::vector<Subset> parts)
    : n_(n), parts_(std::move(parts)), label_(static_cast<std::size_t>(n) + 1, -1) {
    int lo = std::numeric_limits<int>::max();
    int hi = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        lo = std::min(lo, parts_[i].size());
        hi = std::max(hi, parts_[i].size());
        for (int e : parts_[i]) {
            if (e > n) throw std::invalid_argument("partition element out of range");
            if (label_[static_cast<std::size_t>(e)] != -1) throw std::invalid_argument("partition parts overlap");
            label_[static_cast<std::size_t>(e)] = static_cast<int>(i);
        }
    }
    for (int e = 1; e <= n; ++e) {
        if (label_[static_cast<std::size_t>(e)] == -1) throw std::invalid_argument("partition does not cover [n]");
    }
    if (!parts_.empty() && hi - lo > 1) throw std::invalid_argument("partition parts are not near-equal");
}

BigInt binomial(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("binomial arguments must be nonnegative");
    if (r > n) return 0;
    r = std::min(r, n - r);
    BigInt result = 1;
    for (int i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("binomial arguments must be nonnegative");
    if (r > n) return 0;
    if (n < kTableRows) return binom_fast(n, r);
    BigInt v = binomial(n, r);
    if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

KSubsetRange::KSubsetRange(int n, int r) : n_(n), r_(r) {
    if (r < 0 || r > n) throw std::invalid_argument("enumerate_ksubsets requires 0 <= r <= n");
}

KSubsetRange::iterator::iterator(int n, int r) : n_(n), work_(static_cast<std::size_t>(r)), done_(false) {
    for (int i = 0; i < r; ++i) work_[static_cast<std::size_t>(i)] = i + 1;
    current_ = Subset(work_);
}

KSubsetRange::iterator& KSubsetRange::iterator::operator++() {
    const std::size_t r = work_.size();
    std::size_t i = 0;
    // lowest position that can move up without colliding with its successor
    while (i < r) {
        int ceiling = i + 1 < r ? work_[i + 1] : n_ + 1;
        if (work_[i] + 1 < ceiling) break;
        ++i;
    }
    if (i == r) {
        done_ = true;
        return *this;
    }
    ++work_[i];
    for (std::size_t j = 0; j < i; ++j) work_[j] = static_cast<int>(j) + 1;
    current_ = Subset(work_);
    return *this;
}

KSubsetRange enumerate_ksubsets(int n, int r) { return KSubsetRange(n, r); }

Family all_ksubsets(int n, int r) {
    std::vector<Subset> members;
    members.reserve(static_cast<std::size_t>(binomial_u64(n, r)));
    for (const auto& s : enumerate_ksubsets(n, r)) members.push_back(s);
    return Family(r, std::move(members));
}

void for_each_subset_of(std::span<const int> ground, int r, const std::function<void(std::span<const int>)>& fn) {
    const int g = static_cast<int>(ground.size());
    if (r < 0 || r > g) return;
    std::vector<int> pos(static_cast<std::size_t>(r));
    std::vector<int> picked(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < r; ++i) picked[static_cast<std::size_t>(i)] = ground[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
        fn(picked);
        int i = 0;
        while (i < r) {
            int ceiling = i + 1 < r ? pos[static_cast<std::size_t>(i + 1)] : g;
            if (pos[static_cast<std::size_t>(i)] + 1 < ceiling) break;
            ++i;
        }
        if (i == r) return;
        ++pos[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) pos[static_cast<std::size_t>(j)] = j;
    }
}

std::uint64_t rank_colex(std::span<const int> elements) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        std::uint64_t term = binom_fast(elements[i] - 1, static_cast<int>(i) + 1);
        if (rank > std::numeric_limits<std::uint64_t>::max() - term) throw std::overflow_error("colex rank exceeds 64 bits");
        rank += term;
    }
    return rank;
}

Subset unrank_colex(int r, std::uint64_t rank) {
    if (r < 0) throw std::invalid_argument("unrank_colex requires r >= 0");
    std::vector<int> out(static_cast<std::size_t>(r));
    for (int i = r; i >= 1; --i) {
        // largest c with C(c, i) <= rank; c >= i - 1
        int c = i - 1;
        while (true) {
            std::uint64_t next;
            try {
                next = binom_fast(c + 1, i);
            } catch (const std::overflow_error&) {
                break;
            }
            if (next > rank) break;
            ++c;
        }
        rank -= binom_fast(c, i);
        out[static_cast<std::size_t>(i - 1)] = c + 1;
    }
    return Subset(std::move(out));
}

Subset unrank_colex_checked(int n, int r, std::uint64_t rank) {
    if (r < 0 || r > n) throw std::out_of_range("unrank_colex: size out of range");
    if (rank >= binomial_u64(n, r))
        throw std::out_of_range("unrank_colex: rank " + std::to_string(rank) + " out of range for C(" + std::to_string(n) +
                                "," + std::to_string(r) + ")");
    return unrank_colex(r, rank);
}

Partition near_equal_partition(int n, int p) {
    if (p < 1) throw std::invalid_argument("near_equal_partition requires p >= 1");
    if (p > n) throw std::invalid_argument("near_equal_partition requires p <= n");
    std::vector<Subset> parts;
    parts.reserve(static_cast<std::size_t>(p));
    const int base = n / p;
    const int extra = n % p;
    int next = 1;
    for (int i = 0; i < p; ++i) {
        const int size = base + (i < extra ? 1 : 0);
        std::vector<int> run(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j) run[static_cast<std::size_t>(j)] = next++;
        parts.emplace_back(std::move(run));
    }
    return Partition(n, std::move(parts));
}

Family turan_graph(int n, int s) {
    if (s < 1 || s > n) throw std::invalid_argument("turan_graph requires 1 <= s <= n");
    const Partition part = near_equal_partition(n, s);
    std::vector<Subset> edges;
    for (int b = 2; b <= n; ++b) {
        for (int a = 1; a < b; ++a) {
            if (part.part_of(a) != part.part_of(b)) edges.push_back(Subset{a, b});
        }
    }
    return Family(2, std::move(edges));
}

std::uint64_t turan_count(int n, int s) {
    const Partition part = near_equal_partition(n, s);
    std::uint64_t total = binomial_u64(n, 2);
    for (const auto& p : part.parts()) total -= binomial_u64(p.size(), 2);
    return total;
}

Family shadow2(const Family& f) {
    if (f.rank() < 2 && !f.empty()) throw std::invalid_argument("shadow2 requires rank >= 2");
    std::vector<Subset> pairs;
    for (const auto& m : f) {
        for (int j = 1; j < m.size(); ++j) {
            for (int i = 0; i < j; ++i) pairs.push_back(Subset{m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]});
        }
    }
    std::sort(pairs.begin(), pairs.end(), ColexLess{});
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Family(2, std::move(pairs));
}

Family complement_pairs(const Family& e, int n) {
    if (e.rank() != 2) throw std::invalid_argument("complement_pairs requires a rank-2 family");
    std::vector<Subset> out;
    for (const auto& s : enumerate_ksubsets(n, 2)) {
        if (!e.contains(s)) out.push_back(s);
    }
    return Family(2, std::move(out));
}

}  // namespace levelcover
