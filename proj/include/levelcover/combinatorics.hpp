#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace levelcover {

using BigInt = boost::multiprecision::cpp_int;

/// A finite set of 1-based element ids, stored strictly increasing.
class Subset {
  public:
    Subset() = default;
    /// Throws std::invalid_argument unless `elements` is strictly increasing and positive.
    explicit Subset(std::vector<int> elements);
    Subset(std::initializer_list<int> elements);

    /// Sorts first; duplicates are still rejected.
    static Subset from_unsorted(std::vector<int> elements);

    std::span<const int> elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    int front() const { return elems_.front(); }
    int back() const { return elems_.back(); }
    int operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool contains(int element) const;
    /// True when every element of `other` is in this set (sorted merge).
    bool includes(const Subset& other) const;

    std::string to_string() const;

    bool operator==(const Subset&) const = default;

  private:
    std::vector<int> elems_;
};

/// Colexicographic order: compare the largest differing elements.
bool colex_less(std::span<const int> a, std::span<const int> b);
inline bool colex_less(const Subset& a, const Subset& b) { return colex_less(a.elements(), b.elements()); }

struct ColexLess {
    bool operator()(const Subset& a, const Subset& b) const { return colex_less(a, b); }
};

/// An r-uniform, duplicate-free set system kept in colex order.
class Family {
  public:
    explicit Family(int rank);
    /// Sorts `members` into colex order. Throws on a wrong-sized member or a duplicate.
    Family(int rank, std::vector<Subset> members);

    int rank() const { return rank_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const Subset& operator[](std::size_t i) const { return members_[i]; }
    std::span<const Subset> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(const Subset& s) const { return index_of(s).has_value(); }
    std::optional<std::size_t> index_of(const Subset& s) const;
    /// Largest element over all members, 0 for an empty family.
    int max_element() const;

    bool operator==(const Family&) const = default;

  private:
    int rank_;
    std::vector<Subset> members_;
};

/// Disjoint parts covering [1, n]; sizes differ by at most one.
class Partition {
  public:
    Partition(int n, std::vector<Subset> parts);

    int n() const { return n_; }
    std::size_t part_count() const { return parts_.size(); }
    const Subset& part(std::size_t i) const { return parts_[i]; }
    std::span<const Subset> parts() const { return parts_; }
    /// 0-based index of the part holding `element`.
    int part_of(int element) const { return label_[static_cast<std::size_t>(element)]; }

  private:
    int n_;
    std::vector<Subset> parts_;
    std::vector<int> label_;
};

/// Exact binomial coefficient; 0 when r > n.
BigInt binomial(int n, int r);
/// Checked 64-bit binomial; throws std::overflow_error when the value does not fit.
std::uint64_t binomial_u64(int n, int r);

/// Iterates the r-subsets of [n] in colex order.
class KSubsetRange {
  public:
    KSubsetRange(int n, int r);

    class iterator {
      public:
        using value_type = Subset;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const Subset& operator*() const { return current_; }
        const Subset* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || current_ == other.current_); }

      private:
        friend class KSubsetRange;
        iterator(int n, int r);
        int n_ = 0;
        std::vector<int> work_;
        Subset current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, r_); }
    iterator end() const { return iterator(); }

  private:
    int n_;
    int r_;
};

KSubsetRange enumerate_ksubsets(int n, int r);
/// All r-subsets of [n] as a family.
Family all_ksubsets(int n, int r);

/// Calls `fn` with every r-subset of `ground` (sorted), in colex order of positions.
void for_each_subset_of(std::span<const int> ground, int r, const std::function<void(std::span<const int>)>& fn);

/// Colex rank; {1..r} has rank 0. Throws std::overflow_error past 64 bits.
std::uint64_t rank_colex(std::span<const int> elements);
inline std::uint64_t rank_colex(const Subset& s) { return rank_colex(s.elements()); }
Subset unrank_colex(int r, std::uint64_t rank);
/// As unrank_colex, but throws std::out_of_range unless rank < C(n, r).
Subset unrank_colex_checked(int n, int r, std::uint64_t rank);

/// p consecutive runs; the first n mod p parts get the extra element.
Partition near_equal_partition(int n, int p);

/// Edges of the complete s-partite graph on near_equal_partition(n, s).
Family turan_graph(int n, int s);
std::uint64_t turan_count(int n, int s);

/// All pairs contained in some member.
Family shadow2(const Family& f);
/// Pairs of [n] that are not in `e`.
Family complement_pairs(const Family& e, int n);

}  // namespace levelcover
