#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "levelcover/combinatorics.hpp"

namespace levelcover {

using Rational = boost::multiprecision::cpp_rational;

/// Points to cover (members of `universe`, addressed by index) and candidate blocks.
/// Blocks are kept in ascending id order; ids break ties in the greedy engine.
class CoverInstance {
  public:
    /// `design_size` is the nominal block size m used in the N/m ratio.
    CoverInstance(Family universe, int design_size);

    /// Appends a block. Ids must be strictly increasing; point indices must be valid.
    void add_block(std::uint64_t id, std::span<const std::uint32_t> points);

    const Family& universe() const { return universe_; }
    std::size_t point_count() const { return universe_.size(); }
    int design_size() const { return design_size_; }
    std::size_t block_count() const { return ids_.size(); }
    std::uint64_t block_id(std::size_t b) const { return ids_[b]; }
    std::span<const std::uint32_t> block(std::size_t b) const {
        return {points_.data() + offsets_[b], points_.data() + offsets_[b + 1]};
    }

  private:
    Family universe_;
    int design_size_;
    std::vector<std::uint64_t> ids_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> points_;
};

struct CoverResult {
    /// Block indices in selection order.
    std::vector<std::size_t> chosen;
    /// The matching block ids.
    std::vector<std::uint64_t> chosen_ids;
    std::size_t points = 0;
    int design_size = 0;
    /// |chosen| * m / N, 0 for an empty universe.
    Rational ratio;
};

/// Max-coverage greedy: repeatedly take the block covering the most uncovered points,
/// smallest id on ties. Throws std::invalid_argument naming a point no block covers.
CoverResult greedy_cover(const CoverInstance& inst);

}  // namespace levelcover
