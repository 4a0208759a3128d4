#include "levelcover/cover.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace levelcover {

CoverInstance::CoverInstance(Family universe, int design_size)
    : universe_(std::move(universe)), design_size_(design_size) {
    if (design_size < 0) throw std::invalid_argument("design size must be nonnegative");
}

void CoverInstance::add_block(std::uint64_t id, std::span<const std::uint32_t> points) {
    if (!ids_.empty() && id <= ids_.back()) throw std::invalid_argument("block ids must be strictly increasing");
    for (auto p : points) {
        if (p >= universe_.size()) throw std::invalid_argument("block point index out of range");
    }
    ids_.push_back(id);
    points_.insert(points_.end(), points.begin(), points.end());
    offsets_.push_back(points_.size());
}

CoverResult greedy_cover(const CoverInstance& inst) {
    const std::size_t npoints = inst.point_count();
    std::vector<char> reachable(npoints, 0);
    for (std::size_t b = 0; b < inst.block_count(); ++b) {
        for (auto p : inst.block(b)) reachable[p] = 1;
    }
    for (std::size_t p = 0; p < npoints; ++p) {
        if (!reachable[p])
            throw std::invalid_argument("point " + std::to_string(p) + " " + inst.universe()[p].to_string() +
                                        " lies in no block");
    }

    // Lazy evaluation: a stored gain is an upper bound on the current gain, so an entry
    // whose recomputed gain still equals its stored gain is the max-gain, min-index block.
    struct Entry {
        std::size_t gain;
        std::size_t block;
        bool operator<(const Entry& o) const { return gain != o.gain ? gain < o.gain : block > o.block; }
    };
    std::priority_queue<Entry> heap;
    for (std::size_t b = 0; b < inst.block_count(); ++b) {
        if (!inst.block(b).empty()) heap.push({inst.block(b).size(), b});
    }

    std::vector<char> covered(npoints, 0);
    std::size_t remaining = npoints;
    CoverResult result;
    while (remaining > 0) {
        Entry top = heap.top();
        heap.pop();
        std::size_t gain = 0;
        for (auto p : inst.block(top.block)) gain += covered[p] ? 0 : 1;
        if (gain == 0) continue;
        if (gain < top.gain) {
            heap.push({gain, top.block});
            continue;
        }
        for (auto p : inst.block(top.block)) {
            if (!covered[p]) {
                covered[p] = 1;
                --remaining;
            }
        }
        result.chosen.push_back(top.block);
        result.chosen_ids.push_back(inst.block_id(top.block));
    }
    result.points = npoints;
    result.design_size = inst.design_size();
    if (npoints > 0)
        result.ratio = Rational(static_cast<long long>(result.chosen.size()) * inst.design_size(),
                                static_cast<long long>(npoints));
    return result;
}

}  // namespace levelcover
