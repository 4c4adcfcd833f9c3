#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gfss {

// Occupancy counts (n_1, ..., n_k): the block sizes of a partition of n
// items, every part >= 1. The argument of every EPPF.
class OccupancyCounts {
 public:
  explicit OccupancyCounts(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::domain_error("occupancy counts: at least one part required");
    for (int c : counts_)
      if (c < 1) throw std::domain_error("occupancy counts: every part must be >= 1");
  }

  const std::vector<int>& counts() const { return counts_; }
  int k() const { return static_cast<int>(counts_.size()); }
  int n() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }
  int operator[](int j) const { return counts_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<int> counts_;
};

// A set partition of {1,...,n}, blocks stored in order of least elements.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  /// From a restricted growth string over elements 1..n (rgs[i] is the
  /// 0-based block index of element i+1).
  static SetPartition from_rgs(const std::vector<int>& rgs) {
    SetPartition p;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      const auto b = static_cast<std::size_t>(rgs[i]);
      if (b >= p.blocks.size()) p.blocks.resize(b + 1);
      p.blocks[b].push_back(static_cast<int>(i) + 1);
    }
    return p;
  }

  int n() const {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    return static_cast<int>(total);
  }
  int k() const { return static_cast<int>(blocks.size()); }

  OccupancyCounts occupancy() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    return OccupancyCounts(std::move(sizes));
  }

  /// Block sizes sorted descending — canonical key for partition histograms.
  std::vector<int> size_multiset() const {
    std::vector<int> sizes;
    sizes.reserve(blocks.size());
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
  }
};

}  // namespace gfss
