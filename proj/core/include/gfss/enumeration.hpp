#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gfss/partition.hpp"

namespace gfss {

inline constexpr int kMaxEnumerationSize = 12;  // Bell(12) = 4,213,597

/// Visits every set partition of {1,...,n} exactly once, in restricted
/// growth string order. f receives a const SetPartition&.
template <class F>
void for_each_set_partition(int n, F&& f) {
  if (n < 1) throw std::domain_error("for_each_set_partition: n must be positive");
  if (n > kMaxEnumerationSize)
    throw std::domain_error("for_each_set_partition: n exceeds enumeration cap 12");
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);  // rgs[i] = block of element i+1
  std::vector<int> max_prefix(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(SetPartition::from_rgs(rgs));
    int i = n - 1;
    // advance: rightmost position that can still grow
    while (i > 0 && rgs[static_cast<std::size_t>(i)] > max_prefix[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) return;
    ++rgs[static_cast<std::size_t>(i)];
    max_prefix[static_cast<std::size_t>(i)] =
        std::max(max_prefix[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      max_prefix[static_cast<std::size_t>(j)] = max_prefix[static_cast<std::size_t>(j - 1)];
    }
  }
}

/// Visits every vector of `parts` integers >= min_part summing to total.
/// Empty stream when infeasible. f receives a const std::vector<int>&.
template <class F>
void for_each_composition(int total, int parts, int min_part, F&& f) {
  if (parts < 1) throw std::domain_error("for_each_composition: parts must be positive");
  if (min_part < 0 || min_part > 1)
    throw std::domain_error("for_each_composition: min_part must be 0 or 1");
  if (total < parts * min_part) return;
  std::vector<int> v(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      v[static_cast<std::size_t>(index)] = remaining;
      f(const_cast<const std::vector<int>&>(v));
      return;
    }
    const int tail_min = (parts - index - 1) * min_part;
    for (int take = min_part; take <= remaining - tail_min; ++take) {
      v[static_cast<std::size_t>(index)] = take;
      self(self, index + 1, remaining - take);
    }
  };
  rec(rec, 0, total);
}

/// Visits every integer partition of n as a weakly decreasing vector of
/// positive parts. f receives a const std::vector<int>&.
template <class F>
void for_each_integer_partition(int n, F&& f) {
  if (n < 1) throw std::domain_error("for_each_integer_partition: n must be positive");
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      f(const_cast<const std::vector<int>&>(parts));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

}  // namespace gfss
