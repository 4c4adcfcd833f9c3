#pragma once

#include <vector>

#include "gfss/combinatorics.hpp"
#include "gfss/enumeration.hpp"
#include "gfss/models.hpp"
#include "gfss/partition.hpp"

namespace gfss {

/// EPPF p(n_1,...,n_k) = V(n,k) * prod_j n_j!  — the probability that the
/// exchangeable partition of {1..n} equals any one particular set partition
/// with these block sizes. Symmetric in the order of counts.
template <GibbsModel M>
Rational eppf(const M& model, const OccupancyCounts& counts) {
  Rational value = model.weight(counts.n(), counts.k());
  if (value == 0) return value;
  for (int c : counts.counts()) value *= factorial(c);
  return value;
}

template <GibbsModel M>
Rational eppf(const M& model, const SetPartition& partition) {
  return eppf(model, partition.occupancy());
}

struct NormalizationReport {
  Rational total;
  bool ok = false;
};

/// Exact oracle: sums the EPPF over all Bell(n) set partitions; the total
/// must be exactly 1. Capped at n <= 9 (Bell(9) = 21147).
template <GibbsModel M>
NormalizationReport verify_normalization(const M& model, int n) {
  if (n < 1 || n > 9) throw std::domain_error("verify_normalization: requires 1 <= n <= 9");
  // the EPPF depends on block sizes only, so group by (k, factorial product)
  // via cached weights
  std::vector<Rational> weight_by_k(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) weight_by_k[static_cast<std::size_t>(k)] = model.weight(n, k);
  NormalizationReport report;
  report.total = 0;
  for_each_set_partition(n, [&](const SetPartition& p) {
    Rational value = weight_by_k[static_cast<std::size_t>(p.k())];
    if (value == 0) return;
    for (const auto& block : p.blocks) value *= factorial(static_cast<int>(block.size()));
    report.total += value;
  });
  report.ok = report.total == 1;
  return report;
}

struct AdditionReport {
  Rational lhs;  // p(n_1,...,n_k)
  Rational rhs;  // sum_j p(..., n_j+1, ...) + p(n_1,...,n_k,1)
  bool ok = false;
};

/// Consistency of the EPPF under adding one more item: the one-step
/// probabilities must resolve the current mass exactly.
template <GibbsModel M>
AdditionReport verify_addition_rule(const M& model, const OccupancyCounts& counts) {
  AdditionReport report;
  report.lhs = eppf(model, counts);
  report.rhs = 0;
  std::vector<int> grown = counts.counts();
  for (std::size_t j = 0; j < grown.size(); ++j) {
    ++grown[j];
    report.rhs += eppf(model, OccupancyCounts(grown));
    --grown[j];
  }
  grown.push_back(1);
  report.rhs += eppf(model, OccupancyCounts(grown));
  report.ok = report.lhs == report.rhs;
  return report;
}

/// Law of the number of occupied blocks, P(K_n = k) = V(n,k) * Lah(n,k),
/// indexed k = 1..n (position k-1). Sums to 1 exactly.
template <GibbsModel M>
std::vector<Rational> blocks_pmf(const M& model, int n) {
  if (n < 1) throw std::domain_error("blocks_pmf: n must be positive");
  std::vector<Rational> pmf;
  pmf.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) pmf.push_back(model.weight(n, k) * lah_number(n, k));
  return pmf;
}

}  // namespace gfss
