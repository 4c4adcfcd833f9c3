#pragma once

#include <vector>

#include "gfss/block_laws.hpp"
#include "gfss/eppf.hpp"
#include "gfss/models.hpp"
#include "gfss/partition.hpp"
#include "gfss/random.hpp"

namespace gfss {

struct OneStepRules {
  std::vector<Rational> p_old;  // probability of joining box j, j = 1..k
  Rational p_new;               // probability of opening a new box
};

/// Closed-form one-step rules of the (gamma, psi) model:
///   p_j = (n-k+g)(n_j+1) / D,  p_new = (k^2 - k g + psi(g-psi)) / D,
///   D = n^2 + n g + psi(g-psi). Sums to 1 exactly.
OneStepRules one_step_rules(const GnedinFisherPsi& model, const OccupancyCounts& counts);

/// Generic one-step rules as EPPF ratios — works for any Gibbs weights
/// (covers the finite-species (gamma, zeta) models the psi form cannot).
template <GibbsModel M>
OneStepRules one_step_rules_generic(const M& model, const OccupancyCounts& counts) {
  const int n = counts.n();
  const int k = counts.k();
  const Rational current = model.weight(n, k);
  if (current == 0)
    throw std::domain_error("one_step_rules: state has zero probability under the model");
  OneStepRules rules;
  const Rational grow_ratio = model.weight(n + 1, k) / current;
  rules.p_old.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) rules.p_old.push_back(grow_ratio * (counts[j] + 1));
  rules.p_new = model.weight(n + 1, k + 1) / current;
  return rules;
}

// Mutable occupancy state for sequential growth; grows by one item at a time.
struct GrowthState {
  std::vector<int> counts;

  explicit GrowthState(std::vector<int> c) : counts(std::move(c)) {
    OccupancyCounts validate(counts);
    (void)validate;
  }
  static GrowthState initial() { return GrowthState({1}); }

  OccupancyCounts occupancy() const { return OccupancyCounts(counts); }
};

/// One sequential step: samples a box (or a new one) from the one-step rules
/// and updates the state. Returns the chosen box index (k for a new box).
int grow_one(const GnedinFisherPsi& model, GrowthState& state, RandomStream& stream);

/// Runs the sequential construction from a single item up to n items,
/// tracking item labels; the returned set partition is EPPF-distributed.
SetPartition sample_sequential(const GnedinFisherPsi& model, int n, RandomStream& stream);

// --- multistep allocation rules --------------------------------------------
// All three rules give the probability of one *specific* final partition
// realizing the configuration; multiply by multistep_multiplicity to get the
// probability of the configuration event.

/// (AO) all m new items into old boxes, box j gaining m_j:
///   (g+n-k)_m / ((psi+n)_m (g-psi+n)_m) * prod_j (n_j+1)_{m_j}.
Rational multistep_old_prob(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                            const std::vector<int>& m_by_box);

/// (AN) all m new items into k* new boxes of sizes s_j:
///   (g+n-k)_{m-k*} (k-psi)_{k*} (k-g+psi)_{k*} / ((psi+n)_m (g-psi+n)_m)
///   * prod_j s_j!.
Rational multistep_new_prob(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                            const std::vector<int>& new_box_sizes);

/// (ON) mixed: old boxes gain (m_1..m_k), k* new boxes of sizes (s_1..s_k*).
/// The trailing factor is prod_j s_j! — the sequential construction fixes it
/// (a bare prod s_j fails the total-probability identity; see tests).
Rational multistep_mixed_prob(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                              const std::vector<int>& m_by_box,
                              const std::vector<int>& new_box_sizes);

/// Number of final partitions realizing configuration (m_by_box; multiset of
/// new box sizes): m! / (prod m_j! * prod s_j! * prod_size mult(size)!).
Int multistep_multiplicity(const std::vector<int>& m_by_box,
                           const std::vector<int>& new_box_sizes);

struct MultistepTotalReport {
  Rational total;
  long configurations = 0;
  bool ok = false;
};

/// Law of total probability over every (AO)/(AN)/(ON) configuration of m new
/// items, with multiplicities; must be exactly 1.
MultistepTotalReport verify_multistep_total(const GnedinFisherPsi& model,
                                            const OccupancyCounts& counts, int m);

// --- Xi sampling and the two-stage sampler ----------------------------------

// Inverse-cdf sampler for the Xi prior: cached cumulative sums up to a bound,
// exact sequential ratio walk beyond it (the tail is heavy; truncating would
// bias it).
class XiSampler {
 public:
  explicit XiSampler(const GnedinFisherPsi& model, long cache_limit = 10000);

  long sample(RandomStream& stream) const;

 private:
  double gamma_, psi_;
  std::vector<double> cdf_;  // cdf_[i] = P(Xi <= i+1)
  double cached_pmf_back_ = 0.0;
};

/// Two-stage draw: Xi from its prior, then the partition of n items from the
/// fixed-Xi extreme model (symmetric Dirichlet(1,..,1) predictive, with the
/// frequencies integrated out). Same law as the sequential sampler.
SetPartition sample_two_stage(int n, const XiSampler& xi_sampler, RandomStream& stream);

}  // namespace gfss
