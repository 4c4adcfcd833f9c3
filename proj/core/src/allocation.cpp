#include "gfss/allocation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gfss/combinatorics.hpp"
#include "gfss/enumeration.hpp"

namespace gfss {

OneStepRules one_step_rules(const GnedinFisherPsi& model, const OccupancyCounts& counts) {
  const int n = counts.n();
  const int k = counts.k();
  const Rational& g = model.gamma();
  const Rational& p = model.psi();
  const Rational mix = p * (g - p);  // psi(gamma-psi) = zeta
  const Rational denom = Rational(n) * n + g * n + mix;
  OneStepRules rules;
  rules.p_old.reserve(static_cast<std::size_t>(k));
  const Rational old_factor = (Rational(n - k) + g) / denom;
  for (int j = 0; j < k; ++j) rules.p_old.push_back(old_factor * (counts[j] + 1));
  rules.p_new = (Rational(k) * k - g * k + mix) / denom;
  return rules;
}

int grow_one(const GnedinFisherPsi& model, GrowthState& state, RandomStream& stream) {
  const OneStepRules rules = one_step_rules(model, state.occupancy());
  const double u = stream.uniform();
  double cumulative = 0.0;
  const int k = static_cast<int>(state.counts.size());
  for (int j = 0; j < k; ++j) {
    cumulative += to_double(rules.p_old[static_cast<std::size_t>(j)]);
    if (u < cumulative) {
      ++state.counts[static_cast<std::size_t>(j)];
      return j;
    }
  }
  state.counts.push_back(1);
  return k;
}

SetPartition sample_sequential(const GnedinFisherPsi& model, int n, RandomStream& stream) {
  if (n < 1) throw std::domain_error("sample_sequential: n must be positive");
  SetPartition partition;
  partition.blocks.push_back({1});
  GrowthState state = GrowthState::initial();
  for (int item = 2; item <= n; ++item) {
    const int box = grow_one(model, state, stream);
    if (box == static_cast<int>(partition.blocks.size()))
      partition.blocks.push_back({item});
    else
      partition.blocks[static_cast<std::size_t>(box)].push_back(item);
  }
  return partition;
}

namespace {

// shared denominator (psi+n)_m (gamma-psi+n)_m
Rational multistep_denominator(const GnedinFisherPsi& model, int n, int m) {
  return rising_factorial(model.psi() + n, m) *
         rising_factorial(model.gamma() - model.psi() + n, m);
}

}  // namespace

Rational multistep_old_prob(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                            const std::vector<int>& m_by_box) {
  const int k = counts.k();
  if (static_cast<int>(m_by_box.size()) != k)
    throw std::domain_error("multistep_old_prob: one entry per old box required");
  int m = 0;
  for (int v : m_by_box) {
    if (v < 0) throw std::domain_error("multistep_old_prob: entries must be >= 0");
    m += v;
  }
  const int n = counts.n();
  Rational value = rising_factorial(model.gamma() + n - k, m) / multistep_denominator(model, n, m);
  for (int j = 0; j < k; ++j)
    value *= rising_factorial(Rational(counts[j] + 1), m_by_box[static_cast<std::size_t>(j)]);
  return value;
}

Rational multistep_new_prob(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                            const std::vector<int>& new_box_sizes) {
  std::vector<int> no_old(static_cast<std::size_t>(counts.k()), 0);
  return multistep_mixed_prob(model, counts, no_old, new_box_sizes);
}

Rational multistep_mixed_prob(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                              const std::vector<int>& m_by_box,
                              const std::vector<int>& new_box_sizes) {
  const int k = counts.k();
  if (static_cast<int>(m_by_box.size()) != k)
    throw std::domain_error("multistep_mixed_prob: one entry per old box required");
  int m = 0;
  for (int v : m_by_box) {
    if (v < 0) throw std::domain_error("multistep_mixed_prob: old-box gains must be >= 0");
    m += v;
  }
  const int k_star = static_cast<int>(new_box_sizes.size());
  for (int s : new_box_sizes) {
    if (s < 1) throw std::domain_error("multistep_mixed_prob: new box sizes must be >= 1");
    m += s;
  }
  const int n = counts.n();
  const Rational& g = model.gamma();
  const Rational& p = model.psi();
  Rational value = rising_factorial(g + n - k, m - k_star);
  value *= rising_factorial(Rational(k) - p, k_star);
  value *= rising_factorial(Rational(k) - g + p, k_star);
  value /= multistep_denominator(model, n, m);
  for (int j = 0; j < k; ++j)
    value *= rising_factorial(Rational(counts[j] + 1), m_by_box[static_cast<std::size_t>(j)]);
  for (int s : new_box_sizes) value *= factorial(s);
  return value;
}

Int multistep_multiplicity(const std::vector<int>& m_by_box,
                           const std::vector<int>& new_box_sizes) {
  int m = 0;
  for (int v : m_by_box) m += v;
  for (int s : new_box_sizes) m += s;
  Int count = factorial(m);
  for (int v : m_by_box) count /= factorial(v);
  std::map<int, int> size_multiplicity;
  for (int s : new_box_sizes) {
    count /= factorial(s);
    ++size_multiplicity[s];
  }
  for (const auto& [size, mult] : size_multiplicity) {
    (void)size;
    count /= factorial(mult);
  }
  return count;
}

MultistepTotalReport verify_multistep_total(const GnedinFisherPsi& model,
                                            const OccupancyCounts& counts, int m) {
  if (m < 1 || m > 6) throw std::domain_error("verify_multistep_total: requires 1 <= m <= 6");
  if (counts.n() > 6) throw std::domain_error("verify_multistep_total: state capped at n <= 6");
  MultistepTotalReport report;
  report.total = 0;
  const int k = counts.k();
  for (int into_new = 0; into_new <= m; ++into_new) {
    const int into_old = m - into_new;
    // new-box part: integer partitions of into_new (multisets of sizes)
    std::vector<std::vector<int>> new_configs;
    if (into_new == 0)
      new_configs.push_back({});
    else
      for_each_integer_partition(into_new,
                                 [&](const std::vector<int>& parts) { new_configs.push_back(parts); });
    for (const auto& sizes : new_configs) {
      for_each_composition(into_old, k, 0, [&](const std::vector<int>& gains) {
        report.total += multistep_mixed_prob(model, counts, gains, sizes) *
                        multistep_multiplicity(gains, sizes);
        ++report.configurations;
      });
    }
  }
  report.ok = report.total == 1;
  return report;
}

XiSampler::XiSampler(const GnedinFisherPsi& model, long cache_limit)
    : gamma_(model.gamma_fp()), psi_(model.psi_fp()) {
  if (cache_limit < 1) throw std::domain_error("XiSampler: cache limit must be positive");
  cdf_.reserve(static_cast<std::size_t>(cache_limit));
  double pmf = xi_prior_pmf(model, 1);
  double cumulative = 0.0;
  for (long xi = 1; xi <= cache_limit; ++xi) {
    cumulative += pmf;
    cdf_.push_back(cumulative);
    const double x = static_cast<double>(xi);
    pmf *= (x - psi_) * (x - gamma_ + psi_) / (x * (x + 1.0));
  }
  cached_pmf_back_ = pmf;  // pmf at cache_limit + 1
}

long XiSampler::sample(RandomStream& stream) const {
  const double u = stream.uniform();
  if (u < cdf_.back()) {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<long>(it - cdf_.begin()) + 1;
  }
  // heavy-tail region: continue the same inverse transform by ratio walk
  double cumulative = cdf_.back();
  double pmf = cached_pmf_back_;
  long xi = static_cast<long>(cdf_.size()) + 1;
  const long hard_cap = 100000000;
  while (cumulative + pmf < u && xi < hard_cap) {
    cumulative += pmf;
    const double x = static_cast<double>(xi);
    pmf *= (x - psi_) * (x - gamma_ + psi_) / (x * (x + 1.0));
    ++xi;
  }
  return xi;
}

SetPartition sample_two_stage(int n, const XiSampler& xi_sampler, RandomStream& stream) {
  if (n < 1) throw std::domain_error("sample_two_stage: n must be positive");
  const long xi = xi_sampler.sample(stream);
  // symmetric Dirichlet(1,...,1) over xi species, frequencies integrated out:
  // item joins box j with (n_j+1)/(items+xi), a new box with (xi-k)/(items+xi)
  SetPartition partition;
  partition.blocks.push_back({1});
  std::vector<int> sizes{1};
  for (int item = 2; item <= n; ++item) {
    const int items_so_far = item - 1;
    const double denom = static_cast<double>(items_so_far) + static_cast<double>(xi);
    const double u = stream.uniform() * denom;
    double cumulative = 0.0;
    bool placed = false;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      cumulative += static_cast<double>(sizes[j] + 1);
      if (u < cumulative) {
        ++sizes[j];
        partition.blocks[j].push_back(item);
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (static_cast<long>(sizes.size()) >= xi) {
        // rounding pushed u past the last cumulative although no unseen
        // species remain; the mass belongs to the last box
        ++sizes.back();
        partition.blocks.back().push_back(item);
      } else {
        sizes.push_back(1);
        partition.blocks.push_back({item});
      }
    }
  }
  return partition;
}

}  // namespace gfss
