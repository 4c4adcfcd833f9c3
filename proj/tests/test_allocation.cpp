#include <map>
#include <vector>

#include "doctest.h"
#include "gfss/allocation.hpp"
#include "gfss/eppf.hpp"
#include "gfss/models.hpp"
#include "path_oracle.hpp"

using namespace gfss;
using gfss::testing::ConfigKey;
using gfss::testing::enumerate_paths;

namespace {

// literal variant of the mixed rule with a bare prod s_j trailing factor
Rational mixed_prob_bare_product(const GnedinFisherPsi& model, const OccupancyCounts& counts,
                                 const std::vector<int>& gains, const std::vector<int>& sizes) {
  Rational value = multistep_mixed_prob(model, counts, gains, sizes);
  for (int s : sizes) value = value / factorial(s) * s;
  return value;
}

const std::vector<GnedinFisherPsi> kGrid{
    {Rational(1, 2), Rational(0)},
    {Rational(4, 5), Rational(3, 10)},
    {Rational(6, 5), Rational(1, 2)},
};

}  // namespace

TEST_CASE("multistep rules reduce to one-step rules at m = 1") {
  for (const auto& model : kGrid) {
    for (const auto& state_counts : {std::vector<int>{1}, {2, 1}, {3, 2}}) {
      const OccupancyCounts state(state_counts);
      const auto rules = one_step_rules(model, state);
      const int k = state.k();
      for (int j = 0; j < k; ++j) {
        std::vector<int> gains(static_cast<std::size_t>(k), 0);
        gains[static_cast<std::size_t>(j)] = 1;
        CHECK(multistep_old_prob(model, state, gains) == rules.p_old[static_cast<std::size_t>(j)]);
      }
      CHECK(multistep_new_prob(model, state, {1}) == rules.p_new);
    }
  }
}

TEST_CASE("multistep rules: degenerate cases") {
  const GnedinFisherPsi model(Rational(4, 5), Rational(3, 10));
  const OccupancyCounts state({2, 1});
  CHECK(multistep_old_prob(model, state, {0, 0}) == 1);  // m = 0, empty products
  CHECK_THROWS_AS(multistep_old_prob(model, state, {1}), std::domain_error);
  CHECK_THROWS_AS(multistep_new_prob(model, state, {0}), std::domain_error);
  // s = m: mixed with no old gains equals the all-new rule
  CHECK(multistep_mixed_prob(model, state, {0, 0}, {2, 1}) ==
        multistep_new_prob(model, state, {2, 1}));
}

TEST_CASE("multistep rules match the sequential path oracle") {
  for (const auto& model : kGrid) {
    for (const auto& state_counts : {std::vector<int>{1}, {2, 1}, {1, 1, 1}}) {
      const OccupancyCounts state(state_counts);
      for (int m = 1; m <= 4; ++m) {
        const auto oracle = enumerate_paths(model, state, m);
        Rational oracle_total = 0;
        for (const auto& [key, stats] : oracle) {
          CHECK(stats.consistent);  // all sequences of a configuration agree
          const Rational rule = multistep_mixed_prob(model, state, key.gains, key.new_sizes);
          // the rule value is the per-final-partition probability
          CHECK(rule == stats.per_sequence);
          // the frozen multiplicity counts the final partitions
          CHECK(multistep_multiplicity(key.gains, key.new_sizes) == stats.sequences);
          CHECK(rule * multistep_multiplicity(key.gains, key.new_sizes) == stats.total);
          oracle_total += stats.total;
        }
        CHECK(oracle_total == 1);
      }
    }
  }
}

TEST_CASE("the trailing factor of the mixed rule is prod s_j!, not prod s_j") {
  // a new box of size >= 3 separates the two readings (2! = 2 does not);
  // the bare-product variant disagrees with the sequential law
  const GnedinFisherPsi model(Rational(1, 2), Rational(0));
  const OccupancyCounts state({1});
  const auto oracle = enumerate_paths(model, state, 4);
  const ConfigKey key{{1}, {3}};  // one item to the old box, three into one new box
  const auto it = oracle.find(key);
  REQUIRE(it != oracle.end());
  CHECK(it->second.consistent);
  CHECK(multistep_mixed_prob(model, state, {1}, {3}) == it->second.per_sequence);
  CHECK(mixed_prob_bare_product(model, state, {1}, {3}) != it->second.per_sequence);
}

TEST_CASE("total-probability identity across configurations") {
  for (const auto& model : kGrid) {
    for (const auto& state_counts : {std::vector<int>{1}, {2, 1}, {2, 2, 1}}) {
      const OccupancyCounts state(state_counts);
      for (int m = 1; m <= 4; ++m) {
        const auto report = verify_multistep_total(model, state, m);
        CHECK(report.ok);
        CHECK(report.total == 1);
      }
    }
  }
  // m = 1 sanity: the one-step rules themselves
  const auto one = verify_multistep_total(kGrid[0], OccupancyCounts({1}), 1);
  CHECK(one.configurations == 2);
}

TEST_CASE("multiplicity convention") {
  // 4 items: two new boxes of size 2 -> 4!/(2!2!2!) = 3 set partitions
  CHECK(multistep_multiplicity({}, {2, 2}) == 3);
  // multinomial over old boxes only
  CHECK(multistep_multiplicity({2, 1}, {}) == 3);
  // mixed: 3 items, one to box 1, two in one new box -> 3!/(1!2!) = 3
  CHECK(multistep_multiplicity({1, 0}, {2}) == 3);
  // singleton new boxes are mutually indistinguishable as configurations
  CHECK(multistep_multiplicity({}, {1, 1, 1}) == 1);
}

TEST_CASE("grow_one applied n-1 times reproduces EPPF ratios structurally") {
  // determinism of the growth path given a fixed stream
  const GnedinFisherPsi model(Rational(4, 5), Rational(3, 10));
  RandomStream a(12345), b(12345);
  auto pa = sample_sequential(model, 6, a);
  auto pb = sample_sequential(model, 6, b);
  CHECK(pa.blocks == pb.blocks);
  CHECK(pa.n() == 6);
}

TEST_CASE("two-stage sampler basics") {
  const GnedinFisherPsi model(Rational(1, 2), Rational(0));
  const XiSampler xi_sampler(model);
  RandomStream stream(7);
  // single item: always one block
  for (int i = 0; i < 50; ++i) {
    const auto p = sample_two_stage(1, xi_sampler, stream);
    REQUIRE(p.k() == 1);
    CHECK(p.blocks[0] == std::vector<int>{1});
  }
  // partitions are valid
  for (int i = 0; i < 200; ++i) {
    const auto p = sample_two_stage(5, xi_sampler, stream);
    CHECK(p.n() == 5);
    CHECK(p.k() >= 1);
    CHECK(p.k() <= 5);
  }
}
