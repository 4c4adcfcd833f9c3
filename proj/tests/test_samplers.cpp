#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "gfss/allocation.hpp"
#include "gfss/block_laws.hpp"
#include "gfss/eppf.hpp"
#include "gfss/models.hpp"
#include "gfss/structural.hpp"
#include "gfss/waring.hpp"
#include "statistics.hpp"

using namespace gfss;
using gfss::testing::chi_square_gof;
using gfss::testing::ks_test;

namespace {

// canonical key of a set partition: sorted blocks of sorted elements
std::vector<std::vector<int>> partition_key(const SetPartition& p) {
  std::vector<std::vector<int>> key = p.blocks;
  for (auto& b : key) std::sort(b.begin(), b.end());
  std::sort(key.begin(), key.end());
  return key;
}

// exact EPPF table over all set partitions of {1..n}
template <class Model>
std::map<std::vector<std::vector<int>>, double> exact_partition_law(const Model& model, int n) {
  std::map<std::vector<std::vector<int>>, double> law;
  for_each_set_partition(n, [&](const SetPartition& p) {
    law[partition_key(p)] = to_double(eppf(model, p));
  });
  return law;
}

}  // namespace

TEST_CASE("sequential sampler matches the exact EPPF over partitions of {1..4}") {
  const GnedinFisherPsi model(Rational(1, 2), Rational(0));
  const auto law = exact_partition_law(model, 4);
  std::map<std::vector<std::vector<int>>, long> histogram;
  RandomStream stream(2024);
  const long draws = 20000;
  for (long i = 0; i < draws; ++i)
    ++histogram[partition_key(sample_sequential(model, 4, stream))];

  std::vector<long> observed;
  std::vector<double> probabilities;
  for (const auto& [key, p] : law) {
    probabilities.push_back(p);
    const auto it = histogram.find(key);
    observed.push_back(it == histogram.end() ? 0 : it->second);
  }
  const auto result = chi_square_gof(observed, probabilities, 0.001);
  CHECK(result.ok);
}

TEST_CASE("two-stage sampler matches the exact EPPF over partitions of {1..4}") {
  const GnedinFisherPsi model(Rational(4, 5), Rational(3, 10));
  const auto law = exact_partition_law(model, 4);
  const XiSampler xi_sampler(model);
  std::map<std::vector<std::vector<int>>, long> histogram;
  RandomStream stream(555);
  const long draws = 20000;
  for (long i = 0; i < draws; ++i)
    ++histogram[partition_key(sample_two_stage(4, xi_sampler, stream))];

  std::vector<long> observed;
  std::vector<double> probabilities;
  for (const auto& [key, p] : law) {
    probabilities.push_back(p);
    const auto it = histogram.find(key);
    observed.push_back(it == histogram.end() ? 0 : it->second);
  }
  const auto result = chi_square_gof(observed, probabilities, 0.001);
  CHECK(result.ok);
}

TEST_CASE("empirical block counts match the exact law at n = 6") {
  const GnedinFisherPsi model(Rational(4, 5), Rational(3, 10));
  const auto pmf = blocks_pmf_two_param(model, 6);
  std::vector<double> probabilities;
  for (const auto& q : pmf) probabilities.push_back(to_double(q));

  SUBCASE("sequential") {
    RandomStream stream(99);
    std::vector<long> observed(6, 0);
    for (long i = 0; i < 20000; ++i)
      ++observed[static_cast<std::size_t>(sample_sequential(model, 6, stream).k() - 1)];
    CHECK(chi_square_gof(observed, probabilities, 0.001).ok);
  }

  SUBCASE("two-stage") {
    const XiSampler xi_sampler(model);
    RandomStream stream(100);
    std::vector<long> observed(6, 0);
    for (long i = 0; i < 20000; ++i)
      ++observed[static_cast<std::size_t>(sample_two_stage(6, xi_sampler, stream).k() - 1)];
    CHECK(chi_square_gof(observed, probabilities, 0.001).ok);
  }
}

TEST_CASE("Waring sampler") {
  SUBCASE("pmf match on the first 20 support points") {
    const GeneralizedWaring d{0.9, 0.7, 1.8, 0};
    RandomStream stream(31337);
    const int cells = 21;  // 0..19 plus overflow
    std::vector<long> observed(cells, 0);
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) {
      const long v = waring_sample(d, stream);
      ++observed[static_cast<std::size_t>(std::min<long>(v, cells - 1))];
    }
    std::vector<double> probabilities(cells, 0.0);
    double head = 0.0;
    for (int i = 0; i < cells - 1; ++i) {
      probabilities[static_cast<std::size_t>(i)] = waring_pmf(d, i);
      head += probabilities[static_cast<std::size_t>(i)];
    }
    probabilities[cells - 1] = 1.0 - head;
    CHECK(chi_square_gof(observed, probabilities, 0.001).ok);
  }

  SUBCASE("empirical mean within three standard errors when rho > 1") {
    const GeneralizedWaring d{0.9, 0.7, 2.6, 0};
    const auto mean = waring_moment(d, 1, 1e-8);
    const auto second = waring_moment(d, 2, 1e-8);
    REQUIRE(mean.has_value());
    REQUIRE(second.has_value());
    const double variance = *second - *mean * *mean;
    RandomStream stream(8);
    const long draws = 100000;
    double sum = 0.0;
    for (long i = 0; i < draws; ++i) sum += static_cast<double>(waring_sample(d, stream));
    const double empirical = sum / static_cast<double>(draws);
    const double se = std::sqrt(variance / static_cast<double>(draws));
    CHECK(std::fabs(empirical - *mean) < 3.0 * se);
  }

  SUBCASE("a -> 0 concentrates at zero") {
    const GeneralizedWaring d{1e-9, 0.7, 1.8, 0};
    RandomStream stream(4);
    long zeros = 0;
    for (int i = 0; i < 2000; ++i) zeros += waring_sample(d, stream) == 0 ? 1 : 0;
    CHECK(zeros == 2000);
  }
}

TEST_CASE("Xi inverse-cdf sampler matches the prior pmf") {
  const GnedinFisherPsi model(Rational(4, 5), Rational(3, 10));
  const XiSampler xi_sampler(model);
  RandomStream stream(61);
  const int cells = 31;  // 1..30 plus overflow
  std::vector<long> observed(cells, 0);
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) {
    const long v = xi_sampler.sample(stream);
    ++observed[static_cast<std::size_t>(std::min<long>(v - 1, cells - 1))];
  }
  std::vector<double> probabilities(cells, 0.0);
  double head = 0.0;
  for (int i = 0; i < cells - 1; ++i) {
    probabilities[static_cast<std::size_t>(i)] = xi_prior_pmf(model, i + 1);
    head += probabilities[static_cast<std::size_t>(i)];
  }
  probabilities[cells - 1] = 1.0 - head;
  CHECK(chi_square_gof(observed, probabilities, 0.001).ok);
}

TEST_CASE("structural sampler") {
  const GnedinFisherPsi model(Rational(1, 2), Rational(0));
  const XiSampler xi_sampler(model);

  SUBCASE("atom frequency within three standard errors") {
    RandomStream stream(17);
    const long draws = 100000;
    long at_one = 0;
    for (long i = 0; i < draws; ++i)
      if (structural_sample(xi_sampler, stream) == 1.0) ++at_one;
    const double atom = structural_atom(model);
    const double se = std::sqrt(atom * (1.0 - atom) / static_cast<double>(draws));
    CHECK(std::fabs(static_cast<double>(at_one) / static_cast<double>(draws) - atom) < 3.0 * se);
  }

  SUBCASE("continuous part passes KS against the psi = 0 closed CDF") {
    // conditional on y < 1 the CDF is y^gamma
    RandomStream stream(18);
    const double g = model.gamma_fp();
    std::vector<double> continuous;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) {
      const double y = structural_sample(xi_sampler, stream);
      if (y < 1.0) continuous.push_back(y);
    }
    const auto result =
        ks_test(std::move(continuous), [g](double y) { return std::pow(y, g); }, 0.001);
    CHECK(result.ok);
  }
}
