#include <vector>

#include "doctest.h"
#include "gfss/allocation.hpp"
#include "gfss/eppf.hpp"
#include "gfss/models.hpp"

using namespace gfss;

namespace {

const std::vector<std::pair<Rational, Rational>> kPsiGrid = {
    {Rational(1, 2), Rational(0)},
    {Rational(4, 5), Rational(3, 10)},
    {Rational(6, 5), Rational(1, 2)},
    {Rational(1, 4), Rational(1, 8)},
};

}  // namespace

TEST_CASE("zeta validation classifies the quadratic") {
  SUBCASE("strictly positive (roots below 1)") {
    const auto cls = validate_zeta(Rational(4, 5), Rational(3, 20));
    CHECK(cls.kind == ZetaClassification::Case::StrictlyPositive);
  }
  SUBCASE("integer root: finite species") {
    const auto cls = validate_zeta(Rational(3), Rational(2));
    CHECK(cls.kind == ZetaClassification::Case::FiniteSpecies);
    CHECK(cls.index == 1);
    const auto cls2 = validate_zeta(Rational(5), Rational(6));  // (i-2)(i-3)
    CHECK(cls2.kind == ZetaClassification::Case::FiniteSpecies);
    CHECK(cls2.index == 2);
  }
  SUBCASE("invalid parameters report the first violating index") {
    const auto cls = validate_zeta(Rational(0), Rational(-1));
    CHECK(cls.kind == ZetaClassification::Case::Invalid);
    CHECK(cls.index == 1);
    const auto neg = validate_zeta(Rational(7, 2), Rational(3));  // q(2) = 4-7+3 = 0? -> root
    CHECK(neg.kind != ZetaClassification::Case::Invalid);
    const auto mid = validate_zeta(Rational(4), Rational(7, 2));  // q(2) = 4-8+3.5 < 0
    CHECK(mid.kind == ZetaClassification::Case::Invalid);
    CHECK(mid.index == 2);
    CHECK_THROWS_AS(GnedinFisherZeta(Rational(4), Rational(7, 2)), std::domain_error);
  }
}

TEST_CASE("psi model domain") {
  CHECK_THROWS_AS(GnedinFisherPsi(Rational(1, 2), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(GnedinFisherPsi(Rational(0), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(GnedinFisherPsi(Rational(3, 2), Rational(0)), std::domain_error);  // gamma >= psi+1
  CHECK_NOTHROW(GnedinFisherPsi(Rational(6, 5), Rational(1, 2)));
}

TEST_CASE("parametrization conversions") {
  SUBCASE("psi -> zeta is zeta = psi(gamma - psi)") {
    const GnedinFisherPsi psi_model(Rational(4, 5), Rational(3, 10));
    const auto zeta_model = psi_to_zeta(psi_model);
    CHECK(zeta_model.zeta() == Rational(3, 20));
    const GnedinFisherPsi one_param(Rational(1, 2), Rational(0));
    CHECK(psi_to_zeta(one_param).zeta() == 0);
    const GnedinFisherPsi wide(Rational(6, 5), Rational(1, 2));
    CHECK(psi_to_zeta(wide).zeta() == Rational(7, 20));
  }

  SUBCASE("zeta -> psi picks the smaller root") {
    const auto conv = zeta_to_psi(GnedinFisherZeta(Rational(4, 5), Rational(3, 20)));
    REQUIRE(conv.representable);
    CHECK(conv.exact);
    CHECK(conv.model->psi() == Rational(3, 10));
  }

  SUBCASE("zeta = 0 reduces to psi = 0") {
    const auto conv = zeta_to_psi(GnedinFisherZeta(Rational(1, 2), Rational(0)));
    REQUIRE(conv.representable);
    CHECK(conv.model->psi() == 0);
  }

  SUBCASE("complex roots are not representable") {
    const auto conv = zeta_to_psi(GnedinFisherZeta(Rational(1, 2), Rational(1, 2)));
    CHECK_FALSE(conv.representable);
    CHECK(conv.discriminant == Rational(-7, 4));
  }

  SUBCASE("round trip on the grid") {
    for (const auto& [g, p] : kPsiGrid) {
      const GnedinFisherPsi model(g, p);
      const auto back = zeta_to_psi(psi_to_zeta(model));
      REQUIRE(back.representable);
      CHECK(back.exact);
      // smaller-root convention: returns min(psi, gamma-psi)
      const Rational mirror = g - p;
      const Rational expected = std::min(p, mirror);
      CHECK(back.model->psi() == expected);
    }
  }
}

TEST_CASE("weights") {
  SUBCASE("V(1,1) = 1 for every model") {
    CHECK(GnedinFisherZeta(Rational(4, 5), Rational(3, 20)).weight(1, 1) == 1);
    CHECK(GnedinFisherPsi(Rational(4, 5), Rational(3, 10)).weight(1, 1) == 1);
    CHECK(FisherExtreme(7).weight(1, 1) == 1);
  }

  SUBCASE("zeta weight closed value") {
    // (0.8)(0.35) / ((1.95)(5.75))
    const GnedinFisherZeta model(Rational(4, 5), Rational(3, 20));
    CHECK(model.weight(3, 2) ==
          Rational(4, 5) * Rational(7, 20) / (Rational(39, 20) * Rational(23, 4)));
  }

  SUBCASE("finite species vanish above the root") {
    const GnedinFisherZeta model(Rational(3), Rational(2));
    REQUIRE(model.finite_species().has_value());
    CHECK(*model.finite_species() == 1);
    CHECK(model.weight(4, 2) == 0);
    CHECK(model.weight(4, 1) != 0);
  }

  SUBCASE("parametrization equivalence on a grid") {
    for (const auto& [g, p] : kPsiGrid) {
      const GnedinFisherPsi psi_model(g, p);
      const auto zeta_model = psi_to_zeta(psi_model);
      for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= n; ++k) CHECK(psi_model.weight(n, k) == zeta_model.weight(n, k));
    }
  }

  SUBCASE("psi <-> gamma-psi symmetry") {
    for (const auto& [g, p] : kPsiGrid) {
      const Rational mirror = g - p;
      if (mirror < 0 || mirror >= 1) continue;
      const GnedinFisherPsi a(g, p);
      const GnedinFisherPsi b(g, mirror);
      for (int n = 1; n <= 15; ++n)
        for (int k = 1; k <= n; ++k) CHECK(a.weight(n, k) == b.weight(n, k));
    }
  }

  SUBCASE("psi = 0 reduction to the one-parameter closed form") {
    const std::vector<Rational> gammas{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    for (const Rational& g : gammas) {
      const GnedinFisherPsi model(g, Rational(0));
      for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
          const Rational closed = Rational(factorial(k - 1), factorial(n - 1)) *
                                  rising_factorial(1 - g, k - 1) * rising_factorial(g, n - k) /
                                  rising_factorial(1 + g, n - 1);
          CHECK(model.weight(n, k) == closed);
        }
    }
  }

  SUBCASE("extreme model weight and its support") {
    CHECK(FisherExtreme(1).weight(3, 1) != 0);
    CHECK(FisherExtreme(1).weight(3, 2) == 0);
    CHECK(FisherExtreme(1).weight(3, 3) == 0);
    for (long xi = 1; xi <= 6; ++xi)
      for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
          CHECK((FisherExtreme(xi).weight(n, k) == 0) == (k > xi));
  }

  SUBCASE("extreme model EPPF equals the symmetric Dirichlet moment route") {
    // independent oracle: with xi species at uniform Dirichlet(1,..,1)
    // frequencies, E[prod P_i^{n_i}] = prod n_i! (xi-1)! / (xi-1+n)! and the
    // EPPF multiplies by the xi(xi-1)...(xi-k+1) injective species choices
    for (long xi = 1; xi <= 6; ++xi) {
      for (int n = 1; n <= 7; ++n) {
        for_each_integer_partition(n, [&](const std::vector<int>& parts) {
          const OccupancyCounts counts(parts);
          const int k = counts.k();
          Rational moment_route = falling_factorial(Rational(xi), k) *
                                  Rational(factorial(static_cast<int>(xi) - 1),
                                           factorial(static_cast<int>(xi) - 1 + n));
          for (int c : parts) moment_route *= factorial(c);
          CHECK(eppf(FisherExtreme(xi), counts) == moment_route);
        });
      }
    }
    // the spec point (xi=3, counts (2,1)): both routes give exactly 1/5
    CHECK(eppf(FisherExtreme(3), OccupancyCounts({2, 1})) == Rational(1, 5));
  }

  SUBCASE("log weights agree with exact weights") {
    for (const auto& [g, p] : kPsiGrid) {
      const GnedinFisherPsi model(g, p);
      const auto zeta_model = psi_to_zeta(model);
      for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
          const double exact = to_double(model.weight(n, k));
          CHECK(std::exp(model.log_weight_fp(n, k)) == doctest::Approx(exact).epsilon(1e-11));
          CHECK(std::exp(zeta_model.log_weight_fp(n, k)) ==
                doctest::Approx(exact).epsilon(1e-11));
        }
    }
    CHECK(std::exp(FisherExtreme(5).log_weight_fp(7, 3)) ==
          doctest::Approx(to_double(FisherExtreme(5).weight(7, 3))).epsilon(1e-12));
    CHECK(FisherExtreme(2).log_weight_fp(5, 4) == -std::numeric_limits<double>::infinity());
  }
}

TEST_CASE("Gibbs backward recursion V(n,k) = (n+k) V(n+1,k) + V(n+1,k+1)") {
  auto check_recursion = [](const auto& model) {
    for (int n = 1; n <= 15; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(model.weight(n, k) ==
              Rational(n + k) * model.weight(n + 1, k) + model.weight(n + 1, k + 1));
  };
  for (const auto& [g, p] : kPsiGrid) {
    check_recursion(GnedinFisherPsi(g, p));
    check_recursion(psi_to_zeta(GnedinFisherPsi(g, p)));
  }
  check_recursion(GnedinFisherZeta(Rational(3), Rational(2)));  // finite species
  check_recursion(FisherExtreme(4));
}

TEST_CASE("multiplicative-form identity (n+k) g0(n-k) + g1(k) = g(n)") {
  for (const auto& [g, p] : kPsiGrid) {
    for (int n = 1; n <= 20; ++n)
      for (int k = 1; k <= n; ++k) {
        const Rational g0 = Rational(n - k) + g;
        const Rational g1 = (Rational(k) - p) * (Rational(k) - g + p);
        const Rational gn = (Rational(n) + p) * (Rational(n) + g - p);
        CHECK(Rational(n + k) * g0 + g1 == gn);
      }
  }
}

TEST_CASE("one-step rules") {
  SUBCASE("single item, one-parameter gamma = 1/2") {
    const GnedinFisherPsi model(Rational(1, 2), Rational(0));
    const auto rules = one_step_rules(model, OccupancyCounts({1}));
    CHECK(rules.p_new == Rational(1, 3));
    REQUIRE(rules.p_old.size() == 1);
    CHECK(rules.p_old[0] == Rational(2, 3));
  }

  SUBCASE("probabilities sum to 1 exactly and equal EPPF ratios") {
    for (const auto& [g, p] : kPsiGrid) {
      const GnedinFisherPsi model(g, p);
      for (const auto& counts :
           {std::vector<int>{1}, {2, 1}, {3, 2, 1}, {1, 1, 1, 1}, {4, 2}}) {
        const OccupancyCounts state(counts);
        const auto rules = one_step_rules(model, state);
        Rational total = rules.p_new;
        for (const auto& q : rules.p_old) total += q;
        CHECK(total == 1);

        const auto generic = one_step_rules_generic(model, state);
        CHECK(generic.p_new == rules.p_new);
        for (std::size_t j = 0; j < rules.p_old.size(); ++j)
          CHECK(generic.p_old[j] == rules.p_old[j]);

        // direct EPPF-ratio cross-check
        const Rational base = eppf(model, state);
        std::vector<int> grown = counts;
        for (std::size_t j = 0; j < grown.size(); ++j) {
          ++grown[j];
          CHECK(rules.p_old[j] == eppf(model, OccupancyCounts(grown)) / base);
          --grown[j];
        }
        grown.push_back(1);
        CHECK(rules.p_new == eppf(model, OccupancyCounts(grown)) / base);
      }
    }
  }

  SUBCASE("generic rules work for finite-species zeta models") {
    const GnedinFisherZeta model(Rational(3), Rational(2));  // one species only
    const auto rules = one_step_rules_generic(model, OccupancyCounts({2}));
    CHECK(rules.p_new == 0);
    CHECK(rules.p_old[0] == 1);
    // a state the model cannot reach has no predictive distribution
    CHECK_THROWS_AS(one_step_rules_generic(model, OccupancyCounts({1, 1})), std::domain_error);
  }
}
