#include "gfss/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gfss/combinatorics.hpp"

namespace gfss {

ZetaClassification validate_zeta(const Rational& gamma, const Rational& zeta) {
  ZetaClassification out;
  if (gamma < 0) {
    out.kind = ZetaClassification::Case::Invalid;
    out.index = 0;
    out.diagnostic = "gamma must be nonnegative";
    return out;
  }
  // denominator factor l^2 + gamma*l + zeta is increasing in l >= 1, so
  // positivity at l = 1 settles it
  if (1 + gamma + zeta <= 0) {
    out.kind = ZetaClassification::Case::Invalid;
    out.index = 1;
    out.diagnostic = "denominator factor 1 + gamma + zeta must be positive";
    return out;
  }
  // q(i) = i^2 - gamma*i + zeta decreases until i ~ gamma/2 then increases;
  // scanning one step past the vertex certifies positivity everywhere beyond
  const Rational half_gamma = gamma / 2;
  int i = 1;
  for (;; ++i) {
    const Rational q = Rational(i) * i - gamma * i + zeta;
    if (q < 0) {
      out.kind = ZetaClassification::Case::Invalid;
      out.index = i;
      out.diagnostic = "quadratic i^2 - gamma*i + zeta negative at i = " + std::to_string(i);
      return out;
    }
    if (q == 0) {
      out.kind = ZetaClassification::Case::FiniteSpecies;
      out.index = i;
      return out;
    }
    if (Rational(i) > half_gamma) break;
  }
  out.kind = ZetaClassification::Case::StrictlyPositive;
  out.index = 0;
  return out;
}

GnedinFisherZeta::GnedinFisherZeta(Rational gamma, Rational zeta)
    : gamma_(std::move(gamma)), zeta_(std::move(zeta)) {
  const auto cls = validate_zeta(gamma_, zeta_);
  if (cls.kind == ZetaClassification::Case::Invalid)
    throw std::domain_error("invalid (gamma, zeta) model: " + cls.diagnostic);
  if (cls.kind == ZetaClassification::Case::FiniteSpecies) finite_species_ = cls.index;
}

Rational GnedinFisherZeta::weight(int n, int k) const {
  if (k < 1 || k > n) throw std::domain_error("weight: requires 1 <= k <= n");
  if (finite_species_ && k > *finite_species_) return 0;
  Rational num = rising_factorial(gamma_, n - k);
  for (int i = 1; i <= k - 1; ++i) num *= Rational(i) * i - gamma_ * i + zeta_;
  Rational den = 1;
  for (int l = 1; l <= n - 1; ++l) den *= Rational(l) * l + gamma_ * l + zeta_;
  return num / den;
}

double GnedinFisherZeta::log_weight_fp(int n, int k) const {
  if (k < 1 || k > n) throw std::domain_error("weight: requires 1 <= k <= n");
  if (finite_species_ && k > *finite_species_)
    return -std::numeric_limits<double>::infinity();
  const double g = to_double(gamma_);
  const double z = to_double(zeta_);
  if (n - k > 0 && g == 0.0) return -std::numeric_limits<double>::infinity();
  double acc = (n - k > 0) ? log_rising_factorial(g, n - k) : 0.0;
  for (int i = 1; i <= k - 1; ++i) acc += std::log(static_cast<double>(i) * i - g * i + z);
  for (int l = 1; l <= n - 1; ++l) acc -= std::log(static_cast<double>(l) * l + g * l + z);
  return acc;
}

GnedinFisherPsi::GnedinFisherPsi(Rational gamma, Rational psi)
    : gamma_(std::move(gamma)), psi_(std::move(psi)) {
  if (psi_ < 0 || psi_ >= 1) throw std::domain_error("psi must lie in [0, 1)");
  if (gamma_ <= 0 || gamma_ >= psi_ + 1)
    throw std::domain_error("gamma must lie in (0, psi + 1)");
}

Rational GnedinFisherPsi::weight(int n, int k) const {
  if (k < 1 || k > n) throw std::domain_error("weight: requires 1 <= k <= n");
  const Rational num = rising_factorial(gamma_, n - k) *
                       rising_factorial(1 - psi_, k - 1) *
                       rising_factorial(1 - gamma_ + psi_, k - 1);
  const Rational den = rising_factorial(1 + psi_, n - 1) *
                       rising_factorial(1 + gamma_ - psi_, n - 1);
  return num / den;
}

double GnedinFisherPsi::log_weight_fp(int n, int k) const {
  if (k < 1 || k > n) throw std::domain_error("weight: requires 1 <= k <= n");
  const double g = gamma_fp();
  const double p = psi_fp();
  return log_rising_factorial(g, n - k) + log_rising_factorial(1 - p, k - 1) +
         log_rising_factorial(1 - g + p, k - 1) - log_rising_factorial(1 + p, n - 1) -
         log_rising_factorial(1 + g - p, n - 1);
}

FisherExtreme::FisherExtreme(long xi) : xi_(xi) {
  if (xi_ < 1) throw std::domain_error("xi must be a positive integer");
}

Rational FisherExtreme::weight(int n, int k) const {
  if (k < 1 || k > n) throw std::domain_error("weight: requires 1 <= k <= n");
  if (k > xi_) return 0;
  return falling_factorial(Rational(xi_ - 1), k - 1) /
         rising_factorial(Rational(xi_ + 1), n - 1);
}

double FisherExtreme::log_weight_fp(int n, int k) const {
  if (k < 1 || k > n) throw std::domain_error("weight: requires 1 <= k <= n");
  if (k > xi_) return -std::numeric_limits<double>::infinity();
  const double x = static_cast<double>(xi_);
  // (xi-1)(xi-2)...(xi-k+1) = Gamma(xi)/Gamma(xi-k+1)
  return std::lgamma(x) - std::lgamma(x - k + 1) - log_rising_factorial(x + 1, n - 1);
}

GnedinFisherZeta psi_to_zeta(const GnedinFisherPsi& model) {
  return GnedinFisherZeta(model.gamma(), model.psi() * (model.gamma() - model.psi()));
}

PsiConversion zeta_to_psi(const GnedinFisherZeta& model) {
  PsiConversion out;
  out.discriminant = model.gamma() * model.gamma() - 4 * model.zeta();
  if (out.discriminant < 0) return out;  // complex roots

  const auto exact_root = rational_sqrt(out.discriminant);
  Rational psi;
  bool exact = false;
  if (exact_root.exact) {
    psi = (model.gamma() - exact_root.root) / 2;
    exact = true;
  } else {
    const double root = std::sqrt(to_double(out.discriminant));
    psi = Rational((to_double(model.gamma()) - root) / 2.0);
  }
  // validity of the smaller root as a psi parameter
  if (psi < 0 || psi >= 1 || model.gamma() <= 0 || model.gamma() >= psi + 1) return out;
  out.representable = true;
  out.exact = exact;
  out.model.emplace(model.gamma(), psi);
  return out;
}

}  // namespace gfss
