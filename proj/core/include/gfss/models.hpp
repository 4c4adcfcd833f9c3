#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "gfss/scalar.hpp"

namespace gfss {

// ---------------------------------------------------------------------------
// (gamma, zeta) family: weights from quadratic factor products,
//   V(n,k) = (g)_{n-k} prod_{i<k}(i^2 - g i + z) / prod_{l<n}(l^2 + g l + z).
// Valid when g >= 0 and the numerator quadratic q(i) = i^2 - g i + z is
// either (i) strictly positive on the positive integers, or (ii) positive up
// to i0-1 with a root at i0 (then the model has at most i0 species).
// ---------------------------------------------------------------------------

struct ZetaClassification {
  enum class Case { StrictlyPositive, FiniteSpecies, Invalid };
  Case kind = Case::Invalid;
  int index = 0;          // root i0 for FiniteSpecies, first violating i for Invalid
  std::string diagnostic;  // set when Invalid
};

ZetaClassification validate_zeta(const Rational& gamma, const Rational& zeta);

class GnedinFisherZeta {
 public:
  GnedinFisherZeta(Rational gamma, Rational zeta);  // throws std::domain_error when invalid

  const Rational& gamma() const { return gamma_; }
  const Rational& zeta() const { return zeta_; }
  /// Root i0 when the numerator quadratic vanishes at an integer (case ii).
  std::optional<int> finite_species() const { return finite_species_; }

  Rational weight(int n, int k) const;
  double log_weight_fp(int n, int k) const;  // returns -inf for vanishing weights

 private:
  Rational gamma_, zeta_;
  std::optional<int> finite_species_;
};

// ---------------------------------------------------------------------------
// (gamma, psi) family: psi in [0,1), 0 < gamma < psi + 1,
//   V(n,k) = (g)_{n-k} (1-psi)_{k-1} (1-g+psi)_{k-1}
//            / ((1+psi)_{n-1} (1+g-psi)_{n-1}).
// Equivalent to the (gamma, zeta) model with zeta = psi (gamma - psi).
// ---------------------------------------------------------------------------

class GnedinFisherPsi {
 public:
  GnedinFisherPsi(Rational gamma, Rational psi);  // throws std::domain_error when invalid

  const Rational& gamma() const { return gamma_; }
  const Rational& psi() const { return psi_; }
  double gamma_fp() const { return to_double(gamma_); }
  double psi_fp() const { return to_double(psi_); }

  Rational weight(int n, int k) const;
  double log_weight_fp(int n, int k) const;

 private:
  Rational gamma_, psi_;
};

// ---------------------------------------------------------------------------
// Extreme model with a fixed number of species xi (symmetric Dirichlet(1,..,1)
// over xi species): V(n,k) = (xi-1)(xi-2)...(xi-k+1) / (xi+1)_{n-1}, zero for
// k > xi.
// ---------------------------------------------------------------------------

class FisherExtreme {
 public:
  explicit FisherExtreme(long xi);

  long xi() const { return xi_; }

  Rational weight(int n, int k) const;
  double log_weight_fp(int n, int k) const;

 private:
  long xi_;
};

template <class M>
concept GibbsModel = requires(const M& m, int n, int k) {
  { m.weight(n, k) } -> std::convertible_to<Rational>;
};

// --- conversions between the two parametrizations --------------------------

/// zeta = psi (gamma - psi); exact.
GnedinFisherZeta psi_to_zeta(const GnedinFisherPsi& model);

struct PsiConversion {
  bool representable = false;
  bool exact = false;    // psi is an exact rational (perfect-square discriminant)
  std::optional<GnedinFisherPsi> model;
  Rational discriminant;  // gamma^2 - 4 zeta
};

/// Smaller real root psi = (gamma - sqrt(gamma^2 - 4 zeta))/2 when it lands in
/// the valid (gamma, psi) domain; not-representable is a typed outcome.
PsiConversion zeta_to_psi(const GnedinFisherZeta& model);

}  // namespace gfss
