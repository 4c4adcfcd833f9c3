#pragma once

#include "gfss/allocation.hpp"
#include "gfss/models.hpp"
#include "gfss/random.hpp"

namespace gfss {

// Structural distribution: the limiting frequency of the box containing
// item 1. An atom at y = 1 (the single-species event, Xi = 1) plus a density
// on (0,1) mixing Beta(2, xi-1) laws over the Xi prior.

/// Atom mass at y = 1: (g)_{1-psi} Gamma(1+psi) = prior mass of Xi = 1.
double structural_atom(const GnedinFisherPsi& model);

/// Density at y in (0,1):
///   atom * (1-psi)(1-g+psi) * y * 2F1(2-psi, 2-g+psi; 2; 1-y).
/// Direct series for moderate y; unit-argument connection formula as y -> 0
/// where the series degrades (falls back to a capped series when gamma is an
/// integer and the connection formula is unavailable).
double structural_density(const GnedinFisherPsi& model, double y);

/// Total mass check: atom + adaptive quadrature of the density over (0,1).
double structural_total_mass(const GnedinFisherPsi& model, double quad_tol = 1e-9);

struct StructuralMixtureReport {
  double direct = 0.0;       // series / 2F1 evaluation
  double mixture_sum = 0.0;  // sum_{xi=2}^{xi_max} prior(xi) Beta(2,xi-1) pdf
  double tail_bound = 0.0;
  bool ok = false;
};

/// Compares the closed-form density against the explicit Beta-mixture partial
/// sum (two independent summation routes).
StructuralMixtureReport structural_mixture_pdf_check(const GnedinFisherPsi& model, double y,
                                                     long xi_max);

/// Exact draw: Xi from the prior, then y = 1 when Xi = 1, else Beta(2, Xi-1).
double structural_sample(const XiSampler& xi_sampler, RandomStream& stream);

}  // namespace gfss
