#pragma once

#include <optional>

#include "gfss/random.hpp"

namespace gfss {

// Generalized Waring distribution on {0, 1, 2, ...}:
//   P(N = i) = (rho)_eta / i! * (a)_i (eta)_i / ((a+rho)_{eta+i}),
// a Beta(rho, a) mixture of negative binomials with shape eta. Heavy tailed:
// P(N = i) ~ C i^{-(1+rho)}, so E[N^k] exists iff rho > k. `shift` moves the
// support to {shift, shift+1, ...}.
struct GeneralizedWaring {
  double a = 1.0;
  double eta = 1.0;
  double rho = 1.0;
  long shift = 0;
};

/// log pmf at the *unshifted* index i >= 0.
double waring_log_pmf(const GeneralizedWaring& d, long i);
/// pmf at support point x (i.e. unshifted index x - shift).
double waring_pmf(const GeneralizedWaring& d, long x);

/// Moment E[(X - shift)^order] by adaptive series summation with a power-tail
/// correction; empty when it does not exist (rho <= order).
std::optional<double> waring_moment(const GeneralizedWaring& d, int order, double tol = 1e-9);

/// One draw of the unshifted count: p ~ Beta(rho, a) as the negative binomial
/// success probability, then N = failures before the eta-th success via the
/// Gamma(eta, (1-p)/p)-mixed Poisson (valid for real eta).
long waring_sample(const GeneralizedWaring& d, RandomStream& stream);

}  // namespace gfss
