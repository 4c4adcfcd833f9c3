#pragma once

namespace gfss {

/// Gauss hypergeometric series 2F1(a, b; c; x) for 0 <= x < 1 by direct
/// summation. Truncates adaptively once the geometric tail estimate drops
/// below tol; throws on x outside [0,1), on c a nonpositive integer, and if
/// max_terms is hit before convergence.
double gauss_2f1(double a, double b, double c, double x, double tol = 1e-12,
                 long max_terms = 1000000);

/// 2F1(a, b; c; 1-eps) via the unit-argument connection formula (two fast
/// series in eps). Requires c-a-b non-integer. Used where the direct series
/// becomes impractically slow (x -> 1).
double gauss_2f1_near_one(double a, double b, double c, double eps, double tol = 1e-14);

}  // namespace gfss
