#ifndef DIVDIFF_FUNCTIONS_HPP
#define DIVDIFF_FUNCTIONS_HPP

#include <string>
#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

// Built-in functions with exact derivatives of every order. All carry a
// complex evaluator for the contour representation (recip is meromorphic,
// valid away from its pole).

SmoothFunction make_exp();
SmoothFunction make_sin();
SmoothFunction make_reciprocal();        // z -> 1/z
SmoothFunction make_power(int k);        // z -> z^k, k >= 0
SmoothFunction make_cauchy_kernel(double pole);  // u -> 1/(pole - u)

SmoothFunction make_smooth(const PowerPoly& p);
SmoothFunction make_smooth(const NewtonPoly& p);

/// f'(and higher): shifts derivative orders by `times`.
SmoothFunction derivative_of(const SmoothFunction& f, int times = 1);

/// z -> f(a z + b); D^m picks up the factor a^m.
SmoothFunction precompose_affine(const SmoothFunction& f, double a, double b);

/// Named lookup: "exp", "sin", "recip", or "power:k".
SmoothFunction function_by_name(const std::string& name);

/// dd of a smooth function over an arbitrary finite node multiset: nodes are
/// clustered exactly (tol = 0), derivative data sampled, and the table read.
double divided_difference(const SmoothFunction& f, const std::vector<double>& raw_nodes);

}  // namespace divdiff

#endif
