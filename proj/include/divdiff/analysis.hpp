#ifndef DIVDIFF_ANALYSIS_HPP
#define DIVDIFF_ANALYSIS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

/// Discretization knobs for the integral representations. Contour center and
/// radius default to a circle comfortably enclosing the nodes:
/// center (min+max)/2, radius (max-min)/2 * 1.5 + 1.
struct QuadratureConfig {
    int gauss_order = 16;
    int contour_points = 256;
    std::optional<std::complex<double>> contour_center;
    std::optional<double> contour_radius;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// dd over n+1 nodes as the iterated integral of D^n f over the nested
/// simplex 1 >= s_1 >= ... >= s_n >= 0, the integrand evaluated at
/// t_0 + sum_i s_i (t_i - t_{i-1}). Gauss-Legendre in each dimension,
/// innermost first, with the variable upper limits mapped affinely.
double genocchi_dd(const SmoothFunction& f, const NodeSequence& t, const QuadratureConfig& cfg = {});

struct ContourResult {
    double value;          // real part of the contour integral
    double imag_residual;  // imaginary part; a discretization diagnostic
};

/// dd of an analytic f as the Cauchy-type integral of f(z)/w_{n,t}(z) over a
/// circle enclosing all nodes, by the trapezoidal rule on equispaced samples.
/// f must carry a complex evaluator; every node must lie strictly inside.
ContourResult contour_dd(const SmoothFunction& f, const NodeSequence& t,
                         const QuadratureConfig& cfg = {});

/// B-spline with the given knots, degree k-1 for k+1 knots, normalized to
/// unit integral: k times the dd over the knots of u -> (u - x)^{k-1}_+,
/// with one-sided derivative data at repeated knots. Zero outside the knot
/// span. x exactly at a knot of multiplicity k is rejected (the value jumps
/// there).
double bspline_eval(double x, const NodeSequence& knots);

/// Integral of the B-spline over its support, by per-span Gauss quadrature
/// (the spline is polynomial between distinct knots). Equals 1.
double bspline_integral(const NodeSequence& knots, const QuadratureConfig& cfg = {});

/// dd over k+1 knots as the Peano-kernel integral of M(.|knots) D^k f / k!.
double peano_dd(const SmoothFunction& f, const NodeSequence& knots, const QuadratureConfig& cfg = {});

struct MeanValueBracket {
    double lo;
    double mid;  // k! times the dd over t
    double hi;
};

/// Brackets k! dd(t) f between the extremes of D^k f sampled on a 1001-point
/// grid over [min t, max t].
MeanValueBracket mean_value_check(const SmoothFunction& f, const NodeSequence& t);

struct FloaterExpansion {
    double truncation;  // sum_{j=m}^{n} dd(s) w_{j-1,t} * dd(t_{1:j}) f
    double e_leibniz;   // product-rule form of the error term
    double e_floater;   // same-order form of the error term
};

/// Expands the dd over s (m nodes) through the dds over leading sections of t
/// (n >= m nodes), with the error term in both closed forms. Each satisfies
/// truncation + E = dd(s) f.
FloaterExpansion floater_expansion(const NodeSequence& s, const NodeSequence& t,
                                   const SmoothFunction& f);

/// dd(s) f - dd(t) f = sum_i (s_i - t_i) dd(s_{1:i}, t_{i:m}) f for node
/// sequences of equal length m; returns the right-hand sum.
double hopf_anchor(const NodeSequence& s, const NodeSequence& t, const SmoothFunction& f);

/// dd over pairwise distinct nodes as a ratio of determinants: the collocation
/// matrix of 1, x, ..., x^{k-1}, f over the Vandermonde determinant. LU with
/// partial pivoting.
double determinant_dd(const NodeSequence& t, const std::vector<double>& values);

/// Sites where the derivative of the Hermite interpolant to f at t crosses
/// D f, located by sign-change bracketing on a uniform grid and bisection.
/// When f is a polynomial of one degree above the interpolant, a full set of
/// k such sites sigma interlaces t and satisfies k dd(t) f = dd(sigma) Df.
/// May return fewer than k sites (grid-resolution misses are possible).
std::vector<double> derivative_interpolation_sites(const SmoothFunction& f, const NodeSequence& t,
                                                   int grid_points = 2001);

}  // namespace divdiff

#endif
