#ifndef DIVDIFF_NEWTON_HPP
#define DIVDIFF_NEWTON_HPP

#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

struct HornerResult {
    double value;               // p(z)
    std::vector<double> hatc;   // hatc[j] = dd of p over (z, centers[0..j-1])
};

/// Nested multiplication: hatc[n-1] = c[n-1], hatc[j] = c[j] + (z - t_j) hatc[j+1].
/// The returned hatc are the coefficients of p with respect to centers
/// (z, t_0, t_1, ...); value = hatc[0] = p(z).
HornerResult horner_eval(const NewtonPoly& p, double z);

double evaluate(const NewtonPoly& p, double z);

/// Re-expresses p with center sequence (z, t_0, ..., t_{n-3}); the last
/// original center drops off. The polynomial is unchanged.
NewtonPoly insert_center(const NewtonPoly& p, double z);

/// Rebases p onto new_centers (same count as p.centers) by inserting them in
/// reverse order, so the result's centers read new_centers left to right.
NewtonPoly change_basis(const NewtonPoly& p, const std::vector<double>& new_centers);

/// Local power form: returns the polynomial's coefficients in powers of
/// (x - tau); coefficient k is D^k p(tau) / k!.
PowerPoly to_taylor(const NewtonPoly& p, double tau);

/// D^k p(tau); zero when k reaches the coefficient count.
double derivative_at(const NewtonPoly& p, double tau, int k);

/// The factor q left by splitting p = (Hermite interpolant at t) + w_{n,t} q,
/// i.e. the dd of p with the nodes t and one floating argument. Returned in
/// Newton form; q is the zero polynomial when p's coefficient count is
/// exactly t.size(). Throws when t.size() exceeds p's coefficient count.
NewtonPoly remainder_poly(const NewtonPoly& p, const NodeSequence& t);

/// Same, for a polynomial given by a full-degree Hermite dataset.
NewtonPoly remainder_poly(const HermiteDataset& data, const NodeSequence& t);

/// k-th derivative, at z, of the map z -> dd of p over (t, z); equals
/// k! times the dd of p over t extended by k+1 copies of z.
double extended_dd_derivative(const NewtonPoly& p, const NodeSequence& t, int k, double z);

/// The Newton basis polynomial w_{degree,t} as a NewtonPoly (coefficients
/// 0,...,0,1 over centers t_0..t_{degree-1}).
NewtonPoly newton_basis_poly(const std::vector<double>& t, std::size_t degree);

/// NewtonPoly view of a power-form polynomial (all centers zero). The zero
/// polynomial maps to the constant 0.
NewtonPoly from_power(const PowerPoly& p);

}  // namespace divdiff

#endif
