#ifndef DIVDIFF_IDENTITIES_HPP
#define DIVDIFF_IDENTITIES_HPP

#include <cstddef>
#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

/// A linear functional sum_terms A * D^order f(site). With weights from
/// chakalov_weights it coincides with the dd functional over the generating
/// node sequence, on polynomials and (by definition) on all smooth f.
struct DDFunctional {
    struct Term {
        double site;
        int order;
        double weight;
    };
    std::vector<Term> terms;

    int max_order() const;
};

struct RefineTerm {
    std::size_t start;  // window covers node positions [start, start + k - 1]
    double weight;
};

/// Expands the dd over the subsequence t[sigma[0]], ..., t[sigma[k-1]] as a
/// weighted sum of dds over the consecutive length-k windows of t spanned by
/// sigma. sigma is 0-based and strictly increasing. The weights sum to 1 and
/// are positive for strictly increasing t; they are produced by repeatedly
/// trading the span's endpoint pair (a, b) for pairs through the lowest
/// missing interior node m:
///   dd(W+{a,b}) = (b-m)/(b-a) dd(W+{m,b}) + (m-a)/(b-a) dd(W+{a,m}).
std::vector<RefineTerm> refine_coeffs(const NodeSequence& t, const std::vector<std::size_t>& sigma);

/// dd over t of u -> 1/(z-u), which collapses to 1/w_{n,t}(z). z must not be
/// a node.
double cauchy_kernel_dd(const NodeSequence& t, double z);

/// dd over t of u -> 1/u: (-1)^{n-1} / (t_1 ... t_n). No node may be zero.
double reciprocal_dd(const NodeSequence& t);

/// Weights A_{site,order} expressing the dd over t as a combination of
/// derivative evaluations, found by requiring exactness on the Newton basis
/// w_0, ..., w_{n-1}; with nodes clustered and ordered that system is
/// triangular with nonzero diagonal.
DDFunctional chakalov_weights(const NodeSequence& t);

double apply_functional(const DDFunctional& F, const SmoothFunction& f);

/// Distinct-node specialization of chakalov_weights: weight j is
/// 1 / prod_{i != j} (t_j - t_i).
std::vector<double> lagrange_weights(const NodeSequence& t);

/// Operator norm of the dd functional on C([-1,1]): sum_j 1/|Dw_{n,t}(t_j)|.
/// Requires -1 <= t_1 < ... < t_n <= 1. Bounded below by 2^{n-2}, with
/// equality at the extreme sites of the degree n-1 Chebyshev polynomial.
double functional_norm(const NodeSequence& t);

/// Extreme sites of the first-kind Chebyshev polynomial of degree n-1,
/// ascending: cos(pi (n-j) / (n-1)), j = 1..n. These attain the norm bound.
std::vector<double> chebyshev_extreme_sites(std::size_t n);

}  // namespace divdiff

#endif
