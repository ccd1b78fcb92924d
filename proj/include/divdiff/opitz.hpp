#ifndef DIVDIFF_OPITZ_HPP
#define DIVDIFF_OPITZ_HPP

#include <cstddef>
#include <vector>

#include "divdiff/core.hpp"

namespace divdiff {

/// Lower bidiagonal matrix with the nodes on the diagonal and ones below:
/// A(i,i) = t_i, A(i+1,i) = 1. Polynomials of it reproduce the whole divided
/// difference table at once.
struct OpitzMatrix {
    std::vector<double> diag;
    std::size_t size() const { return diag.size(); }
};

/// Dense row-major square matrix, just big enough for this module.
struct Matrix {
    explicit Matrix(std::size_t n_in) : n(n_in), a(n_in * n_in, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    std::size_t n;
    std::vector<double> a;
};

Matrix matmul(const Matrix& x, const Matrix& y);

OpitzMatrix opitz_matrix(const NodeSequence& t);

/// p(A) by Horner's scheme on matrices. Entry (i,j), 0-based, is the dd of p
/// over t_j..t_i for j <= i; zero above the diagonal.
Matrix matrix_polynomial(const PowerPoly& p, const OpitzMatrix& A);

/// dd of the pointwise product pq over t, from the two factors' tables:
/// sum_j (dd of p over t_j..t_n) * (dd of q over t_1..t_j). Both datasets must
/// carry the same node sequence.
double leibniz_dd(const NodeSequence& t, const HermiteDataset& p_data, const HermiteDataset& q_data);

/// dd of z^k over t: the complete homogeneous symmetric polynomial
/// h_{k-n+1}(t_1,...,t_n) for k >= n-1, zero below. Uses the recurrence
/// h_m(t_1..t_i) = h_m(t_1..t_{i-1}) + t_i h_{m-1}(t_1..t_i).
double monomial_dd(const NodeSequence& t, int k);

}  // namespace divdiff

#endif
