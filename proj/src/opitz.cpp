#include "divdiff/opitz.hpp"

#include <stdexcept>

#include "divdiff/ddtable.hpp"

namespace divdiff {

Matrix matmul(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    Matrix out(x.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t k = 0; k < x.n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < x.n; ++j) out(i, j) += xik * y(k, j);
        }
    }
    return out;
}

OpitzMatrix opitz_matrix(const NodeSequence& t) { return OpitzMatrix{t.values()}; }

namespace {

Matrix dense(const OpitzMatrix& A) {
    Matrix out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        out(i, i) = A.diag[i];
        if (i + 1 < A.size()) out(i + 1, i) = 1.0;
    }
    return out;
}

}  // namespace

Matrix matrix_polynomial(const PowerPoly& p, const OpitzMatrix& A) {
    const std::size_t n = A.size();
    Matrix acc(n);
    if (p.is_zero()) return acc;

    Matrix a_dense = dense(A);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = p.coeffs.back();
    for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) {
        acc = matmul(a_dense, acc);
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coeffs[k];
    }
    return acc;
}

double leibniz_dd(const NodeSequence& t, const HermiteDataset& p_data, const HermiteDataset& q_data) {
    if (p_data.nodes.values() != t.values() || q_data.nodes.values() != t.values()) {
        throw std::invalid_argument("leibniz_dd: datasets must share the given node sequence");
    }
    const std::size_t n = t.size();
    DDTable tp(p_data);
    DDTable tq(q_data);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += tp.at(j, n - 1) * tq.at(0, j);
    return sum;
}

double monomial_dd(const NodeSequence& t, int k) {
    if (k < 0) throw std::invalid_argument("monomial_dd expects a nonnegative exponent");
    const int n = static_cast<int>(t.size());
    const int m = k - n + 1;
    if (m < 0) return 0.0;

    // h[d] holds h_d(t_1..t_i) as i grows; h_0 = 1 throughout.
    std::vector<double> h(static_cast<std::size_t>(m) + 1, 0.0);
    h[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= m; ++d) h[d] += t[static_cast<std::size_t>(i)] * h[d - 1];
    }
    return h[m];
}

}  // namespace divdiff
