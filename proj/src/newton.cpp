#include "divdiff/newton.hpp"

#include <stdexcept>

#include "divdiff/ddtable.hpp"
#include "divdiff/functions.hpp"

namespace divdiff {

HornerResult horner_eval(const NewtonPoly& p, double z) {
    const std::size_t n = p.coeffs.size();
    std::vector<double> hatc(n);
    hatc[n - 1] = p.coeffs[n - 1];
    for (std::size_t j = n - 1; j-- > 0;) {
        hatc[j] = p.coeffs[j] + (z - p.centers[j]) * hatc[j + 1];
    }
    return HornerResult{hatc[0], std::move(hatc)};
}

double evaluate(const NewtonPoly& p, double z) { return horner_eval(p, z).value; }

NewtonPoly insert_center(const NewtonPoly& p, double z) {
    HornerResult h = horner_eval(p, z);
    std::vector<double> centers;
    centers.reserve(p.centers.size());
    if (!p.centers.empty()) {
        centers.push_back(z);
        centers.insert(centers.end(), p.centers.begin(), p.centers.end() - 1);
    }
    return NewtonPoly(std::move(centers), std::move(h.hatc));
}

NewtonPoly change_basis(const NewtonPoly& p, const std::vector<double>& new_centers) {
    if (new_centers.size() != p.centers.size()) {
        throw std::invalid_argument("change_basis needs as many centers as the polynomial has");
    }
    NewtonPoly out = p;
    for (std::size_t k = new_centers.size(); k-- > 0;) out = insert_center(out, new_centers[k]);
    return out;
}

PowerPoly to_taylor(const NewtonPoly& p, double tau) {
    std::vector<double> taus(p.centers.size(), tau);
    return PowerPoly(change_basis(p, taus).coeffs);
}

double derivative_at(const NewtonPoly& p, double tau, int k) {
    if (k < 0) throw std::invalid_argument("negative derivative order");
    if (static_cast<std::size_t>(k) >= p.coeffs.size()) return 0.0;
    PowerPoly taylor = to_taylor(p, tau);
    if (static_cast<std::size_t>(k) >= taylor.coeffs.size()) return 0.0;
    double factorial = 1.0;
    for (int m = 2; m <= k; ++m) factorial *= m;
    return factorial * taylor.coeffs[static_cast<std::size_t>(k)];
}

NewtonPoly remainder_poly(const NewtonPoly& p, const NodeSequence& t) {
    const std::size_t m = p.coeffs.size();
    const std::size_t n = t.size();
    if (n > m) throw std::invalid_argument("node count exceeds the polynomial's available degree");
    if (n == m) return NewtonPoly({}, {0.0});

    // Rebase so the center sequence starts with t; the tail centers are
    // reused from p and become the remainder's centers.
    std::vector<double> centers(t.values());
    centers.insert(centers.end(), p.centers.begin(), p.centers.begin() + (m - 1 - n));
    NewtonPoly rebased = change_basis(p, centers);

    std::vector<double> q_centers(rebased.centers.begin() + n, rebased.centers.end());
    std::vector<double> q_coeffs(rebased.coeffs.begin() + n, rebased.coeffs.end());
    return NewtonPoly(std::move(q_centers), std::move(q_coeffs));
}

NewtonPoly remainder_poly(const HermiteDataset& data, const NodeSequence& t) {
    return remainder_poly(hermite_interpolant(data), t);
}

double extended_dd_derivative(const NewtonPoly& p, const NodeSequence& t, int k, double z) {
    if (k < 0) throw std::invalid_argument("negative derivative order");
    std::vector<double> raw(t.values());
    raw.insert(raw.end(), static_cast<std::size_t>(k) + 1, z);
    double factorial = 1.0;
    for (int m = 2; m <= k; ++m) factorial *= m;
    return factorial * divided_difference(make_smooth(p), raw);
}

NewtonPoly newton_basis_poly(const std::vector<double>& t, std::size_t degree) {
    if (degree > t.size()) throw std::out_of_range("degree exceeds available centers");
    std::vector<double> centers(t.begin(), t.begin() + degree);
    std::vector<double> coeffs(degree + 1, 0.0);
    coeffs.back() = 1.0;
    return NewtonPoly(std::move(centers), std::move(coeffs));
}

NewtonPoly from_power(const PowerPoly& p) {
    if (p.is_zero()) return NewtonPoly({}, {0.0});
    std::vector<double> centers(p.coeffs.size() - 1, 0.0);
    return NewtonPoly(std::move(centers), p.coeffs);
}

}  // namespace divdiff
