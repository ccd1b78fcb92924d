#include "divdiff/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace divdiff {

namespace {

void require_finite(const std::vector<double>& xs, const char* what) {
    for (double x : xs) {
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " contains a non-finite value");
    }
}

std::vector<int> compute_mult_index(const std::vector<double>& nodes) {
    std::vector<int> mult(nodes.size(), 0);
    for (std::size_t j = 1; j < nodes.size(); ++j) {
        mult[j] = (nodes[j] == nodes[j - 1]) ? mult[j - 1] + 1 : 0;
    }
    return mult;
}

}  // namespace

NodeSequence::NodeSequence(std::vector<double> clustered_nodes) : nodes_(std::move(clustered_nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("empty node sequence");
    require_finite(nodes_, "node sequence");
    // Clustered means: equal values are adjacent. Any value recurring after an
    // intervening different value violates it.
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 2; j < nodes_.size(); ++j) {
            if (nodes_[i] == nodes_[j] && nodes_[i] != nodes_[j - 1]) {
                throw std::invalid_argument("nodes not clustered");
            }
        }
    }
    mult_ = compute_mult_index(nodes_);
}

int NodeSequence::max_mult_index() const {
    return *std::max_element(mult_.begin(), mult_.end());
}

double NodeSequence::min() const { return *std::min_element(nodes_.begin(), nodes_.end()); }
double NodeSequence::max() const { return *std::max_element(nodes_.begin(), nodes_.end()); }

HermiteDataset::HermiteDataset(NodeSequence nodes_in, std::vector<double> values_in)
    : nodes(std::move(nodes_in)), values(std::move(values_in)) {
    if (values.size() != nodes.size()) throw std::invalid_argument("dataset value count differs from node count");
    require_finite(values, "dataset values");
}

NewtonPoly::NewtonPoly(std::vector<double> centers_in, std::vector<double> coeffs_in)
    : centers(std::move(centers_in)), coeffs(std::move(coeffs_in)) {
    if (coeffs.size() != centers.size() + 1) {
        throw std::invalid_argument("Newton form needs exactly one more coefficient than centers");
    }
    require_finite(centers, "Newton centers");
    require_finite(coeffs, "Newton coefficients");
}

PowerPoly::PowerPoly(std::vector<double> coeffs_in) : coeffs(std::move(coeffs_in)) {
    require_finite(coeffs, "power coefficients");
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
}

double evaluate(const PowerPoly& p, double z) {
    double acc = 0.0;
    for (std::size_t k = p.coeffs.size(); k-- > 0;) acc = acc * z + p.coeffs[k];
    return acc;
}

PowerPoly multiply(const PowerPoly& a, const PowerPoly& b) {
    if (a.is_zero() || b.is_zero()) return PowerPoly{};
    std::vector<double> out(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return PowerPoly(std::move(out));
}

PowerPoly poly_derivative(const PowerPoly& p, int times) {
    if (times < 0) throw std::invalid_argument("negative derivative order");
    std::vector<double> c = p.coeffs;
    for (int rep = 0; rep < times; ++rep) {
        if (c.empty()) break;
        std::vector<double> d(c.size() > 1 ? c.size() - 1 : 0);
        for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
        c = std::move(d);
    }
    return PowerPoly(std::move(c));
}

double newton_weight(const std::vector<double>& t, std::size_t i, double z) {
    if (i > t.size()) throw std::out_of_range("newton_weight: factor count exceeds node count");
    double prod = 1.0;
    for (std::size_t k = 0; k < i; ++k) prod *= z - t[k];
    return prod;
}

double newton_weight(const NodeSequence& t, std::size_t i, double z) {
    return newton_weight(t.values(), i, z);
}

std::complex<double> newton_weight(const std::vector<double>& t, std::size_t i, std::complex<double> z) {
    if (i > t.size()) throw std::out_of_range("newton_weight: factor count exceeds node count");
    std::complex<double> prod = 1.0;
    for (std::size_t k = 0; k < i; ++k) prod *= z - t[k];
    return prod;
}

Clustering cluster_nodes_indexed(const std::vector<double>& raw, double tol) {
    if (raw.empty()) throw std::invalid_argument("empty node sequence");
    if (!(tol >= 0.0)) throw std::invalid_argument("cluster tolerance must be >= 0");
    require_finite(raw, "node sequence");

    std::vector<std::size_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&raw](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });

    std::vector<double> sorted(raw.size());
    for (std::size_t k = 0; k < perm.size(); ++k) sorted[k] = raw[perm[k]];

    // Chain rule: consecutive sorted nodes within tol belong to one chain and
    // all take the chain's first (smallest) value.
    std::vector<double> snapped(sorted.size());
    snapped[0] = sorted[0];
    double chain_value = sorted[0];
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        if (sorted[k] - sorted[k - 1] <= tol) {
            snapped[k] = chain_value;
        } else {
            chain_value = sorted[k];
            snapped[k] = chain_value;
        }
    }
    return Clustering{NodeSequence(std::move(snapped)), std::move(perm)};
}

NodeSequence cluster_nodes(const std::vector<double>& raw, double tol) {
    return cluster_nodes_indexed(raw, tol).nodes;
}

HermiteDataset make_dataset(const std::vector<std::pair<double, double>>& points, double tol) {
    std::vector<double> t(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) t[k] = points[k].first;
    Clustering c = cluster_nodes_indexed(t, tol);
    std::vector<double> y(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) y[k] = points[c.permutation[k]].second;
    return HermiteDataset(std::move(c.nodes), std::move(y));
}

HermiteDataset sample_function(const SmoothFunction& f, const NodeSequence& t) {
    if (f.max_order < t.max_mult_index()) {
        throw std::invalid_argument("function does not supply enough derivatives for the node multiplicities");
    }
    std::vector<double> y(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) y[j] = f.eval(t.mult_index()[j], t[j]);
    return HermiteDataset(t, std::move(y));
}

}  // namespace divdiff
