#include "divdiff/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace divdiff {

int DDFunctional::max_order() const {
    int m = 0;
    for (const Term& term : terms) m = std::max(m, term.order);
    return m;
}

namespace {

// D^m of prod_{i in [0,count)} (x - t[i]) at xi, for m = 0..max_order, built by
// multiplying in one linear factor at a time: (fg)^{(m)} = g*f^{(m)} + m*f^{(m-1)}
// when g is linear with unit slope.
std::vector<double> weight_derivatives(const std::vector<double>& t, std::size_t count, double xi,
                                       int max_order) {
    std::vector<double> d(static_cast<std::size_t>(max_order) + 1, 0.0);
    d[0] = 1.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double g = xi - t[i];
        for (std::size_t m = d.size(); m-- > 0;) {
            d[m] = g * d[m] + (m > 0 ? static_cast<double>(m) * d[m - 1] : 0.0);
        }
    }
    return d;
}

void expand_refinement(const std::vector<double>& t, std::vector<std::size_t> s, double weight,
                       std::vector<double>& acc, std::size_t acc_base) {
    const std::size_t lo = s.front();
    const std::size_t hi = s.back();
    const std::size_t k = s.size();
    if (hi - lo + 1 == k) {
        acc[lo - acc_base] += weight;
        return;
    }
    std::size_t m = lo + 1;
    for (std::size_t pos = 1; pos < s.size(); ++pos, ++m) {
        if (s[pos] != m) break;  // first gap
    }
    const double a = t[lo];
    const double b = t[hi];
    const double mid = t[m];
    if (b == a) throw std::domain_error("refinement needs the span's end nodes to differ");

    std::vector<std::size_t> drop_lo(s.begin() + 1, s.end());
    drop_lo.insert(std::lower_bound(drop_lo.begin(), drop_lo.end(), m), m);
    expand_refinement(t, std::move(drop_lo), weight * (b - mid) / (b - a), acc, acc_base);

    std::vector<std::size_t> drop_hi(s.begin(), s.end() - 1);
    drop_hi.insert(std::lower_bound(drop_hi.begin(), drop_hi.end(), m), m);
    expand_refinement(t, std::move(drop_hi), weight * (mid - a) / (b - a), acc, acc_base);
}

}  // namespace

std::vector<RefineTerm> refine_coeffs(const NodeSequence& t, const std::vector<std::size_t>& sigma) {
    if (sigma.empty()) throw std::invalid_argument("empty index sequence");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] >= t.size()) throw std::out_of_range("index sequence out of range");
        if (i > 0 && sigma[i] <= sigma[i - 1]) {
            throw std::invalid_argument("index sequence must be strictly increasing");
        }
    }
    const std::size_t k = sigma.size();
    const std::size_t first_start = sigma.front();
    const std::size_t last_start = sigma.back() - k + 1;

    std::vector<double> acc(last_start - first_start + 1, 0.0);
    expand_refinement(t.values(), sigma, 1.0, acc, first_start);

    std::vector<RefineTerm> out;
    out.reserve(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out.push_back(RefineTerm{first_start + i, acc[i]});
    return out;
}

double cauchy_kernel_dd(const NodeSequence& t, double z) {
    for (double node : t.values()) {
        if (z == node) throw std::domain_error("Cauchy kernel dd has a pole at every node");
    }
    return 1.0 / newton_weight(t, t.size(), z);
}

double reciprocal_dd(const NodeSequence& t) {
    double prod = 1.0;
    for (double node : t.values()) {
        if (node == 0.0) throw std::domain_error("reciprocal dd undefined with a node at zero");
        prod *= node;
    }
    return (t.size() % 2 == 1 ? 1.0 : -1.0) / prod;
}

DDFunctional chakalov_weights(const NodeSequence& t) {
    const std::size_t n = t.size();
    const std::vector<double>& nodes = t.values();
    const std::vector<int>& mu = t.mult_index();

    // b[r][l] = D^{mu_l} w_r (t_l); zero for l < r, so the exactness system
    // solves bottom-up by back substitution.
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t r = 0; r <= l; ++r) {
            b[r][l] = weight_derivatives(nodes, r, nodes[l], mu[l])[static_cast<std::size_t>(mu[l])];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double rhs = (r == n - 1) ? 1.0 : 0.0;
        for (std::size_t l = r + 1; l < n; ++l) rhs -= b[r][l] * x[l];
        x[r] = rhs / b[r][r];
    }

    DDFunctional F;
    F.terms.reserve(n);
    for (std::size_t j = 0; j < n; ++j) F.terms.push_back(DDFunctional::Term{nodes[j], mu[j], x[j]});
    return F;
}

double apply_functional(const DDFunctional& F, const SmoothFunction& f) {
    if (f.max_order < F.max_order()) {
        throw std::invalid_argument("function does not supply enough derivatives for the functional");
    }
    double sum = 0.0;
    for (const DDFunctional::Term& term : F.terms) sum += term.weight * f.eval(term.order, term.site);
    return sum;
}

std::vector<double> lagrange_weights(const NodeSequence& t) {
    if (!t.all_distinct()) throw std::domain_error("Lagrange weights need pairwise distinct nodes");
    const std::size_t n = t.size();
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) prod *= t[j] - t[i];
        }
        w[j] = 1.0 / prod;
    }
    return w;
}

double functional_norm(const NodeSequence& t) {
    const std::vector<double>& nodes = t.values();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (nodes[j] < -1.0 || nodes[j] > 1.0) throw std::domain_error("nodes must lie in [-1, 1]");
        if (j > 0 && !(nodes[j] > nodes[j - 1])) {
            throw std::domain_error("nodes must be strictly increasing");
        }
    }
    double sum = 0.0;
    for (double w : lagrange_weights(t)) sum += std::abs(w);
    return sum;
}

std::vector<double> chebyshev_extreme_sites(std::size_t n) {
    if (n < 2) throw std::invalid_argument("need at least two sites");
    const double pi = 3.141592653589793238462643383279502884;
    std::vector<double> sites(n);
    for (std::size_t j = 0; j < n; ++j) {
        sites[j] = std::cos(pi * static_cast<double>(n - 1 - j) / static_cast<double>(n - 1));
    }
    return sites;
}

}  // namespace divdiff
