#include "divdiff/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "divdiff/ddtable.hpp"
#include "divdiff/functions.hpp"
#include "divdiff/newton.hpp"
#include "divdiff/opitz.hpp"

namespace divdiff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double legendre_value(int n, double x) {
    if (n == 0) return 1.0;
    double pm = 1.0, p = x;
    for (int i = 2; i <= n; ++i) {
        double next = ((2 * i - 1) * x * p - (i - 1) * pm) / i;
        pm = p;
        p = next;
    }
    return p;
}

double legendre_derivative(int n, double x) {
    if (n == 0) return 0.0;
    // (1-x^2) P_n' = n (P_{n-1} - x P_n); endpoints never arise here.
    return n * (legendre_value(n - 1, x) - x * legendre_value(n, x)) / (1.0 - x * x);
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double truncated_power(double y, int d) {
    if (y <= 0.0) return 0.0;  // right-limit 0 at the kink
    double p = 1.0;
    for (int i = 0; i < d; ++i) p *= y;
    return p;
}

// Hermite data of u -> (u - x)^{k-1}_+ over the knots.
HermiteDataset truncated_power_data(double x, const NodeSequence& knots) {
    const int k = static_cast<int>(knots.size()) - 1;
    std::vector<double> y(knots.size());
    for (std::size_t j = 0; j < knots.size(); ++j) {
        const int m = knots.mult_index()[j];
        double coeff = 1.0;
        for (int i = 1; i <= m; ++i) coeff *= k - i;
        y[j] = coeff * truncated_power(knots[j] - x, k - 1 - m);
    }
    return HermiteDataset(knots, std::move(y));
}

std::vector<double> distinct_knot_values(const NodeSequence& knots) {
    std::vector<double> breaks;
    for (double v : knots.values()) {
        if (breaks.empty() || v != breaks.back()) breaks.push_back(v);
    }
    return breaks;
}

double lu_determinant(Matrix m) {
    const std::size_t n = m.n;
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(m(row, col)) > std::abs(m(pivot, col))) pivot = row;
        }
        if (m(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.a[pivot * n + j], m.a[col * n + j]);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = m(row, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
        }
    }
    return det;
}

void require_derivatives(const SmoothFunction& f, int order) {
    if (f.max_order < order) {
        throw std::invalid_argument("function does not supply enough derivatives");
    }
}

}  // namespace

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw std::invalid_argument("Gauss order must be positive");
    nodes.assign(static_cast<std::size_t>(order), 0.0);
    weights.assign(static_cast<std::size_t>(order), 0.0);
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = -std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const double delta = -legendre_value(n, x) / legendre_derivative(n, x);
            x += delta;
            if (std::abs(delta) < 1e-15) break;
        }
        const double d = legendre_derivative(n, x);
        nodes[static_cast<std::size_t>(i)] = x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = -x;
        weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * d * d);
        weights[static_cast<std::size_t>(n - 1 - i)] = weights[static_cast<std::size_t>(i)];
    }
    if (n % 2 == 1) {
        const double d = legendre_derivative(n, 0.0);
        nodes[static_cast<std::size_t>(n / 2)] = 0.0;
        weights[static_cast<std::size_t>(n / 2)] = 2.0 / (d * d);
    }
}

double genocchi_dd(const SmoothFunction& f, const NodeSequence& t, const QuadratureConfig& cfg) {
    const int n = static_cast<int>(t.size()) - 1;
    if (n == 0) return f.eval(0, t[0]);
    require_derivatives(f, n);

    std::vector<double> gx, gw;
    gauss_legendre(cfg.gauss_order, gx, gw);

    // Integrate level d over [0, upper]; arg carries t_0 + sum s_i (t_i - t_{i-1}).
    std::function<double(int, double, double)> layer = [&](int d, double upper, double arg) {
        double sum = 0.0;
        for (std::size_t g = 0; g < gx.size(); ++g) {
            const double s = 0.5 * upper * (gx[g] + 1.0);
            const double shifted =
                arg + s * (t[static_cast<std::size_t>(d)] - t[static_cast<std::size_t>(d - 1)]);
            sum += gw[g] * (d == n ? f.eval(n, shifted) : layer(d + 1, s, shifted));
        }
        return 0.5 * upper * sum;
    };
    return layer(1, 1.0, t[0]);
}

ContourResult contour_dd(const SmoothFunction& f, const NodeSequence& t, const QuadratureConfig& cfg) {
    if (!f.eval_complex) throw std::invalid_argument("contour_dd needs a complex evaluator");
    if (cfg.contour_points < 1) throw std::invalid_argument("contour needs at least one sample");

    const std::complex<double> center =
        cfg.contour_center.value_or(std::complex<double>(0.5 * (t.min() + t.max()), 0.0));
    const double radius = cfg.contour_radius.value_or(0.75 * (t.max() - t.min()) + 1.0);
    if (!(radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
    for (double node : t.values()) {
        if (std::abs(std::complex<double>(node, 0.0) - center) >= radius) {
            throw std::domain_error("node on or outside the contour");
        }
    }

    const int npts = cfg.contour_points;
    std::complex<double> sum = 0.0;
    for (int k = 0; k < npts; ++k) {
        const double theta = 2.0 * kPi * k / npts;
        const std::complex<double> offset = std::polar(radius, theta);
        const std::complex<double> zeta = center + offset;
        sum += f.eval_complex(zeta) * offset / newton_weight(t.values(), t.size(), zeta);
    }
    sum /= static_cast<double>(npts);
    return ContourResult{sum.real(), sum.imag()};
}

double bspline_eval(double x, const NodeSequence& knots) {
    const int k = static_cast<int>(knots.size()) - 1;
    if (k < 1 || knots[0] == knots[knots.size() - 1]) {
        throw std::invalid_argument("B-spline needs a nondegenerate knot span");
    }
    if (x < knots[0] || x > knots[knots.size() - 1]) return 0.0;
    for (std::size_t j = 0; j < knots.size(); ++j) {
        if (knots[j] == x && knots.mult_index()[j] + 1 >= k) {
            throw std::domain_error("B-spline value undefined at a knot of full multiplicity");
        }
    }
    return k * divided_difference(truncated_power_data(x, knots));
}

double bspline_integral(const NodeSequence& knots, const QuadratureConfig& cfg) {
    const std::vector<double> breaks = distinct_knot_values(knots);
    if (breaks.size() < 2) throw std::invalid_argument("B-spline needs a nondegenerate knot span");

    std::vector<double> gx, gw;
    gauss_legendre(cfg.gauss_order, gx, gw);
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double a = breaks[s], b = breaks[s + 1];
        double sum = 0.0;
        for (std::size_t g = 0; g < gx.size(); ++g) {
            sum += gw[g] * bspline_eval(0.5 * (b - a) * gx[g] + 0.5 * (a + b), knots);
        }
        total += 0.5 * (b - a) * sum;
    }
    return total;
}

double peano_dd(const SmoothFunction& f, const NodeSequence& knots, const QuadratureConfig& cfg) {
    const int k = static_cast<int>(knots.size()) - 1;
    if (k < 1 || knots[0] == knots[knots.size() - 1]) {
        throw std::invalid_argument("Peano representation needs a nondegenerate knot span");
    }
    require_derivatives(f, k);

    const double kfact = factorial(k);
    const std::vector<double> breaks = distinct_knot_values(knots);
    std::vector<double> gx, gw;
    gauss_legendre(cfg.gauss_order, gx, gw);

    double total = 0.0;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double a = breaks[s], b = breaks[s + 1];
        double sum = 0.0;
        for (std::size_t g = 0; g < gx.size(); ++g) {
            const double y = 0.5 * (b - a) * gx[g] + 0.5 * (a + b);
            sum += gw[g] * bspline_eval(y, knots) * f.eval(k, y);
        }
        total += 0.5 * (b - a) * sum;
    }
    return total / kfact;
}

MeanValueBracket mean_value_check(const SmoothFunction& f, const NodeSequence& t) {
    const int k = static_cast<int>(t.size()) - 1;
    require_derivatives(f, std::max(k, t.max_mult_index()));

    const double mid = factorial(k) * divided_difference(sample_function(f, t));
    const double a = t.min(), b = t.max();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const int grid = 1001;
    for (int i = 0; i < grid; ++i) {
        const double x = (a == b) ? a : a + (b - a) * i / (grid - 1);
        const double v = f.eval(k, x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return MeanValueBracket{lo, mid, hi};
}

FloaterExpansion floater_expansion(const NodeSequence& s, const NodeSequence& t,
                                   const SmoothFunction& f) {
    const std::size_t m = s.size();
    const std::size_t n = t.size();
    if (m > n) throw std::invalid_argument("expansion sequence may not be shorter than the target");
    const std::size_t p = n - m;

    const DDTable t_table(sample_function(f, t));

    double truncation = 0.0;
    for (std::size_t j = m; j <= n; ++j) {
        const double weight_dd =
            divided_difference(make_smooth(newton_basis_poly(t.values(), j - 1)), s.values());
        truncation += weight_dd * t_table.at(0, j - 1);
    }

    const NewtonPoly w_full = newton_basis_poly(t.values(), n);
    double e_leibniz = 0.0;
    double e_floater = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<double> s_tail(s.values().begin() + (i - 1), s.values().end());
        std::vector<double> s_head(s.values().begin(), s.values().begin() + i);

        std::vector<double> mixed_leibniz(t.values());
        mixed_leibniz.insert(mixed_leibniz.end(), s_head.begin(), s_head.end());
        e_leibniz += divided_difference(make_smooth(w_full), s_tail) *
                     divided_difference(f, mixed_leibniz);

        std::vector<double> mixed_floater(t.values().begin(), t.values().begin() + (i + p));
        mixed_floater.insert(mixed_floater.end(), s_tail.begin(), s_tail.end());
        e_floater += (s[i - 1] - t[i + p - 1]) *
                     divided_difference(make_smooth(newton_basis_poly(t.values(), i + p - 1)), s_head) *
                     divided_difference(f, mixed_floater);
    }
    return FloaterExpansion{truncation, e_leibniz, e_floater};
}

double hopf_anchor(const NodeSequence& s, const NodeSequence& t, const SmoothFunction& f) {
    const std::size_t m = s.size();
    if (t.size() != m) throw std::invalid_argument("sequences must have equal length");
    double sum = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<double> mixed(s.values().begin(), s.values().begin() + i);
        mixed.insert(mixed.end(), t.values().begin() + (i - 1), t.values().end());
        sum += (s[i - 1] - t[i - 1]) * divided_difference(f, mixed);
    }
    return sum;
}

double determinant_dd(const NodeSequence& t, const std::vector<double>& values) {
    if (!t.all_distinct()) throw std::domain_error("determinant ratio needs pairwise distinct nodes");
    const std::size_t n = t.size();
    if (values.size() != n) throw std::invalid_argument("value count differs from node count");

    Matrix numer(n), denom(n);
    for (std::size_t i = 0; i < n; ++i) {
        double power = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            denom(i, j) = power;
            numer(i, j) = (j + 1 == n) ? values[i] : power;
            power *= t[i];
        }
    }
    return lu_determinant(std::move(numer)) / lu_determinant(std::move(denom));
}

std::vector<double> derivative_interpolation_sites(const SmoothFunction& f, const NodeSequence& t,
                                                   int grid_points) {
    require_derivatives(f, std::max(1, t.max_mult_index()));
    const NewtonPoly r = hermite_interpolant(sample_function(f, t));
    auto g = [&](double x) { return f.eval(1, x) - derivative_at(r, x, 1); };

    const double a = t.min(), b = t.max();
    std::vector<double> sites;
    if (a == b) return sites;
    double prev_x = a;
    double prev_g = g(a);
    for (int i = 1; i < grid_points; ++i) {
        const double x = a + (b - a) * i / (grid_points - 1);
        const double gx = g(x);
        if (prev_g == 0.0) {
            sites.push_back(prev_x);
        } else if ((prev_g < 0.0) != (gx < 0.0) && gx != 0.0) {
            double lo = prev_x, hi = x, glo = prev_g;
            for (int iter = 0; iter < 80; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((glo < 0.0) != (gm < 0.0)) {
                    hi = mid;
                } else {
                    lo = mid;
                    glo = gm;
                }
            }
            sites.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_g = gx;
    }
    if (g(b) == 0.0) sites.push_back(b);
    return sites;
}

}  // namespace divdiff
