#include "divdiff/functions.hpp"

#include <cmath>
#include <stdexcept>

#include "divdiff/ddtable.hpp"
#include "divdiff/newton.hpp"

namespace divdiff {

namespace {

double rising_product(int from, int count) {
    double prod = 1.0;
    for (int i = 0; i < count; ++i) prod *= from + i;
    return prod;
}

}  // namespace

SmoothFunction make_exp() {
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    f.eval = [](int, double z) { return std::exp(z); };
    f.eval_complex = [](std::complex<double> z) { return std::exp(z); };
    return f;
}

SmoothFunction make_sin() {
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    // D^m sin = sin(z + m pi/2)
    f.eval = [](int m, double z) { return std::sin(z + m * 1.5707963267948966); };
    f.eval_complex = [](std::complex<double> z) { return std::sin(z); };
    return f;
}

SmoothFunction make_reciprocal() {
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    f.eval = [](int m, double z) {
        if (z == 0.0) throw std::domain_error("reciprocal undefined at zero");
        double factorial = 1.0;
        for (int i = 2; i <= m; ++i) factorial *= i;
        return (m % 2 == 0 ? factorial : -factorial) * std::pow(z, -(m + 1.0));
    };
    f.eval_complex = [](std::complex<double> z) { return 1.0 / z; };
    return f;
}

SmoothFunction make_power(int k) {
    if (k < 0) throw std::invalid_argument("make_power expects a nonnegative exponent");
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    f.eval = [k](int m, double z) {
        if (m > k) return 0.0;
        // k(k-1)...(k-m+1) z^{k-m}
        double prod = 1.0;
        for (int i = 0; i < m; ++i) prod *= k - i;
        double p = 1.0;
        for (int i = 0; i < k - m; ++i) p *= z;
        return prod * p;
    };
    f.eval_complex = [k](std::complex<double> z) {
        std::complex<double> p = 1.0;
        for (int i = 0; i < k; ++i) p *= z;
        return p;
    };
    return f;
}

SmoothFunction make_cauchy_kernel(double pole) {
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    // D^m_u 1/(pole - u) = m! / (pole - u)^{m+1}
    f.eval = [pole](int m, double u) {
        if (u == pole) throw std::domain_error("Cauchy kernel evaluated at its pole");
        return rising_product(1, m) * std::pow(pole - u, -(m + 1.0));
    };
    f.eval_complex = [pole](std::complex<double> u) { return 1.0 / (pole - u); };
    return f;
}

SmoothFunction make_smooth(const PowerPoly& p) {
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    f.eval = [p](int m, double z) { return evaluate(poly_derivative(p, m), z); };
    f.eval_complex = [p](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (std::size_t k = p.coeffs.size(); k-- > 0;) acc = acc * z + p.coeffs[k];
        return acc;
    };
    return f;
}

SmoothFunction make_smooth(const NewtonPoly& p) {
    SmoothFunction f;
    f.max_order = SmoothFunction::unlimited;
    f.eval = [p](int m, double z) { return derivative_at(p, z, m); };
    f.eval_complex = [p](std::complex<double> z) {
        const std::size_t n = p.coeffs.size();
        std::complex<double> acc = p.coeffs[n - 1];
        for (std::size_t j = n - 1; j-- > 0;) acc = acc * (z - p.centers[j]) + p.coeffs[j];
        return acc;
    };
    return f;
}

SmoothFunction derivative_of(const SmoothFunction& f, int times) {
    if (times < 0) throw std::invalid_argument("negative derivative order");
    SmoothFunction g;
    g.max_order = (f.max_order == SmoothFunction::unlimited) ? SmoothFunction::unlimited
                                                             : f.max_order - times;
    if (g.max_order < 0) throw std::invalid_argument("function does not supply enough derivatives");
    auto inner = f.eval;
    g.eval = [inner, times](int m, double z) { return inner(m + times, z); };
    return g;
}

SmoothFunction precompose_affine(const SmoothFunction& f, double a, double b) {
    SmoothFunction g;
    g.max_order = f.max_order;
    auto inner = f.eval;
    g.eval = [inner, a, b](int m, double z) { return std::pow(a, m) * inner(m, a * z + b); };
    if (f.eval_complex) {
        auto inner_c = f.eval_complex;
        g.eval_complex = [inner_c, a, b](std::complex<double> z) { return inner_c(a * z + b); };
    }
    return g;
}

SmoothFunction function_by_name(const std::string& name) {
    if (name == "exp") return make_exp();
    if (name == "sin") return make_sin();
    if (name == "recip") return make_reciprocal();
    if (name.rfind("power:", 0) == 0) {
        int k = std::stoi(name.substr(6));
        return make_power(k);
    }
    throw std::invalid_argument("unknown function name: " + name);
}

double divided_difference(const SmoothFunction& f, const std::vector<double>& raw_nodes) {
    NodeSequence t = cluster_nodes(raw_nodes, 0.0);
    return divided_difference(sample_function(f, t));
}

}  // namespace divdiff
