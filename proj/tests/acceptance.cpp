// Acceptance suite: end-to-end checks of every representation and identity the
// library promises, each at a fixed tolerance. Prints one line per criterion
// and exits nonzero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "divdiff/analysis.hpp"
#include "divdiff/core.hpp"
#include "divdiff/ddtable.hpp"
#include "divdiff/functions.hpp"
#include "divdiff/identities.hpp"
#include "divdiff/io.hpp"
#include "divdiff/newton.hpp"
#include "divdiff/opitz.hpp"
#include "divdiff/verify.hpp"

using namespace divdiff;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double rel_dev(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}
std::string dev_note(double worst) { return "max dev " + format_scalar(worst); }

std::vector<double> sorted_uniform(Rng& rng, int n, double lo, double hi, double gap) {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (double& x : t) x = rng.uniform(lo, hi);
        std::sort(t.begin(), t.end());
        bool ok = true;
        for (std::size_t i = 1; i < t.size(); ++i) ok = ok && t[i] - t[i - 1] >= gap;
        if (ok) return t;
    }
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / std::max(1, n - 1);
    return t;
}

NodeSequence random_clustered(Rng& rng, int n, int max_mult, double lo, double hi) {
    std::vector<double> sites = sorted_uniform(rng, n, lo, hi, 0.3);
    std::vector<double> nodes;
    std::size_t site = 0;
    while (static_cast<int>(nodes.size()) < n) {
        const int mult = std::min(n - static_cast<int>(nodes.size()), rng.uniform_int(1, max_mult));
        for (int i = 0; i < mult; ++i) nodes.push_back(sites[site]);
        ++site;
    }
    return NodeSequence(nodes);
}

PowerPoly random_poly(Rng& rng, int max_degree) {
    std::vector<double> c(static_cast<std::size_t>(rng.uniform_int(0, max_degree)) + 1);
    for (double& x : c) x = rng.uniform(-1.0, 1.0);
    c.back() = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 1.5);
    return PowerPoly(c);
}

// 1. Reciprocal closed form over (1,2,4): table, Chakalov, closed form, all 0.125.
Outcome criterion_reciprocal() {
    NodeSequence t({1.0, 2.0, 4.0});
    const double expected = 0.125;
    const double via_table = divided_difference(sample_function(make_reciprocal(), t));
    const double via_chakalov = apply_functional(chakalov_weights(t), make_reciprocal());
    const double via_formula = reciprocal_dd(t);
    double worst = 0.0;
    for (double v : {via_table, via_chakalov, via_formula}) {
        worst = std::max(worst, std::abs(v - expected) / expected);
    }
    return Outcome{worst <= 1e-14, dev_note(worst)};
}

// 2. Norm equality at Chebyshev extreme sites, and the lower bound elsewhere.
Outcome criterion_erdos_turan() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const double norm = functional_norm(NodeSequence(chebyshev_extreme_sites(n)));
        const double target = std::pow(2.0, static_cast<double>(n) - 2.0);
        worst = std::max(worst, std::abs(norm - target) / target);
    }
    if (worst > 1e-10) return Outcome{false, "equality case " + dev_note(worst)};

    Rng rng(2024);
    int satisfied = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(2, 8);
        NodeSequence t(sorted_uniform(rng, n, -1.0, 1.0, 1e-4));
        if (functional_norm(t) >= std::pow(2.0, n - 2.0) * (1.0 - 1e-12)) ++satisfied;
    }
    return Outcome{satisfied == 100,
                   "equality " + dev_note(worst) + ", bound held in " + std::to_string(satisfied) + "/100"};
}

// 3. Opitz matrix polynomial equals the table elementwise.
Outcome criterion_opitz() {
    Rng rng(3);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        NodeSequence t = random_clustered(rng, rng.uniform_int(1, 8), 3, -2.0, 2.0);
        PowerPoly p = random_poly(rng, 10);
        Matrix mat = matrix_polynomial(p, opitz_matrix(t));
        DDTable table(sample_function(make_smooth(p), t));
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                worst = std::max(worst, rel_dev(mat(i, j), table.at(j, i)));
            }
        }
    }
    return Outcome{worst <= 1e-10, dev_note(worst)};
}

// 4. Leibniz rule equals the dd of the pointwise product.
Outcome criterion_leibniz() {
    Rng rng(4);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        NodeSequence t = random_clustered(rng, rng.uniform_int(1, 6), 3, -2.0, 2.0);
        PowerPoly p = random_poly(rng, 5);
        PowerPoly q = random_poly(rng, 5);
        const double via_rule = leibniz_dd(t, sample_function(make_smooth(p), t),
                                           sample_function(make_smooth(q), t));
        const double direct =
            divided_difference(sample_function(make_smooth(multiply(p, q)), t));
        worst = std::max(worst, rel_dev(via_rule, direct));
    }
    return Outcome{worst <= 1e-10, dev_note(worst)};
}

// 5. Table, Chakalov, Genocchi, contour, determinant agree on exp.
Outcome criterion_five_way() {
    double worst = 0.0;
    QuadratureConfig cfg;  // order 16, 256 contour points
    for (const NodeSequence& t : {NodeSequence({0.0, 0.5, 1.0}), NodeSequence({0.0, 0.0, 1.0})}) {
        std::vector<double> results;
        results.push_back(divided_difference(sample_function(make_exp(), t)));
        results.push_back(apply_functional(chakalov_weights(t), make_exp()));
        results.push_back(genocchi_dd(make_exp(), t, cfg));
        results.push_back(contour_dd(make_exp(), t, cfg).value);
        if (t.all_distinct()) {
            results.push_back(determinant_dd(t, sample_function(make_exp(), t).values));
        }
        for (std::size_t a = 0; a < results.size(); ++a) {
            for (std::size_t b = a + 1; b < results.size(); ++b) {
                worst = std::max(worst, std::abs(results[a] - results[b]));
            }
        }
    }
    return Outcome{worst <= 1e-8, dev_note(worst)};
}

// 6. Peano kernel: dd of x^4 over (0,1,3) through the B-spline integral;
//    unit integral; positivity on a grid.
Outcome criterion_peano() {
    NodeSequence knots({0.0, 1.0, 3.0});
    const double direct = divided_difference(sample_function(make_power(4), knots));
    const double via_kernel = peano_dd(make_power(4), knots);
    if (std::abs(via_kernel - direct) > 1e-9) {
        return Outcome{false, "kernel integral off by " + format_scalar(via_kernel - direct)};
    }
    const double integral = bspline_integral(knots);
    if (std::abs(integral - 1.0) > 1e-10) {
        return Outcome{false, "integral " + format_scalar(integral)};
    }
    double lowest = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        lowest = std::min(lowest, bspline_eval(3.0 * i / 1000.0, knots));
    }
    return Outcome{lowest >= 0.0, "kernel dev " + format_scalar(via_kernel - direct) +
                                      ", integral dev " + format_scalar(integral - 1.0) +
                                      ", min " + format_scalar(lowest)};
}

// 7. Hermite conditions at clustered datasets.
Outcome criterion_hermite() {
    Rng rng(7);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        NodeSequence t = random_clustered(rng, rng.uniform_int(1, 7), 3, -2.0, 2.0);
        std::vector<double> y(t.size());
        for (double& v : y) v = rng.uniform(-1.0, 1.0);
        NewtonPoly r = hermite_interpolant(HermiteDataset(t, y));
        for (std::size_t j = 0; j < t.size(); ++j) {
            worst = std::max(worst, rel_dev(derivative_at(r, t[j], t.mult_index()[j]), y[j]));
        }
    }
    return Outcome{worst <= 1e-10, dev_note(worst)};
}

// 8. Floater expansion and Hopf anchor contracts on exp.
Outcome criterion_floater_hopf() {
    Rng rng(8);
    double worst_expansion = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int m = rng.uniform_int(1, 3);
        const int n = rng.uniform_int(m, 5);
        NodeSequence s(sorted_uniform(rng, m, 0.0, 1.0, 0.05));
        NodeSequence t(sorted_uniform(rng, n, 0.0, 1.0, 0.05));
        FloaterExpansion fx = floater_expansion(s, t, make_exp());
        const double target = divided_difference(make_exp(), s.values());
        worst_expansion = std::max(worst_expansion, rel_dev(fx.truncation + fx.e_leibniz, target));
        worst_expansion = std::max(worst_expansion, rel_dev(fx.truncation + fx.e_floater, target));
    }
    if (worst_expansion > 1e-9) return Outcome{false, "expansion " + dev_note(worst_expansion)};

    double worst_hopf = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int m = rng.uniform_int(1, 4);
        NodeSequence s(sorted_uniform(rng, m, 0.0, 1.0, 0.05));
        NodeSequence t(sorted_uniform(rng, m, 0.0, 1.0, 0.05));
        const double lhs =
            divided_difference(make_exp(), s.values()) - divided_difference(make_exp(), t.values());
        worst_hopf = std::max(worst_hopf, std::abs(hopf_anchor(s, t, make_exp()) - lhs));
    }
    return Outcome{worst_hopf <= 1e-11,
                   "expansion " + dev_note(worst_expansion) + ", anchor " + dev_note(worst_hopf)};
}

// 9. Refinement weights: positive, sum to one, reconstruct the dd.
Outcome criterion_refinement() {
    Rng rng(9);
    bool positive = true;
    double worst_sum = 0.0, worst_recon = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(3, 8);
        NodeSequence t(sorted_uniform(rng, n, -2.0, 2.0, 0.2));
        const int k = rng.uniform_int(2, n);
        std::vector<std::size_t> sigma;
        for (int i = 0; i < n && static_cast<int>(sigma.size()) < k; ++i) {
            if (n - i == k - static_cast<int>(sigma.size()) || rng.uniform_int(0, 1) == 1) {
                sigma.push_back(static_cast<std::size_t>(i));
            }
        }
        std::vector<RefineTerm> alpha = refine_coeffs(t, sigma);
        double total = 0.0;
        for (const RefineTerm& term : alpha) {
            positive = positive && term.weight > 0.0;
            total += term.weight;
        }
        worst_sum = std::max(worst_sum, std::abs(total - 1.0));

        PowerPoly p = random_poly(rng, k + 2);
        std::vector<double> sub;
        for (std::size_t idx : sigma) sub.push_back(t[idx]);
        double rhs = 0.0;
        for (const RefineTerm& term : alpha) {
            std::vector<double> window(t.values().begin() + term.start,
                                       t.values().begin() + term.start + k);
            rhs += term.weight * divided_difference(make_smooth(p), window);
        }
        worst_recon = std::max(worst_recon, rel_dev(divided_difference(make_smooth(p), sub), rhs));
    }
    return Outcome{positive && worst_sum <= 1e-12 && worst_recon <= 1e-10,
                   "sum dev " + format_scalar(worst_sum) + ", reconstruction " + dev_note(worst_recon)};
}

// 10. Monomial closed form against the table, fixing the exponent question.
Outcome criterion_monomial() {
    Rng rng(10);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        NodeSequence t = random_clustered(rng, rng.uniform_int(1, 6), 3, -2.0, 2.0);
        for (int k = 0; k <= 10; ++k) {
            const double direct = divided_difference(sample_function(make_power(k), t));
            worst = std::max(worst, rel_dev(monomial_dd(t, k), direct));
        }
    }
    return Outcome{worst <= 1e-10, dev_note(worst)};
}

// 11. Mean value bracket for exp/sin, and affine covariance.
Outcome criterion_mean_value_affine() {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const SmoothFunction f = (trial % 2 == 0) ? make_exp() : make_sin();
        NodeSequence t = random_clustered(rng, rng.uniform_int(2, 6), 2, -2.0, 2.0);
        MeanValueBracket b = mean_value_check(f, t);
        const double eps = 1e-9 * (1.0 + std::abs(b.hi));
        if (!(b.lo - eps <= b.mid && b.mid <= b.hi + eps)) {
            return Outcome{false, "bracket violated at trial " + std::to_string(trial)};
        }
    }

    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(2, 6);
        NodeSequence t = random_clustered(rng, n, 2, -2.0, 2.0);
        PowerPoly p = random_poly(rng, 6);
        const double a = (trial % 2 == 0 ? 1.0 : -1.0) * rng.uniform(0.5, 2.0);
        const double b = rng.uniform(-1.0, 1.0);
        std::vector<double> mapped(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) mapped[j] = a * t[j] + b;
        const double lhs = std::pow(a, n - 1) * divided_difference(make_smooth(p), mapped);
        const double rhs = divided_difference(precompose_affine(make_smooth(p), a, b), t.values());
        worst = std::max(worst, rel_dev(lhs, rhs));
    }
    return Outcome{worst <= 1e-10, "bracket held, affine " + dev_note(worst)};
}

// 12. Horner coefficients against fresh tables, and rebase equivalence.
Outcome criterion_horner_rebase() {
    Rng rng(12);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int order = rng.uniform_int(1, 7);
        std::vector<double> centers(static_cast<std::size_t>(order) - 1);
        std::vector<double> coeffs(static_cast<std::size_t>(order));
        for (double& c : centers) c = rng.uniform(-1.0, 1.0);
        for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
        NewtonPoly p(centers, coeffs);

        const double z = rng.uniform(-1.0, 1.0);
        HornerResult h = horner_eval(p, z);
        for (std::size_t j = 0; j < h.hatc.size(); ++j) {
            std::vector<double> nodes{z};
            nodes.insert(nodes.end(), centers.begin(), centers.begin() + j);
            worst = std::max(worst, rel_dev(h.hatc[j], divided_difference(make_smooth(p), nodes)));
        }

        std::vector<double> new_centers(centers.size());
        for (double& c : new_centers) c = rng.uniform(-1.0, 1.0);
        NewtonPoly rebased = change_basis(p, new_centers);
        for (int i = 0; i < 10; ++i) {
            const double x = rng.uniform(-1.0, 1.0);
            worst = std::max(worst, rel_dev(evaluate(rebased, x), evaluate(p, x)));
        }
    }
    return Outcome{worst <= 1e-11, dev_note(worst)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"reciprocal closed form (table, Chakalov, formula)", criterion_reciprocal},
        {"Erdos-Turan norm equality and lower bound", criterion_erdos_turan},
        {"Opitz matrix polynomial equals the table", criterion_opitz},
        {"Leibniz rule equals direct product dd", criterion_leibniz},
        {"five-way representation agreement on exp", criterion_five_way},
        {"Peano/B-spline kernel identity", criterion_peano},
        {"Hermite interpolation conditions", criterion_hermite},
        {"Floater expansion and Hopf anchor contracts", criterion_floater_hopf},
        {"refinement weights", criterion_refinement},
        {"monomial formula vs table", criterion_monomial},
        {"mean value bracket and affine covariance", criterion_mean_value_affine},
        {"Horner coefficients and rebase equivalence", criterion_horner_rebase},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome{false, "exception"};
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& err) {
            outcome.detail = std::string("exception: ") + err.what();
        }
        failed += outcome.pass ? 0 : 1;
        std::printf("%s %2zu: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, outcome.detail.c_str());
    }
    if (failed == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d of %zu acceptance criteria failed\n", failed, criteria.size());
    return 1;
}
