#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "divdiff/core.hpp"
#include "divdiff/ddtable.hpp"
#include "divdiff/functions.hpp"
#include "divdiff/newton.hpp"
#include "divdiff/verify.hpp"

using namespace divdiff;

namespace {

// x^2 expressed over centers (-1, 0): 1 - (x+1) + (x+1)x
NewtonPoly square_poly() { return NewtonPoly({-1.0, 0.0}, {1.0, -1.0, 1.0}); }

// x^3 in Newton form via the table over (1,2,3,4)
NewtonPoly cube_poly() {
    return hermite_interpolant(
        sample_function(make_power(3), NodeSequence({1.0, 2.0, 3.0, 4.0})));
}

}  // namespace

TEST_CASE("horner_eval returns the value and the extended coefficients") {
    NewtonPoly constant({}, {5.0});
    CHECK(horner_eval(constant, 7.0).value == 5.0);

    HornerResult h = horner_eval(square_poly(), 2.0);
    CHECK(h.value == 4.0);
    CHECK(h.hatc == std::vector<double>{4.0, 1.0, 1.0});
    // cross-check hatc[1] = dd of x^2 over (2, -1) = (4-1)/3
    CHECK(h.hatc[1] == doctest::Approx((4.0 - 1.0) / 3.0).epsilon(1e-15));

    NewtonPoly p({0.5, 1.5}, {2.0, -3.0, 4.0});
    CHECK(horner_eval(p, 0.5).value == p.coeffs[0]);  // z at the first center
}

TEST_CASE("hatc entries match fresh tables") {
    Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = rng.uniform_int(1, 6);
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
            CHECK(h.hatc[j] ==
                  doctest::Approx(divided_difference(make_smooth(p), nodes)).epsilon(1e-11));
        }
    }
}

TEST_CASE("insert_center rewrites the polynomial over a prepended center") {
    NewtonPoly inserted = insert_center(square_poly(), 2.0);
    CHECK(inserted.centers == std::vector<double>{2.0, -1.0});
    CHECK(inserted.coeffs == std::vector<double>{4.0, 1.0, 1.0});

    // inserting the leading center keeps the polynomial (evaluation oracle)
    NewtonPoly p = cube_poly();
    NewtonPoly repeat = insert_center(p, p.centers[0]);
    CHECK(repeat.coeffs[0] == p.coeffs[0]);
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        const double z = rng.uniform(-2.0, 5.0);
        CHECK(evaluate(repeat, z) == doctest::Approx(evaluate(p, z)).epsilon(1e-12));
    }

    NewtonPoly constant({}, {5.0});
    NewtonPoly still_constant = insert_center(constant, 9.0);
    CHECK(still_constant.coeffs == std::vector<double>{5.0});
    CHECK(still_constant.centers.empty());
}

TEST_CASE("change_basis rebases exactly") {
    NewtonPoly p = cube_poly();

    NewtonPoly same = change_basis(p, p.centers);
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        const double z = rng.uniform(-1.0, 5.0);
        CHECK(evaluate(same, z) == doctest::Approx(evaluate(p, z)).epsilon(1e-12));
    }

    NewtonPoly power_form = change_basis(square_poly(), {0.0, 0.0});
    CHECK(power_form.coeffs[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(power_form.coeffs[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(power_form.coeffs[2] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(change_basis(p, {1.0}), std::invalid_argument);

    // rebased coefficients match a fresh table at the new (sorted) centers
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> c(4);
        for (double& x : c) x = rng.uniform(-1.0, 1.0);
        c[3] = rng.uniform(0.5, 1.5);
        NewtonPoly cubic = from_power(PowerPoly(c));

        std::vector<double> new_centers(3);
        double v = rng.uniform(-1.5, -0.5);
        for (double& x : new_centers) {
            x = v;
            v += rng.uniform(0.3, 0.8);
        }
        NewtonPoly rebased = change_basis(cubic, new_centers);

        std::vector<double> nodes = new_centers;
        nodes.push_back(v);
        std::vector<double> oracle =
            newton_coeffs(sample_function(make_smooth(cubic), NodeSequence(nodes)));
        for (std::size_t j = 0; j < oracle.size(); ++j) {
            CHECK(rebased.coeffs[j] == doctest::Approx(oracle[j]).epsilon(1e-10));
        }
    }
}

TEST_CASE("to_taylor produces local power coefficients") {
    PowerPoly at_zero = to_taylor(square_poly(), 0.0);
    CHECK(at_zero.coeffs[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(at_zero.coeffs[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(at_zero.coeffs[2] == doctest::Approx(1.0).epsilon(1e-15));

    // x^3 = 8 + 12(x-2) + 6(x-2)^2 + (x-2)^3
    PowerPoly at_two = to_taylor(cube_poly(), 2.0);
    CHECK(at_two.coeffs[0] == doctest::Approx(8.0).epsilon(1e-13));
    CHECK(at_two.coeffs[1] == doctest::Approx(12.0).epsilon(1e-13));
    CHECK(at_two.coeffs[2] == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(at_two.coeffs[3] == doctest::Approx(1.0).epsilon(1e-13));

    PowerPoly constant = to_taylor(NewtonPoly({}, {2.5}), 3.0);
    CHECK(constant.coeffs == std::vector<double>{2.5});
}

TEST_CASE("derivative_at") {
    CHECK(derivative_at(cube_poly(), 2.0, 2) == doctest::Approx(12.0).epsilon(1e-13));
    CHECK(derivative_at(cube_poly(), 2.0, 4) == 0.0);
    CHECK(derivative_at(cube_poly(), 1.7, 0) ==
          doctest::Approx(horner_eval(cube_poly(), 1.7).value).epsilon(1e-14));
}

TEST_CASE("remainder_poly splits off the interpolation error factor") {
    // q = dd of x^2 with node a and one floating argument: z + a
    const double a = 0.75;
    NewtonPoly q = remainder_poly(from_power(PowerPoly({0.0, 0.0, 1.0})), NodeSequence({a}));
    Rng rng(19);
    for (int i = 0; i < 10; ++i) {
        const double z = rng.uniform(-2.0, 2.0);
        CHECK(evaluate(q, z) == doctest::Approx(z + a).epsilon(1e-13));
    }

    NewtonPoly low = from_power(PowerPoly({1.0, 2.0}));  // degree 1, two coefficients
    NewtonPoly zero = remainder_poly(low, NodeSequence({0.0, 1.0}));
    CHECK(zero.coeffs == std::vector<double>{0.0});
    CHECK_THROWS_AS(remainder_poly(low, NodeSequence({0.0, 1.0, 2.0})), std::invalid_argument);

    // dataset form: same factor from a full-degree sample of the polynomial
    HermiteDataset squares = sample_function(make_power(2), NodeSequence({-1.0, 0.5, 2.0}));
    NewtonPoly q_from_data = remainder_poly(squares, NodeSequence({a}));
    for (int i = 0; i < 10; ++i) {
        const double z = -2.0 + 0.4 * i;
        CHECK(evaluate(q_from_data, z) == doctest::Approx(z + a).epsilon(1e-12));
    }

    // the factor's Newton coefficients are the higher-order dds of p
    {
        NewtonPoly p = cube_poly();
        NodeSequence t({0.4, 1.1});
        NewtonPoly q = remainder_poly(p, t);
        REQUIRE(q.coeffs.size() == 2);
        std::vector<double> nodes(t.values());
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
            nodes.push_back(i < q.centers.size() ? q.centers[i] : 9.0);
            CHECK(q.coeffs[i] ==
                  doctest::Approx(divided_difference(make_smooth(p), nodes)).epsilon(1e-12));
        }
    }

    // reconstruction: p = interpolant + w * q
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> c(5);
        for (double& x : c) x = rng.uniform(-1.0, 1.0);
        c[4] = rng.uniform(0.5, 1.5);
        NewtonPoly p = from_power(PowerPoly(c));
        NodeSequence t({-0.5, 0.25, 1.0});
        NewtonPoly q_n = remainder_poly(p, t);
        NewtonPoly p_n = hermite_interpolant(sample_function(make_smooth(p), t));
        for (int i = 0; i < 20; ++i) {
            const double z = rng.uniform(-1.5, 1.5);
            const double reconstructed =
                evaluate(p_n, z) + newton_weight(t, t.size(), z) * evaluate(q_n, z);
            CHECK(reconstructed == doctest::Approx(evaluate(p, z)).epsilon(1e-11));
        }
    }
}

TEST_CASE("dd of the remainder factor composes back") {
    Rng rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        const int m = rng.uniform_int(3, 6);
        std::vector<double> c(static_cast<std::size_t>(m));
        for (double& x : c) x = rng.uniform(-1.0, 1.0);
        c.back() = rng.uniform(0.5, 1.5);
        NewtonPoly p = from_power(PowerPoly(c));

        std::vector<double> nodes(static_cast<std::size_t>(m));
        double v = rng.uniform(-1.5, -0.5);
        for (double& x : nodes) {
            x = v;
            v += rng.uniform(0.3, 0.8);
        }
        for (int n = 1; n < m; ++n) {
            std::vector<double> head(nodes.begin(), nodes.begin() + n);
            NewtonPoly q = remainder_poly(p, NodeSequence(head));
            for (int j = n + 1; j <= m; ++j) {
                std::vector<double> tail(nodes.begin() + n, nodes.begin() + j);
                std::vector<double> full(nodes.begin(), nodes.begin() + j);
                CHECK(divided_difference(make_smooth(q), tail) ==
                      doctest::Approx(divided_difference(make_smooth(p), full)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("iterated difference quotients rebuild the dd") {
    Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.uniform_int(2, 6);
        std::vector<double> t(static_cast<std::size_t>(n));
        double v = rng.uniform(-2.0, -1.0);
        for (double& x : t) {
            x = v;
            v += rng.uniform(0.3, 0.9);
        }
        std::vector<double> c(static_cast<std::size_t>(rng.uniform_int(2, 7)));
        for (double& x : c) x = rng.uniform(-1.0, 1.0);
        c.back() = rng.uniform(0.5, 1.5);
        SmoothFunction f = make_smooth(PowerPoly(c));

        std::function<double(int, double)> quotient = [&](int level, double z) -> double {
            if (level == 0) return f.eval(0, z);
            const double tj = t[static_cast<std::size_t>(level - 1)];
            return (quotient(level - 1, z) - quotient(level - 1, tj)) / (z - tj);
        };
        CHECK(quotient(n - 1, t.back()) ==
              doctest::Approx(divided_difference(f, t)).epsilon(1e-10));
    }
}

TEST_CASE("extended_dd_derivative differentiates the appended argument") {
    NewtonPoly p = from_power(PowerPoly({0.0, 0.0, 1.0}));  // x^2
    NodeSequence t({0.75});
    CHECK(extended_dd_derivative(p, t, 1, 0.3) == doctest::Approx(1.0).epsilon(1e-12));

    // k = 0 agrees with evaluating the remainder factor
    NewtonPoly q = remainder_poly(p, t);
    CHECK(extended_dd_derivative(p, t, 0, 0.3) ==
          doctest::Approx(evaluate(q, 0.3)).epsilon(1e-13));

    // central difference oracle at k = 1
    NewtonPoly cubic = cube_poly();
    NodeSequence nodes({0.2, 0.9});
    const double z = 1.4, h = 1e-5;
    const double forward = divided_difference(make_smooth(cubic), {0.2, 0.9, z + h});
    const double backward = divided_difference(make_smooth(cubic), {0.2, 0.9, z - h});
    CHECK(extended_dd_derivative(cubic, nodes, 1, z) ==
          doctest::Approx((forward - backward) / (2.0 * h)).epsilon(1e-6));
}
