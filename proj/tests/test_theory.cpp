#include <doctest.h>

#include <cmath>
#include <vector>

#include "refnet/rng.hpp"
#include "refnet/theory.hpp"

using namespace refnet;

TEST_CASE("alpha_star collapses to r at rho = 1 and to 0.5 at r = 0.5") {
    for (int i = 1; i <= 20; ++i) {
        const double r = 0.5 * i / 20.0;
        CHECK(std::abs(solve_alpha_star(r, 1.0) - r) < 1e-10);
    }
    for (int i = 1; i <= 20; ++i) {
        const double rho = static_cast<double>(i) / 20.0;
        CHECK(std::abs(solve_alpha_star(0.5, rho) - 0.5) < 1e-10);
    }
}

TEST_CASE("bisection agrees with a fine grid scan at (0.2, 0.5)") {
    // Independent root bracketing: walk f over [0, 0.5] on a fine grid and
    // locate the sign change.
    const double r = 0.2, rho = 0.5;
    const int steps = 500000;
    double bracket_lo = 0.0, bracket_hi = 0.5;
    int sign_changes = 0;
    double prev = fixed_point_residual(0.0, r, rho);
    for (int i = 1; i <= steps; ++i) {
        const double a = 0.5 * i / steps;
        const double cur = fixed_point_residual(a, r, rho);
        if ((prev > 0) != (cur > 0)) {
            ++sign_changes;
            bracket_lo = 0.5 * (i - 1) / steps;
            bracket_hi = a;
        }
        prev = cur;
    }
    CHECK(sign_changes == 1);  // unique root in [0, 0.5]
    const double root = solve_alpha_star(r, rho);
    CHECK(root >= bracket_lo);
    CHECK(root <= bracket_hi);
    CHECK(root == doctest::Approx(0.163851302214).epsilon(1e-9));
    CHECK(std::abs(fixed_point_residual(root, r, rho)) < 1e-12);
}

TEST_CASE("domain checks") {
    CHECK_THROWS(solve_alpha_star(0.0, 0.5));
    CHECK_THROWS(solve_alpha_star(0.6, 0.5));
    CHECK_THROWS(solve_alpha_star(0.2, 0.0));
    CHECK_THROWS(solve_alpha_star(0.2, 1.1));
    CHECK_THROWS(solve_alpha_star(0.2, 0.5, 0.0));
}

TEST_CASE("betas at rho = 1 and at the frozen reference point") {
    const auto b1 = betas(0.3, 1.0, solve_alpha_star(0.3, 1.0));
    CHECK(b1.b1 == doctest::Approx(0.15));
    CHECK(b1.b2 == doctest::Approx(0.15));
    CHECK(b1.b3 == doctest::Approx(0.35));
    CHECK(b1.b4 == doctest::Approx(0.35));

    // Independent transcription of the formulas at (0.2, 0.5).
    const double a = solve_alpha_star(0.2, 0.5);
    const auto b = betas(0.2, 0.5, a);
    CHECK(b.b1 == doctest::Approx(0.171843).epsilon(1e-4));
    CHECK(b.b2 == doctest::Approx(0.085922).epsilon(1e-4));
    CHECK(b.b3 == doctest::Approx(0.435695).epsilon(1e-4));
    CHECK(b.b4 == doctest::Approx(0.217847).epsilon(1e-4));

    // rho -> 0 sends the cross coefficient b2 to zero.
    const double a0 = solve_alpha_star(0.2, 1e-3);
    CHECK(betas(0.2, 1e-3, a0).b2 < 1e-3);
}

TEST_CASE("two-hop ratio endpoints and frozen value") {
    CHECK(two_hop_ratio(0.2, 1.0) == doctest::Approx(0.25));
    CHECK(two_hop_ratio(0.3, 1.0) == doctest::Approx(3.0 / 7.0));
    CHECK(two_hop_ratio(0.2, 0.5) == doctest::Approx(0.197206).epsilon(1e-4));
    CHECK(two_hop_ratio(0.2, 1e-3) < 1e-2);
    CHECK(two_hop_ratio(0.1, 1e-3) < 1e-2);
}

TEST_CASE("one-hop share and ratio") {
    CHECK(one_hop_share(0.2, 0.5) == doctest::Approx(0.163851).epsilon(1e-4));
    CHECK(one_hop_ratio(0.2, 0.5) == doctest::Approx(0.195960).epsilon(1e-4));
    CHECK(one_hop_ratio(0.2, 1.0) == doctest::Approx(0.25));
    // rho -> 0 recovers the population odds r/(1-r).
    CHECK(std::abs(one_hop_ratio(0.2, 1e-3) - 0.25) < 1e-2);
}

TEST_CASE("threshold predicate") {
    const auto at_one = threshold_predicate(0.2, 1.0);
    CHECK_FALSE(at_one.two_hop_exceeds_one_hop);
    CHECK(std::abs(at_one.margin) < 1e-12);

    // Small minority, weak homophily: the second hop helps.
    const auto helps = threshold_predicate(0.1, 0.9);
    CHECK(helps.two_hop_exceeds_one_hop);
    CHECK(helps.margin == doctest::Approx(0.004995).epsilon(1e-3));

    // Golden value recorded from the grid oracle before the build.
    const auto hurts = threshold_predicate(0.45, 0.5);
    CHECK_FALSE(hurts.two_hop_exceeds_one_hop);
    CHECK(hurts.margin == doctest::Approx(-0.133061).epsilon(1e-4));
}

TEST_CASE("case probabilities: identities and frozen values") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const double r = 0.01 + 0.49 * rng.uniform01();
        const double rho = 0.01 + 0.99 * rng.uniform01();
        const double alpha = rng.uniform01();
        const auto cp = case_probabilities(r, rho, alpha);
        CHECK(cp.p1 + cp.p2 == doctest::Approx(r / 2.0).epsilon(1e-13));
        CHECK(cp.p3 + cp.p4 == doctest::Approx((1.0 - r) / 2.0).epsilon(1e-13));
        CHECK(cp.p1 >= 0.0);
        CHECK(cp.p2 >= 0.0);
        CHECK(cp.p3 >= 0.0);
        CHECK(cp.p4 >= 0.0);
    }

    const auto simple = case_probabilities(0.3, 1.0, 0.3);
    CHECK(simple.p1 == doctest::Approx(0.3 * 0.3 / 2.0));

    // Frozen from a high-precision evaluation at (0.2, 0.5, 0.164).
    const auto cp = case_probabilities(0.2, 0.5, 0.164);
    CHECK(cp.p1 == doctest::Approx(0.0281786941580756).epsilon(1e-12));
    CHECK(cp.p2 == doctest::Approx(0.0718213058419244).epsilon(1e-12));
    CHECK(cp.p3 == doctest::Approx(0.3642701525054466).epsilon(1e-12));
    CHECK(cp.p4 == doctest::Approx(0.0357298474945534).epsilon(1e-12));
}

TEST_CASE("grid inequalities for the share, the fixed point and the coefficients") {
    for (int ri = 1; ri <= 9; ++ri) {
        const double r = 0.05 * ri;
        for (int pi = 1; pi <= 20; ++pi) {
            const double rho = 0.05 * pi;
            const auto tp = theory_point(r, rho);
            CHECK(std::abs(fixed_point_residual(tp.alpha_star, r, rho)) < 1e-12);
            CHECK(tp.two_hop_share <= r + 1e-12);
            CHECK(tp.alpha_star <= r + 1e-12);
            const double lhs = tp.coeffs.b1 + tp.coeffs.b4;
            const double rhs = tp.coeffs.b2 + tp.coeffs.b3;
            if (rho < 0.999) {
                CHECK(lhs < rhs);  // strict away from rho = 1
            } else {
                CHECK(std::abs(lhs - rhs) < 1e-12);  // exact balance at rho = 1
            }
        }
    }
}

TEST_CASE("threshold margin limits in rho") {
    for (double r : {0.1, 0.2, 0.3, 0.4}) {
        CHECK(std::abs(threshold_predicate(r, 1.0).margin) < 1e-12);
        const auto near_zero = threshold_predicate(r, 1e-3);
        const double astar = solve_alpha_star(r, 1e-3);
        CHECK(near_zero.margin == doctest::Approx(-astar).epsilon(2e-2));
    }
}
