#include "refnet/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace refnet {

namespace {

void check_domain(double r, double rho) {
    if (!(r > 0.0 && r <= 0.5)) throw std::invalid_argument("theory: r must lie in (0, 0.5]");
    if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("theory: rho must lie in (0, 1]");
}

}  // namespace

double fixed_point_residual(double alpha, double r, double rho) {
    const double cross_blue = 1.0 - alpha * (1.0 - rho);          // blue-target acceptance mass
    const double cross_red = 1.0 - (1.0 - alpha) * (1.0 - rho);   // red-target acceptance mass
    return 1.0 - (1.0 - r) * (1.0 - alpha) / cross_blue + r * alpha / cross_red - 2.0 * alpha;
}

double solve_alpha_star(double r, double rho, double tol) {
    check_domain(r, rho);
    if (!(tol > 0.0)) throw std::invalid_argument("solve_alpha_star: tol must be positive");

    double lo = 0.0;
    double hi = 0.5;
    double flo = fixed_point_residual(lo, r, rho);  // = r > 0
    double fhi = fixed_point_residual(hi, r, rho);  // = (2r-1)/(1+rho) <= 0
    if (flo <= 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (fhi > 0.0) throw std::runtime_error("solve_alpha_star: bracket failure");

    double mid = 0.25;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double fmid = fixed_point_residual(mid, r, rho);
        if (fmid == 0.0) return mid;
        if (fmid > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (hi - lo < 1e-16 && std::abs(fmid) < tol) break;
    }
    // Prefer the bracket end with the smaller residual.
    const double root = std::abs(flo) < std::abs(fhi) ? lo : hi;
    if (std::abs(fixed_point_residual(root, r, rho)) >= tol)
        throw std::runtime_error("solve_alpha_star: residual tolerance not met");
    return root;
}

Betas betas(double r, double rho, double alpha_star) {
    check_domain(r, rho);
    const double denom_red = 2.0 * (1.0 - (1.0 - alpha_star) * (1.0 - rho));
    const double denom_blue = 2.0 * (1.0 - alpha_star * (1.0 - rho));
    if (denom_red <= 0.0 || denom_blue <= 0.0)
        throw std::invalid_argument("betas: degenerate denominator");
    Betas out;
    out.b1 = r / denom_red;
    out.b2 = r * rho / denom_red;
    out.b3 = (1.0 - r) / denom_blue;
    out.b4 = (1.0 - r) * rho / denom_blue;
    return out;
}

double two_hop_ratio(double r, double rho) {
    const double a = solve_alpha_star(r, rho);
    const Betas b = betas(r, rho, a);
    return b.b2 / b.b3;
}

double one_hop_share(double r, double rho) { return solve_alpha_star(r, rho); }

double one_hop_ratio(double r, double rho) {
    const double a = solve_alpha_star(r, rho);
    return a / (1.0 - a);
}

ThresholdResult threshold_predicate(double r, double rho) {
    const double a = solve_alpha_star(r, rho);
    const Betas b = betas(r, rho, a);
    ThresholdResult out;
    out.margin = b.b2 / (b.b2 + b.b3) - a;
    out.two_hop_exceeds_one_hop = out.margin > 0.0;
    return out;
}

CaseProbabilities case_probabilities(double r, double rho, double alpha) {
    check_domain(r, rho);
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("case_probabilities: alpha must lie in [0, 1]");
    const double denom_red = 2.0 * (1.0 - (1.0 - alpha) * (1.0 - rho));
    const double denom_blue = 2.0 * (1.0 - alpha * (1.0 - rho));
    CaseProbabilities out;
    out.p1 = r * alpha / denom_red;
    out.p2 = r * (1.0 - alpha) * rho / denom_red;
    out.p3 = (1.0 - r) * (1.0 - alpha) / denom_blue;
    out.p4 = (1.0 - r) * alpha * rho / denom_blue;
    return out;
}

TheoryPoint theory_point(double r, double rho, double tol) {
    TheoryPoint out;
    out.r = r;
    out.rho = rho;
    out.alpha_star = solve_alpha_star(r, rho, tol);
    out.coeffs = betas(r, rho, out.alpha_star);
    out.two_hop_ratio = out.coeffs.b2 / out.coeffs.b3;
    out.two_hop_share = out.coeffs.b2 / (out.coeffs.b2 + out.coeffs.b3);
    out.one_hop_share = out.alpha_star;
    out.margin = out.two_hop_share - out.alpha_star;
    out.threshold = out.margin > 0.0;
    return out;
}

}  // namespace refnet
