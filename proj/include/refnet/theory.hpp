#pragma once

namespace refnet {

// Limiting growth-case coefficients of the biased-attachment process. b2/b3
// is the k-hop (k >= 2) red/blue gain ratio under the linear strategy;
// b2/(b2+b3) compared against alpha_star decides whether the second hop
// reduces the first-hop bias.
struct Betas {
    double b1 = 0;
    double b2 = 0;
    double b3 = 0;
    double b4 = 0;
};

// Residual of the degree-share fixed-point equation,
//   f(a) = 1 - (1-r)(1-a)/(1-a(1-rho)) + r a/(1-(1-a)(1-rho)) - 2a.
// alpha_star is its unique root in [0, 0.5].
double fixed_point_residual(double alpha, double r, double rho);

// Bracketed bisection on [0, 0.5]; r in (0, 0.5], rho in (0, 1]. The
// returned root satisfies |f| < tol.
double solve_alpha_star(double r, double rho, double tol = 1e-12);

Betas betas(double r, double rho, double alpha_star);

// b2/b3 for the given parameters (solves alpha_star internally).
double two_hop_ratio(double r, double rho);

// alpha_star and its red/blue odds alpha_star / (1 - alpha_star).
double one_hop_share(double r, double rho);
double one_hop_ratio(double r, double rho);

struct ThresholdResult {
    bool two_hop_exceeds_one_hop = false;
    double margin = 0;  // b2/(b2+b3) - alpha_star
};
ThresholdResult threshold_predicate(double r, double rho);

// The four growth-case weights at a given degree share alpha. These are per
// degree-end weights: p1 + p2 = r/2 and p3 + p4 = (1-r)/2, so the four sum
// to 1/2; the probability that step t falls in case i is 2*p_i.
struct CaseProbabilities {
    double p1 = 0;  // new red node joins a red node
    double p2 = 0;  // new red node joins a blue node
    double p3 = 0;  // new blue node joins a blue node
    double p4 = 0;  // new blue node joins a red node
};
CaseProbabilities case_probabilities(double r, double rho, double alpha);

// Everything derived from one (r, rho) pair.
struct TheoryPoint {
    double r = 0;
    double rho = 0;
    double alpha_star = 0;
    Betas coeffs;
    double two_hop_ratio = 0;  // b2/b3
    double two_hop_share = 0;  // b2/(b2+b3)
    double one_hop_share = 0;  // alpha_star
    bool threshold = false;
    double margin = 0;
};
TheoryPoint theory_point(double r, double rho, double tol = 1e-12);

}  // namespace refnet
