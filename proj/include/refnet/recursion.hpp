#pragma once

#include <cstdint>
#include <vector>

#include "refnet/theory.hpp"

namespace refnet {

// Expectation recursion for the per-color k-hop degree sums, driven by the
// limiting case coefficients b1..b4 and the closed moment system
//   M1(t+1) = M1(t) + (2 b2 + 2 b3) M1(t)/t + (b2 + b3) D1_blue(t)/t + b3 + b4
//   Mj(t+1) = Mj(t) + (2 b2 + 2 b3) Mj(t)/t + 2 b3 M{j-1}(t)/t     (j >= 2)
//   DR_k(t+1) = DR_k(t) + 2 b2 M{k-1}(t)/t
//   DB_k(t+1) = DB_k(t) + 2 b3 M{k-1}(t)/t
// where Mj tracks the blue degree-product moment feeding hop j+1, and the
// red moments are dropped as asymptotically negligible. Seeded at t0 = 10
// with D1 split as (2 a* t0, 2 (1-a*) t0) so D1_red + D1_blue = 2t holds
// exactly, M1 = t0, deeper moments 0, and DR_k = DB_k = 1 so the reported
// hop ratios genuinely converge from 1 to b2/b3.
struct RecursionParams {
    double r = 0.2;
    double rho = 0.5;
    int max_hop = 2;               // K >= 2
    std::uint64_t horizon = 1000;  // T >= 1000
};

struct RecursionCheckpoint {
    std::uint64_t t = 0;
    std::vector<double> hop_ratio;  // hop_ratio[k-2] = DR_k / DB_k, k = 2..K
    double log_m1 = 0;              // ln of the first blue moment (rescale-corrected)
    double d1_red = 0;
    double d1_blue = 0;
};

struct RecursionResult {
    double alpha_star = 0;
    Betas coeffs;
    std::vector<double> terminal_ratio;  // index k-2
    std::vector<RecursionCheckpoint> checkpoints;

    double terminal(int k) const { return terminal_ratio.at(static_cast<std::size_t>(k) - 2); }
};

RecursionResult run_degree_recursion(const RecursionParams& params);

// Iterates a_{t+1} = a_t + c1 a_t / t + c2 (log t)^m t^(c3 - 1) from a_1 = a0
// and reports a_T normalized by the growth order its parameters select:
// t^c1 when c1 > c3, (log t)^(m+1) t^c3 when c1 = c3, (log t)^m t^c3 when
// c1 < c3 (where the normalized value tends to c2 / (c3 - c1)).
struct SequenceResult {
    double raw = 0;
    double normalized = 0;
    int growth_case = 0;  // 0: c1 > c3, 1: c1 = c3, 2: c1 < c3
};

SequenceResult sequence_integrator(double c1, double c2, double c3, int m,
                                   std::uint64_t horizon, double a0 = 1.0);

}  // namespace refnet
