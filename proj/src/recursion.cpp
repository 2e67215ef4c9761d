#include "refnet/recursion.hpp"

#include <cmath>
#include <stdexcept>

namespace refnet {

RecursionResult run_degree_recursion(const RecursionParams& params) {
    if (params.max_hop < 2) throw std::invalid_argument("recursion: max_hop must be >= 2");
    if (params.horizon < 1000) throw std::invalid_argument("recursion: horizon must be >= 1000");

    const int K = params.max_hop;
    RecursionResult out;
    out.alpha_star = solve_alpha_star(params.r, params.rho);
    out.coeffs = betas(params.r, params.rho, out.alpha_star);
    const double b2 = out.coeffs.b2;
    const double b3 = out.coeffs.b3;
    const double b4 = out.coeffs.b4;
    const double homog = 2.0 * (b2 + b3);

    constexpr std::uint64_t kStart = 10;
    constexpr double kRescaleAt = 1e300;
    constexpr double kRescaleBy = 1e-150;

    double d1_red = 2.0 * out.alpha_star * kStart;
    double d1_blue = 2.0 * (1.0 - out.alpha_star) * kStart;
    std::vector<double> m(static_cast<std::size_t>(K), 0.0);  // m[j], j = 1..K-1
    m[1] = static_cast<double>(kStart);
    std::vector<double> dr(static_cast<std::size_t>(K) + 1, 1.0);
    std::vector<double> db(static_cast<std::size_t>(K) + 1, 1.0);
    double forcing_scale = 1.0;
    double scale_offset = 0.0;  // ln of everything rescaled away so far

    std::uint64_t next_checkpoint = 100;
    std::vector<double> incr(static_cast<std::size_t>(K), 0.0);
    for (std::uint64_t t = kStart; t < params.horizon; ++t) {
        const double td = static_cast<double>(t);
        incr[1] = homog * m[1] / td + forcing_scale * ((b2 + b3) * d1_blue / td + b3 + b4);
        for (int j = 2; j < K; ++j) incr[j] = homog * m[j] / td + 2.0 * b3 * m[j - 1] / td;
        for (int k = 2; k <= K; ++k) {
            dr[k] += 2.0 * b2 * m[k - 1] / td;
            db[k] += 2.0 * b3 * m[k - 1] / td;
        }
        for (int j = 1; j < K; ++j) m[j] += incr[j];
        d1_red += 2.0 * out.alpha_star;
        d1_blue += 2.0 * (1.0 - out.alpha_star);

        if (m[K - 1] > kRescaleAt || db[K] > kRescaleAt) {
            // Only ratios are reported; shrink the coupled block and keep
            // the absolute forcing consistent with it.
            for (int j = 1; j < K; ++j) m[j] *= kRescaleBy;
            for (int k = 2; k <= K; ++k) {
                dr[k] *= kRescaleBy;
                db[k] *= kRescaleBy;
            }
            forcing_scale *= kRescaleBy;
            scale_offset -= std::log(kRescaleBy);
        }

        if (t + 1 >= next_checkpoint || t + 1 == params.horizon) {
            RecursionCheckpoint cp;
            cp.t = t + 1;
            for (int k = 2; k <= K; ++k) cp.hop_ratio.push_back(dr[k] / db[k]);
            cp.log_m1 = std::log(m[1]) + scale_offset;
            cp.d1_red = d1_red;
            cp.d1_blue = d1_blue;
            out.checkpoints.push_back(std::move(cp));
            next_checkpoint = next_checkpoint + next_checkpoint / 4;
        }
    }
    out.terminal_ratio = out.checkpoints.back().hop_ratio;
    return out;
}

SequenceResult sequence_integrator(double c1, double c2, double c3, int m,
                                   std::uint64_t horizon, double a0) {
    if (!(c3 > 0.0)) throw std::invalid_argument("sequence_integrator: c3 must be positive");
    if (horizon < 1000) throw std::invalid_argument("sequence_integrator: horizon must be >= 1000");
    if (m < 0) throw std::invalid_argument("sequence_integrator: m must be >= 0");

    double a = a0;
    for (std::uint64_t t = 1; t < horizon; ++t) {
        const double td = static_cast<double>(t);
        const double lt = std::log(td);
        double logpow = 1.0;
        for (int i = 0; i < m; ++i) logpow *= lt;
        a += c1 * a / td + c2 * logpow * std::pow(td, c3 - 1.0);
    }

    SequenceResult out;
    out.raw = a;
    const double T = static_cast<double>(horizon);
    const double lT = std::log(T);
    double logpow = 1.0;
    for (int i = 0; i < m; ++i) logpow *= lT;
    if (c1 > c3) {
        out.growth_case = 0;
        out.normalized = a / std::pow(T, c1);
    } else if (c1 == c3) {
        out.growth_case = 1;
        out.normalized = a / (logpow * lT * std::pow(T, c3));
    } else {
        out.growth_case = 2;
        out.normalized = a / (logpow * std::pow(T, c3));
    }
    return out;
}

}  // namespace refnet
