// Sample-level simulation of the two-way AF link: Rayleigh fading draws,
// BPSK symbols, relay amplification, self-interference cancellation and
// coherent detection. Validates the analytic modules empirically.
#ifndef UAVRELAY_MONTECARLO_HPP
#define UAVRELAY_MONTECARLO_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "uavrelay/allocation.hpp"
#include "uavrelay/channel.hpp"
#include "uavrelay/rng.hpp"

namespace uavrelay {

struct TrialConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    enum class Mode { NLOS, LOS } mode = Mode::NLOS;
};

struct EmpiricalResult {
    double ber_a = 0.0;  // errors detecting chi_b at S_a
    double ber_b = 0.0;  // errors detecting chi_a at S_b
    double mean_snr_a = 0.0;
    double mean_snr_b = 0.0;
    double ci_halfwidth_a = 0.0;  // 95% binomial half-width
    double ci_halfwidth_b = 0.0;

    double ci_halfwidth() const { return std::max(ci_halfwidth_a, ci_halfwidth_b); }
};

/// Independent unit-mean-square Rayleigh channel coefficients for the
/// two hops.
inline std::pair<std::complex<double>, std::complex<double>> draw_channels(
    SplitMix64& rng) {
    auto h = rng.complex_gaussian(1.0);
    auto g = rng.complex_gaussian(1.0);
    return {h, g};
}

inline EmpiricalResult simulate_two_hop(const TrialConfig& tc,
                                        const AllocationFactors& alloc,
                                        const LinkGeometry& geom,
                                        const ChannelParams& cp) {
    if (tc.samples < 1)
        throw std::invalid_argument("simulate_two_hop: need at least one sample");
    cp.validate();
    const double la = std::pow(geom.d_a, -cp.path_loss_exp / 2.0);
    const double lb = std::pow(geom.d_b, -cp.path_loss_exp / 2.0);
    const double ld = std::pow(std::abs(geom.d), -cp.path_loss_exp / 2.0);
    const double p_a = cp.total_power * alloc.alpha_a;
    const double p_b = cp.total_power * alloc.alpha_b;
    const double p_r = cp.total_power * alloc.alpha_r;
    const double sigma2 = cp.noise_var;
    const bool los = tc.mode == TrialConfig::Mode::LOS;

    std::uint64_t err_a = 0, err_b = 0;
    double snr_a_sum = 0.0, snr_b_sum = 0.0;
    for (std::uint64_t n = 0; n < tc.samples; ++n) {
        SplitMix64 rng = substream(tc.seed, n);
        // gamma_a/gamma_b are mean-square-over-noise gains, so the raw
        // coefficient mean squares are gamma * sigma^2.
        const std::complex<double> h = rng.complex_gaussian(cp.gamma_a * sigma2);
        const std::complex<double> g = rng.complex_gaussian(cp.gamma_b * sigma2);
        const std::complex<double> n_r = rng.complex_gaussian(sigma2);
        const std::complex<double> n_a = rng.complex_gaussian(sigma2);
        const std::complex<double> n_b = rng.complex_gaussian(sigma2);
        const double chi_a = rng.next() & 1 ? 1.0 : -1.0;
        const double chi_b = rng.next() & 1 ? 1.0 : -1.0;
        // LOS direct-path coefficient; drawn even in NLOS mode so the two
        // modes consume identical stream positions.
        const std::complex<double> gh = rng.complex_gaussian(cp.gamma_ab * sigma2);

        const std::complex<double> ch_a = h * la;  // S_a <-> R
        const std::complex<double> ch_b = g * lb;  // R <-> S_b
        const std::complex<double> y_r =
            std::sqrt(p_a) * chi_a * ch_a + std::sqrt(p_b) * chi_b * ch_b + n_r;
        const double beta = std::sqrt(
            p_r / (std::norm(h) * la * la * p_a + std::norm(g) * lb * lb * p_b + sigma2));

        // Received signals after each node cancels its own echo. The
        // composite data channel is known at the receiver (perfect CSI).
        std::complex<double> sig_a = ch_a * beta * std::sqrt(p_b) * chi_b * ch_b;
        std::complex<double> comp_a = ch_a * beta * ch_b * std::sqrt(p_b);
        std::complex<double> sig_b = ch_b * beta * std::sqrt(p_a) * chi_a * ch_a;
        std::complex<double> comp_b = ch_b * beta * ch_a * std::sqrt(p_a);
        if (los) {
            const std::complex<double> dir_a =
                std::sqrt(p_b) * ch_b + 2.0 * std::sqrt(p_b) * gh * ld;
            sig_a += dir_a * chi_b;
            comp_a += dir_a;
            const std::complex<double> dir_b =
                std::sqrt(p_a) * ch_a + 2.0 * std::sqrt(p_a) * gh * ld;
            sig_b += dir_b * chi_a;
            comp_b += dir_b;
        }
        const std::complex<double> y_a = sig_a + ch_a * beta * n_r + n_a;
        const std::complex<double> y_b = sig_b + ch_b * beta * n_r + n_b;

        if (p_b > 0.0 || los) {
            const double metric_a = std::real(y_a * std::conj(comp_a));
            const double det_a = metric_a > 0.0 ? 1.0
                                : metric_a < 0.0 ? -1.0
                                                 : (rng.next() & 1 ? 1.0 : -1.0);
            if (det_a != chi_b) ++err_a;
        } else if (rng.next() & 1) {
            ++err_a;  // nothing transmitted: detector guesses
        }
        if (p_a > 0.0 || los) {
            const double metric_b = std::real(y_b * std::conj(comp_b));
            const double det_b = metric_b > 0.0 ? 1.0
                                : metric_b < 0.0 ? -1.0
                                                 : (rng.next() & 1 ? 1.0 : -1.0);
            if (det_b != chi_a) ++err_b;
        } else if (rng.next() & 1) {
            ++err_b;
        }

        const double noise_a = std::norm(ch_a) * beta * beta * sigma2 + sigma2;
        const double noise_b = std::norm(ch_b) * beta * beta * sigma2 + sigma2;
        snr_a_sum += std::norm(comp_a) / noise_a;
        snr_b_sum += std::norm(comp_b) / noise_b;
    }

    EmpiricalResult r;
    const double n = static_cast<double>(tc.samples);
    r.ber_a = static_cast<double>(err_a) / n;
    r.ber_b = static_cast<double>(err_b) / n;
    r.mean_snr_a = snr_a_sum / n;
    r.mean_snr_b = snr_b_sum / n;
    r.ci_halfwidth_a = 1.96 * std::sqrt(r.ber_a * (1.0 - r.ber_a) / n);
    r.ci_halfwidth_b = 1.96 * std::sqrt(r.ber_b * (1.0 - r.ber_b) / n);
    return r;
}

/// Single Rayleigh link, coherent BPSK; engine self-test reference. The
/// closed-form mean BER is 0.5 * (1 - sqrt(snr / (1 + snr))).
inline double simulate_single_hop_rayleigh_bpsk(std::uint64_t samples,
                                                std::uint64_t seed,
                                                double mean_snr) {
    std::uint64_t errors = 0;
    for (std::uint64_t n = 0; n < samples; ++n) {
        SplitMix64 rng = substream(seed, n);
        const std::complex<double> h = rng.complex_gaussian(mean_snr);
        const std::complex<double> noise = rng.complex_gaussian(1.0);
        const double chi = rng.next() & 1 ? 1.0 : -1.0;
        const std::complex<double> y = h * chi + noise;
        if ((std::real(y * std::conj(h)) > 0.0 ? 1.0 : -1.0) != chi) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(samples);
}

inline double rayleigh_bpsk_ber_closed_form(double mean_snr) {
    return 0.5 * (1.0 - std::sqrt(mean_snr / (1.0 + mean_snr)));
}

}  // namespace uavrelay

#endif
