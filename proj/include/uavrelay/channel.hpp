// Analytic SNR, capacity and rate models for the two-hop two-way
// amplify-and-forward link.
#ifndef UAVRELAY_CHANNEL_HPP
#define UAVRELAY_CHANNEL_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "uavrelay/allocation.hpp"
#include "uavrelay/geometry.hpp"

namespace uavrelay {

/// Link-level parameters. Channel gains are mean-square coefficient
/// magnitudes divided by the noise variance; defaults are the unit
/// Rayleigh normalization with sigma^2 = 1.
struct ChannelParams {
    double gamma_a = 1.0;         // |h|^2 / sigma^2, hop S_a - R
    double gamma_b = 1.0;         // |g|^2 / sigma^2, hop R - S_b
    double gamma_ab = 0.0;        // |gh|^2 / sigma^2 direct link, 0 in NLOS
    double path_loss_exp = 2.0;   // in [2, 4]
    double noise_var = 1.0;       // watts
    double total_power = 2.0;     // watts
    double rate_efficiency = 1.0; // in (0, 1]

    void validate() const {
        if (path_loss_exp < 2.0 || path_loss_exp > 4.0)
            throw std::invalid_argument("ChannelParams: path loss exponent outside [2,4]");
        if (!(noise_var > 0.0)) throw std::invalid_argument("ChannelParams: noise_var <= 0");
        if (!(total_power > 0.0)) throw std::invalid_argument("ChannelParams: total_power <= 0");
        if (!(rate_efficiency > 0.0) || rate_efficiency > 1.0)
            throw std::invalid_argument("ChannelParams: rate_efficiency outside (0,1]");
        if (gamma_a < 0.0 || gamma_b < 0.0 || gamma_ab < 0.0)
            throw std::invalid_argument("ChannelParams: negative channel gain");
    }
};

struct NodePowers {
    double p_a = 0.0;
    double p_b = 0.0;
    double p_r = 0.0;
};

/// Linear SNR at user S_a and user S_b.
struct SnrPair {
    double at_a = 0.0;
    double at_b = 0.0;
};

/// Distance-weighted mean channel gains H = gamma_a * d_a^-exp and
/// G = gamma_b * d_b^-exp.
struct HopGains {
    double h = 0.0;  // S_a - R side
    double g = 0.0;  // R - S_b side
};

inline HopGains effective_gains(const ChannelParams& c, const LinkGeometry& g) {
    return HopGains{c.gamma_a * std::pow(g.d_a, -c.path_loss_exp),
                    c.gamma_b * std::pow(g.d_b, -c.path_loss_exp)};
}

/// Relay amplification factor normalizing the relay output to p_r.
inline double amplification_factor(const ChannelParams& c, const LinkGeometry& g,
                                   const NodePowers& p) {
    const double la = std::pow(g.d_a, -c.path_loss_exp);
    const double lb = std::pow(g.d_b, -c.path_loss_exp);
    // gamma_* are per-unit-noise gains, so |h|^2 = gamma_a * sigma^2.
    const double den = c.gamma_a * c.noise_var * la * p.p_a +
                       c.gamma_b * c.noise_var * lb * p.p_b + c.noise_var;
    if (!(den > 0.0))
        throw std::domain_error("amplification_factor: non-positive denominator");
    return std::sqrt(p.p_r / den);
}

/// Exact end-to-end SNRs with the direct link absent (gamma_ab = 0).
inline SnrPair snr_exact_nlos(const ChannelParams& c, const LinkGeometry& g,
                              const NodePowers& p) {
    const double la = std::pow(g.d_a, -c.path_loss_exp);
    const double lb = std::pow(g.d_b, -c.path_loss_exp);
    const double num_common = p.p_r * c.gamma_b * c.gamma_a * la * lb;
    const double den_a = c.gamma_a * (p.p_r + p.p_a) * la + p.p_b * c.gamma_b * lb + 1.0;
    const double den_b = p.p_a * c.gamma_a * la + (p.p_r + p.p_b) * c.gamma_b * lb + 1.0;
    return SnrPair{num_common * p.p_b / den_a, num_common * p.p_a / den_b};
}

/// Exact end-to-end SNRs including the additive direct-link term.
inline SnrPair snr_exact_los(const ChannelParams& c, const LinkGeometry& g,
                             const NodePowers& p) {
    SnrPair s = snr_exact_nlos(c, g, p);
    const double la = std::pow(g.d_a, -c.path_loss_exp);
    const double lb = std::pow(g.d_b, -c.path_loss_exp);
    s.at_a += p.p_r * p.p_b * c.gamma_ab * lb;
    s.at_b += p.p_r * p.p_a * c.gamma_ab * la;
    return s;
}

/// High-SNR limit with node powers expressed through allocation factors,
/// written in terms of the effective gains H and G.
inline SnrPair snr_high(const HopGains& hg, double total_power,
                        const AllocationFactors& a) {
    SnrPair s;
    const double den_a = (a.alpha_r + a.alpha_a) * hg.h + a.alpha_b * hg.g;
    const double den_b = a.alpha_a * hg.h + (a.alpha_r + a.alpha_b) * hg.g;
    const double num = total_power * a.alpha_r * hg.h * hg.g;
    s.at_a = den_a > 0.0 ? num * a.alpha_b / den_a : 0.0;
    s.at_b = den_b > 0.0 ? num * a.alpha_a / den_b : 0.0;
    return s;
}

inline SnrPair snr_high(const ChannelParams& c, const LinkGeometry& g,
                        const AllocationFactors& a) {
    return snr_high(effective_gains(c, g), c.total_power, a);
}

/// Half-duplex capacity 0.5 * log2(1 + phi), phi = 1 + ga + gb + ga*gb.
inline double capacity(const SnrPair& s) {
    const double phi = 1.0 + s.at_a + s.at_b + s.at_a * s.at_b;
    return 0.5 * std::log2(1.0 + phi);
}

/// Total two-way data rate 0.5 * (log2(1+ga) + log2(1+gb)).
inline double sum_rate(const SnrPair& s) {
    return 0.5 * (std::log2(1.0 + s.at_a) + std::log2(1.0 + s.at_b));
}

inline double rate(const SnrPair& s, double efficiency) {
    return efficiency * capacity(s);
}

/// Information causality over the slot sequence: the relay cannot forward
/// more than it has already received. True iff for every n,
/// sum_{i=2..n} R[i] <= sum_{i=1..n-1} R[i].
inline bool causality_ok(std::span<const double> per_slot_rates) {
    if (per_slot_rates.size() < 2)
        throw std::invalid_argument("causality_ok: need at least two slots");
    double incoming = 0.0;  // sum_{i=1..n-1}
    double outgoing = 0.0;  // sum_{i=2..n}
    for (std::size_t n = 1; n < per_slot_rates.size(); ++n) {
        incoming += per_slot_rates[n - 1];
        outgoing += per_slot_rates[n];
        if (outgoing > incoming) return false;
    }
    return true;
}

/// SNR analysis pipeline over a trajectory: hop distances, effective
/// gains, power split p_i = P * alpha_i, high-SNR evaluation per slot.
inline std::vector<SnrPair> snr_per_slot(const ChannelParams& c, double d,
                                         const Trajectory& t,
                                         const AllocationFactors& a) {
    c.validate();
    std::vector<SnrPair> out;
    for (const SlotGeometry& sg : sample_trajectory(d, t))
        out.push_back(snr_high(c, sg.link, a));
    return out;
}

}  // namespace uavrelay

#endif
