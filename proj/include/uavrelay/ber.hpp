// Closed-form optimal SNR and bit error rate of the optimized link via
// cascade-channel (harmonic-mean) statistics.
#ifndef UAVRELAY_BER_HPP
#define UAVRELAY_BER_HPP

#include <cmath>
#include <stdexcept>

#include "uavrelay/allocation.hpp"
#include "uavrelay/channel.hpp"

namespace uavrelay {

/// Mean per-hop SNRs after allocation, feeding the cascade statistics.
struct CascadeStats {
    double gamma_hp = 0.0;  // S_a - R hop
    double gamma_gp = 0.0;  // R - S_b hop
};

inline CascadeStats cascade_stats(const AllocationFactors& a, const HopGains& hg,
                                  double total_power) {
    CascadeStats cs;
    cs.gamma_hp = a.alpha_r * hg.h * total_power;
    const double den = a.alpha_r + a.alpha_a;
    cs.gamma_gp = den > 0.0
                      ? a.alpha_r * a.alpha_b / den * hg.g * total_power
                      : 0.0;
    return cs;
}

/// Harmonic combination of the two post-allocation link SNRs. A zero
/// allocation is signaled as an exact 0 rather than a NaN.
inline double optimal_snr(const AllocationFactors& a, const HopGains& hg,
                          double total_power) {
    const double ta = (a.alpha_r + 2.0 * a.alpha_a) * hg.h * total_power;
    const double tb = (a.alpha_r + 2.0 * a.alpha_b) * hg.g * total_power;
    if (!(ta > 0.0) || !(tb > 0.0)) return 0.0;
    return 1.0 / (1.0 / ta + 1.0 / tb);
}

/// Exponential per-hop SNR densities evaluated at eta.
struct HopPdfs {
    double pdf_h = 0.0;
    double pdf_g = 0.0;
};

inline HopPdfs hop_pdfs(const CascadeStats& cs, double eta) {
    if (eta < 0.0) throw std::invalid_argument("hop_pdfs: eta must be nonnegative");
    return HopPdfs{std::exp(-eta / cs.gamma_hp) / cs.gamma_hp,
                   std::exp(-eta / cs.gamma_gp) / cs.gamma_gp};
}

/// Small-argument reduction of the cascade density: an exponential with
/// rate 1/gamma_hp + 1/gamma_gp.
inline double cascade_pdf_simplified(const CascadeStats& cs, double eta) {
    const double rate = 1.0 / cs.gamma_hp + 1.0 / cs.gamma_gp;
    return rate * std::exp(-eta * rate);
}

/// Full cascade density with modified Bessel functions of the second
/// kind (orders 0 and 1). The k1 singularity at eta = 0 is handled by
/// the small-argument reduction.
inline double cascade_pdf(const CascadeStats& cs, double eta,
                          bool simplified = false) {
    if (simplified || eta <= 0.0) return cascade_pdf_simplified(cs, eta);
    const double prod = cs.gamma_hp * cs.gamma_gp;
    const double x = 2.0 * eta / std::sqrt(prod);
    const double k0 = std::cyl_bessel_k(0.0, x);
    const double k1 = std::cyl_bessel_k(1.0, x);
    const double sum = cs.gamma_hp + cs.gamma_gp;
    const double body =
        2.0 / prod * k0 + sum / (prod * std::sqrt(prod)) * k1 * 2.0 * eta;
    return body * std::exp(-eta * sum / prod);
}

inline double cascade_cdf(const CascadeStats& cs, double eta) {
    if (eta < 0.0) throw std::invalid_argument("cascade_cdf: eta must be nonnegative");
    return 1.0 - std::exp(-eta * (1.0 / cs.gamma_hp + 1.0 / cs.gamma_gp));
}

/// First-order (high-SNR) expansion of the cascade CDF.
inline double cdf_first_order(const CascadeStats& cs, double eta) {
    if (eta < 0.0) throw std::invalid_argument("cdf_first_order: eta must be nonnegative");
    return eta * (1.0 / cs.gamma_hp + 1.0 / cs.gamma_gp);
}

/// Analytic bit error rate of the optimized link. Valid in the high-SNR
/// regime; results with optimal SNR below 10 carry the low_snr flag.
struct BerResult {
    double value = 0.0;
    double snr_star = 0.0;
    bool low_snr = false;
};

inline BerResult optimal_ber(const AllocationFactors& a, const HopGains& hg,
                             double total_power) {
    const double ta = (a.alpha_r + 2.0 * a.alpha_a) * hg.h;
    const double tb = (a.alpha_r + 2.0 * a.alpha_b) * hg.g;
    if (!(a.alpha_r > 0.0) || !(ta > 0.0) || !(tb > 0.0))
        throw std::domain_error("optimal_ber: zero allocation");
    BerResult r;
    // gamma(3/2) / sqrt(pi) = 1/2 exactly.
    r.value = 0.5 / (a.alpha_r * total_power) * (1.0 / ta + 1.0 / tb);
    r.snr_star = optimal_snr(a, hg, total_power);
    r.low_snr = r.snr_star < 10.0;
    return r;
}

}  // namespace uavrelay

#endif
