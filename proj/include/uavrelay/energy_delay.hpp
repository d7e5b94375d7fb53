// Per-bit energy and per-bit transmission-time models as functions of the
// allocation factors.
#ifndef UAVRELAY_ENERGY_DELAY_HPP
#define UAVRELAY_ENERGY_DELAY_HPP

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

#include "uavrelay/allocation.hpp"
#include "uavrelay/channel.hpp"

namespace uavrelay {

/// Which printed form of the per-bit transmission time to evaluate.
/// AsPrinted follows the published expressions verbatim; Symmetric is
/// rederived from the high-SNR rates as q = 2 / log2(1 + snr). The two
/// are algebraically equivalent; both are kept so output rows can record
/// which route produced them.
enum class QModel { AsPrinted, Symmetric };

inline const char* to_string(QModel m) {
    return m == QModel::AsPrinted ? "as-printed" : "symmetric";
}

/// A per-bit transmission time that may be unbounded (no relay power or a
/// dead hop); kept explicit instead of relying on IEEE infinity so sweeps
/// can filter such rows.
struct Delay {
    double seconds = 0.0;
    bool unbounded = false;

    static Delay of(double s) { return Delay{s, false}; }
    static Delay infinite() {
        return Delay{std::numeric_limits<double>::infinity(), true};
    }
};

struct BitEnergy {
    double at_a = 0.0;  // joules per bit at S_a
    double at_b = 0.0;

    double total() const { return at_a + at_b; }
};

struct BitTime {
    Delay at_a;
    Delay at_b;

    bool bounded() const { return !at_a.unbounded && !at_b.unbounded; }
};

/// Per-bit energies for a given per-bit time q.
inline BitEnergy bit_energy(const AllocationFactors& a, const HopGains& hg,
                            double q) {
    if (!(q > 0.0)) throw std::invalid_argument("bit_energy: q must be positive");
    const double growth = std::exp2(2.0 / q) - 1.0;
    return BitEnergy{
        q * ((a.alpha_r + a.alpha_a) * hg.h + a.alpha_b * hg.g) * growth,
        q * (a.alpha_a * hg.h + (a.alpha_r + a.alpha_b) * hg.g) * growth};
}

inline double total_energy(const AllocationFactors& a, const HopGains& hg,
                           double q) {
    return bit_energy(a, hg, q).total();
}

namespace detail {

// High-SNR arguments of the per-bit time logarithms; identical values
// reached by the two printed routes.
inline double q_arg_a(const AllocationFactors& a, const HopGains& hg,
                      double total_power, QModel m) {
    if (m == QModel::AsPrinted) {
        const double den = a.alpha_r + a.alpha_a + a.alpha_b * hg.g / hg.h;
        return den > 0.0 ? hg.g * total_power * a.alpha_r * a.alpha_b / den : 0.0;
    }
    return snr_high(hg, total_power, a).at_a;
}

inline double q_arg_b(const AllocationFactors& a, const HopGains& hg,
                      double total_power, QModel m) {
    if (m == QModel::AsPrinted) {
        const double den = a.alpha_a + (a.alpha_r + a.alpha_b) * hg.g / hg.h;
        return den > 0.0 ? hg.g * total_power * a.alpha_r * a.alpha_a / den : 0.0;
    }
    return snr_high(hg, total_power, a).at_b;
}

}  // namespace detail

/// Per-bit transmission times q_a, q_b. A hop that carries no rate
/// (alpha_r * alpha_b = 0 for q_a, alpha_r * alpha_a = 0 for q_b, or a
/// dead channel gain) yields an explicit unbounded delay.
inline BitTime bit_time(const AllocationFactors& a, const HopGains& hg,
                        double total_power, QModel m = QModel::AsPrinted) {
    BitTime out{Delay::infinite(), Delay::infinite()};
    if (!(hg.h > 0.0) || !(hg.g > 0.0)) return out;
    if (a.alpha_r * a.alpha_b > 0.0) {
        const double snr = detail::q_arg_a(a, hg, total_power, m);
        if (snr > 0.0) out.at_a = Delay::of(2.0 / std::log2(1.0 + snr));
    }
    if (a.alpha_r * a.alpha_a > 0.0) {
        const double snr = detail::q_arg_b(a, hg, total_power, m);
        if (snr > 0.0) out.at_b = Delay::of(2.0 / std::log2(1.0 + snr));
    }
    return out;
}

/// Total transmit power budget over the forwarding slots, boundary
/// inclusive.
inline bool power_budget_ok(std::span<const NodePowers> per_slot,
                            double total_power) {
    double sum = 0.0;
    for (const NodePowers& p : per_slot) sum += p.p_a + p.p_r + p.p_b;
    return sum <= total_power;
}

}  // namespace uavrelay

#endif
