// UAV flight geometry: polar waypoints, Cartesian transforms and the two
// hop distances of a relay link whose end users sit at (+-d, 0, 0).
#ifndef UAVRELAY_GEOMETRY_HPP
#define UAVRELAY_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace uavrelay {

/// UAV position in polar coordinates measured from the flight-path
/// center O: radial distance r [m], azimuth theta [rad], elevation phi [rad].
struct PolarPosition {
    double r = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

struct Waypoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;  // altitude, nonnegative
};

/// Half user separation d and the two hop distances of the relay link.
struct LinkGeometry {
    double d = 0.0;    // users at +-d on the x axis
    double d_a = 0.0;  // S_a -> R
    double d_b = 0.0;  // R -> S_b
};

/// A flight path of duration T split into N equal slots; the UAV is held
/// constant within a slot.
struct Trajectory {
    std::vector<PolarPosition> waypoints;
    double duration = 0.0;  // seconds
    int slot_count = 2;     // N >= 2

    double slot_length() const { return duration / slot_count; }
};

struct SlotGeometry {
    int slot = 0;  // 1-based slot index
    PolarPosition position;
    LinkGeometry link;
};

inline Waypoint cartesian_from_polar(const PolarPosition& p) {
    return Waypoint{p.r * std::cos(p.theta), p.r * std::sin(p.theta),
                    p.r * std::sin(p.phi)};
}

/// Hop distances for a UAV at polar position p with users separated by 2d.
/// Throws std::domain_error when the UAV coincides with a user (the
/// radicand becomes non-positive and downstream path loss diverges).
inline LinkGeometry hop_distances(double d, const PolarPosition& p) {
    if (!(d > 0.0)) throw std::invalid_argument("hop_distances: d must be positive");
    const double base = d * d + 0.5 * p.r * p.r * (3.0 - std::cos(2.0 * p.phi));
    const double psi = 2.0 * p.r * d * std::cos(p.theta);
    const double ra = base - psi;
    const double rb = base + psi;
    if (!(ra > 0.0) || !(rb > 0.0))
        throw std::domain_error("hop_distances: UAV coincides with a user node");
    return LinkGeometry{d, std::sqrt(ra), std::sqrt(rb)};
}

namespace detail {

inline PolarPosition lerp(const PolarPosition& a, const PolarPosition& b, double t) {
    return PolarPosition{a.r + t * (b.r - a.r), a.theta + t * (b.theta - a.theta),
                         a.phi + t * (b.phi - a.phi)};
}

// Position at normalized path parameter s in [0,1], piecewise linear in
// (r, theta, phi) over the waypoint polyline.
inline PolarPosition position_at(const std::vector<PolarPosition>& wps, double s) {
    if (wps.size() == 1) return wps.front();
    const double x = s * static_cast<double>(wps.size() - 1);
    auto seg = static_cast<std::size_t>(x);
    if (seg >= wps.size() - 1) seg = wps.size() - 2;
    return lerp(wps[seg], wps[seg + 1], x - static_cast<double>(seg));
}

}  // namespace detail

/// One LinkGeometry per slot. Waypoint lists shorter than the slot count
/// are interpolated linearly in polar coordinates.
inline std::vector<SlotGeometry> sample_trajectory(double d, const Trajectory& t) {
    if (t.waypoints.empty())
        throw std::invalid_argument("sample_trajectory: empty waypoint list");
    if (t.slot_count < 2)
        throw std::invalid_argument("sample_trajectory: slot count must be >= 2");
    std::vector<SlotGeometry> out;
    out.reserve(static_cast<std::size_t>(t.slot_count));
    for (int n = 0; n < t.slot_count; ++n) {
        const double s = t.slot_count > 1
                             ? static_cast<double>(n) / (t.slot_count - 1)
                             : 0.0;
        const PolarPosition p = detail::position_at(t.waypoints, s);
        out.push_back(SlotGeometry{n + 1, p, hop_distances(d, p)});
    }
    return out;
}

/// Circular orbit at constant r and phi with theta swept uniformly over
/// one revolution; the default experimental flight path.
inline Trajectory circular_orbit(double r, double phi, double duration, int slots) {
    Trajectory t;
    t.duration = duration;
    t.slot_count = slots;
    t.waypoints.reserve(static_cast<std::size_t>(slots));
    for (int n = 0; n < slots; ++n) {
        const double theta = 2.0 * M_PI * n / slots;
        t.waypoints.push_back(PolarPosition{r, theta, phi});
    }
    return t;
}

}  // namespace uavrelay

#endif
