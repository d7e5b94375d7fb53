// Scalarized energy-delay minimization over the allocation simplex:
// closed-form candidate solutions, derivative and convexity diagnostics,
// and an independent projected-gradient solver used as oracle/fallback.
#ifndef UAVRELAY_OPTIMIZER_HPP
#define UAVRELAY_OPTIMIZER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavrelay/ber.hpp"
#include "uavrelay/energy_delay.hpp"
#include "uavrelay/rng.hpp"

namespace uavrelay {

/// Scalarization weights for (E_a, E_b, q_a + q_b); each in (0, 1] with
/// sum at most 1.
struct WeightVector {
    double w_a = 1.0 / 3.0;
    double w_b = 1.0 / 3.0;
    double w_r = 1.0 / 3.0;

    bool valid() const {
        return w_a > 0.0 && w_a <= 1.0 && w_b > 0.0 && w_b <= 1.0 && w_r > 0.0 &&
               w_r <= 1.0 && w_a + w_b + w_r <= 1.0 + 1e-12;
    }
};

struct OptimalAllocation {
    AllocationFactors alloc;
    double q_star = 0.0;   // seconds per bit, from the optimal-delay form
    double e_star = 0.0;   // joules per bit, total
    double f_value = 0.0;  // scalarized objective at alloc
    std::string root_branch;  // "plus" | "minus" | "fallback" | "symmetric-limit" | "numerical"
    bool converged = false;
    int iterations = 0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Weighted objective F = w_a E_a + w_b E_b + w_r (q_a + q_b). The q used
/// inside the energy terms is the caller's pinned value when given,
/// otherwise the mean of the allocation's own bit times. Allocations with
/// unbounded delay yield an explicit +infinity.
inline double scalarized_objective(const AllocationFactors& a,
                                   const WeightVector& w, const HopGains& hg,
                                   double total_power,
                                   QModel m = QModel::AsPrinted,
                                   std::optional<double> pinned_q = std::nullopt) {
    const BitTime bt = bit_time(a, hg, total_power, m);
    if (!bt.bounded()) return kInfinity;
    const double q = pinned_q ? *pinned_q
                              : 0.5 * (bt.at_a.seconds + bt.at_b.seconds);
    const BitEnergy e = bit_energy(a, hg, q);
    return w.w_a * e.at_a + w.w_b * e.at_b +
           w.w_r * (bt.at_a.seconds + bt.at_b.seconds);
}

namespace detail {

using Vec3 = std::array<double, 3>;          // component order: alpha_a, alpha_b, alpha_r
using Mat3 = std::array<std::array<double, 3>, 3>;

// Value, gradient and Hessian of one per-bit time q = 2 ln2 / ln(1+snr)
// where snr = k * x * y / D(alpha), a ratio of a bilinear numerator to a
// linear denominator.
struct QDerivs {
    double q = 0.0;
    Vec3 grad{};
    Mat3 hess{};
};

inline QDerivs q_derivs(double num_coeff, int xi, int yi,  // snr num = k*alpha[xi]*alpha[yi]
                        const Vec3& alpha, const Vec3& den_coeff) {
    QDerivs out;
    const double x = alpha[xi];
    const double y = alpha[yi];
    double den = 0.0;
    for (int i = 0; i < 3; ++i) den += den_coeff[i] * alpha[i];
    const double num = num_coeff * x * y;
    if (!(den > 0.0) || !(num > 0.0)) {
        out.q = kInfinity;
        return out;
    }
    Vec3 dn{0.0, 0.0, 0.0};
    dn[xi] = num_coeff * y;
    dn[yi] = num_coeff * x;
    Mat3 d2n{};
    d2n[xi][yi] += num_coeff;
    d2n[yi][xi] += num_coeff;

    const double snr = num / den;
    Vec3 dsnr;
    Mat3 d2snr;
    for (int i = 0; i < 3; ++i)
        dsnr[i] = dn[i] / den - num * den_coeff[i] / (den * den);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d2snr[i][j] = d2n[i][j] / den -
                          (dn[i] * den_coeff[j] + dn[j] * den_coeff[i]) / (den * den) +
                          2.0 * num * den_coeff[i] * den_coeff[j] / (den * den * den);

    const double ln2x2 = 2.0 * M_LN2;
    const double l = std::log1p(snr);
    out.q = ln2x2 / l;
    const double dq = -ln2x2 / ((1.0 + snr) * l * l);
    const double d2q = ln2x2 * (l + 2.0) / ((1.0 + snr) * (1.0 + snr) * l * l * l);
    for (int i = 0; i < 3; ++i) out.grad[i] = dq * dsnr[i];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.hess[i][j] = d2q * dsnr[i] * dsnr[j] + dq * d2snr[i][j];
    return out;
}

// The two per-bit times of an allocation, with derivatives. Uses the
// high-SNR form snr_a = P*ar*ab*H*G / ((ar+aa)H + ab G) and its mirror.
inline std::pair<QDerivs, QDerivs> bit_time_derivs(const AllocationFactors& a,
                                                   const HopGains& hg,
                                                   double total_power) {
    const Vec3 alpha{a.alpha_a, a.alpha_b, a.alpha_r};
    const double k = total_power * hg.h * hg.g;
    const QDerivs qa = q_derivs(k, 2, 1, alpha, Vec3{hg.h, hg.g, hg.h});
    const QDerivs qb = q_derivs(k, 2, 0, alpha, Vec3{hg.h, hg.g, hg.g});
    return {qa, qb};
}

}  // namespace detail

/// Analytic gradient of the objective with the energy-term q pinned, so
/// it is the exact derivative of scalarized_objective(..., pinned_q).
/// Requires an interior point (all factors positive).
inline std::array<double, 3> gradient(const AllocationFactors& a,
                                      const WeightVector& w, const HopGains& hg,
                                      double total_power, double pinned_q) {
    if (!(a.alpha_a > 0.0 && a.alpha_b > 0.0 && a.alpha_r > 0.0))
        throw std::domain_error("gradient: requires an interior point");
    const double growth = std::exp2(2.0 / pinned_q) - 1.0;
    const double e = pinned_q * growth * (w.w_a + w.w_b);
    auto [qa, qb] = detail::bit_time_derivs(a, hg, total_power);
    std::array<double, 3> g{
        e * hg.h, e * hg.g,
        pinned_q * growth * (w.w_a * hg.h + w.w_b * hg.g)};
    for (int i = 0; i < 3; ++i) g[i] += w.w_r * (qa.grad[i] + qb.grad[i]);
    return g;
}

/// The three mixed second partials of the objective, split into the
/// contributions of the q_a and q_b delay terms (the energy terms are
/// linear in the factors and contribute nothing). Row order:
/// d2F/da db, d2F/db dr, d2F/dr da.
struct MixedPartials {
    std::array<std::array<double, 2>, 3> terms{};

    double row_sum(int i) const { return terms[i][0] + terms[i][1]; }
};

inline MixedPartials second_derivatives(const AllocationFactors& a,
                                        const WeightVector& w, const HopGains& hg,
                                        double total_power) {
    if (!(a.alpha_a > 0.0 && a.alpha_b > 0.0 && a.alpha_r > 0.0))
        throw std::domain_error("second_derivatives: requires an interior point");
    auto [qa, qb] = detail::bit_time_derivs(a, hg, total_power);
    MixedPartials mp;
    constexpr int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};  // (a,b), (b,r), (r,a)
    for (int row = 0; row < 3; ++row) {
        const int i = pairs[row][0];
        const int j = pairs[row][1];
        mp.terms[row][0] = w.w_r * qa.hess[i][j];
        mp.terms[row][1] = w.w_r * qb.hess[i][j];
    }
    return mp;
}

/// Full 3x3 Hessian of the objective with the energy-term q pinned.
inline detail::Mat3 objective_hessian(const AllocationFactors& a,
                                      const WeightVector& w, const HopGains& hg,
                                      double total_power) {
    auto [qa, qb] = detail::bit_time_derivs(a, hg, total_power);
    detail::Mat3 h{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            h[i][j] = w.w_r * (qa.hess[i][j] + qb.hess[i][j]);
    return h;
}

/// Randomized convexity check of the objective on the feasible set: the
/// Hessian is bordered with the gradient of the total-power constraint
/// (the all-ones vector), so admissible directions y satisfy sum(y) = 0
/// and the bordered quadratic form reduces to y^T Hess y. Returns false
/// when any sampled direction dips below a scale-relative -1e-9.
inline bool bordered_hessian_psd(const AllocationFactors& a, const WeightVector& w,
                                 const HopGains& hg, double total_power,
                                 int trials, std::uint64_t seed = 0x5eedULL) {
    const auto h = objective_hessian(a, w, hg, total_power);
    double norm = 0.0;
    for (const auto& row : h)
        for (double v : row) norm += v * v;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) return true;

    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        double y[3];
        for (double& v : y) v = 2.0 * rng.uniform01() - 1.0;
        const double mean = (y[0] + y[1] + y[2]) / 3.0;
        double yy = 0.0;
        for (double& v : y) {
            v -= mean;  // project onto the constraint tangent space
            yy += v * v;
        }
        if (yy < 1e-12) continue;
        double quad = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) quad += y[i] * h[i][j] * y[j];
        if (quad < -1e-9 * norm * yy) return false;
    }
    return true;
}

namespace detail {

// Euclidean projection onto {x >= 0, sum x <= 1}.
inline AllocationFactors project_simplex(double xa, double xb, double xr) {
    double v[3] = {std::max(xa, 0.0), std::max(xb, 0.0), std::max(xr, 0.0)};
    if (v[0] + v[1] + v[2] <= 1.0) return {v[0], v[1], v[2]};
    // Project (xa,xb,xr) onto the canonical simplex sum = 1.
    double u[3] = {xa, xb, xr};
    std::sort(u, u + 3, std::greater<double>());
    double css = 0.0, theta = 0.0;
    for (int i = 0; i < 3; ++i) {
        css += u[i];
        if (u[i] - (css - 1.0) / (i + 1) > 0.0) theta = (css - 1.0) / (i + 1);
    }
    return {std::max(xa - theta, 0.0), std::max(xb - theta, 0.0),
            std::max(xr - theta, 0.0)};
}

struct PgdResult {
    AllocationFactors alloc;
    double f = kInfinity;
    int iterations = 0;
};

// Finite-difference gradient of the unpinned objective; the analytic
// gradient assumes a pinned q and would be biased here.
inline Vec3 fd_gradient(const AllocationFactors& a, const WeightVector& w,
                        const HopGains& hg, double total_power, QModel m) {
    Vec3 g{};
    const double h = 1e-7;
    const double base[3] = {a.alpha_a, a.alpha_b, a.alpha_r};
    for (int i = 0; i < 3; ++i) {
        double lo[3] = {base[0], base[1], base[2]};
        double hi[3] = {base[0], base[1], base[2]};
        lo[i] -= h;
        hi[i] += h;
        const double flo = scalarized_objective({lo[0], lo[1], lo[2]}, w, hg,
                                                total_power, m);
        const double fhi = scalarized_objective({hi[0], hi[1], hi[2]}, w, hg,
                                                total_power, m);
        g[i] = (fhi - flo) / (2.0 * h);
    }
    return g;
}

inline PgdResult projected_gradient(AllocationFactors x, const WeightVector& w,
                                    const HopGains& hg, double total_power,
                                    QModel m, int max_iter = 400) {
    PgdResult res;
    double f = scalarized_objective(x, w, hg, total_power, m);
    int it = 0;
    for (; it < max_iter; ++it) {
        if (!std::isfinite(f)) break;
        const Vec3 g = fd_gradient(x, w, hg, total_power, m);
        double step = 0.25;
        bool improved = false;
        for (int ls = 0; ls < 40; ++ls) {
            AllocationFactors cand = project_simplex(
                x.alpha_a - step * g[0], x.alpha_b - step * g[1],
                x.alpha_r - step * g[2]);
            const double fc = scalarized_objective(cand, w, hg, total_power, m);
            if (fc < f - 1e-15) {
                x = cand;
                f = fc;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    // Pattern-search polish; tightens the last digits the gradient steps
    // leave on the table near the constraint boundary.
    double step = 0.02;
    while (step > 1e-9) {
        bool improved = false;
        for (int i = 0; i < 3; ++i) {
            for (double s : {step, -step}) {
                double v[3] = {x.alpha_a, x.alpha_b, x.alpha_r};
                v[i] += s;
                AllocationFactors cand = project_simplex(v[0], v[1], v[2]);
                const double fc = scalarized_objective(cand, w, hg, total_power, m);
                if (fc < f - 1e-15) {
                    x = cand;
                    f = fc;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    res.alloc = x;
    res.f = f;
    res.iterations = it;
    return res;
}

}  // namespace detail

/// Optimal per-bit time at a converged allocation.
inline double optimal_delay(const AllocationFactors& a, const HopGains& hg,
                            double total_power) {
    const double snr_a = detail::q_arg_a(a, hg, total_power, QModel::AsPrinted);
    const double snr_b = detail::q_arg_b(a, hg, total_power, QModel::AsPrinted);
    const double la = std::log2(1.0 + snr_a);
    const double lb = std::log2(1.0 + snr_b);
    const double phi = 1.0 + la + la * (1.0 + snr_b) + lb;
    if (!std::isfinite(phi))
        throw std::domain_error("optimal_delay: non-finite rate aggregate");
    return 2.0 / (1.0 + std::log2(1.0 + phi));
}

/// Optimal total per-bit energy at a converged allocation, evaluated at
/// its optimal delay.
inline double optimal_energy(const AllocationFactors& a, double q_star,
                             const HopGains& hg) {
    if (a.sum() == 0.0) return 0.0;
    const double growth = std::exp2(2.0 / q_star) - 1.0;
    return q_star * growth *
           ((a.alpha_r + 2.0 * a.alpha_a) * hg.h +
            (a.alpha_r + 2.0 * a.alpha_b) * hg.g);
}

/// Independent numerical solver: projected gradient descent from 16
/// deterministic interior starts plus a coarse-grid incumbent. Fully
/// deterministic for fixed inputs.
inline OptimalAllocation numerical_allocation(const WeightVector& w,
                                              const HopGains& hg,
                                              double total_power,
                                              QModel m = QModel::AsPrinted) {
    std::vector<AllocationFactors> starts;
    const double levels[4] = {0.08, 0.25, 0.45, 0.7};
    for (double aa : {0.1, 0.3})
        for (double ab : {0.1, 0.3})
            for (double ar : {levels[0], levels[1], levels[2], levels[3]})
                if (aa + ab + ar <= 1.0) starts.push_back({aa, ab, ar});
    // Coarse-grid incumbent, step 0.02 on the open part of the simplex.
    AllocationFactors best_grid;
    double best_grid_f = kInfinity;
    for (int i = 1; i < 50; ++i)
        for (int j = 1; j < 50 - i; ++j)
            for (int k = 1; k <= 50 - i - j; ++k) {
                AllocationFactors cand{i * 0.02, j * 0.02, k * 0.02};
                const double f = scalarized_objective(cand, w, hg, total_power, m);
                if (f < best_grid_f) {
                    best_grid_f = f;
                    best_grid = cand;
                }
            }
    if (std::isfinite(best_grid_f)) starts.push_back(best_grid);

    OptimalAllocation out;
    out.root_branch = "numerical";
    double best_f = kInfinity;
    int total_iter = 0;
    for (const AllocationFactors& s : starts) {
        const detail::PgdResult r =
            detail::projected_gradient(s, w, hg, total_power, m);
        total_iter += r.iterations;
        if (r.f < best_f) {
            best_f = r.f;
            out.alloc = r.alloc;
        }
    }
    out.f_value = best_f;
    out.converged = std::isfinite(best_f);
    out.iterations = total_iter;
    if (out.converged) {
        out.q_star = optimal_delay(out.alloc, hg, total_power);
        out.e_star = optimal_energy(out.alloc, out.q_star, hg);
    }
    return out;
}

namespace detail {

struct ClosedFormCandidate {
    AllocationFactors alloc;
    bool valid = false;
};

// One evaluation of the printed closed-form expressions at a given q.
// sign is the +- branch of the quadratic root.
inline ClosedFormCandidate closed_form_eval(const WeightVector& w,
                                            const HopGains& hg, double total_power,
                                            double q, double sign) {
    ClosedFormCandidate c;
    const double h = hg.h, g = hg.g, p = total_power;
    const double w2 = w.w_b, w3 = w.w_r;
    const double s = q * (std::exp2(2.0 / q) - 1.0);
    const double term = s * (h - g) * w2 / (2.0 * h * g * p * w3);
    const double psi_a = 2.0 * (g - h) * (1.0 - (term - 1.0 / g) * (g - h));
    const double rad_bc = g * s * (h - g) * (1.0 - w3) / (2.0 * h * p * w3);
    const double rad_b = s * (h - g) * (1.0 - w3) / (2.0 * h * g * p * w3);
    if (rad_bc < 0.0 || rad_b < 0.0) return c;
    const double root_bc = std::sqrt(rad_bc);
    const double psi_b = (h / g - 1.0) * root_bc + 2.0 * g;
    const double psi_c = root_bc - g;
    const double disc = psi_b * psi_b + 2.0 * psi_a * psi_c;
    if (disc < 0.0 || psi_a == 0.0) return c;
    const double aa = (psi_b + sign * std::sqrt(disc)) / psi_a;
    const double ab = (aa * (h / g - 1.0) + 1.0) * std::sqrt(rad_b);
    const double ar = 1.0 - aa - ab;
    c.alloc = {aa, ab, ar};
    c.valid = std::isfinite(aa) && std::isfinite(ab) && c.alloc.feasible(1e-12);
    return c;
}

}  // namespace detail

/// Closed-form allocation: evaluates both root branches of the printed
/// solution under a damped fixed-point iteration on q, keeps the feasible
/// branch with the lower objective, and falls back to the numerical
/// solver when neither branch is applicable. Equal hop gains make the
/// root expressions degenerate (all radicals vanish); that case goes
/// through the numerical route as the symmetric limit.
inline OptimalAllocation closed_form_allocation(const WeightVector& w,
                                                const HopGains& hg,
                                                double total_power,
                                                double q_init = 2.0,
                                                QModel m = QModel::AsPrinted) {
    if (!w.valid()) throw std::invalid_argument("closed_form_allocation: bad weights");
    const double scale = std::max(std::abs(hg.h), std::abs(hg.g));
    if (std::abs(hg.h - hg.g) <= 1e-9 * scale) {
        OptimalAllocation out = numerical_allocation(w, hg, total_power, m);
        out.root_branch = "symmetric-limit";
        if (w.w_a == w.w_b) {
            // Symmetric problem; average out solver asymmetry.
            const double mean = 0.5 * (out.alloc.alpha_a + out.alloc.alpha_b);
            AllocationFactors sym{mean, mean, out.alloc.alpha_r};
            const double fs = scalarized_objective(sym, w, hg, total_power, m);
            if (fs <= out.f_value) {
                out.alloc = sym;
                out.f_value = fs;
                out.q_star = optimal_delay(sym, hg, total_power);
                out.e_star = optimal_energy(sym, out.q_star, hg);
            }
        }
        return out;
    }

    struct Branch {
        double sign;
        const char* name;
    };
    OptimalAllocation best;
    best.f_value = kInfinity;
    for (const Branch b : {Branch{+1.0, "plus"}, Branch{-1.0, "minus"}}) {
        double q = q_init;
        detail::ClosedFormCandidate cand;
        bool converged = false;
        int it = 0;
        for (; it < 1000; ++it) {
            cand = detail::closed_form_eval(w, hg, total_power, q, b.sign);
            if (!cand.valid) break;
            const BitTime bt = bit_time(cand.alloc, hg, total_power, m);
            if (!bt.bounded()) break;
            const double q_new = 0.5 * (bt.at_a.seconds + bt.at_b.seconds);
            const double q_next = q + 0.5 * (q_new - q);
            if (std::abs(q_next - q) < 1e-9) {
                q = q_next;
                converged = true;
                break;
            }
            q = q_next;
        }
        if (!cand.valid || !converged) continue;
        const double f = scalarized_objective(cand.alloc, w, hg, total_power, m);
        if (f < best.f_value) {
            best.alloc = cand.alloc;
            best.f_value = f;
            best.root_branch = b.name;
            best.converged = true;
            best.iterations = it;
        }
    }
    if (!best.converged) {
        OptimalAllocation out = numerical_allocation(w, hg, total_power, m);
        out.root_branch = "fallback";
        return out;
    }
    best.q_star = optimal_delay(best.alloc, hg, total_power);
    best.e_star = optimal_energy(best.alloc, best.q_star, hg);
    // Guard against a converged but inferior closed form.
    OptimalAllocation num = numerical_allocation(w, hg, total_power, m);
    if (num.f_value < best.f_value * (1.0 - 1e-9) &&
        num.f_value < best.f_value - 1e-12) {
        num.root_branch = "fallback";
        return num;
    }
    return best;
}

/// One row of a weight sweep.
struct TradeoffPoint {
    int weight_index = 0;
    WeightVector weights;
    AllocationFactors alloc;
    double e_a = 0.0;
    double e_b = 0.0;
    Delay q_a;
    Delay q_b;
    double f_value = 0.0;
    double q_star = 0.0;
    double e_star = 0.0;
    double snr_star = 0.0;
    double ber = 0.0;
    bool ber_low_snr = false;
    std::string root_branch;
    bool converged = false;
    bool pareto = false;  // non-dominated in (q_star, e_star)
};

inline std::vector<TradeoffPoint> tradeoff_sweep(std::span<const WeightVector> weights,
                                                 const HopGains& hg,
                                                 double total_power,
                                                 QModel m = QModel::AsPrinted) {
    if (weights.empty())
        throw std::invalid_argument("tradeoff_sweep: empty weight grid");
    std::vector<TradeoffPoint> rows;
    rows.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const OptimalAllocation oa =
            closed_form_allocation(weights[i], hg, total_power, 2.0, m);
        TradeoffPoint tp;
        tp.weight_index = static_cast<int>(i);
        tp.weights = weights[i];
        tp.alloc = oa.alloc;
        tp.f_value = oa.f_value;
        tp.q_star = oa.q_star;
        tp.e_star = oa.e_star;
        tp.root_branch = oa.root_branch;
        tp.converged = oa.converged;
        if (oa.converged) {
            const BitTime bt = bit_time(oa.alloc, hg, total_power, m);
            tp.q_a = bt.at_a;
            tp.q_b = bt.at_b;
            const double q = bt.bounded()
                                 ? 0.5 * (bt.at_a.seconds + bt.at_b.seconds)
                                 : oa.q_star;
            const BitEnergy e = bit_energy(oa.alloc, hg, q);
            tp.e_a = e.at_a;
            tp.e_b = e.at_b;
            tp.snr_star = optimal_snr(oa.alloc, hg, total_power);
            if (oa.alloc.alpha_r > 0.0) {
                const BerResult br = optimal_ber(oa.alloc, hg, total_power);
                tp.ber = br.value;
                tp.ber_low_snr = br.low_snr;
            }
        }
        rows.push_back(std::move(tp));
    }
    // Pareto flag: minimal in (q_star, e_star); dominated rows keep their
    // data and are only marked.
    for (auto& r : rows) {
        if (!r.converged) continue;
        bool dominated = false;
        for (const auto& o : rows) {
            if (&o == &r || !o.converged) continue;
            if (o.q_star <= r.q_star && o.e_star <= r.e_star &&
                (o.q_star < r.q_star || o.e_star < r.e_star)) {
                dominated = true;
                break;
            }
        }
        r.pareto = !dominated;
    }
    return rows;
}

/// Default weight grid: w_r swept over {0.05, 0.10, ..., 0.90} with the
/// remaining mass split evenly between the two energy weights.
inline std::vector<WeightVector> default_weight_grid() {
    std::vector<WeightVector> ws;
    for (int i = 1; i <= 18; ++i) {
        const double wr = 0.05 * i;
        ws.push_back(WeightVector{0.5 * (1.0 - wr), 0.5 * (1.0 - wr), wr});
    }
    return ws;
}

}  // namespace uavrelay

#endif
