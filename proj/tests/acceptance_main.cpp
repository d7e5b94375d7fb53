// Acceptance suite: ten end-to-end checks covering the optimizer oracle,
// analytic derivatives, convexity, the trade-off front shape, the scheme
// comparison, the per-bit-energy transition point, the bit-error-rate law,
// the Monte Carlo engine, determinism, and the hand-derived regression set.
// Each check prints exactly one PASS/FAIL line; the exit code is the number
// of failed checks.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "uavrelay/harness.hpp"

using namespace uavrelay;

namespace {

int g_failures = 0;

void report(int index, const char* title, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s - %s (%s)\n", index, ok ? "PASS" : "FAIL",
                title, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------- criterion 1
// The solver never loses to an exhaustive feasible-region grid at step 0.005
// on 200 seeded random instances.
void criterion_closed_form_vs_grid() {
    const auto t0 = std::chrono::steady_clock::now();
    std::atomic<int> next{0};
    std::atomic<int> passed{0};
    auto worker = [&]() {
        int t;
        while ((t = next.fetch_add(1)) < 200) {
            SplitMix64 rng = substream(0xACCE97, static_cast<std::uint64_t>(t));
            // Hop gains log-uniform in [0.01, 10], budget in [0.1, 2] W.
            const HopGains hg{
                std::exp(std::log(0.01) + rng.uniform01() * std::log(1000.0)),
                std::exp(std::log(0.01) + rng.uniform01() * std::log(1000.0))};
            const double p = 0.1 + 1.9 * rng.uniform01();
            const double wa = rng.uniform01(), wb = rng.uniform01(),
                         wr = rng.uniform01();
            const double s = wa + wb + wr;
            const WeightVector w{wa / s, wb / s, wr / s};

            const OptimalAllocation oa = closed_form_allocation(w, hg, p);
            double best = kInfinity;
            const int n = 200;  // grid step 1/200 = 0.005
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j + i <= n; ++j)
                    for (int k = 0; k + i + j <= n; ++k) {
                        const double f = scalarized_objective(
                            {i / 200.0, j / 200.0, k / 200.0}, w, hg, p,
                            QModel::AsPrinted, std::nullopt);
                        if (f < best) best = f;
                    }
            if (oa.f_value <= best * (1.0 + 1e-3) + 1e-12) ++passed;
        }
    };
    std::vector<std::future<void>> futs;
    const unsigned nt = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned i = 0; i < nt; ++i)
        futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
    const double secs = elapsed_s(t0);
    const int ok = passed.load();
    report(1, "solver matches the 0.005-step feasible-grid oracle",
           ok == 200 && secs < 60.0,
           fmt("%.0f/200 within 1e-3 relative, %.1f s", ok, secs));
}

// ---------------------------------------------------------------- criterion 2
// Analytic gradient of the pinned-time objective vs central differences at
// 100 random interior points.
void criterion_gradient_vs_fd() {
    const auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(0xACCE97 + 2);
    int ok = 0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const HopGains hg{0.1 + 5.0 * rng.uniform01(),
                          0.1 + 5.0 * rng.uniform01()};
        const double p = 0.3 + 8.0 * rng.uniform01();
        const double wr = 0.1 + 0.7 * rng.uniform01();
        const double split = 0.2 + 0.6 * rng.uniform01();
        const WeightVector w{(1.0 - wr) * split, (1.0 - wr) * (1.0 - split), wr};
        const AllocationFactors a{0.05 + 0.25 * rng.uniform01(),
                                  0.05 + 0.25 * rng.uniform01(),
                                  0.05 + 0.25 * rng.uniform01()};
        const double pq = 1.0 + 2.0 * rng.uniform01();
        const auto g = gradient(a, w, hg, p, pq);
        const double base[3] = {a.alpha_a, a.alpha_b, a.alpha_r};
        bool all = true;
        for (int i = 0; i < 3; ++i) {
            const double h = 1e-6;
            double lo[3] = {base[0], base[1], base[2]};
            double hi[3] = {base[0], base[1], base[2]};
            lo[i] -= h;
            hi[i] += h;
            const double fd =
                (scalarized_objective({hi[0], hi[1], hi[2]}, w, hg, p,
                                      QModel::AsPrinted, pq) -
                 scalarized_objective({lo[0], lo[1], lo[2]}, w, hg, p,
                                      QModel::AsPrinted, pq)) /
                (2.0 * h);
            const double rel =
                std::abs(g[i] - fd) / std::max(1.0, std::abs(fd));
            worst = std::max(worst, rel);
            if (rel > 1e-6) all = false;
        }
        if (all) ++ok;
    }
    const double secs = elapsed_s(t0);
    report(2, "analytic gradient matches finite differences",
           ok == 100 && secs < 5.0,
           fmt("%.0f/100 points, worst rel err %.2e, %.1f s", ok, worst, secs));
}

// ---------------------------------------------------------------- criterion 3
// Convexity on the feasible set: the constraint-bordered quadratic form stays
// above -1e-9 * scale for 1e4 random admissible directions at 1e2 points.
void criterion_bordered_hessian() {
    SplitMix64 rng(0xACCE97 + 3);
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
        const HopGains hg{0.1 + 5.0 * rng.uniform01(),
                          0.1 + 5.0 * rng.uniform01()};
        const double p = 0.3 + 8.0 * rng.uniform01();
        const double wr = 0.1 + 0.7 * rng.uniform01();
        const double split = 0.2 + 0.6 * rng.uniform01();
        const WeightVector w{(1.0 - wr) * split, (1.0 - wr) * (1.0 - split), wr};
        const AllocationFactors a{0.05 + 0.25 * rng.uniform01(),
                                  0.05 + 0.25 * rng.uniform01(),
                                  0.05 + 0.25 * rng.uniform01()};
        if (bordered_hessian_psd(a, w, hg, p, 10000,
                                 0xB0D3 + static_cast<std::uint64_t>(t)))
            ++ok;
    }
    report(3, "bordered-Hessian form is PSD on admissible directions",
           ok == 100, fmt("%.0f/100 points x 1e4 directions clean", ok));
}

// ---------------------------------------------------------------- criterion 4
// Energy/delay trade-off front: non-increasing energy in delay, with an
// exponential-decay profile (strictly shrinking drops over the first half).
void criterion_tradeoff_shape() {
    ExperimentConfig cfg;
    cfg.channel.gamma_a = cfg.channel.gamma_b = 1e6;  // moderate-SNR regime
    const LinkGeometry link = hop_distances(
        400.0, {cfg.geometry.orbit_r, 0.0, cfg.geometry.orbit_phi});
    const HopGains hg = effective_gains(cfg.channel, link);
    const auto pts = tradeoff_sweep(default_weight_grid(), hg, 2.0);

    std::vector<TradeoffPoint> front;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (q.q_star <= p.q_star && q.e_star <= p.e_star &&
                (q.q_star < p.q_star || q.e_star < p.e_star)) {
                dominated = true;
                break;
            }
        if (!dominated) front.push_back(p);
    }
    std::sort(front.begin(), front.end(),
              [](const TradeoffPoint& a, const TradeoffPoint& b) {
                  return a.q_star < b.q_star;
              });
    front.erase(std::unique(front.begin(), front.end(),
                            [](const TradeoffPoint& a, const TradeoffPoint& b) {
                                return std::abs(a.q_star - b.q_star) < 1e-12;
                            }),
                front.end());

    bool non_increasing = true, shrinking = true;
    std::vector<double> drops;
    for (std::size_t i = 1; i < front.size(); ++i) {
        if (front[i].e_star > front[i - 1].e_star + 1e-12) non_increasing = false;
        drops.push_back(front[i - 1].e_star - front[i].e_star);
    }
    for (std::size_t i = 1; i < drops.size() / 2; ++i)
        if (!(drops[i] < drops[i - 1])) shrinking = false;

    report(4, "trade-off front decays with shrinking energy drops",
           front.size() >= 8 && non_increasing && shrinking,
           fmt("%.0f front points, monotone=%.0f, decaying=%.0f",
               static_cast<double>(front.size()), non_increasing ? 1.0 : 0.0,
               shrinking ? 1.0 : 0.0));
}

// ---------------------------------------------------------------- criterion 5
// Optimized vs fixed equal-split energy at the default distance sweep and
// 2 W budget: the mean per-bit-energy reduction lands in [5%, 30%].
void criterion_scheme_energy_reduction() {
    const ExperimentConfig cfg;
    double sum = 0.0;
    int n = 0;
    for (const double d : cfg.d_values()) {
        const LinkGeometry link = hop_distances(
            d, {cfg.geometry.orbit_r, 0.0, cfg.geometry.orbit_phi});
        const HopGains hg = effective_gains(cfg.channel, link);
        const BitTime bt_sn = bit_time(equal_split(), hg, cfg.power.total);
        const double q_sn = 0.5 * (bt_sn.at_a.seconds + bt_sn.at_b.seconds);
        const double e_sn = total_energy(equal_split(), hg, q_sn);
        for (const WeightVector& w : cfg.weight_grid()) {
            const OptimalAllocation oa =
                closed_form_allocation(w, hg, cfg.power.total);
            const BitTime bt = bit_time(oa.alloc, hg, cfg.power.total);
            const double q = 0.5 * (bt.at_a.seconds + bt.at_b.seconds);
            const double e_pa = total_energy(oa.alloc, hg, q);
            sum += (e_sn - e_pa) / e_sn;
            ++n;
        }
    }
    const double mean = sum / n;
    report(5, "optimized split cuts mean per-bit energy by 5-30%",
           mean >= 0.05 && mean <= 0.30, fmt("mean reduction %.1f%%", 100 * mean));
}

// ---------------------------------------------------------------- criterion 6
// Per-bit energy vs total power: decays then flattens; the knee of a
// two-segment least-squares fit lies in [10, 20] dBm and the top-of-range
// slope is at most 10% of the bottom-of-range slope.
void criterion_energy_transition_point() {
    ExperimentConfig cfg;
    cfg.channel.gamma_a = cfg.channel.gamma_b = 1e8;  // interior-optimum regime
    const LinkGeometry link = hop_distances(
        400.0, {cfg.geometry.orbit_r, 0.0, cfg.geometry.orbit_phi});
    const HopGains hg = effective_gains(cfg.channel, link);
    const WeightVector w{0.25, 0.25, 0.5};

    std::vector<double> xs, ys;
    for (double dbm = 0.0; dbm <= 33.0001; dbm += 1.0) {
        const double p = dbm_to_watts(dbm);
        const OptimalAllocation oa = closed_form_allocation(w, hg, p);
        const BitTime bt = bit_time(oa.alloc, hg, p);
        const double q = 0.5 * (bt.at_a.seconds + bt.at_b.seconds);
        xs.push_back(dbm);
        ys.push_back(total_energy(oa.alloc, hg, q));
    }

    // Two-segment piecewise-linear least squares; the knee is the breakpoint.
    const int n = static_cast<int>(xs.size());
    auto sse = [&](int lo, int hi) {
        const int m = hi - lo;
        if (m < 2) return 0.0;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = lo; i < hi; ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        const double a = (sy - b * sx) / m;
        double e = 0.0;
        for (int i = lo; i < hi; ++i) {
            const double r = ys[i] - a - b * xs[i];
            e += r * r;
        }
        return e;
    };
    int knee = 1;
    double best = kInfinity;
    for (int k = 2; k < n - 2; ++k) {
        const double e = sse(0, k) + sse(k, n);
        if (e < best) {
            best = e;
            knee = k;
        }
    }
    const double knee_dbm = xs[knee];
    const double slope_bottom = std::abs(ys[1] - ys[0]);
    const double slope_top = std::abs(ys[n - 1] - ys[n - 2]);
    const bool flattens = slope_top <= 0.10 * slope_bottom;
    report(6, "per-bit energy knee in [10, 20] dBm with flattened tail",
           knee_dbm >= 10.0 && knee_dbm <= 20.0 && flattens,
           fmt("knee %.0f dBm, slope ratio %.3f", knee_dbm,
               slope_top / slope_bottom));
}

// ---------------------------------------------------------------- criterion 7
// Analytic bit-error-rate law vs Monte Carlo at the canonical operating
// allocation (relay takes half the budget, ends split the rest equally) on a
// symmetric link: within 20% wherever BER >= 1e-4 and the effective SNR is
// at least 10, and the analytic curve has log-log slope -1 in total power.
void criterion_ber_law() {
    const auto t0 = std::chrono::steady_clock::now();
    const AllocationFactors a{0.25, 0.25, 0.5};
    const LinkGeometry unit_link{1.0, 1.0, 1.0};
    const HopGains hg{1.0, 1.0};
    const std::vector<double> powers{20.0, 50.0, 100.0, 200.0, 400.0, 1000.0};

    bool agree = true;
    double worst = 0.0;
    std::vector<double> lx, ly;
    for (const double p : powers) {
        const BerResult an = optimal_ber(a, hg, p);
        if (an.snr_star < 10.0 || an.value < 1e-4) continue;
        ChannelParams cp;
        cp.total_power = p;
        TrialConfig tc;
        tc.samples = 100000;
        tc.seed = 1;
        const EmpiricalResult er = simulate_two_hop(tc, a, unit_link, cp);
        const double mc = 0.5 * (er.ber_a + er.ber_b);
        const double rel = std::abs(an.value - mc) / mc;
        worst = std::max(worst, rel);
        if (rel > 0.20) agree = false;
        lx.push_back(std::log(p));
        ly.push_back(std::log(an.value));
    }
    // Least-squares slope of log(BER) vs log(P).
    const double m = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double secs = elapsed_s(t0);
    report(7, "analytic BER tracks Monte Carlo with diversity order one",
           agree && std::abs(slope + 1.0) <= 0.05 && secs < 180.0,
           fmt("worst rel err %.1f%%, slope %.4f, %.0f s", 100 * worst, slope,
               secs));
}

// ---------------------------------------------------------------- criterion 8
// Monte Carlo engine self-test against single-link oracles.
void criterion_mc_self_test() {
    const double single = simulate_single_hop_rayleigh_bpsk(100000, 5, 1.0);
    const bool single_ok = std::abs(single - 0.14645) < 0.005;

    ChannelParams quiet;
    quiet.noise_var = 1e-12;
    quiet.gamma_a = quiet.gamma_b = 1e12;
    quiet.total_power = 2.0;
    TrialConfig tq;
    tq.samples = 2000;
    tq.seed = 9;
    const EmpiricalResult rq =
        simulate_two_hop(tq, equal_split(), {1.0, 1.0, 1.0}, quiet);
    const bool noise_free_ok = rq.ber_a == 0.0 && rq.ber_b == 0.0;

    ChannelParams cp;
    TrialConfig tz;
    tz.samples = 20000;
    tz.seed = 11;
    const EmpiricalResult rz =
        simulate_two_hop(tz, {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, cp);
    const double slack = 3.0 * 0.5 / std::sqrt(static_cast<double>(tz.samples));
    const bool coin_ok =
        std::abs(rz.ber_a - 0.5) < slack && std::abs(rz.ber_b - 0.5) < slack;

    report(8, "Monte Carlo engine matches single-link oracles",
           single_ok && noise_free_ok && coin_ok,
           fmt("single-hop %.5f, noise-free %.0f errors, coin flip %.4f",
               single, rq.ber_a + rq.ber_b, rz.ber_a));
}

// ---------------------------------------------------------------- criterion 9
// Determinism: repeated runs of every pipeline stage produce byte-identical
// serialized output for a fixed seed, independent of scheduling.
void criterion_determinism() {
    ExperimentConfig cfg;
    cfg.geometry.d_min = 100.0;
    cfg.geometry.d_max = 300.0;
    cfg.geometry.d_step = 100.0;
    cfg.power.sweep_min_dbm = 10.0;
    cfg.power.sweep_max_dbm = 20.0;
    cfg.power.sweep_step_dbm = 5.0;
    cfg.weights.wr_min = 0.3;
    cfg.weights.wr_max = 0.7;
    cfg.weights.wr_step = 0.2;
    cfg.mc.samples = 3000;

    auto render = [](std::vector<ResultRow> rows) {
        sort_rows(rows);
        std::ostringstream out;
        for (const ResultRow& r : rows) out << to_csv(r) << '\n';
        return out.str();
    };
    const bool pa_ok = render(run_pa(cfg)) == render(run_pa(cfg));
    const bool sn_ok = render(run_sn(cfg)) == render(run_sn(cfg));

    const HopGains hg{2.0, 1.0};
    const auto ta = tradeoff_sweep(default_weight_grid(), hg, 2.0);
    const auto tb = tradeoff_sweep(default_weight_grid(), hg, 2.0);
    bool trade_ok = ta.size() == tb.size();
    for (std::size_t i = 0; trade_ok && i < ta.size(); ++i)
        trade_ok = ta[i].q_star == tb[i].q_star && ta[i].e_star == tb[i].e_star;

    ChannelParams cp;
    cp.total_power = 9.0;
    TrialConfig tc;
    tc.samples = 5000;
    tc.seed = 21;
    const EmpiricalResult ma =
        simulate_two_hop(tc, equal_split(), {1.0, 1.0, 1.0}, cp);
    const EmpiricalResult mb =
        simulate_two_hop(tc, equal_split(), {1.0, 1.0, 1.0}, cp);
    const bool mc_ok = ma.ber_a == mb.ber_a && ma.mean_snr_b == mb.mean_snr_b;

    const ValidationReport va = run_validation(cfg);
    const ValidationReport vb = run_validation(cfg);
    const bool val_ok = va.lines == vb.lines;

    std::string detail = "sweeps=";
    detail += (pa_ok && sn_ok) ? "ok" : "DIFF";
    detail += " tradeoff=";
    detail += trade_ok ? "ok" : "DIFF";
    detail += " mc=";
    detail += mc_ok ? "ok" : "DIFF";
    detail += " validate=";
    detail += val_ok ? "ok" : "DIFF";
    report(9, "all pipeline stages are byte-identical across reruns",
           pa_ok && sn_ok && trade_ok && mc_ok && val_ok, detail);
}

// --------------------------------------------------------------- criterion 10
// Hand-derived regression values reproduce within 1e-9.
void criterion_hand_values() {
    bool ok = true;
    std::string bad;
    auto expect = [&](double got, double want, const char* what) {
        if (std::abs(got - want) > 1e-9) {
            ok = false;
            bad += std::string(" ") + what;
        }
    };

    // Co-located relay: both hops span the node separation.
    const LinkGeometry at_center = hop_distances(100.0, {0.0, 0.7, 0.3});
    expect(at_center.d_a, 100.0, "d_a");
    expect(at_center.d_b, 100.0, "d_b");

    const HopGains unit{1.0, 1.0};
    const BitTime bt = bit_time(equal_split(), unit, 9.0);
    expect(bt.at_a.seconds, 2.0, "q_a");
    expect(bt.at_b.seconds, 2.0, "q_b");

    expect(bit_energy(equal_split(), unit, 2.0).total(), 4.0, "energy");
    expect(optimal_energy(equal_split(), 2.0, unit), 4.0, "optimal_energy");

    expect(optimal_snr(equal_split(), unit, 9.0), 4.5, "snr_star");

    const BerResult low = optimal_ber(equal_split(), unit, 9.0);
    expect(low.value, 1.0 / 3.0, "ber");
    if (!low.low_snr) {
        ok = false;
        bad += " low_snr_flag";
    }

    report(10, "hand-derived regression values reproduce within 1e-9", ok,
           ok ? std::string("6 values exact") : ("failed:" + bad));
}

}  // namespace

int main() {
    criterion_closed_form_vs_grid();
    criterion_gradient_vs_fd();
    criterion_bordered_hessian();
    criterion_tradeoff_shape();
    criterion_scheme_energy_reduction();
    criterion_energy_transition_point();
    criterion_ber_law();
    criterion_mc_self_test();
    criterion_determinism();
    criterion_hand_values();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
