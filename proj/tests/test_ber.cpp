#include <doctest.h>

#include <cmath>
#include <functional>

#include "uavrelay/ber.hpp"

using namespace uavrelay;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b) {
    const double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int depth = 40) {
    const double m = 0.5 * (a + b);
    const double whole = simpson(f, a, b);
    const double halves = simpson(f, a, m) + simpson(f, m, b);
    if (depth <= 0 || std::abs(halves - whole) < 15.0 * tol) return halves;
    return adaptive_simpson(f, a, m, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, tol / 2, depth - 1);
}

}  // namespace

TEST_CASE("cascade statistics and optimal SNR: hand values") {
    const HopGains unit{1.0, 1.0};
    const CascadeStats cs = cascade_stats(equal_split(), unit, 9.0);
    CHECK(cs.gamma_hp == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(cs.gamma_gp == doctest::Approx(1.5).epsilon(1e-12));

    const double snr = optimal_snr(equal_split(), unit, 9.0);
    CHECK(snr == doctest::Approx(4.5).epsilon(1e-12));  // 1/(1/9 + 1/9)

    // Harmonic-mean bound: never above the weaker term.
    const AllocationFactors a{0.2, 0.3, 0.4};
    const HopGains hg{2.0, 0.5};
    const double ta = (a.alpha_r + 2 * a.alpha_a) * hg.h * 5.0;
    const double tb = (a.alpha_r + 2 * a.alpha_b) * hg.g * 5.0;
    CHECK(optimal_snr(a, hg, 5.0) <= std::min(ta, tb));

    // Dominant strong hop: the weaker term is the limit.
    const double strong = optimal_snr(a, HopGains{1e9, 0.5}, 5.0);
    CHECK(strong == doctest::Approx(tb).epsilon(1e-6));

    CHECK(optimal_snr({0.0, 0.0, 0.0}, hg, 5.0) == 0.0);
}

TEST_CASE("per-hop SNR densities: normalization and mean by quadrature") {
    const CascadeStats cs{3.0, 1.5};
    auto pdf_h = [&](double eta) { return hop_pdfs(cs, eta).pdf_h; };
    const double cut = 60.0 * cs.gamma_hp;
    CHECK(adaptive_simpson(pdf_h, 0.0, cut, 1e-10) ==
          doctest::Approx(1.0).epsilon(1e-8));
    auto mean_h = [&](double eta) { return eta * hop_pdfs(cs, eta).pdf_h; };
    CHECK(adaptive_simpson(mean_h, 0.0, cut, 1e-10) ==
          doctest::Approx(cs.gamma_hp).epsilon(1e-7));
    CHECK(hop_pdfs(cs, 0.0).pdf_h == doctest::Approx(1.0 / cs.gamma_hp));
    CHECK_THROWS_AS(hop_pdfs(cs, -1.0), std::invalid_argument);
}

TEST_CASE("simplified cascade density: exponential with the summed rate") {
    const CascadeStats cs{4.0, 2.0};
    const double rate = 1.0 / cs.gamma_hp + 1.0 / cs.gamma_gp;
    for (double eta : {0.0, 0.3, 1.7, 5.0})
        CHECK(cascade_pdf_simplified(cs, eta) ==
              doctest::Approx(rate * std::exp(-eta * rate)).epsilon(1e-12));
    auto pdf = [&](double eta) { return cascade_pdf_simplified(cs, eta); };
    CHECK(adaptive_simpson(pdf, 0.0, 80.0 / rate, 1e-10) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("full cascade density approaches the simplified form at small eta") {
    for (double gamma : {1000.0, 5000.0}) {
        const CascadeStats cs{gamma, 0.8 * gamma};
        const double limit = 0.01 * std::min(cs.gamma_hp, cs.gamma_gp);
        for (double frac : {0.1, 0.4, 0.9}) {
            const double eta = frac * limit;
            const double full = cascade_pdf(cs, eta);
            const double simp = cascade_pdf_simplified(cs, eta);
            CHECK(std::abs(full / simp - 1.0) <= 0.05);
        }
    }
    // The simplified flag forces the reduction.
    const CascadeStats cs{3.0, 1.5};
    CHECK(cascade_pdf(cs, 1.0, true) == cascade_pdf_simplified(cs, 1.0));
    CHECK(cascade_pdf(cs, 0.0) == cascade_pdf_simplified(cs, 0.0));
}

TEST_CASE("cascade CDF: limits and quadrature consistency") {
    const CascadeStats cs{3.0, 1.5};
    CHECK(cascade_cdf(cs, 0.0) == 0.0);
    CHECK(cascade_cdf(cs, 1e12) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(cascade_cdf(cs, -0.1), std::invalid_argument);

    auto pdf = [&](double eta) { return cascade_pdf_simplified(cs, eta); };
    for (double eta : {0.2, 1.0, 4.0})
        CHECK(adaptive_simpson(pdf, 0.0, eta, 1e-11) ==
              doctest::Approx(cascade_cdf(cs, eta)).epsilon(1e-8));
}

TEST_CASE("first-order CDF expansion: hand value and monotonicity") {
    const CascadeStats cs{10.0, 10.0};
    CHECK(cdf_first_order(cs, 0.01) == doctest::Approx(0.002).epsilon(1e-12));
    CHECK(cascade_cdf(cs, 0.01) ==
          doctest::Approx(1.0 - std::exp(-0.002)).epsilon(1e-12));
    // Ratio tends to one from above as eta -> 0.
    double prev_ratio = 0.0;
    for (double eta : {1.0, 0.1, 0.01, 0.001}) {
        const double ratio = cdf_first_order(cs, eta) / cascade_cdf(cs, eta);
        CHECK(ratio >= 1.0);
        if (prev_ratio > 0.0) CHECK(ratio <= prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(cdf_first_order(cs, 0.2) < cdf_first_order(cs, 0.4));
}

TEST_CASE("analytic BER: hand value, power law and flags") {
    const HopGains unit{1.0, 1.0};
    const BerResult low = optimal_ber(equal_split(), unit, 9.0);
    CHECK(low.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(low.snr_star == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(low.low_snr);

    const BerResult high = optimal_ber(equal_split(), unit, 90.0);
    CHECK(high.value == doctest::Approx(low.value / 10.0).epsilon(1e-12));
    CHECK_FALSE(high.low_snr);

    CHECK_THROWS_AS(optimal_ber({0.5, 0.5, 0.0}, unit, 9.0), std::domain_error);
}
