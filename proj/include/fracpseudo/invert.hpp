#ifndef FRACPSEUDO_INVERT_HPP
#define FRACPSEUDO_INVERT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/model.hpp"
#include "fracpseudo/quadrature.hpp"
#include "fracpseudo/specfun.hpp"
#include "fracpseudo/symbols.hpp"

// Fundamental solutions v(x,t) recovered from their Fourier transforms by
// several independent routes.  The symmetric evolution of order gamma has
// transform e^{-t |xi|^gamma}; v is real and even in x, and for gamma > 2 it
// changes sign.  The asymmetric families are inverted directly from their
// limit characteristic functions.

namespace fracpseudo::invert {

using symbols::pi;

// |xi| beyond which e^{-t c xi^gamma} < 1e-18.
inline double decay_cutoff(double gamma_ord, double t, double c = 1.0) {
    return std::pow(41.44653167389282 / (t * c), 1.0 / gamma_ord);
}

// Closed value at the origin: v(0,t) = t^{-1/gamma} Gamma(1 + 1/gamma) / pi.
inline double density_at_zero(double gamma_ord, double t) {
    if (!(gamma_ord > 0.0)) throw domain_error("density requires gamma > 0");
    if (!(t > 0.0)) throw domain_error("density requires t > 0");
    return std::pow(t, -1.0 / gamma_ord) * std::tgamma(1.0 + 1.0 / gamma_ord) / pi;
}

namespace detail {

// Aitken-accelerate the trailing window of a partial-sum sequence.
inline double accelerate_tail(const std::vector<double>& partial, double fallback) {
    if (partial.size() < 6) return fallback;
    const std::size_t m = std::min<std::size_t>(partial.size(), 12);
    std::vector<double> w(partial.end() - static_cast<std::ptrdiff_t>(m), partial.end());
    return quad::aitken(w);
}

}

// Route 1: cosine transform, v = (1/pi) int_0^inf cos(xi x) e^{-t xi^gamma} dxi.
// The oscillatory tail is split at the zeros of the cosine; the segment
// integrals alternate under a decreasing envelope, so the partial sums bracket
// the limit and Aitken extrapolation of the trailing window accelerates them.
inline double density_cosine(double gamma_ord, double x, double t, double tol = 1e-9) {
    if (!(gamma_ord > 0.0)) throw domain_error("density_cosine requires gamma > 0");
    if (!(t > 0.0)) throw domain_error("density_cosine requires t > 0");
    if (!(tol > 0.0)) throw domain_error("density_cosine requires tol > 0");
    const double ax = std::abs(x);
    const double xi_max = decay_cutoff(gamma_ord, t);
    auto f = [&](double xi) {
        return std::cos(xi * ax) * std::exp(-t * std::pow(xi, gamma_ord));
    };

    if (ax * xi_max < 4.0) {
        auto r = quad::integrate(f, 0.0, xi_max, 0.25 * pi * tol, 1e-13, 2000);
        if (!r.converged)
            throw computation_error("cosine route: quadrature did not converge", r.error / pi);
        return r.value / pi;
    }

    const double thr = 0.25 * pi * tol;
    const double expected = std::clamp(ax * xi_max / pi, 32.0, 1e6);
    const double seg_tol = thr / expected;
    const long max_seg = 2000000;

    std::vector<double> partial;
    double sum = 0.0, lo = 0.0;
    double prev_accel = 0.0;
    int accel_hits = 0;
    bool have_accel = false;
    for (long j = 0;; ++j) {
        if (j >= max_seg)
            throw computation_error("cosine route: segment budget exhausted", thr / pi);
        double hi = (2.0 * j + 1.0) * pi / (2.0 * ax);
        const bool final_seg = hi >= xi_max;
        if (final_seg) hi = xi_max;
        auto r = quad::integrate(f, lo, hi, seg_tol, 1e-13, 400);
        sum += r.value;
        partial.push_back(sum);
        if (final_seg) break;
        if (j >= 2 && std::abs(r.value) < thr) break;
        // slow envelopes (small gamma) take many arches; poll the accelerated
        // sequence for stagnation instead of marching to the raw threshold
        if (partial.size() >= 12 && partial.size() % 8 == 0) {
            const double a = detail::accelerate_tail(partial, sum);
            if (have_accel && std::abs(a - prev_accel) < 0.5 * thr) {
                if (++accel_hits >= 2) return a / pi;
            } else {
                accel_hits = 0;
            }
            prev_accel = a;
            have_accel = true;
        }
        lo = hi;
    }
    return detail::accelerate_tail(partial, sum) / pi;
}

// Route 2: power series
//   v = (1/(pi gamma)) sum_k (-1)^k x^{2k} Gamma((2k+1)/gamma) / ((2k)! t^{(2k+1)/gamma}),
// entire in x for gamma > 1 but alternating: it is accepted only while the
// largest retained term stays below 1e12*tol, past which the cancellation
// cannot be recovered at working precision.
inline double density_series(double gamma_ord, double x, double t, int cap = 2000,
                             double tol = 1e-9) {
    if (!(gamma_ord > 1.0)) throw domain_error("series route requires gamma > 1");
    if (!(t > 0.0)) throw domain_error("series route requires t > 0");
    if (cap < 1) throw domain_error("series route requires cap >= 1");
    const long double pref = 1.0L / (pi * static_cast<long double>(gamma_ord));
    if (x == 0.0) return density_at_zero(gamma_ord, t);

    const long double l2x = 2.0L * std::log(std::abs(static_cast<long double>(x)));
    const long double lt = std::log(static_cast<long double>(t)) / gamma_ord;
    long double sum = 0.0L, max_term = 0.0L, prev = 0.0L;
    int small_streak = 0;
    bool converged = false;
    for (int k = 0; k < cap; ++k) {
        const long double m = 2.0L * k + 1.0L;
        const long double lterm = k * l2x - std::lgammal(m) +
                                  std::lgammal(m / gamma_ord) - m * lt;
        if (lterm > 700.0L)
            throw computation_error(
                "series route: alternating cancellation beyond recoverable precision",
                std::exp(700.0));
        const long double term = std::exp(lterm);
        max_term = std::max(max_term, term);
        sum += (k % 2 == 0) ? term : -term;
        if (k >= 1 && term < prev && term < 1e-20L * std::fabs(sum) + 1e-330L) {
            if (++small_streak >= 2) {
                converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
        prev = term;
    }
    if (static_cast<double>(max_term * pref) > 1e12 * tol)
        throw computation_error(
            "series route: alternating cancellation beyond recoverable precision",
            static_cast<double>(max_term * pref));
    if (!converged)
        throw computation_error("series route: term cap reached before convergence",
                                static_cast<double>(prev * pref));
    return static_cast<double>(sum * pref);
}

// Route 3: Mittag-Leffler kernel integral.  With nu = 2(1 - 1/gamma) and
// mu = 1 - 1/gamma,
//   v = t^{-1/gamma}/(pi gamma) int_0^1 E_{nu,mu}(-z(y)^2) y^{1/gamma-1} (1-y)^{-1/gamma} dy,
//   z(y) = x y^{1/gamma} (1-y)^{1-1/gamma} t^{-1/gamma}.
// Both endpoint singularities are integrable; the rule is double-exponential.
inline double density_ml_integral(double gamma_ord, double x, double t, double tol = 1e-8) {
    if (!(gamma_ord > 1.0)) throw domain_error("mittag-leffler route requires gamma > 1");
    if (!(t > 0.0)) throw domain_error("mittag-leffler route requires t > 0");
    const double ig = 1.0 / gamma_ord;
    const specfun::MLParams p{2.0 * (1.0 - ig), 1.0 - ig};
    const double pref = std::pow(t, -ig) / (pi * gamma_ord);
    const double xs = std::abs(x) * std::pow(t, -ig);
    // one singular endpoint per half, kept at w = 0 where the double-exponential
    // nodes carry the distance exactly (y = 1 - w would snap to the grid near 1)
    auto lower = [&](double w) {
        const double z = xs * std::pow(w, ig) * std::pow(1.0 - w, 1.0 - ig);
        return specfun::mittag_leffler(p, -(z * z)) * std::pow(w, ig - 1.0) *
               std::pow(1.0 - w, -ig);
    };
    auto upper = [&](double w) {
        const double z = xs * std::pow(1.0 - w, ig) * std::pow(w, 1.0 - ig);
        return specfun::mittag_leffler(p, -(z * z)) * std::pow(1.0 - w, ig - 1.0) *
               std::pow(w, -ig);
    };
    auto rl = quad::tanh_sinh(lower, 0.0, 0.5, 0.125 * tol / pref);
    auto ru = quad::tanh_sinh(upper, 0.0, 0.5, 0.125 * tol / pref);
    if (!rl.converged || !ru.converged)
        throw computation_error("mittag-leffler route: quadrature did not converge",
                                (rl.error + ru.error) * pref);
    return pref * (rl.value + ru.value);
}

// Route 4: probabilistic form, v = (1/(pi x)) E[sin(x G)] with G distributed by
// gamma_type_density of the same order and scale 1/t.  Equivalent to the cosine
// route after one integration by parts, but exercised through the distributional
// kernel as an independent code path.
inline double density_probabilistic(double gamma_ord, double x, double t, double tol = 1e-9) {
    if (!(gamma_ord > 0.0)) throw domain_error("probabilistic route requires gamma > 0");
    if (!(t > 0.0)) throw domain_error("probabilistic route requires t > 0");
    if (x == 0.0)
        throw domain_error(
            "probabilistic route has a removable singularity at x = 0; use the closed value there");
    const double ax = std::abs(x);
    auto f = [&](double y) {
        return std::sin(ax * y) * specfun::gamma_type_density(gamma_ord, y, 1.0 / t);
    };
    const double y_max = decay_cutoff(gamma_ord, t);
    // envelope t gamma y^{gamma-1} e^{-t y^gamma} decreases only past its mode
    const double y_mono = gamma_ord > 1.0
                              ? std::pow((gamma_ord - 1.0) / (gamma_ord * t), 1.0 / gamma_ord)
                              : 0.0;
    const double thr = 0.25 * pi * tol * ax;
    const double expected = std::clamp(ax * y_max / pi, 32.0, 1e6);
    const double seg_tol = thr / expected;
    const long max_seg = 2000000;

    std::vector<double> partial;
    double sum = 0.0, lo = 0.0;
    double prev_accel = 0.0;
    int accel_hits = 0;
    bool have_accel = false;
    for (long j = 0;; ++j) {
        if (j >= max_seg)
            throw computation_error("probabilistic route: segment budget exhausted",
                                    thr / (pi * ax));
        double hi = (j + 1.0) * pi / ax;
        const bool final_seg = hi >= y_max;
        if (final_seg) hi = y_max;
        quad::result<double> r;
        if (j == 0 && gamma_ord < 1.0) {
            // y^{gamma-1} endpoint singularity on the first arch
            r = quad::tanh_sinh(f, lo, hi, seg_tol);
        } else {
            r = quad::integrate(f, lo, hi, seg_tol, 1e-13, 400);
        }
        sum += r.value;
        partial.push_back(sum);
        if (final_seg) break;
        if (j >= 2 && hi > y_mono && std::abs(r.value) < thr) break;
        if (partial.size() >= 12 && partial.size() % 8 == 0) {
            const double a = detail::accelerate_tail(partial, sum);
            if (have_accel && std::abs(a - prev_accel) < 0.5 * thr) {
                if (++accel_hits >= 2) return a / (pi * ax);
            } else {
                accel_hits = 0;
            }
            prev_accel = a;
            have_accel = true;
        }
        lo = hi;
    }
    return detail::accelerate_tail(partial, sum) / (pi * ax);
}

inline double density_probabilistic(const ModelParams& m, double x, double t,
                                    double tol = 1e-9) {
    m.validate();
    if (m.parity != Parity::even)
        throw domain_error("probabilistic route is defined for the even family");
    return density_probabilistic(m.order(), x, t, tol);
}

// General CF inversion: v = (1/pi) int_0^inf Re[e^{-i xi x} cf(xi, t)] dxi, with
// cf the limit characteristic function of any family (for the even family this
// degenerates to the cosine transform).  Segments follow the phase majorant
// P(xi) = |x| xi + t c_im xi^alpha so no segment wraps more than ~1.2 radians;
// the stop rule is the exact envelope tail integral, an upper incomplete Gamma.
inline double density_asymmetric(const ModelParams& m, Family family, double x, double t,
                                 double tol = 1e-9) {
    m.validate();
    if (!(t > 0.0)) throw domain_error("density_asymmetric requires t > 0");
    if (family == Family::odd_pq && m.parity != Parity::odd)
        throw domain_error("odd_pq family requires odd parity");

    const double alpha = m.order();
    double c_re = 1.0, c_im = 0.0;
    if (family == Family::odd_pq) {
        c_im = std::abs((m.p - m.q) * std::tan(0.5 * pi * m.beta));
    } else if (family == Family::feller && m.parity == Parity::odd) {
        c_re = std::cos(0.5 * pi * m.theta);
        c_im = std::abs(std::sin(0.5 * pi * m.theta));
    } else if (family == Family::feller) {
        c_re = std::cos(0.5 * pi * m.theta) / std::cos(0.5 * pi * m.beta);
    }

    auto f = [&](double xi) {
        const std::complex<double> rot(std::cos(xi * x), -std::sin(xi * x));
        return (rot * symbols::limit_cf(m, family, xi, t)).real();
    };

    const double ax = std::abs(x);
    const double xi_max = decay_cutoff(alpha, t, c_re);
    const double thr = 0.25 * pi * tol;
    const double expected =
        std::clamp((ax * xi_max + t * c_im * std::pow(xi_max, alpha)) / 1.2 + 4.0, 32.0, 2e6);
    const double seg_tol = thr / expected;
    const long max_seg = 2000000;

    auto phase = [&](double xi) { return ax * xi + t * c_im * std::pow(xi, alpha); };
    auto phase_rate = [&](double xi) {
        return ax + t * c_im * alpha * std::pow(xi, alpha - 1.0);
    };

    double sum = 0.0, lo = 0.0;
    for (long j = 0;; ++j) {
        if (j >= max_seg)
            throw computation_error("asymmetric inversion: segment budget exhausted",
                                    thr / pi);
        double hi;
        if (ax == 0.0 && c_im == 0.0) {
            hi = xi_max;
        } else {
            const double target = phase(lo) + 1.2;
            hi = lo + 1.2 / std::max(phase_rate(std::max(lo, 1e-300)), 1e-300);
            for (int it = 0; it < 4; ++it) {
                const double r = phase_rate(hi);
                if (!(r > 0.0)) break;
                hi -= (phase(hi) - target) / r;
                if (!(hi > lo)) {
                    hi = lo + 1e-3 * (xi_max - lo) + 1e-12;
                    break;
                }
            }
            hi = std::min(hi, xi_max);
        }
        const bool final_seg = hi >= xi_max;
        auto r = quad::integrate(f, lo, hi, seg_tol, 1e-13, 400);
        sum += r.value;
        if (final_seg) break;
        if ((j & 3) == 3) {
            const double tail =
                boost::math::tgamma(1.0 / alpha, t * c_re * std::pow(hi, alpha)) /
                (alpha * std::pow(t * c_re, 1.0 / alpha));
            if (tail < thr) break;
        }
        lo = hi;
    }
    return sum / pi;
}

}

#endif
