#ifndef FRACPSEUDO_SPECFUN_HPP
#define FRACPSEUDO_SPECFUN_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/quadrature.hpp"

namespace fracpseudo::specfun {

inline constexpr double pi = 3.14159265358979323846;

namespace detail {

// 1/Gamma(w) for any real w, zero at the poles.
inline long double inv_gamma(long double w) {
    if (w > 0.5L) return expl(-lgammal(w));
    const long double s = sinl(static_cast<long double>(pi) * w);
    if (s == 0.0L) return 0.0L;
    return s * expl(lgammal(1.0L - w)) / static_cast<long double>(pi);
}

}  // namespace detail

struct MLParams {
    double nu;
    double mu;

    void validate() const {
        if (!(nu > 0.0)) throw domain_error("Mittag-Leffler requires nu > 0");
        if (!(mu > 0.0)) throw domain_error("Mittag-Leffler requires mu > 0");
    }
};

// E_{nu,mu}(z) for real z.  Power series below the switch radius
// |z|^{1/nu} <= 22, algebraic expansion with exponentially small saddle
// corrections beyond.  The two branches agree to ~1e-8 in the overlap
// annulus; away from it the series branch is good to ~1e-12 relative.
inline double mittag_leffler(const MLParams& p, double z, int term_cap = 2000) {
    p.validate();
    const long double nu = p.nu, mu = p.mu;

    if (z == 0.0) return static_cast<double>(detail::inv_gamma(mu));

    const double u = std::pow(std::abs(z), 1.0 / p.nu);

    if (u <= 22.0) {
        const long double logaz = logl(fabsl(static_cast<long double>(z)));
        const bool neg = z < 0.0;
        long double sum = 0.0L, comp = 0.0L, max_term = 0.0L;
        int small_run = 0;
        for (int j = 0; j < term_cap; ++j) {
            const long double lt = j * logaz - lgammal(nu * j + mu);
            long double term = (lt < -11350.0L) ? 0.0L : expl(lt);
            if (neg && (j & 1)) term = -term;
            const long double y = term - comp;
            const long double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            const long double at = fabsl(term);
            if (at > max_term) max_term = at;
            if (at <= 1e-19L * fabsl(sum) + 1e-330L) {
                // term peak sits near j = u/nu; stop only past it
                if (++small_run >= 2 && j * p.nu > u) return static_cast<double>(sum);
            } else {
                small_run = 0;
            }
        }
        throw computation_error("Mittag-Leffler series did not converge within term cap",
                                static_cast<double>(max_term) * 1e-19);
    }

    // Algebraic part, optimally truncated.  Truncation is steered by the
    // sine-free envelope |z|^{-j} / |Gamma(mu - nu j)|_env: the realized term
    // can pass through a reciprocal-gamma pole and vanish, which must not be
    // mistaken for the divergent tail.
    long double alg = 0.0L;
    long double zl = static_cast<long double>(z);
    long double zpow = 1.0L;
    long double prev_env = std::numeric_limits<long double>::max();
    for (int j = 1; j <= 200; ++j) {
        zpow /= zl;
        const long double w = mu - nu * j;
        const long double env =
            fabsl(zpow) * ((w > 0.5L) ? expl(-lgammal(w))
                                      : expl(lgammal(1.0L - w)) / static_cast<long double>(pi));
        if (env >= prev_env) break;  // divergent tail reached
        alg -= zpow * detail::inv_gamma(w);
        prev_env = env;
        if (env < 1e-19L * fabsl(alg) + 1e-330L) break;
    }

    // Saddle (exponential) contributions.
    double expo = 0.0;
    const double one_m_mu = 1.0 - p.mu;
    if (z > 0.0) {
        expo = (1.0 / p.nu) * std::pow(u, one_m_mu) * std::exp(u);
        if (p.nu >= 2.0 - 1e-9) {
            const std::complex<double> w = std::polar(u, 2.0 * pi / p.nu);
            expo += (2.0 / p.nu) *
                    (std::pow(std::complex<double>(u), std::complex<double>(one_m_mu)) *
                     std::exp(std::complex<double>(0.0, 2.0 * pi * one_m_mu / p.nu)) *
                     std::exp(w))
                        .real();
        }
    } else {
        if (p.nu > 1.0 + 1e-9) {
            const std::complex<double> w = std::polar(u, pi / p.nu);
            const std::complex<double> wp =
                std::pow(u, one_m_mu) *
                std::exp(std::complex<double>(0.0, pi * one_m_mu / p.nu));
            expo = (2.0 / p.nu) * (wp * std::exp(w)).real();
        } else if (p.nu > 1.0 - 1e-9) {
            expo = std::pow(u, one_m_mu) * std::cos(pi * one_m_mu) * std::exp(-u);
        }
        // nu < 1: purely algebraic on the negative axis
    }

    return static_cast<double>(alg) + expo;
}

// Airy Ai by Maclaurin series on |x| <= 8 and asymptotic expansions beyond.
// Absolute accuracy ~1e-10 or better throughout.
inline double airy_ai(double x) {
    static const long double c1 = 0.355028053887817239260063186004L;  // Ai(0)
    static const long double c2 = 0.258819403792806798405183560189L;  // -Ai'(0)

    if (std::abs(x) <= 8.0) {
        const long double x3 = static_cast<long double>(x) * x * x;
        long double af = 1.0L, bg = static_cast<long double>(x);
        long double f = af, g = bg;
        for (int k = 1; k < 200; ++k) {
            af *= x3 / (3.0L * k * (3.0L * k - 1.0L));
            bg *= x3 / (3.0L * k * (3.0L * k + 1.0L));
            f += af;
            g += bg;
            if (fabsl(af) + fabsl(bg) < 1e-25L) break;
        }
        return static_cast<double>(c1 * f - c2 * g);
    }

    // u_k coefficients of the asymptotic series
    auto next_u = [](double u, int k) { return u * (6.0 * k - 5.0) * (6.0 * k - 1.0) / (72.0 * k); };

    if (x > 8.0) {
        const double zeta = (2.0 / 3.0) * std::pow(x, 1.5);
        double u = 1.0, term = 1.0, sum = 1.0, prev = 1.0;
        for (int k = 1; k < 60; ++k) {
            u = next_u(u, k);
            term = u / std::pow(zeta, k);
            if (std::abs(term) >= prev) break;
            sum += (k & 1) ? -term : term;
            prev = std::abs(term);
            if (prev < 1e-18) break;
        }
        return std::exp(-zeta) / (2.0 * std::sqrt(pi) * std::pow(x, 0.25)) * sum;
    }

    const double y = -x;
    const double zeta = (2.0 / 3.0) * std::pow(y, 1.5);
    double even_sum = 1.0, odd_sum = 0.0;
    double u = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        u = next_u(u, k);
        const double term = u / std::pow(zeta, k);
        if (term >= prev) break;
        prev = term;
        const int half = k / 2;
        const double sgn = (half & 1) ? -1.0 : 1.0;
        if (k & 1)
            odd_sum += sgn * term;
        else
            even_sum += sgn * term;
        if (term < 1e-18) break;
    }
    const double ph = zeta + 0.25 * pi;
    return (std::sin(ph) * even_sum - std::cos(ph) * odd_sum) /
           (std::sqrt(pi) * std::pow(y, 0.25));
}

// Density h_beta(x,t) of the stable subordinator normalised by
// E[exp(-lambda H(t))] = exp(-t lambda^beta).  Self-similar form
// h(x,t) = t^{-1/beta} g(x t^{-1/beta}); g from the Zolotarev integral for
// small arguments and from the alternating tail series for large ones.
inline double subordinator_density(double beta, double x, double t) {
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("subordinator density requires 0 < beta < 1");
    if (!(t > 0.0)) throw domain_error("subordinator density requires t > 0");
    if (x <= 0.0) return 0.0;

    const double scale = std::pow(t, -1.0 / beta);
    const double y = x * scale;

    if (y >= 2.0) {
        // g(y) = (1/pi) sum_{k>=1} (-1)^{k+1} Gamma(beta k + 1)/k! sin(pi beta k) y^{-beta k - 1}
        const long double ly = logl(static_cast<long double>(y));
        long double sum = 0.0L, max_term = 0.0L;
        bool ok = false;
        int small_run = 0;
        for (int k = 1; k <= 400; ++k) {
            const long double lt =
                lgammal(beta * static_cast<long double>(k) + 1.0L) - lgammal(k + 1.0L) -
                (beta * k + 1.0L) * ly;
            long double term = expl(lt) * sinl(static_cast<long double>(pi) * beta * k);
            if (k % 2 == 0) term = -term;
            sum += term;
            const long double at = fabsl(term);
            if (at > max_term) max_term = at;
            if (k > 3 && max_term > 1e12L * fabsl(sum)) break;  // cancellation; fall back
            // stop on the sin-free magnitude: sin(pi beta k) can pass through
            // zero and make a single term small long before the tail is
            if (expl(lt) < 1e-19L * fabsl(sum) + 1e-340L) {
                if (++small_run >= 2) {
                    ok = true;
                    break;
                }
            } else {
                small_run = 0;
            }
        }
        if (ok && sum >= 0.0L) return scale * static_cast<double>(sum) / pi;
        // fall through to the integral representation
    }

    // Zolotarev form, evaluated through log A(phi) for stability.
    const double c = std::pow(y, -beta / (1.0 - beta));
    const double pref = (beta / (1.0 - beta)) / pi * std::pow(y, -1.0 / (1.0 - beta));
    if (pref == 0.0 || !std::isfinite(pref)) return 0.0;

    auto integrand = [&](double phi) -> double {
        const double sp = std::sin(phi);
        if (sp <= 0.0) return 0.0;
        const double la = (beta / (1.0 - beta)) * std::log(std::sin(beta * phi)) +
                          std::log(std::sin((1.0 - beta) * phi)) -
                          std::log(sp) / (1.0 - beta);
        const double e = la + std::log(c);  // log(c*A)
        if (e > 700.0) return 0.0;
        const double arg = la - c * std::exp(la);
        if (arg < -745.0) return 0.0;
        return std::exp(arg);
    };

    static const std::vector<double> hints{0.5 * pi, 0.9 * pi, 0.99 * pi, 0.999 * pi};
    auto r = quad::integrate(integrand, 0.0, pi, 1e-14, 1e-11, 4000, &hints);
    if (!r.converged && r.error > 1e-9 * std::max(1.0, std::abs(r.value)))
        throw computation_error("subordinator density quadrature did not converge", r.error);
    return pref * r.value * scale;
}

// Density of T^gamma(t): gamma x^{gamma-1} exp(-x^gamma/t) / t on x >= 0.
inline double gamma_type_density(double gamma_ord, double x, double t) {
    if (!(gamma_ord > 0.0)) throw domain_error("gamma-type density requires gamma > 0");
    if (!(t > 0.0)) throw domain_error("gamma-type density requires t > 0");
    if (x < 0.0) return 0.0;
    return gamma_ord * std::pow(x, gamma_ord - 1.0) * std::exp(-std::pow(x, gamma_ord) / t) / t;
}

}

#endif
