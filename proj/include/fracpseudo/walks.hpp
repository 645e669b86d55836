#ifndef FRACPSEUDO_WALKS_HPP
#define FRACPSEUDO_WALKS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/model.hpp"
#include "fracpseudo/parallel.hpp"
#include "fracpseudo/quadrature.hpp"
#include "fracpseudo/rng.hpp"
#include "fracpseudo/symbols.hpp"

// Pre-limit pseudo-random-walk characteristic functions, their Monte Carlo
// estimators, and convergence reports against the limit CFs.  Each walk is a
// compound Poisson sum of heavy-tailed jumps Q with survival (scale/w)^alpha
// for w >= scale, observed at the accelerated clock t scale^{-alpha}; the
// jump-size scale vanishing drives the CF to the limit family.

namespace fracpseudo::walks {

using symbols::pi;

struct WalkParams {
    double scale_gamma;  // the vanishing jump scale
    ModelParams model;
    double lambda;       // Poisson rate, pinned to 1/Gamma(1-beta)

    WalkParams(double scale, const ModelParams& m)
        : scale_gamma(scale), model(m), lambda(1.0 / std::tgamma(1.0 - m.beta)) {
        validate();
    }

    void validate() const {
        model.validate();
        if (!(scale_gamma > 0.0)) throw domain_error("scale_gamma must be positive");
        if (!(std::abs(lambda * std::tgamma(1.0 - model.beta) - 1.0) <= 1e-12))
            throw domain_error("lambda must equal 1/Gamma(1-beta)");
    }
};

struct CFEstimate {
    std::complex<double> value;
    double std_error = 0.0;
    long long n_samples = 0;
    std::uint64_t seed = 0;
};

// Survival function of the jump magnitude: 1 below the scale, (scale/w)^alpha above.
inline double q_survival(double scale_gamma, double alpha, double w) {
    if (w < scale_gamma) return 1.0;
    return std::pow(scale_gamma / w, alpha);
}

namespace detail {

// scale^{-2k beta} (1 - E[e^{-c Q^{2k}}]) for the even jump law, with
// c = |xi|^{2k} and g = scale^{2k}:
//   E_even(c) = g^{-beta} (1 - e^{-c g}) + c^beta Gamma(1-beta, c g).
inline double even_block(double beta, double g, double c) {
    if (c == 0.0) return 0.0;
    const double cg = c * g;
    return std::pow(g, -beta) * (-std::expm1(-cg)) +
           std::pow(c, beta) * boost::math::tgamma(1.0 - beta, cg);
}

// scale^{-(2k+1) beta} (1 - E[e^{i a Q^{2k+1}}]) for the odd jump law, with
// a = xi^{2k+1} (signed) and g = scale^{2k+1}.  Rotating the oscillatory tail
// integral onto the decaying axis (the arc vanishes) gives the
// cancellation-free form, for a > 0:
//   A(a) = g^{-beta} (1 - e^{i a g}) + e^{i a g} int_0^inf e^{-s} (g + i s/a)^{-beta} ds,
// with A(-a) = conj A(a) and A(0) = 0.  As a -> 0 this tends to
// Gamma(1-beta) a^beta e^{-i pi beta/2}, the limit-symbol building block.
inline std::complex<double> odd_block(double beta, double g, double a) {
    if (a == 0.0) return {0.0, 0.0};
    const double aa = std::abs(a);
    const double ag = aa * g;

    auto f = [&](double s) {
        return std::exp(-s) * std::pow(std::complex<double>(g, s / aa), -beta);
    };
    const double s_end = 45.0;
    std::vector<double> hints{0.5, 2.0, 8.0, 20.0};
    for (double s0 = ag; s0 < s_end; s0 *= 3.1622776601683795) {
        if (s0 > 1e-14) hints.push_back(s0);
        if (hints.size() > 24) break;
    }
    const double mag = std::pow(g, -beta) + boost::math::tgamma(1.0 - beta) * std::pow(aa, beta);
    auto r = quad::integrate(f, 0.0, s_end, 1e-13 * mag, 1e-12, 2000, &hints);
    if (!r.converged)
        throw computation_error("oscillatory jump block: quadrature did not converge", r.error);

    const std::complex<double> one_minus(2.0 * std::pow(std::sin(0.5 * ag), 2), -std::sin(ag));
    const std::complex<double> eiag(std::cos(ag), std::sin(ag));
    std::complex<double> out = std::pow(g, -beta) * one_minus + eiag * r.value;
    if (a < 0.0) out = std::conj(out);
    return out;
}

inline double signed_pow(double x, int m) {
    const double v = std::pow(std::abs(x), m);
    return (m % 2 != 0 && x < 0.0) ? -v : v;
}

}

// Even family: jumps enter through Q^{2k}, so the conditional factors are
// deterministic decays and the CF is real:
//   cf = exp(-lambda t E_even(|xi|^{2k})).
inline std::complex<double> prelimit_cf_even(const WalkParams& w, double xi, double t) {
    w.validate();
    if (w.model.parity != Parity::even)
        throw domain_error("prelimit_cf_even requires even parity");
    if (!(t > 0.0)) throw domain_error("prelimit cf requires t > 0");
    const int m = w.model.integer_order();
    const double g = std::pow(w.scale_gamma, m);
    const double c = std::pow(std::abs(xi), m);
    return {std::exp(-w.lambda * t * detail::even_block(w.model.beta, g, c)), 0.0};
}

// Odd family: signed jumps epsilon Q with P(epsilon=1)=p.  The walk converges
// to the limit CF after the fixed clock dilation 1/cos(pi beta/2), which is
// folded in here so the scale->0 limit is exactly limit_cf(odd_pq):
//   cf = exp(-lambda (t/cos(pi beta/2)) [p A(xi^{2k+1}) + q conj A(xi^{2k+1})]).
inline std::complex<double> prelimit_cf_odd(const WalkParams& w, double xi, double t) {
    w.validate();
    if (w.model.parity != Parity::odd)
        throw domain_error("prelimit_cf_odd requires odd parity");
    if (!(t > 0.0)) throw domain_error("prelimit cf requires t > 0");
    const int m = w.model.integer_order();
    const double g = std::pow(w.scale_gamma, m);
    const double a = detail::signed_pow(xi, m);
    const auto blk = detail::odd_block(w.model.beta, g, a);
    const double tau = t / std::cos(0.5 * pi * w.model.beta);
    const std::complex<double> expo =
        (w.lambda * tau) * (w.model.p * blk + w.model.q * std::conj(blk));
    return std::exp(-expo);
}

// Shifted family: two independent walks weighted by
// c_-+ = (sin(pi(beta -+ theta)/2)/sin(pi beta))^{1/order}; the plus-directed
// member carries c_- and the reflected member c_+.
inline std::complex<double> prelimit_cf_feller(const WalkParams& w, double xi, double t) {
    w.validate();
    if (!(t > 0.0)) throw domain_error("prelimit cf requires t > 0");
    const double beta = w.model.beta, theta = w.model.theta;
    const double denom = std::sin(pi * beta);
    const double s_minus = std::sin(0.5 * pi * (beta - theta)) / denom;
    const double s_plus = std::sin(0.5 * pi * (beta + theta)) / denom;
    const double ord = w.model.order();
    const double c_minus = std::pow(s_minus, 1.0 / ord);
    const double c_plus = std::pow(s_plus, 1.0 / ord);
    const int m = w.model.integer_order();
    const double g = std::pow(w.scale_gamma, m);
    if (w.model.parity == Parity::odd) {
        const auto blk_m = detail::odd_block(beta, g, detail::signed_pow(xi * c_minus, m));
        const auto blk_p = detail::odd_block(beta, g, detail::signed_pow(xi * c_plus, m));
        return std::exp(-(w.lambda * t) * (blk_m + std::conj(blk_p)));
    }
    const double cm = std::pow(std::abs(xi) * c_minus, m);
    const double cp = std::pow(std::abs(xi) * c_plus, m);
    const double ex =
        w.lambda * t * (detail::even_block(beta, g, cm) + detail::even_block(beta, g, cp));
    return {std::exp(-ex), 0.0};
}

inline std::complex<double> prelimit_cf(const WalkParams& w, Family family, double xi, double t) {
    switch (family) {
        case Family::even: return prelimit_cf_even(w, xi, t);
        case Family::odd_pq: return prelimit_cf_odd(w, xi, t);
        case Family::feller: return prelimit_cf_feller(w, xi, t);
    }
    throw domain_error("unknown family");
}

namespace detail {

// Q^m = (scale u^{-1/alpha})^m in log space; the clamp at e^690 is unreachable
// for u >= 2^-53 unless beta < ~0.053, and keeps the estimator finite there.
inline double jump_pow(double scale, double inv_alpha, int m, double u) {
    const double lt = m * (std::log(scale) - inv_alpha * std::log(u));
    return std::exp(std::min(lt, 690.0));
}

}

// Samples the genuinely random walk components (Poisson count, signs, jump
// magnitudes) and averages the exact conditional pseudo-CF factors.  One
// engine per sample index makes the estimate bit-identical for a given
// (seed, n) under any loop scheduling.  Draw order per sample: Poisson count,
// then per jump a sign (odd families) followed by a magnitude; the shifted
// family consumes its plus-directed member fully before the reflected one.
inline CFEstimate mc_walk_cf(const WalkParams& w, Family family, double xi, double t,
                             long long n, std::uint64_t seed) {
    w.validate();
    if (!(t > 0.0)) throw domain_error("mc_walk_cf requires t > 0");
    if (n < 1) throw domain_error("mc_walk_cf requires n >= 1");
    const Parity parity = w.model.parity;
    if (family == Family::even && parity != Parity::even)
        throw domain_error("mc even family requires even parity");
    if (family == Family::odd_pq && parity != Parity::odd)
        throw domain_error("mc odd_pq family requires odd parity");

    const double alpha = w.model.order();
    const double inv_alpha = 1.0 / alpha;
    const int m = w.model.integer_order();
    // the odd_pq walk runs on the dilated clock matching prelimit_cf_odd
    const double t_eff =
        family == Family::odd_pq ? t / std::cos(0.5 * pi * w.model.beta) : t;
    const double mean = w.lambda * t_eff * std::pow(w.scale_gamma, -alpha);
    if (!(mean < 5e7))
        throw domain_error("mc_walk_cf: Poisson mean too large at this jump scale");
    const rng::poisson_table pois(mean);

    double c_minus = 1.0, c_plus = 1.0;
    if (family == Family::feller) {
        const double denom = std::sin(pi * w.model.beta);
        c_minus = std::pow(std::sin(0.5 * pi * (w.model.beta - w.model.theta)) / denom,
                           1.0 / alpha);
        c_plus = std::pow(std::sin(0.5 * pi * (w.model.beta + w.model.theta)) / denom,
                          1.0 / alpha);
    }
    const double a = detail::signed_pow(xi, m);     // signed for odd m, |xi|^m otherwise
    const double c = std::pow(std::abs(xi), m);

    auto sum_jumps = [&](std::mt19937_64& eng, long count) {
        double s = 0.0;
        for (long j = 0; j < count; ++j)
            s += detail::jump_pow(w.scale_gamma, inv_alpha, m, rng::uniform01(eng));
        return s;
    };
    auto sum_signed_jumps = [&](std::mt19937_64& eng, long count, double p) {
        double s = 0.0;
        for (long j = 0; j < count; ++j) {
            const double sgn = rng::uniform01(eng) <= p ? 1.0 : -1.0;
            s += sgn * detail::jump_pow(w.scale_gamma, inv_alpha, m, rng::uniform01(eng));
        }
        return s;
    };

    auto draw_z = [&](std::mt19937_64& eng) -> std::complex<double> {
        if (family == Family::even) {
            const long count = pois.sample(rng::uniform01(eng));
            return {std::exp(-c * sum_jumps(eng, count)), 0.0};
        }
        if (family == Family::odd_pq) {
            const long count = pois.sample(rng::uniform01(eng));
            const double phase = a * sum_signed_jumps(eng, count, w.model.p);
            return {std::cos(phase), std::sin(phase)};
        }
        if (parity == Parity::odd) {
            const long nx = pois.sample(rng::uniform01(eng));
            const double sx = sum_jumps(eng, nx);
            const long ny = pois.sample(rng::uniform01(eng));
            const double sy = sum_jumps(eng, ny);
            const double phase = a * (std::pow(c_minus, m) * sx - std::pow(c_plus, m) * sy);
            return {std::cos(phase), std::sin(phase)};
        }
        const long nx = pois.sample(rng::uniform01(eng));
        const double sx = sum_jumps(eng, nx);
        const long ny = pois.sample(rng::uniform01(eng));
        const double sy = sum_jumps(eng, ny);
        return {std::exp(-c * (std::pow(c_minus, m) * sx + std::pow(c_plus, m) * sy)), 0.0};
    };

    // Samples are split into fixed-size chunks accumulated independently and
    // merged in chunk order, so the estimate is bit-identical for any worker
    // count; the thread budget only decides who computes which chunk.
    struct Acc {
        long long count = 0;
        std::complex<double> mean{};
        double m2 = 0.0;
    };
    constexpr long long chunk = 4096;
    const long long n_chunks = (n + chunk - 1) / chunk;
    std::vector<Acc> accs(static_cast<std::size_t>(n_chunks));
    parallel_for(n_chunks, [&](long long ci) {
        Acc acc;
        const long long hi = std::min(n, (ci + 1) * chunk);
        for (long long i = ci * chunk; i < hi; ++i) {
            auto eng = rng::engine_for(seed, static_cast<std::uint64_t>(i));
            const std::complex<double> z = draw_z(eng);
            ++acc.count;
            const std::complex<double> delta = z - acc.mean;
            acc.mean += delta / static_cast<double>(acc.count);
            acc.m2 += (std::conj(delta) * (z - acc.mean)).real();
        }
        accs[static_cast<std::size_t>(ci)] = acc;
    });
    Acc tot;
    for (const Acc& acc : accs) {
        if (acc.count == 0) continue;
        if (tot.count == 0) {
            tot = acc;
            continue;
        }
        const std::complex<double> delta = acc.mean - tot.mean;
        const double na = static_cast<double>(tot.count);
        const double nb = static_cast<double>(acc.count);
        tot.mean += delta * (nb / (na + nb));
        tot.m2 += acc.m2 + std::norm(delta) * na * nb / (na + nb);
        tot.count += acc.count;
    }
    CFEstimate est;
    est.value = tot.mean;
    est.std_error = n > 1 ? std::sqrt(std::max(0.0, tot.m2) /
                                      (static_cast<double>(n) * static_cast<double>(n - 1)))
                          : 0.0;
    est.n_samples = n;
    est.seed = seed;
    return est;
}

struct ConvergenceRow {
    double scale_gamma = 0.0;
    double sup_error = 0.0;
};

// Per-scale sup over the xi grid of |prelimit - limit|.
inline std::vector<ConvergenceRow> convergence_report(const ModelParams& m, Family family,
                                                      const std::vector<double>& xi_grid,
                                                      const std::vector<double>& gamma_seq,
                                                      double t) {
    m.validate();
    if (!(t > 0.0)) throw domain_error("convergence_report requires t > 0");
    if (xi_grid.empty()) throw domain_error("convergence_report requires a nonempty xi grid");
    if (gamma_seq.empty())
        throw domain_error("convergence_report requires a nonempty scale sequence");
    for (std::size_t i = 0; i < gamma_seq.size(); ++i) {
        if (!(gamma_seq[i] > 0.0))
            throw domain_error("convergence_report scales must be positive");
        if (i + 1 < gamma_seq.size() && !(gamma_seq[i + 1] < gamma_seq[i]))
            throw domain_error("convergence_report scales must be strictly decreasing");
    }
    std::vector<ConvergenceRow> rows;
    rows.reserve(gamma_seq.size());
    for (double scale : gamma_seq) {
        const WalkParams w(scale, m);
        double sup = 0.0;
        for (double xi : xi_grid)
            sup = std::max(sup, std::abs(prelimit_cf(w, family, xi, t) -
                                         symbols::limit_cf(m, family, xi, t)));
        rows.push_back({scale, sup});
    }
    return rows;
}

}

#endif
