#ifndef FRACPSEUDO_SYMBOLS_HPP
#define FRACPSEUDO_SYMBOLS_HPP

#include <cmath>
#include <complex>
#include <optional>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/model.hpp"

// Fourier symbols of the fractional operators and the limit characteristic
// functions they generate.  Convention: the transform pairs f(x) with
// fhat(xi) = integral exp(+i xi x) f(x) dx, so a symbol S acts as
// (L f)^hat = S(xi) fhat(xi).

namespace fracpseudo::symbols {

inline constexpr double pi = 3.14159265358979323846;

enum class Side { plus, minus };

// Weyl derivative symbols: (-i xi)^gamma on the plus side, (i xi)^gamma on
// the minus side, principal branch.  Both reduce to |xi|^gamma e^{-+ i pi
// gamma/2 sign(xi)}.
inline ComplexSymbol weyl_symbol(double gamma_ord, Side side, double xi) {
    if (!(gamma_ord > 0.0)) throw domain_error("weyl symbol requires gamma > 0");
    if (xi == 0.0) return {0.0, 0.0};
    const double mag = std::pow(std::abs(xi), gamma_ord);
    const double phase = 0.5 * pi * gamma_ord * sign(xi);
    return std::polar(mag, side == Side::plus ? -phase : phase);
}

// Symmetric (Riesz) symbol, direct form.
inline double riesz_symbol(double gamma_ord, double xi) {
    if (!(gamma_ord > 0.0)) throw domain_error("riesz symbol requires gamma > 0");
    return -std::pow(std::abs(xi), gamma_ord);
}

// Riesz symbol assembled from the two Weyl symbols:
// -(W+ + W-)/(2 cos(pi gamma/2)).  Undefined at odd integer gamma where the
// normaliser vanishes; returns nullopt there so callers can flag the skip.
inline std::optional<ComplexSymbol> riesz_symbol_assembled(double gamma_ord, double xi) {
    const double cg = std::cos(0.5 * pi * gamma_ord);
    if (std::abs(cg) < 1e-12) return std::nullopt;
    const ComplexSymbol wp = weyl_symbol(gamma_ord, Side::plus, xi);
    const ComplexSymbol wm = weyl_symbol(gamma_ord, Side::minus, xi);
    return -(wp + wm) / (2.0 * cg);
}

// Asymmetry-shifted symbol: -|xi|^gamma e^{i pi theta/2 sign(xi)}.
// No admissibility rejection here; use feller_growth_flag to report it.
inline ComplexSymbol feller_symbol(double gamma_ord, double theta, double xi) {
    if (!(gamma_ord > 0.0)) throw domain_error("feller symbol requires gamma > 0");
    if (xi == 0.0) return {0.0, 0.0};
    const double mag = std::pow(std::abs(xi), gamma_ord);
    return -std::polar(mag, 0.5 * pi * theta * sign(xi));
}

// True exactly when exp(t * feller symbol) stops contracting in modulus,
// i.e. when cos(theta pi/2) falls outside (0, 1].  Cosines within 1e-12 of
// zero are treated as zero so that odd-integer theta flags despite rounding.
inline bool feller_growth_flag(double theta) {
    const double c = std::cos(0.5 * pi * theta);
    return !(c > 1e-12 && c <= 1.0 + 1e-15);
}

// Weighted two-sided symbol of odd integer order 2k+1 scaled by beta:
// closed form -|xi|^alpha (1 - i sign(xi) (p-q) tan(beta pi/2)),
// alpha = beta (2k+1).
inline ComplexSymbol rfrak_symbol(const ModelParams& m, double xi) {
    m.validate();
    if (m.parity != Parity::odd)
        throw domain_error("rfrak symbol requires odd parity (order beta*(2k+1))");
    if (xi == 0.0) return {0.0, 0.0};
    const double alpha = m.order();
    const double mag = std::pow(std::abs(xi), alpha);
    const double drift = (m.p - m.q) * std::tan(0.5 * pi * m.beta) * sign(xi);
    return {-mag, mag * drift};
}

// Same symbol assembled from Weyl symbols with the Hermitian-consistent
// phase split: -(1/cos(beta pi/2)) [p e^{i pi beta k s} W+ + q e^{-i pi beta
// k s} W-], s = sign(xi).  Equals rfrak_symbol identically; kept as an
// independent route for verification.
inline ComplexSymbol rfrak_symbol_assembled(const ModelParams& m, double xi) {
    m.validate();
    if (m.parity != Parity::odd)
        throw domain_error("rfrak symbol requires odd parity (order beta*(2k+1))");
    if (xi == 0.0) return {0.0, 0.0};
    const double alpha = m.order();
    const double s = sign(xi);
    const ComplexSymbol wp = weyl_symbol(alpha, Side::plus, xi);
    const ComplexSymbol wm = weyl_symbol(alpha, Side::minus, xi);
    const ComplexSymbol ph = std::polar(1.0, pi * m.beta * m.k * s);
    return -(m.p * ph * wp + m.q * std::conj(ph) * wm) / std::cos(0.5 * pi * m.beta);
}

// Characteristic function of the limit law at time t for each family.
// even:    exp(-t |xi|^{2 k beta})
// odd_pq:  exp(-t |xi|^alpha (1 - i sign(xi)(p-q) tan(beta pi/2)))
// feller:  odd parity  exp(-t |xi|^alpha e^{i pi theta/2 sign(xi)})
//          even parity exp(-t |xi|^{2 k beta} cos(pi theta/2)/cos(pi beta/2))
inline ComplexSymbol limit_cf(const ModelParams& m, Family family, double xi, double t) {
    m.validate();
    if (!(t >= 0.0)) throw domain_error("limit cf requires t >= 0");
    const double a = std::pow(std::abs(xi), m.order());
    switch (family) {
        case Family::even:
            if (m.parity != Parity::even)
                throw domain_error("even family requires even parity");
            return {std::exp(-t * a), 0.0};
        case Family::odd_pq: {
            if (m.parity != Parity::odd)
                throw domain_error("odd_pq family requires odd parity");
            const double drift = (m.p - m.q) * std::tan(0.5 * pi * m.beta) * sign(xi);
            return std::exp(std::complex<double>(-t * a, t * a * drift));
        }
        case Family::feller: {
            if (m.parity == Parity::odd) {
                const std::complex<double> ph =
                    std::polar(1.0, 0.5 * pi * m.theta * sign(xi));
                return std::exp(-t * a * ph);
            }
            const double r = std::cos(0.5 * pi * m.theta) / std::cos(0.5 * pi * m.beta);
            return {std::exp(-t * a * r), 0.0};
        }
    }
    throw domain_error("unknown family");
}

}

#endif
