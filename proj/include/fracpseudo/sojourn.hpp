#ifndef FRACPSEUDO_SOJOURN_HPP
#define FRACPSEUDO_SOJOURN_HPP

#include <cmath>

#include "fracpseudo/errors.hpp"
#include "fracpseudo/model.hpp"
#include "fracpseudo/quadrature.hpp"
#include "fracpseudo/specfun.hpp"

// Sojourn-time laws on the positive half-line of subordinated evolutions.
// Conditionally on the subordinator value s, the positive-time fraction
// follows the arcsine law (even order) or the Lamperti-type
// Beta(1/(2k+1), 2k/(2k+1)) law (odd order); the densities below mix those
// kernels against the stable subordinator density h_beta, which here uses the
// Laplace convention E e^{-lambda H_t} = e^{-t lambda^beta}.

namespace fracpseudo::sojourn {

inline constexpr double pi = 3.14159265358979323846;

struct SojournParams {
    double beta = 0.5;
    int k = 1;
    Parity parity = Parity::even;
    double t = 1.0;

    void validate() const {
        if (!(beta > 0.0 && beta < 1.0)) throw domain_error("beta must satisfy 0 < beta < 1");
        if (k < 1) throw domain_error("k must be a positive integer");
        if (!(t > 0.0)) throw domain_error("t must be positive");
    }
};

// (1/pi) int_x^inf h_beta(s', t) / sqrt(x (s'-x)) ds'.  The substitution
// s' = x + u^2 removes the endpoint root:
//   = (2/(pi sqrt(x))) int_0^inf h_beta(x + u^2, t) du.
inline double sojourn_even_density(const SojournParams& s, double x, double tol = 1e-8) {
    s.validate();
    if (s.parity != Parity::even)
        throw domain_error("sojourn_even_density requires even parity");
    if (!(x > 0.0)) throw domain_error("sojourn density requires x > 0");
    auto f = [&](double u) { return specfun::subordinator_density(s.beta, x + u * u, s.t); };
    const double scale = 0.25 * pi * std::sqrt(x) * tol;
    auto r = quad::integrate_to_inf(f, 0.0, scale, 1e-10);
    if (!r.converged)
        throw computation_error("sojourn quadrature did not converge", r.error);
    return 2.0 / (pi * std::sqrt(x)) * r.value;
}

// (sin(pi/(2k+1))/pi) int_x^inf x^{-1/(2k+1)} (s'-x)^{-2k/(2k+1)} h_beta(s', t) ds'.
// The substitution s' = x + u^{2k+1} removes the endpoint singularity:
//   = ((2k+1) sin(pi/(2k+1))/pi) x^{-1/(2k+1)} int_0^inf h_beta(x + u^{2k+1}, t) du.
inline double sojourn_odd_density(const SojournParams& s, double x, double tol = 1e-8) {
    s.validate();
    if (s.parity != Parity::odd)
        throw domain_error("sojourn_odd_density requires odd parity");
    if (!(x > 0.0)) throw domain_error("sojourn density requires x > 0");
    const int m = 2 * s.k + 1;
    auto f = [&](double u) {
        return specfun::subordinator_density(s.beta, x + std::pow(u, m), s.t);
    };
    const double co = m * std::sin(pi / m) / pi * std::pow(x, -1.0 / m);
    const double scale = 0.25 * tol / std::max(co, 1e-300);
    auto r = quad::integrate_to_inf(f, 0.0, scale, 1e-10);
    if (!r.converged)
        throw computation_error("sojourn quadrature did not converge", r.error);
    return co * r.value;
}

// Closed form for the half-order even case, t/(pi sqrt(2 x^3)) E_{1,3/2}(-t^2/(2x)).
// Its kernel t e^{-t^2/(2s)}/sqrt(2 pi s^3) has Laplace transform e^{-t sqrt(2 lambda)},
// i.e. it equals h_{1/2}(s, t sqrt(2)) in this module's convention; the closed
// form therefore matches sojourn_even_density(beta=1/2) at subordinator time
// t*sqrt(2).
inline double sojourn_half_closed(double t, double x) {
    if (!(t > 0.0)) throw domain_error("sojourn_half_closed requires t > 0");
    if (!(x > 0.0)) throw domain_error("sojourn_half_closed requires x > 0");
    const double z = -t * t / (2.0 * x);
    return t / (pi * std::sqrt(2.0 * x * x * x)) *
           specfun::mittag_leffler(specfun::MLParams{1.0, 1.5}, z);
}

}

#endif
