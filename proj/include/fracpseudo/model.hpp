#ifndef FRACPSEUDO_MODEL_HPP
#define FRACPSEUDO_MODEL_HPP

#include <cmath>
#include <complex>
#include <string>

#include "fracpseudo/errors.hpp"

namespace fracpseudo {

using ComplexSymbol = std::complex<double>;

enum class Parity { even, odd };

// Limit families: symmetric (even order), skewed two-sided (odd order with
// weights p,q), and the fractional-shift (Feller) composition.
enum class Family { even, odd_pq, feller };

// Parameters of one model: base exponent beta in (0,1), integer k >= 1 fixing
// the integer order 2k or 2k+1, parity, and the family-specific weights.
// The effective fractional order is beta*2k (even) or beta*(2k+1) (odd).
struct ModelParams {
    double beta = 0.5;
    int k = 1;
    Parity parity = Parity::even;
    double p = 0.5;      // odd_pq only: weight of the right-drifting member
    double q = 0.5;      // odd_pq only: p + q = 1
    double theta = 0.0;  // feller only: asymmetry, -beta < theta < beta

    int integer_order() const { return parity == Parity::even ? 2 * k : 2 * k + 1; }
    double order() const { return beta * integer_order(); }

    void validate() const {
        if (!(beta > 0.0 && beta < 1.0))
            throw domain_error("beta must satisfy 0 < beta < 1");
        if (k < 1) throw domain_error("k must be a positive integer");
        if (!(p >= 0.0 && q >= 0.0 && std::abs(p + q - 1.0) < 1e-12))
            throw domain_error("weights must satisfy p >= 0, q >= 0, p + q = 1");
        if (theta != 0.0 && !(theta > -beta && theta < beta))
            throw domain_error("theta must satisfy -beta < theta < beta");
    }

    static ModelParams even(double beta, int k) {
        ModelParams m;
        m.beta = beta;
        m.k = k;
        m.parity = Parity::even;
        m.validate();
        return m;
    }

    static ModelParams odd(double beta, int k, double p) {
        ModelParams m;
        m.beta = beta;
        m.k = k;
        m.parity = Parity::odd;
        m.p = p;
        m.q = 1.0 - p;
        m.validate();
        return m;
    }

    static ModelParams feller(double beta, int k, double theta,
                              Parity parity = Parity::odd) {
        ModelParams m;
        m.beta = beta;
        m.k = k;
        m.parity = parity;
        m.theta = theta;
        m.validate();
        return m;
    }
};

inline double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}

#endif
