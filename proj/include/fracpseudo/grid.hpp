#ifndef FRACPSEUDO_GRID_HPP
#define FRACPSEUDO_GRID_HPP

#include <cmath>
#include <vector>

#include "fracpseudo/errors.hpp"

namespace fracpseudo {

// Uniform or logarithmic 1-d evaluation grid.
struct GridSpec {
    double x_min = -10.0;
    double x_max = 10.0;
    int n = 401;
    bool log_spaced = false;

    void validate() const {
        if (!(x_max >= x_min)) throw domain_error("grid requires x_max >= x_min");
        if (n < 1) throw domain_error("grid requires n >= 1");
        if (n == 1 && x_max != x_min)
            throw domain_error("grid with n = 1 requires x_max == x_min");
        if (log_spaced && !(x_min > 0.0))
            throw domain_error("log-spaced grid requires x_min > 0");
    }

    double h() const { return n > 1 ? (x_max - x_min) / (n - 1) : 0.0; }

    std::vector<double> points() const {
        validate();
        std::vector<double> xs(n);
        if (n == 1) {
            xs[0] = x_min;
            return xs;
        }
        if (!log_spaced) {
            const double step = h();
            for (int i = 0; i < n; ++i) xs[i] = x_min + step * i;
        } else {
            const double la = std::log(x_min), lb = std::log(x_max);
            const double step = (lb - la) / (n - 1);
            for (int i = 0; i < n; ++i) xs[i] = std::exp(la + step * i);
        }
        xs.back() = x_max;
        return xs;
    }
};

}

#endif
