#ifndef FRACPSEUDO_QUADRATURE_HPP
#define FRACPSEUDO_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <queue>
#include <type_traits>
#include <vector>

#include "fracpseudo/errors.hpp"

// Small adaptive quadrature toolkit used throughout the library:
//  - integrate        adaptive 15-point Gauss-Kronrod on a finite interval
//  - integrate_to_inf same, on [a, inf) through the map x = a + u/(1-u)
//  - tanh_sinh        double-exponential rule for endpoint singularities
// Integrands may return double or std::complex<double>.

namespace fracpseudo::quad {

namespace detail {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule.
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double mag(const T& v) {
    return std::abs(v);
}

}  // namespace detail

template <class T>
struct result {
    T value{};
    double error = 0.0;    // absolute error estimate
    long evals = 0;
    bool converged = false;
};

// One Gauss-Kronrod panel.  Returns the K15 value, an error estimate from the
// K15/G7 difference, and the integral of |f| used for relative scaling.
template <class F, class T = std::invoke_result_t<F, double>>
void gk15_panel(F&& f, double a, double b, T& value, double& err, double& resabs) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const T fc = f(c);
    T resg = detail::wg[3] * fc;
    T resk = detail::wgk[7] * fc;
    resabs = detail::wgk[7] * detail::mag(fc);

    T fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * detail::xgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const T fsum = fv1[j] + fv2[j];
        resk += detail::wgk[j] * fsum;
        resabs += detail::wgk[j] * (detail::mag(fv1[j]) + detail::mag(fv2[j]));
        if (j % 2 == 1) resg += detail::wg[j / 2] * fsum;
    }

    value = resk * h;
    resabs *= std::abs(h);

    // QUADPACK-style rescaled error estimate.
    const T reskh = resk * 0.5;
    double resasc = detail::wgk[7] * detail::mag(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += detail::wgk[j] * (detail::mag(fv1[j] - reskh) + detail::mag(fv2[j] - reskh));
    resasc *= std::abs(h);

    err = detail::mag(resk - resg) * std::abs(h) * 200.0;
    if (resasc != 0.0 && err > 0.0)
        err = resasc * std::min(1.0, std::pow(err / resasc, 1.5));
    const double eps50 = 50.0 * 2.2204460492503131e-16 * resabs;
    if (err < eps50) err = eps50;
}

// Adaptive bisection, worst interval first.
template <class F, class T = std::invoke_result_t<F, double>>
result<T> integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                    double rel_tol = 1e-10, int max_panels = 4000,
                    const std::vector<double>* split_hints = nullptr) {
    struct panel {
        double a, b, err;
        T val;
        bool operator<(const panel& o) const { return err < o.err; }
    };

    result<T> out;
    std::priority_queue<panel> q;

    std::vector<double> edges;
    edges.push_back(a);
    if (split_hints)
        for (double s : *split_hints)
            if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    T total{};
    double toterr = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        panel p{edges[i], edges[i + 1], 0.0, T{}};
        double resabs;
        gk15_panel(f, p.a, p.b, p.val, p.err, resabs);
        out.evals += 15;
        total += p.val;
        toterr += p.err;
        q.push(p);
    }

    int panels = static_cast<int>(edges.size()) - 1;
    while (panels < max_panels) {
        const double tol = std::max(abs_tol, rel_tol * detail::mag(total));
        if (toterr <= tol) break;
        panel worst = q.top();
        q.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution; accept its estimate
            if (q.empty()) break;
            toterr -= worst.err;   // freeze: stop counting it against the budget
            continue;
        }
        total -= worst.val;
        toterr -= worst.err;
        for (int half = 0; half < 2; ++half) {
            panel p{half == 0 ? worst.a : mid, half == 0 ? mid : worst.b, 0.0, T{}};
            double resabs;
            gk15_panel(f, p.a, p.b, p.val, p.err, resabs);
            out.evals += 15;
            total += p.val;
            toterr += p.err;
            q.push(p);
        }
        ++panels;
    }

    out.value = total;
    out.error = toterr;
    out.converged = toterr <= std::max(abs_tol, rel_tol * detail::mag(total));
    return out;
}

// [a, inf) via x = a + u/(1-u).  Suitable when f decays exponentially or like
// x^{-s} with s > 2 (otherwise the transformed integrand is endpoint-singular).
template <class F, class T = std::invoke_result_t<F, double>>
result<T> integrate_to_inf(F&& f, double a, double abs_tol = 1e-10,
                           double rel_tol = 1e-10, int max_panels = 4000) {
    auto g = [&](double u) -> T {
        const double om = 1.0 - u;
        const double x = a + u / om;
        return f(x) / (om * om);
    };
    // keep away from u=1 where x overflows; x(u=1-1e-14) ~ 1e14
    static const std::vector<double> hints{0.5, 0.9, 0.99, 0.999};
    return integrate(g, 0.0, 1.0 - 1e-14, abs_tol, rel_tol, max_panels, &hints);
}

// Double-exponential rule on (a,b) for integrands with integrable endpoint
// singularities.  Nodes are placed from the transformed trapezoid rule with
// step halving until two consecutive levels agree.
template <class F, class T = std::invoke_result_t<F, double>>
result<T> tanh_sinh(F&& f, double a, double b, double tol = 1e-10,
                    int max_level = 10) {
    constexpr double pi_half = 1.5707963267948966;
    const double hw = 0.5 * (b - a);

    result<T> out;

    // g(t) = f(x(t)) * w(t), evaluated via the distance to the nearer endpoint
    // so that nodes hug the singularity without catastrophic rounding.
    auto g = [&](double t) -> T {
        const double u = pi_half * std::sinh(t);
        // 1 - tanh|u| = 2 / (exp(2|u|) + 1)
        const double d = 2.0 * hw / (std::exp(2.0 * std::abs(u)) + 1.0);
        if (d <= 0.0) return T{};
        const double x = (t < 0.0) ? a + d : b - d;
        if (x <= a || x >= b) return T{};
        const double ch = std::cosh(u);
        const double w = pi_half * std::cosh(t) / (ch * ch);
        return f(x) * (hw * w);
    };

    const double t_max = 6.0;
    double h = 1.0;
    T sum = g(0.0);
    out.evals = 1;
    for (double t = h; t <= t_max; t += h) {
        sum += g(t) + g(-t);
        out.evals += 2;
    }
    T prev = sum * h;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= t_max; t += 2.0 * h) {
            sum += g(t) + g(-t);
            out.evals += 2;
        }
        const T cur = sum * h;
        out.error = detail::mag(cur - prev);
        prev = cur;
        if (level >= 3 && out.error <= tol * std::max(1.0, detail::mag(cur))) {
            out.value = cur;
            out.converged = true;
            return out;
        }
    }
    out.value = prev;
    out.converged = false;
    return out;
}

// Iterated Aitken extrapolation of a sequence of partial sums.  Used to
// accelerate alternating segment sums from oscillatory integrals.
inline double aitken(std::vector<double> s) {
    while (s.size() >= 3) {
        std::vector<double> nxt;
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            const double d1 = s[i + 1] - s[i];
            const double d2 = s[i + 2] - s[i + 1];
            const double den = d2 - d1;
            if (den == 0.0)
                nxt.push_back(s[i + 2]);
            else
                nxt.push_back(s[i + 2] - d2 * d2 / den);
        }
        s = std::move(nxt);
    }
    return s.back();
}

}

#endif
