#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "cellfade/errors.hpp"

namespace cellfade {

namespace detail {

// Continued fraction for the regularized incomplete beta (Lentz's method).
inline double beta_cf(double a, double b, double x) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-15;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 5000; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) return h;
    }
    throw error("incomplete beta continued fraction did not converge");
}

} // namespace detail

// Regularized incomplete beta function I_x(a, b).
inline double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("incomplete_beta needs a > 0 and b > 0");
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * detail::beta_cf(a, b, x) / a;
    }
    return 1.0 - front * detail::beta_cf(b, a, 1.0 - x) / b;
}

// CDF of Student's t with dof degrees of freedom.
inline double t_cdf(double t, double dof) {
    if (!(dof >= 1.0)) {
        throw std::invalid_argument("t_cdf needs dof >= 1");
    }
    const double x = dof / (dof + t * t);
    const double tail = 0.5 * incomplete_beta(0.5 * dof, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

// p-quantile of Student's t, found by bracketed bisection on the CDF.
inline double t_quantile(double prob, double dof) {
    if (!(prob > 0.0 && prob < 1.0)) {
        throw std::invalid_argument("t_quantile needs prob in (0, 1)");
    }
    if (!(dof >= 1.0)) {
        throw std::invalid_argument("t_quantile needs dof >= 1");
    }
    if (prob == 0.5) return 0.0;
    if (prob < 0.5) return -t_quantile(1.0 - prob, dof);

    double hi = 1.0;
    while (t_cdf(hi, dof) < prob) {
        hi *= 2.0;
        if (hi > 1e300) throw error("t_quantile bracket expansion failed");
    }
    double lo = 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-10 * std::max(1.0, std::fabs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (t_cdf(mid, dof) < prob) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace cellfade
