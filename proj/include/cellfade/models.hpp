#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellfade/errors.hpp"

namespace cellfade {

// Parametric capacity-fade families. Cycle axis is in kilocycles throughout.
//
//   SigmoidShifted     b1 - b2*x - b3*s((x-b4)/b5) + b3*s(-b4/b5)   (default)
//   SigmoidRaw         b1 - b2*x - b3*s((x-b4)/b5)
//   DoubleExponential  b1*exp(b2*x) + b3*exp(b4*x)
//   Polynomial2        b1*x^2 + b2*x + b3
//   Mixture            b1*exp(b2*x) + b3*x^2 + b4
//
// with s the standard logistic function. The shifted sigmoid satisfies
// f(0) = b1, so b1 is the initial capacity.
enum class Family {
    SigmoidShifted,
    SigmoidRaw,
    DoubleExponential,
    Polynomial2,
    Mixture,
};

inline std::size_t param_count(Family f) {
    switch (f) {
        case Family::SigmoidShifted: return 5;
        case Family::SigmoidRaw: return 5;
        case Family::DoubleExponential: return 4;
        case Family::Polynomial2: return 3;
        case Family::Mixture: return 4;
    }
    return 0;
}

inline bool is_sigmoid(Family f) {
    return f == Family::SigmoidShifted || f == Family::SigmoidRaw;
}

inline const char* family_name(Family f) {
    switch (f) {
        case Family::SigmoidShifted: return "sigmoid";
        case Family::SigmoidRaw: return "sigmoid-raw";
        case Family::DoubleExponential: return "dexp";
        case Family::Polynomial2: return "poly2";
        case Family::Mixture: return "mixture";
    }
    return "?";
}

struct Bounds {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

using ParamVector = std::vector<double>;

// Absolute floor on b5; fitting tightens it to 1e-6 * (max x - min x) so the
// logistic exponent stays representable.
inline constexpr double kBeta5FloorDefault = 1e-9;

struct ModelSpec {
    Family family = Family::SigmoidShifted;
    std::vector<Bounds> bounds;

    static ModelSpec make(Family f) {
        ModelSpec spec;
        spec.family = f;
        spec.bounds.assign(param_count(f), Bounds{});
        if (is_sigmoid(f)) {
            for (auto& b : spec.bounds) b.lo = 0.0;
            spec.bounds[4].lo = kBeta5FloorDefault;
        }
        return spec;
    }

    std::size_t size() const { return param_count(family); }
};

inline void check_dimension(const ModelSpec& spec, std::span<const double> beta) {
    if (beta.size() != spec.size()) {
        throw std::invalid_argument("parameter vector has " + std::to_string(beta.size()) +
                                    " entries, family '" + family_name(spec.family) +
                                    "' needs " + std::to_string(spec.size()));
    }
}

inline bool within_bounds(const ModelSpec& spec, std::span<const double> beta) {
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < spec.bounds[i].lo || beta[i] > spec.bounds[i].hi) return false;
    }
    return true;
}

// Logistic function, evaluated through exp(-|t|) so large |t| cannot overflow.
inline double logistic(double t) {
    if (t >= 0.0) {
        return 1.0 / (1.0 + std::exp(-t));
    }
    const double e = std::exp(t);
    return e / (1.0 + e);
}

inline double logistic_deriv(double t) {
    const double s = logistic(t);
    return s * (1.0 - s);
}

inline double evaluate(const ModelSpec& spec, std::span<const double> beta, double x) {
    check_dimension(spec, beta);
    switch (spec.family) {
        case Family::SigmoidShifted: {
            const double s = logistic((x - beta[3]) / beta[4]);
            const double c = logistic(-beta[3] / beta[4]);
            return beta[0] - beta[1] * x - beta[2] * s + beta[2] * c;
        }
        case Family::SigmoidRaw: {
            const double s = logistic((x - beta[3]) / beta[4]);
            return beta[0] - beta[1] * x - beta[2] * s;
        }
        case Family::DoubleExponential:
            return beta[0] * std::exp(beta[1] * x) + beta[2] * std::exp(beta[3] * x);
        case Family::Polynomial2:
            return beta[0] * x * x + beta[1] * x + beta[2];
        case Family::Mixture:
            return beta[0] * std::exp(beta[1] * x) + beta[2] * x * x + beta[3];
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// Analytic partial derivatives with respect to the parameters.
inline void gradient_into(const ModelSpec& spec, std::span<const double> beta, double x,
                          std::span<double> out) {
    check_dimension(spec, beta);
    if (out.size() != spec.size()) {
        throw std::invalid_argument("gradient output has wrong length");
    }
    switch (spec.family) {
        case Family::SigmoidShifted: {
            const double u = (x - beta[3]) / beta[4];
            const double v = -beta[3] / beta[4];
            const double su = logistic(u);
            const double du = su * (1.0 - su);
            const double sv = logistic(v);
            const double dv = sv * (1.0 - sv);
            out[0] = 1.0;
            out[1] = -x;
            out[2] = sv - su;
            out[3] = beta[2] / beta[4] * (du - dv);
            out[4] = beta[2] / (beta[4] * beta[4]) * ((x - beta[3]) * du + beta[3] * dv);
            return;
        }
        case Family::SigmoidRaw: {
            const double u = (x - beta[3]) / beta[4];
            const double su = logistic(u);
            const double du = su * (1.0 - su);
            out[0] = 1.0;
            out[1] = -x;
            out[2] = -su;
            out[3] = beta[2] / beta[4] * du;
            out[4] = beta[2] / (beta[4] * beta[4]) * (x - beta[3]) * du;
            return;
        }
        case Family::DoubleExponential: {
            const double e1 = std::exp(beta[1] * x);
            const double e2 = std::exp(beta[3] * x);
            out[0] = e1;
            out[1] = beta[0] * x * e1;
            out[2] = e2;
            out[3] = beta[2] * x * e2;
            return;
        }
        case Family::Polynomial2:
            out[0] = x * x;
            out[1] = x;
            out[2] = 1.0;
            return;
        case Family::Mixture: {
            const double e1 = std::exp(beta[1] * x);
            out[0] = e1;
            out[1] = beta[0] * x * e1;
            out[2] = x * x;
            out[3] = 1.0;
            return;
        }
    }
}

inline std::vector<double> gradient(const ModelSpec& spec, std::span<const double> beta,
                                    double x) {
    std::vector<double> g(spec.size());
    gradient_into(spec, beta, x, g);
    return g;
}

struct InverseResult {
    double x = 0.0;
    // Set when the curve crosses the target level more than once within the
    // horizon (possible for the non-monotone families); x is the smallest.
    bool multiple_crossings = false;
};

namespace detail {

inline double bisect(const ModelSpec& spec, std::span<const double> beta, double target,
                     double lo, double hi) {
    // f(lo) >= target >= f(hi) up to sign; plain bisection to machine width.
    double flo = evaluate(spec, beta, lo) - target;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = evaluate(spec, beta, mid) - target;
        if (fmid == 0.0) return mid;
        if ((flo > 0.0) == (fmid > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

// Smallest x >= 0 with f(x) = y_target. Sigmoid families with b2 > 0 are
// strictly decreasing and use expanding brackets; the other families are
// scanned on a uniform grid so additional crossings can be flagged.
inline InverseResult inverse(const ModelSpec& spec, std::span<const double> beta,
                             double y_target, double horizon = 1000.0) {
    check_dimension(spec, beta);
    const double f0 = evaluate(spec, beta, 0.0);
    if (y_target >= f0) {
        throw no_crossing_error("target capacity " + std::to_string(y_target) +
                                " is not below the initial value " + std::to_string(f0));
    }

    if (is_sigmoid(spec.family) && beta[1] > 0.0) {
        double hi = 1.0;
        while (evaluate(spec, beta, hi) > y_target) {
            hi *= 2.0;
            if (hi > horizon) {
                throw horizon_exceeded_error("no crossing of " + std::to_string(y_target) +
                                             " within horizon " + std::to_string(horizon));
            }
        }
        return {detail::bisect(spec, beta, y_target, 0.0, hi), false};
    }

    const int cells = 4096;
    const double step = horizon / cells;
    double prev_x = 0.0;
    double prev_v = f0 - y_target;
    InverseResult result;
    bool found = false;
    int crossings = 0;
    for (int i = 1; i <= cells; ++i) {
        const double x = step * i;
        const double v = evaluate(spec, beta, x) - y_target;
        if (v == 0.0 || (prev_v > 0.0) != (v > 0.0)) {
            ++crossings;
            if (!found) {
                result.x = v == 0.0 ? x : detail::bisect(spec, beta, y_target, prev_x, x);
                found = true;
            }
        }
        prev_x = x;
        prev_v = v;
    }
    if (!found) {
        throw horizon_exceeded_error("no crossing of " + std::to_string(y_target) +
                                     " within horizon " + std::to_string(horizon));
    }
    result.multiple_crossings = crossings > 1;
    return result;
}

// Residual of the Verhulst identity g' = g (1 - g/b3) / b5 for the logistic
// component g(x) = b3 * s((x-b4)/b5). Zero for all x; used as a test oracle.
inline double verhulst_residual(double b3, double b4, double b5, double x) {
    if (b3 <= 0.0 || b5 <= 0.0) {
        throw std::invalid_argument("verhulst_residual needs b3 > 0 and b5 > 0");
    }
    const double u = (x - b4) / b5;
    const double g = b3 * logistic(u);
    const double gprime = b3 * logistic_deriv(u) / b5;
    return gprime - g * (1.0 - g / b3) / b5;
}

} // namespace cellfade
