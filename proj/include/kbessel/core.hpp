#ifndef KBESSEL_CORE_HPP
#define KBESSEL_CORE_HPP

#include <cmath>
#include <optional>
#include <string>

#include "complex.hpp"
#include "errors.hpp"

namespace kbessel {

enum class Regime {
    MonoNonuniform,          // t = y sin(theta), theta in [0, pi/2)
    OscNonuniform,           // t = y cosh(mu), mu > 0
    UniformNearCoalescence,  // |t/y - 1| within the coalescence band
    SmallArgument            // 0 < y < 1
};

inline const char* regime_name(Regime g)
{
    switch (g) {
        case Regime::MonoNonuniform:         return "mono";
        case Regime::OscNonuniform:          return "osc";
        case Regime::UniformNearCoalescence: return "uniform";
        case Regime::SmallArgument:          return "small-y";
    }
    return "?";
}

struct RegimeThresholds {
    double coalescence_width = 0.05;  // route to uniform when |t/y - 1| <= this
    double small_y_cut = 1.0;
    double coarse_cut_ratio = 1.5707963267948966;  // pi/2
    double m_bound = 1.5;             // |r| <= M
};

struct OrderSpec {
    double r = 0;
    double t = 0;   // as given (sign preserved)
    double y = 1;
    Regime regime = Regime::MonoNonuniform;
    std::optional<double> theta;  // |t| = y sin(theta)
    std::optional<double> mu;     // |t| = y cosh(mu)
    bool conjugate = false;       // true when t < 0 (evaluate at |t|, conjugate)
};

// Symbolic O-term exponent, e.g. {-3,2} for O(y^{-3/2}).
struct ErrorOrder {
    int num = 0;
    int den = 1;
    double value() const { return static_cast<double>(num) / den; }
};

template <class Real>
struct EvalResult {
    Complex<Real> value;
    Regime regime = Regime::MonoNonuniform;
    ErrorOrder error_order;
    Real envelope = Real(0);  // a priori magnitude bound where available, else 0
};

inline OrderSpec classify_regime(double r, double t, double y,
                                 const RegimeThresholds& th = {})
{
    if (!(y > 0))
        throw domain_error("classify_regime: y must be positive");
    if (std::abs(r) > th.m_bound)
        throw order_out_of_range("classify_regime: |r| exceeds M");

    OrderSpec spec;
    spec.r = r;
    spec.t = t;
    spec.y = y;
    spec.conjugate = t < 0;
    double ta = std::abs(t);

    if (y < th.small_y_cut) {
        spec.regime = Regime::SmallArgument;
        return spec;
    }
    double ratio = ta / y;
    if (std::abs(ratio - 1.0) <= th.coalescence_width) {
        spec.regime = Regime::UniformNearCoalescence;
        if (ratio <= 1.0)
            spec.theta = std::asin(ratio);
        else
            spec.mu = std::acosh(ratio);
        return spec;
    }
    if (ratio < 1.0) {
        spec.regime = Regime::MonoNonuniform;
        spec.theta = std::asin(ratio);
    } else {
        spec.regime = Regime::OscNonuniform;
        spec.mu = std::acosh(ratio);
    }
    return spec;
}

} // namespace kbessel

#endif
