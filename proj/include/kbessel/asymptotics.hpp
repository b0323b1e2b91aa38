#ifndef KBESSEL_ASYMPTOTICS_HPP
#define KBESSEL_ASYMPTOTICS_HPP

#include <cmath>
#include <limits>
#include <type_traits>

#include "airy.hpp"
#include "core.hpp"
#include "gamma.hpp"
#include "oracle.hpp"
#include "saddle.hpp"

namespace kbessel {

namespace detail {

template <class Real>
struct AiryRealPair {
    Real ai;
    Real aip;
};

template <class Real>
AiryRealPair<Real> airy_for(const Real& x)
{
    if constexpr (std::is_same_v<Real, double>) {
        ScopedPrecision sp(25);
        AiryPair p = airy_pair_big(BigReal(x));
        return {to_double(p.ai), to_double(p.aip)};
    } else {
        AiryPair p = airy_pair_big(x);
        return {p.ai, p.aip};
    }
}

inline double to_double_v(double x) { return x; }
inline double to_double_v(const BigReal& x) { return to_double(x); }

// Gamma(1/3) / (2^{2/3} 3^{1/6}), the theta = pi/2 branch constant
template <class Real>
Real coalescent_branch_const()
{
    using std::pow;
    if constexpr (std::is_same_v<Real, double>) {
        return 1.4052573853713080;
    } else {
        return gamma_real(Real(1) / 3)
             / (pow(Real(2), Real(2) / 3) * pow(Real(3), Real(1) / 6));
    }
}

} // namespace detail

struct AsymptoticsConfig {
    double mono_guard = 0.05;        // rad below pi/2 refused by the mono evaluator
    double coalescence_width = 0.05; // |t/y - 1| routed to the uniform evaluators
    double m_bound = 1.5;
    double t0 = 30.0;
};

// Dominant term of the monotonic-regime expansion.  theta = pi/2 exactly
// selects the coalescent branch; the guard band just below pi/2 is refused
// (the caller must use k_uniform_mono there).
template <class Real>
EvalResult<Real> k_mono_nonuniform(const Real& r, const Real& theta, const Real& y,
                                   const AsymptoticsConfig& cfg = {})
{
    using std::sin; using std::cos; using std::sqrt; using std::exp; using std::pow;
    using std::abs;
    const Real pi = detail::pi_const<Real>();
    if (abs(r) > Real(cfg.m_bound))
        throw order_out_of_range("k_mono_nonuniform: |r| exceeds M");
    if (theta < Real(0) || theta > pi / 2)
        throw domain_error("k_mono_nonuniform: theta outside [0, pi/2]");

    EvalResult<Real> out;
    out.regime = Regime::MonoNonuniform;
    // tolerate a few ulp around pi/2: asin(1) and 2*atan(1) need not agree exactly
    const Real coal_tol = 100 * std::numeric_limits<Real>::epsilon();
    if (abs(theta - pi / 2) <= coal_tol) {
        Real mod = exp(-pi * y / 2) * pow(y, -Real(1) / 3)
                 * detail::coalescent_branch_const<Real>();
        out.value = mod * exp(Complex<Real>(Real(0), pi * r / 2));
        out.error_order = {-2, 3};
        out.envelope = mod;
        return out;
    }
    if (theta > pi / 2 - Real(cfg.mono_guard))
        throw dispatch_to_uniform("k_mono_nonuniform: theta in coalescence guard band");

    Real mod = sqrt(pi / (2 * y * cos(theta)))
             * exp(-y * (cos(theta) + theta * sin(theta)));
    out.value = mod * exp(Complex<Real>(Real(0), r * theta));
    out.error_order = {-3, 2};
    out.envelope = mod;
    return out;
}

// Two-term oscillatory-regime bracket times its prefactor.
template <class Real>
EvalResult<Real> k_osc_nonuniform(const Real& r, const Real& mu, const Real& y,
                                  const AsymptoticsConfig& cfg = {})
{
    using std::sin; using std::cos; using std::sinh; using std::cosh;
    using std::sqrt; using std::exp; using std::acosh; using std::abs;
    const Real pi = detail::pi_const<Real>();
    if (abs(r) > Real(cfg.m_bound))
        throw order_out_of_range("k_osc_nonuniform: |r| exceeds M");
    Real mu_guard = acosh(Real(1) + Real(cfg.coalescence_width));
    if (mu < mu_guard)
        throw dispatch_to_uniform("k_osc_nonuniform: mu in coalescence guard band");

    Real pre = sqrt(2 * pi / (y * sinh(mu))) * exp(-y * (pi / 2) * cosh(mu));
    // pi/4 - y(sinh mu - mu cosh mu), evaluated cancellation-free
    Real phase_arg = pi / 4 + y * detail::xcoshx_minus_sinhx(mu);
    Complex<Real> bracket{cosh(r * mu) * sin(phase_arg),
                          -sinh(r * mu) * cos(phase_arg)};
    EvalResult<Real> out;
    out.regime = Regime::OscNonuniform;
    out.value = pre * (exp(Complex<Real>(Real(0), r * pi / 2)) * bracket);
    out.error_order = {-3, 2};
    out.envelope = pre * sqrt(cosh(r * mu) * cosh(r * mu) + sinh(r * mu) * sinh(r * mu));
    return out;
}

namespace detail {

template <class Real>
struct UniformTerms {
    Complex<Real> ai_term;   // O(y^{-1/3}) channel
    Complex<Real> aip_term;  // O(y^{-2/3}) channel
};

// 2 pi i e^{yA} [ p0 Ai(y^{2/3} zeta) / y^{1/3} - q0 Ai'(y^{2/3} zeta) / y^{2/3} ]
template <class Real>
UniformTerms<Real> uniform_terms(const Real& r, const Real& param, CfuCase c,
                                 const Real& y)
{
    using std::exp; using std::pow;
    const Real pi = pi_const<Real>();
    SaddleData<Real> sd = cfu_coefficients(r, param, c);
    Real y23 = pow(y, Real(2) / 3);
    Real y13 = pow(y, Real(1) / 3);
    AiryRealPair<Real> a = airy_for(y23 * sd.zeta);
    Complex<Real> pre = Complex<Real>(Real(0), 2 * pi) * exp(Complex<Real>(y * sd.a_coeff));
    return {pre * sd.p0 * (a.ai / y13),
            -Real(1) * (pre * sd.q0 * (a.aip / y23))};
}

} // namespace detail

// Uniform Airy-type evaluator on the monotonic side of the coalescence.
template <class Real>
EvalResult<Real> k_uniform_mono(const Real& r, const Real& theta, const Real& y,
                                const AsymptoticsConfig& cfg = {})
{
    using std::abs;
    const Real pi = detail::pi_const<Real>();
    if (abs(r) > Real(cfg.m_bound))
        throw order_out_of_range("k_uniform_mono: |r| exceeds M");
    Real tt = theta - pi / 2;
    if (tt > Real(0) && tt <= 100 * std::numeric_limits<Real>::epsilon())
        tt = Real(0);
    detail::UniformTerms<Real> terms =
        detail::uniform_terms(r, tt, CfuCase::Mono, y);
    EvalResult<Real> out;
    out.regime = Regime::UniformNearCoalescence;
    out.value = terms.ai_term + terms.aip_term;
    out.error_order = {-4, 3};  // Ai channel; the Ai' channel carries -5/3
    out.envelope = abs(terms.ai_term) + abs(terms.aip_term);
    return out;
}

// Uniform evaluator on the oscillatory side; mu = 0 is routed through the
// mono evaluator at theta = pi/2 so the two agree identically there.
template <class Real>
EvalResult<Real> k_uniform_osc(const Real& r, const Real& mu, const Real& y,
                               const AsymptoticsConfig& cfg = {})
{
    using std::abs;
    const Real pi = detail::pi_const<Real>();
    if (abs(r) > Real(cfg.m_bound))
        throw order_out_of_range("k_uniform_osc: |r| exceeds M");
    if (mu == Real(0))
        return k_uniform_mono(r, pi / 2, y, cfg);
    detail::UniformTerms<Real> terms =
        detail::uniform_terms(r, mu, CfuCase::Osc, y);
    EvalResult<Real> out;
    out.regime = Regime::UniformNearCoalescence;
    out.value = terms.ai_term + terms.aip_term;
    out.error_order = {-4, 3};
    out.envelope = abs(terms.ai_term) + abs(terms.aip_term);
    return out;
}

// Magnitude envelope for K_{r-1/2+it}(y) with 0 < y < 1, r in [1/2, 3/2],
// |t| >= t0.  The constant 8 pi carries roughly a factor-10 slack over the
// observed supremum.
template <class Real>
Real small_y_envelope(const Real& r, const Real& t, const Real& y,
                      const AsymptoticsConfig& cfg = {})
{
    using std::abs; using std::exp; using std::pow;
    const Real pi = detail::pi_const<Real>();
    if (r < Real(0.5) || r > Real(1.5))
        throw domain_error("small_y_envelope: r outside [1/2, 3/2]");
    if (abs(t) < Real(cfg.t0))
        throw domain_error("small_y_envelope: |t| below t0");
    if (!(y > Real(0)) || !(y < Real(1)))
        throw domain_error("small_y_envelope: y outside (0, 1)");
    return 8 * pi * pow(y, Real(0.5) - r) * exp(-abs(t) * pi / 2)
         * pow(abs(t), r - Real(1));
}

// Coarse large-argument envelope C' e^{-y} / sqrt(y), uniform in t.
// N is the maximum of -y R^4 / 24 + |r| R over real R.
template <class Real>
Real coarse_envelope(const Real& r, const Real& y)
{
    using std::abs; using std::exp; using std::sqrt; using std::cbrt;
    const Real pi = detail::pi_const<Real>();
    if (!(y >= Real(1)))
        throw domain_error("coarse_envelope: requires y >= 1");
    Real ra = abs(r);
    Real N = (ra == Real(0)) ? Real(0) : Real(0.75) * ra * cbrt(6 * ra / y);
    return exp(N) * sqrt(pi / 2) * exp(-y) / sqrt(y);
}

// Regime dispatcher.  Conjugates for t < 0; for 0 < y < 1 returns the series
// oracle value with the small-y envelope attached where it applies.
template <class Real>
EvalResult<Real> evaluate(const Real& r, const Real& t, const Real& y,
                          const RegimeThresholds& th = {},
                          const AsymptoticsConfig& cfg = {},
                          const PrecisionPolicy& pol = {})
{
    using std::asin; using std::acosh;
    if (t < Real(0)) {
        EvalResult<Real> res = evaluate(r, -t, y, th, cfg, pol);
        res.value = conj(res.value);
        return res;
    }
    OrderSpec spec = classify_regime(detail::to_double_v(r), detail::to_double_v(t),
                                     detail::to_double_v(y), th);
    switch (spec.regime) {
        case Regime::SmallArgument: {
            BigComplex nu{BigReal(r), BigReal(t)};
            BigComplex v = k_series(nu, BigReal(y), pol);
            EvalResult<Real> out;
            out.regime = Regime::SmallArgument;
            out.value = {Real(v.re), Real(v.im)};
            out.error_order = {0, 1};
            if (r >= Real(0) && r <= Real(1) && t >= Real(cfg.t0))
                out.envelope = small_y_envelope(r + Real(0.5), t, y, cfg);
            return out;
        }
        case Regime::UniformNearCoalescence: {
            Real ratio = t / y;
            if (ratio <= Real(1))
                return k_uniform_mono(r, asin(ratio), y, cfg);
            return k_uniform_osc(r, acosh(ratio), y, cfg);
        }
        case Regime::MonoNonuniform:
            return k_mono_nonuniform(r, asin(t / y), y, cfg);
        case Regime::OscNonuniform:
            return k_osc_nonuniform(r, acosh(t / y), y, cfg);
    }
    throw domain_error("evaluate: unreachable");
}

} // namespace kbessel

#endif
