#ifndef KBESSEL_ORACLE_HPP
#define KBESSEL_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <limits>

#include "bigfloat.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "saddle.hpp"

namespace kbessel {

namespace detail {

// I_nu(y) by its defining power series, at the current precision.
inline BigComplex bessel_i_series(const BigComplex& nu, const BigReal& y)
{
    using std::log; using std::abs;
    const BigReal eps = std::numeric_limits<BigReal>::epsilon();
    BigComplex pre = kbessel::exp(nu * BigComplex(log(y / 2)))
                   * kbessel::exp(-log_gamma_complex(nu + BigReal(1)));
    BigReal q = y * y / 4;
    BigComplex term{BigReal(1), BigReal(0)};
    BigComplex sum = term;
    for (unsigned m = 1; m < 100000; ++m) {
        term = term * BigComplex(q) / (BigReal(m) * (nu + BigReal(m)));
        sum += term;
        if (kbessel::abs(term) <= eps * kbessel::abs(sum))
            return pre * sum;
    }
    throw accuracy_error("bessel_i_series: no convergence");
}

} // namespace detail

// Series oracle: K_nu(y) = (pi/2)(I_{-nu} - I_nu)/sin(pi nu) for 0 < y < 2.
// The difference cancels to e^{-pi |t|} of the summand scale, so the
// working precision grows linearly in |Im nu| per the precision policy.
inline BigComplex k_series(const BigComplex& nu, const BigReal& y,
                           const PrecisionPolicy& pol = {})
{
    using std::abs; using std::floor; using std::atan;
    if (!(y > 0) || !(y < 2))
        throw domain_error("k_series: requires 0 < y < 2");
    double t = to_double(nu.im);
    if (std::abs(t) > 200)
        throw domain_error("k_series: |Im nu| above series-oracle cap of 200");
    if (nu.im == 0 && nu.re == floor(nu.re))
        throw domain_error("k_series: degenerate integer order");
    if (nu.im < 0)
        return conj(k_series(conj(nu), y, pol));

    ScopedPrecision sp(series_digits(t, pol));
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigComplex nub = nu + BigReal(0);  // promote to working precision
    BigReal yb = y + BigReal(0);
    BigComplex diff = detail::bessel_i_series(-nub, yb)
                    - detail::bessel_i_series(nub, yb);
    return (pi / 2) * diff / kbessel::sin(nub * BigComplex(pi));
}

namespace detail {

inline BigComplex k_contour_mono(const BigReal& r, const BigReal& theta,
                                 const BigReal& y, unsigned digits)
{
    using std::abs; using std::atan2; using std::sqrt; using std::cos;
    using std::sin; using std::pow; using std::log;
    MonoPath<BigReal> path(theta);
    PhaseFunction<BigReal> phase = PhaseFunction<BigReal>::mono(theta);

    auto point = [&](const BigReal& u) {
        // w via atan2 keeps full relative accuracy near the theta = pi/2
        // corner, where asin of a near-unit argument would lose half the digits
        BigReal w = atan2(path.g(u), sqrt(path.one_minus_g2(u)));
        return Complex<BigReal>(u, w);
    };
    auto integrand = [&](const BigReal& u) {
        Complex<BigReal> R = point(u);
        Complex<BigReal> dR{BigReal(1), path.wprime(u)};
        return kbessel::exp(Complex<BigReal>(-y) * phase(R) + Complex<BigReal>(r) * R) * dR;
    };

    BigReal T = BigReal(digits) * log(BigReal(10)) + 10;
    BigReal re_phi0 = phase(point(BigReal(0))).re;
    BigReal U(1);
    while (y * (phase(point(U)).re - re_phi0) - abs(r) * U < T)
        U += BigReal(1) / 2;

    BigReal tol = pow(BigReal(10), -(static_cast<int>(digits) - 5));
    // split at u = 0: the path has a corner there at theta = pi/2
    BigComplex I = tanh_sinh<BigReal>(integrand, -U, BigReal(0), tol)
                 + tanh_sinh<BigReal>(integrand, BigReal(0), U, tol);
    return (BigReal(1) / 2) * I;
}

inline BigComplex k_contour_osc(const BigReal& r, const BigReal& mu,
                                const BigReal& y, unsigned digits)
{
    using std::abs; using std::sqrt; using std::log; using std::pow;
    BigReal T = BigReal(digits) * log(BigReal(10)) + 10;
    BigReal tau_max = sqrt((T + abs(r) * (mu + 3)) / y);
    // the traced contour carries Newton-residual noise of order
    // 100 eps (|phi0| + tau^2), so the quadrature tolerance stays above it
    BigReal tol = pow(BigReal(10), -(static_cast<int>(digits) - 7));
    int n0 = std::max(64, static_cast<int>(to_double(T)));

    BigComplex total{BigReal(0), BigReal(0)};
    for (int b : {+1, -1}) {
        OscContourTracer<BigReal> tracer(mu, b, tau_max);
        auto integrand = [&](const BigReal& tau) {
            Complex<BigReal> dR;
            Complex<BigReal> R = tracer.point_and_deriv(tau, dR);
            return kbessel::exp(Complex<BigReal>(-y * tau * tau) + Complex<BigReal>(r) * R) * dR;
        };
        BigComplex I = trapezoid_doubling<BigReal>(integrand, -tau_max, tau_max,
                                                   tol, n0);
        total += kbessel::exp(Complex<BigReal>(-y) * tracer.phi0()) * I;
    }
    return (BigReal(1) / 2) * total;
}

// Direct quadrature of the defining integral on the real axis.  The
// integrand cancels by e^{|t| pi/2}, so the working precision carries a
// matching boost; viable only for moderate t, where it covers the cases the
// descent contour cannot reach (see k_contour).
inline BigComplex k_axis(const BigReal& r, const BigReal& t, const BigReal& y,
                         unsigned digits)
{
    using std::log; using std::cosh; using std::abs; using std::atan; using std::pow;
    unsigned boosted = digits + 10
        + static_cast<unsigned>(std::ceil(0.6822 * to_double(abs(t))));
    ScopedPrecision sp(boosted);
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigReal rb = r + BigReal(0), tb = t + BigReal(0), yb = y + BigReal(0);
    BigReal T = BigReal(digits) * log(BigReal(10)) + pi * abs(tb) / 2 + 10;
    BigReal U(1);
    while (yb * cosh(U) - abs(rb) * U < T)
        U += BigReal(1) / 2;
    Complex<BigReal> nu{rb, tb};
    auto integrand = [&](const BigReal& R) {
        return kbessel::exp(Complex<BigReal>(-yb * cosh(R)) + nu * Complex<BigReal>(R));
    };
    BigReal tol = pow(BigReal(10), -(static_cast<int>(digits) - 5));
    BigComplex I = tanh_sinh<BigReal>(integrand, -U, U, tol, 15);
    return (BigReal(1) / 2) * I;
}

} // namespace detail

// Contour oracle: quadrature of the integral representation along the
// steepest-descent path through the dominant saddle(s).  Non-oscillatory,
// so the precision requirement does not grow with t.
inline BigComplex k_contour(const BigComplex& nu, const BigReal& y,
                            const PrecisionPolicy& pol = {})
{
    using std::asin; using std::acosh; using std::atan;
    if (!(y >= 1))
        throw domain_error("k_contour: requires y >= 1");
    if (nu.im < 0)
        return conj(k_contour(conj(nu), y, pol));

    unsigned digits = contour_digits(pol);
    ScopedPrecision sp(digits);
    BigReal r = nu.re + BigReal(0);
    BigReal t = nu.im + BigReal(0);
    BigReal yb = y + BigReal(0);
    BigReal ratio = t / yb;
    if (ratio <= 1) {
        BigReal theta = asin(ratio);
        return detail::k_contour_mono(r, theta, yb, digits);
    }
    BigReal mu = acosh(ratio);
    // the ascending side of each oscillatory descent branch terminates on
    // the saddle one period up, at y tau^2 = 2 pi t; when the truncation
    // range would reach that connection, integrate the real axis directly
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    using std::log; using std::abs;
    if (2 * pi * t <= BigReal(digits) * log(BigReal(10)) + 10
                      + abs(r) * (mu + 3) + 15)
        return detail::k_axis(r, t, yb, digits);
    return detail::k_contour_osc(r, mu, yb, digits);
}

// Ground-truth dispatcher: series below the contour's y >= 1 domain,
// contour elsewhere.
inline BigComplex k_oracle(const BigComplex& nu, const BigReal& y,
                           const PrecisionPolicy& pol = {})
{
    if (y < 1)
        return k_series(nu, y, pol);
    return k_contour(nu, y, pol);
}

} // namespace kbessel

#endif
