#ifndef KBESSEL_QUADRATURE_HPP
#define KBESSEL_QUADRATURE_HPP

#include <cmath>
#include <limits>

#include "complex.hpp"
#include "errors.hpp"

namespace kbessel {

// tanh-sinh rule on [a, b] with level doubling.  Spectrally accurate for
// integrands analytic in the open interval; endpoint behaviour (including
// vanishing endpoint values and mild corners at the endpoints) is absorbed
// by the double-exponential clustering.  f takes Real, returns Complex<Real>.
template <class Real, class F>
Complex<Real> tanh_sinh(F&& f, const Real& a, const Real& b, const Real& rel_tol,
                        int max_level = 12)
{
    using std::exp; using std::cosh; using std::sinh; using std::tanh; using std::log;
    using std::abs; using std::atan;

    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real half_pi = Real(2) * atan(Real(1));
    const Real c = (a + b) / Real(2);
    const Real d = (b - a) / Real(2);
    // stop placing nodes once they are within eps of the endpoints
    const Real g_cut = log(Real(4) / eps) / Real(2);

    auto node_sum = [&](const Real& h, long k0, long stride) {
        // sum of w_k f(x_k) over k = k0, k0+stride, ... (and mirrored), h fixed
        Complex<Real> s{Real(0), Real(0)};
        for (long k = k0;; k += stride) {
            Real g = half_pi * sinh(Real(k) * h);
            if (g > g_cut)
                break;
            Real ch = cosh(g);
            Real w = half_pi * cosh(Real(k) * h) / (ch * ch);
            Real x = d * tanh(g);
            s += w * f(c + x);
            if (k != 0)
                s += w * f(c - x);
            if (k == 0 && stride > 1)
                break;  // defensive; k0=0 only used with stride 1 at level 0
        }
        return s;
    };

    Real h = Real(1);
    Complex<Real> sum = node_sum(h, 0, 1);
    Complex<Real> prev = d * h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h /= Real(2);
        sum += node_sum(h, 1, 2);  // new (odd) nodes at the finer spacing
        Complex<Real> cur = d * h * sum;
        Real scale = abs(cur);
        if (level >= 3 && abs(cur - prev) <= rel_tol * (scale + eps))
            return cur;
        prev = cur;
    }
    throw accuracy_error("tanh_sinh: no convergence within level budget");
}

// Trapezoid rule on [a, b] with interval doubling.  Spectrally accurate for
// smooth integrands that decay below the tolerance at both endpoints
// (Gaussian tails); used for the oscillatory-case contour integral in the
// steepest-descent variable.
template <class Real, class F>
Complex<Real> trapezoid_doubling(F&& f, const Real& a, const Real& b,
                                 const Real& rel_tol, int n0 = 64,
                                 int max_doublings = 12)
{
    using std::abs;
    const Real eps = std::numeric_limits<Real>::epsilon();

    long n = n0;
    Real h = (b - a) / Real(n);
    Complex<Real> s = (f(a) + f(b)) * (Real(1) / Real(2));
    for (long k = 1; k < n; ++k)
        s += f(a + Real(k) * h);
    Complex<Real> prev = h * s;

    for (int pass = 0; pass < max_doublings; ++pass) {
        Complex<Real> mid{Real(0), Real(0)};
        for (long k = 0; k < n; ++k)
            mid += f(a + (Real(k) + Real(1) / Real(2)) * h);
        s += mid;
        n *= 2;
        h /= Real(2);
        Complex<Real> cur = h * s;
        if (pass >= 1 && abs(cur - prev) <= rel_tol * (abs(cur) + eps))
            return cur;
        prev = cur;
    }
    throw accuracy_error("trapezoid_doubling: no convergence within budget");
}

} // namespace kbessel

#endif
