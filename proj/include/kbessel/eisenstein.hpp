#ifndef KBESSEL_EISENSTEIN_HPP
#define KBESSEL_EISENSTEIN_HPP

#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "oracle.hpp"
#include "zeta.hpp"

namespace kbessel {

// E(z, s) for Gamma = PSL2(Z), the one-cusp case.  s = r + it, z = x + iy.

struct EisensteinPoint {
    double x;
    double y;
    double r;
    double t;
    long N;
    Complex<double> value;
};

struct EisensteinConfig {
    double t0 = 30.0;       // minimum |t| for the Fourier-side evaluator
    double tail_margin = 1e-10;
    long n_cap = 5000;
};

namespace detail {

inline Complex<double> cpow(double base, const Complex<double>& w)
{
    return kbessel::exp(w * Complex<double>(std::log(base)));
}

// sigma_w(n) = sum of d^w over divisors d of n
inline Complex<double> sigma_divisor(long n, const Complex<double>& w)
{
    Complex<double> sum{0.0, 0.0};
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        sum += cpow(double(d), w);
        long e = n / d;
        if (e != d)
            sum += cpow(double(e), w);
    }
    return sum;
}

inline BigComplex xi_of_2s(const Complex<double>& s)
{
    ScopedPrecision sp(30);
    return xi_complex({BigReal(2 * s.re), BigReal(2 * s.im)});
}

inline Complex<double> coefficient_from_xi(long n, const Complex<double>& s,
                                           const Complex<double>& xi2s)
{
    long an = n < 0 ? -n : n;
    Complex<double> w = Complex<double>(1.0) - 2.0 * s;  // 1 - 2s
    return 2.0 * cpow(double(an), s - Complex<double>(0.5))
         * sigma_divisor(an, w) / xi2s;
}

} // namespace detail

// c_n = 2 |n|^{s-1/2} sigma_{1-2s}(|n|) / xi(2s); c_n = c_{-n}
inline Complex<double> fourier_coefficient(long n, const Complex<double>& s)
{
    if (n == 0)
        throw domain_error("fourier_coefficient: n = 0 is the constant-term pair");
    return detail::coefficient_from_xi(n, s, to_double(detail::xi_of_2s(s)));
}

// phi(s) = xi(2s-1)/xi(2s), the scattering scalar of the modular group
inline Complex<double> scattering_term(const Complex<double>& s)
{
    if (s.im == 0.0 && s.re == 1.0)
        throw pole_error("scattering_term: xi pole at 2s - 1 = 1");
    if (std::abs(s.im) < 1.0 && !(s.re > 1.0))
        throw domain_error("scattering_term: requires |t| >= 1 (or real s > 1)");
    ScopedPrecision sp(30);
    BigComplex two_s{BigReal(2 * s.re), BigReal(2 * s.im)};
    return to_double(xi_complex(two_s - BigReal(1)) / xi_complex(two_s));
}

// First N with 2 pi (N+1) y >= max(pi|t|/2 + 40, |t| + 40); the dropped modes
// then sit past the knee of the K decay with an e^{-40} margin.
inline long truncation_length(double t, double y)
{
    const double pi = 4 * std::atan(1.0);
    double need = std::max(pi * std::abs(t) / 2 + 40.0, std::abs(t) + 40.0);
    long N = static_cast<long>(std::ceil(need / (2 * pi * y))) - 1;
    return std::max(N, 1L);
}

namespace detail {

// sum over n = 1..N of c_n sqrt(y) K_{s-1/2}(2 pi n y) 2 cos(2 pi n x)
inline Complex<double> mode_sum(double x, double y, const Complex<double>& s,
                                long N, const Complex<double>& xi2s,
                                const PrecisionPolicy& pol)
{
    const double pi = 4 * std::atan(1.0);
    BigComplex nu{BigReal(s.re - 0.5), BigReal(s.im)};
    Complex<double> sum{0.0, 0.0};
    for (long n = 1; n <= N; ++n) {
        Complex<double> K = to_double(k_oracle(nu, BigReal(2 * pi * n * y), pol));
        sum += coefficient_from_xi(n, s, xi2s)
             * (std::sqrt(y) * 2 * std::cos(2 * pi * n * x)) * K;
    }
    return sum;
}

} // namespace detail

// Fourier-expansion evaluator: y^s + phi(s) y^{1-s} + mode sum to length N.
inline EisensteinPoint eisenstein_eval(double x, double y, const Complex<double>& s,
                                       double target_accuracy = 1e-8,
                                       const EisensteinConfig& cfg = {},
                                       const PrecisionPolicy& pol = {})
{
    const double pi = 4 * std::atan(1.0);
    if (!(y > 0))
        throw domain_error("eisenstein_eval: y must be positive");
    if (s.re < 0.5 || s.re > 1.5)
        throw domain_error("eisenstein_eval: r outside [1/2, 3/2]");
    if (std::abs(s.im) < cfg.t0)
        throw domain_error("eisenstein_eval: |t| below t0");

    Complex<double> lead = detail::cpow(y, s)
                         + scattering_term(s) * detail::cpow(y, Complex<double>(1.0) - s);
    BigComplex xi2s_big = detail::xi_of_2s(s);
    Complex<double> xi2s = to_double(xi2s_big);

    long N = truncation_length(s.im, y);
    // grow N until the dropped tail clears the margin against the leading terms
    double lead_mag = kbessel::abs(lead);
    for (;; ++N) {
        if (N > cfg.n_cap)
            throw accuracy_error("eisenstein_eval: truncation cap exceeded");
        double yk = 2 * pi * (N + 1) * y;
        if (yk < 1)
            continue;
        double tail = 2 * kbessel::abs(detail::coefficient_from_xi(N + 1, s, xi2s))
                    * std::sqrt(y) * coarse_envelope(s.re - 0.5, yk)
                    * 2.0;  // geometric slack for modes past N+1
        if (tail <= std::max(cfg.tail_margin, target_accuracy) * lead_mag)
            break;
    }

    EisensteinPoint out;
    out.x = x;
    out.y = y;
    out.r = s.re;
    out.t = s.im;
    out.N = N;
    out.value = lead + detail::mode_sum(x, y, s, N, xi2s, pol);
    return out;
}

// Mode sum alone (E minus both constant terms), summed directly so the
// exponentially small tail is not lost to cancellation against y^s.
inline Complex<double> eisenstein_tail(double x, double y, const Complex<double>& s,
                                       const EisensteinConfig& cfg = {},
                                       const PrecisionPolicy& pol = {})
{
    EisensteinPoint p = eisenstein_eval(x, y, s, 1e-8, cfg, pol);
    Complex<double> xi2s = to_double(detail::xi_of_2s(s));
    return detail::mode_sum(x, y, s, p.N, xi2s, pol);
}

// Definition-level oracle: sum of y^s / |cz+d|^{2s} over coprime (c, d) with
// c >= 0, one representative per projective pair, max(|c|,|d|) <= bound.
// A raised-cosine weight on max(|c|,|d|)/bound (optional) suppresses the
// truncation-boundary oscillation and buys several digits at equal cost.
inline Complex<double> direct_coset_sum(double x, double y, const Complex<double>& s,
                                        long bound, bool smooth = true)
{
    if (!(s.re > 1.0))
        throw divergence_error("direct_coset_sum: requires Re s > 1");
    if (!(y > 0) || bound < 1)
        throw domain_error("direct_coset_sum: bad y or bound");
    const double pi = 4 * std::atan(1.0);
    double ly = std::log(y);
    Complex<double> sum = detail::cpow(y, s);  // the (0, 1) coset
    for (long c = 1; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
            if (std::gcd(c, d < 0 ? -d : d) != 1)
                continue;
            double u = double(std::max(c, d < 0 ? -d : d)) / bound;
            double eta = 1.0;
            if (smooth && u > 0.5)
                eta = 0.5 * (1.0 + std::cos(pi * (u - 0.5) / 0.5));
            double w = (c * x + d) * (c * x + d) + (c * y) * (c * y);
            sum += eta * kbessel::exp(s * Complex<double>(ly - std::log(w)));
        }
    }
    return sum;
}

inline double coset_tail_estimate(const Complex<double>& s, long bound)
{
    if (!(s.re > 1.0))
        throw divergence_error("coset_tail_estimate: requires Re s > 1");
    return std::pow(double(bound), 2.0 - 2.0 * s.re) / (2.0 * s.re - 2.0);
}

// ---- empirical shape checks ----------------------------------------------

struct ShapeRow {
    std::string kind;    // "coeff" or "series"
    std::string label;   // regime case
    double r;
    double t;
    double y;            // 0 for coefficient rows
    long N;
    double measured;
    double bound;
    double ratio;
    double alt_ratio;    // alternative large-y bound; 0 where not applicable
};

namespace detail {

// sum over 1 <= |n| <= N of |c_n|^2 e^{-|t| pi}, on a log scale so the
// e^{|t| pi/2} growth of 1/|xi(2s)| never overflows
inline double scaled_coefficient_mass(double r, double t, long N)
{
    const double pi = 4 * std::atan(1.0);
    Complex<double> s{r, t};
    double log_scale;
    {
        ScopedPrecision sp(30);
        log_scale = to_double(log_abs_xi({BigReal(2 * r), BigReal(2 * t)}))
                  + std::abs(t) * pi / 2;
    }
    Complex<double> w = Complex<double>(1.0) - 2.0 * s;
    double sum = 0;
    for (long n = 1; n <= N; ++n) {
        double lc = std::log(2.0) + (r - 0.5) * std::log(double(n))
                  + std::log(kbessel::abs(sigma_divisor(n, w))) - log_scale;
        sum += 2 * std::exp(2 * lc);  // both signs of n
    }
    return sum;
}

} // namespace detail

// Ratio tables against the omega-free parts of the Eisenstein bounds.
// omega is a user-supplied surrogate for the spectral majorant (>= 1);
// the default pins it to the valid lower bound 1.
inline std::vector<ShapeRow> bound_shape_check(
    double r, const std::vector<double>& t_grid, const std::vector<double>& y_grid,
    const std::vector<long>& coeff_lengths = {10, 100, 1000},
    const std::function<double(double)>& omega = {},
    const EisensteinConfig& cfg = {}, const PrecisionPolicy& pol = {})
{
    const double pi = 4 * std::atan(1.0);
    const double eps_exp = 0.01;
    auto om = [&](double t) { return omega ? omega(t) : 1.0; };
    std::vector<ShapeRow> rows;

    // coefficient-mass rows: sum |c_n|^2 vs e^{|t| pi} (N+|t|)(|t|+N/|t|)^{2r-1}
    for (double t : t_grid) {
        for (long N : coeff_lengths) {
            double mass = detail::scaled_coefficient_mass(r, t, N);
            double bnd = (N + std::abs(t))
                       * std::pow(std::abs(t) + double(N) / std::abs(t), 2 * r - 1);
            rows.push_back({"coeff", "coefficient-mass", r, t, 0.0, N,
                            mass, bnd, mass / bnd, 0.0});
        }
    }

    for (double t : t_grid) {
        for (double y : y_grid) {
            EisensteinPoint p = eisenstein_eval(0.0, y, {r, t}, 1e-8, cfg, pol);
            double measured = kbessel::abs(p.value - detail::cpow(y, {r, t}));
            double at = std::abs(t);
            double bnd, alt = 0;
            std::string label;
            if (y < 1) {
                label = "y<1";
                if (r <= 0.5)
                    bnd = std::sqrt(y)
                        + std::pow(y, -0.5 - eps_exp) * std::sqrt(om(t))
                          * std::pow(at, 1 + eps_exp);
                else if (r <= 1.0)
                    bnd = std::pow(y, 1 - r)
                        * (1 + std::pow(at / y, r + 0.5) + (at / y) * std::sqrt(om(t)));
                else
                    bnd = std::pow(y, 1 - r) + std::pow(at / y, 2 * r - 0.5)
                        + std::pow(at / y, r) * std::sqrt(om(t));
            } else if (y <= at / 2) {
                label = "1<=y<=t/2";
                if (r <= 0.5)
                    bnd = std::sqrt(y) + std::pow(at, 1 + eps_exp) * std::sqrt(om(t));
                else if (r <= 1.0)
                    bnd = std::pow(y, 1 - r) + std::pow(at, r + 0.5)
                        + at * std::sqrt(om(t));
                else
                    bnd = std::pow(y, 1 - r) + std::pow(at, 2 * r - 0.5)
                        + std::pow(at, r) * std::sqrt(om(t));
            } else {
                label = "y>t/2";
                double decay = std::exp(at * pi / 2 - 2 * pi * y);
                if (r <= 0.5) {
                    bnd = std::sqrt(y)
                        + decay * std::pow(at, -0.5 + eps_exp) * std::sqrt(om(t));
                    alt = std::sqrt(y)
                        + decay * std::pow(at, 0.5 + eps_exp) * std::sqrt(om(t)) / y;
                } else {
                    bnd = std::pow(y, 1 - r)
                        + decay * (std::sqrt(at) + std::sqrt(om(t) / at));
                    alt = std::pow(y, 1 - r)
                        + decay * (std::pow(at, 1.5) + std::sqrt(at * om(t))) / y;
                }
                alt = measured / alt;
            }
            rows.push_back({"series", label, r, t, y, p.N,
                            measured, bnd, measured / bnd, alt});
        }
    }
    return rows;
}

} // namespace kbessel

#endif
