#ifndef KBESSEL_SADDLE_HPP
#define KBESSEL_SADDLE_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace kbessel {

// Default half-width of the uniform (Airy) windows around the coalescence
// point, in the regime parameter (|theta - pi/2| or mu).  Chosen empirically:
// wide enough to cover the |t/y - 1| <= 0.05 routing band with margin.
inline constexpr double uniform_window = 0.35;

namespace detail {

template <class Real>
Real pi_const()
{
    using std::atan;
    return Real(4) * atan(Real(1));
}

// x cos x - sin x, stable near 0 (leading term -x^3/3)
template <class Real>
Real xcosx_minus_sinx(const Real& x)
{
    using std::abs; using std::cos; using std::sin;
    if (abs(x) > Real(0.5))
        return x * cos(x) - sin(x);
    const Real eps = std::numeric_limits<Real>::epsilon();
    Real x2 = x * x;
    Real term = -x * x2 / Real(3);  // k=1: -x^3 * 2/3!
    Real sum = term;
    for (unsigned k = 2; k < 1000; ++k) {
        term *= -x2 / Real((2 * k - 2) * (2 * k + 1));
        sum += term;
        if (abs(term) <= eps * abs(sum))
            break;
    }
    return sum;
}

// x cosh x - sinh x, stable near 0 (leading term +x^3/3)
template <class Real>
Real xcoshx_minus_sinhx(const Real& x)
{
    using std::abs; using std::cosh; using std::sinh;
    if (abs(x) > Real(0.5))
        return x * cosh(x) - sinh(x);
    const Real eps = std::numeric_limits<Real>::epsilon();
    Real x2 = x * x;
    Real term = x * x2 / Real(3);
    Real sum = term;
    for (unsigned k = 2; k < 1000; ++k) {
        term *= x2 / Real((2 * k - 2) * (2 * k + 1));
        sum += term;
        if (abs(term) <= eps * abs(sum))
            break;
    }
    return sum;
}

// sinh x - x, stable near 0 (leading term x^3/6)
template <class Real>
Real sinhx_minus_x(const Real& x)
{
    using std::abs; using std::sinh;
    if (abs(x) > Real(0.5))
        return sinh(x) - x;
    const Real eps = std::numeric_limits<Real>::epsilon();
    Real x2 = x * x;
    Real term = x * x2 / Real(6);
    Real sum = term;
    for (unsigned k = 2; k < 1000; ++k) {
        term *= x2 / Real((2 * k + 1) * 2 * k);
        sum += term;
        if (abs(term) <= eps * abs(sum))
            break;
    }
    return sum;
}

} // namespace detail

template <class Real>
struct PhaseFunction {
    enum class Kind { Mono, Osc };
    Kind kind;
    Real param;  // theta (Mono) or mu (Osc)

    static PhaseFunction mono(const Real& theta) { return {Kind::Mono, theta}; }
    static PhaseFunction osc(const Real& mu) { return {Kind::Osc, mu}; }

    // cosh R - i R c, c = sin(theta) or cosh(mu)
    Real speed() const
    {
        using std::sin; using std::cosh;
        return kind == Kind::Mono ? sin(param) : cosh(param);
    }

    Complex<Real> operator()(const Complex<Real>& R) const
    {
        return cosh(R) - Complex<Real>(Real(0), speed()) * R;
    }

    Complex<Real> derivative(const Complex<Real>& R) const
    {
        return sinh(R) - Complex<Real>(Real(0), speed());
    }
};

// Closed-form saddles of the phase.  Mono: R_k = i((-1)^k theta + k pi).
// Osc: R_k^{+-} = +-mu + i(pi/2 + 2 k pi), minus listed first.
template <class Real>
std::vector<Complex<Real>> saddle_points(const PhaseFunction<Real>& phase,
                                         int k_min, int k_max)
{
    const Real pi = detail::pi_const<Real>();
    std::vector<Complex<Real>> out;
    for (int k = k_min; k <= k_max; ++k) {
        if (phase.kind == PhaseFunction<Real>::Kind::Mono) {
            Real sgn = (k % 2 == 0) ? Real(1) : Real(-1);
            out.push_back({Real(0), sgn * phase.param + Real(k) * pi});
        } else {
            Real im = pi / 2 + Real(2 * k) * pi;
            out.push_back({-phase.param, im});
            out.push_back({phase.param, im});
        }
    }
    return out;
}

namespace detail {

// Steepest-descent curve through i*theta in the monotonic case:
// R(u) = u + i w(u), sin w = sin(theta) u / sinh u.  Valid for
// theta in (0, pi/2]; at theta = pi/2 the curve has a corner at u = 0.
template <class Real>
struct MonoPath {
    Real theta, s, c;  // sin(theta), cos(theta)

    explicit MonoPath(const Real& th) : theta(th)
    {
        using std::sin; using std::cos;
        s = sin(th);
        c = cos(th);
    }

    Real g(const Real& u) const
    {
        using std::sinh;
        if (u == Real(0))
            return s;
        return s * u / sinh(u);
    }

    // 1 - g^2 = cos^2(theta) + sin^2(theta) (sinh u - u)(sinh u + u)/sinh^2 u,
    // stable at theta = pi/2 where the direct form cancels completely
    Real one_minus_g2(const Real& u) const
    {
        using std::sinh;
        if (u == Real(0))
            return c * c;
        Real sh = sinh(u);
        return c * c + s * s * sinhx_minus_x(u) * (sh + u) / (sh * sh);
    }

    Real w(const Real& u) const
    {
        using std::asin;
        return asin(g(u));
    }

    // dw/du = g' / sqrt(1 - g^2); both factors vanish linearly at the
    // theta = pi/2 corner, so each is evaluated in cancellation-free form
    Real wprime(const Real& u) const
    {
        using std::sinh; using std::sqrt;
        if (u == Real(0))
            return Real(0);  // theta < pi/2 limit; corner never sampled at 0
        Real sh = sinh(u);
        Real gp = -s * xcoshx_minus_sinhx(u) / (sh * sh);
        return gp / sqrt(one_minus_g2(u));
    }

    Complex<Real> point(const Real& u) const { return {u, w(u)}; }
};

} // namespace detail

template <class Real>
Complex<Real> descent_path_mono(const Real& theta, const Real& u)
{
    const Real pi = detail::pi_const<Real>();
    if (!(theta > Real(0)) || !(theta < pi / 2))
        throw domain_error("descent_path_mono: theta outside (0, pi/2)");
    return detail::MonoPath<Real>(theta).point(u);
}

enum class OscBranch { Lminus = -1, Lplus = +1 };

namespace detail {

// Numerically traced steepest-descent branch in the oscillatory case.
// The level curve phi(R) = phi(R0) + tau^2 is followed by Newton
// continuation from the saddle R0 = b mu + i pi/2; a precomputed table of
// nodes makes point lookups cheap and keeps Newton in its quadratic basin.
template <class Real>
class OscContourTracer {
  public:
    OscContourTracer(const Real& mu, int branch_sign, const Real& tau_max,
                     int n_table = 400)
        : phase_(PhaseFunction<Real>::osc(mu)), b_(branch_sign),
          tau_max_(tau_max), n_(n_table)
    {
        using std::sinh; using std::cosh; using std::sqrt; using std::cos;
        using std::sin;
        const Real pi = pi_const<Real>();
        if (!(mu > Real(0)))
            throw domain_error("osc contour: mu must be positive");
        R0_ = Complex<Real>(Real(b_) * mu, pi / 2);
        phi0_ = phase_(R0_);
        Real m = sqrt(Real(2) / sinh(mu));
        // R'(0) = sqrt(2/phi''(R0)) with the branch giving descent direction
        d0_ = Complex<Real>(m * cos(pi / 4), -Real(b_) * m * sin(pi / 4));
        // next Taylor coefficient of R(tau); branch-independent
        c2_ = Complex<Real>(Real(0), cosh(mu) / (3 * sinh(mu) * sinh(mu)));

        dtau_ = tau_max_ / Real(n_);
        table_.assign(2 * n_ + 1, R0_);
        for (int sgn : {+1, -1}) {
            Complex<Real> R = R0_;
            for (int k = 1; k <= n_; ++k) {
                R = advance(R, Real(sgn * (k - 1)) * dtau_, Real(sgn * k) * dtau_, 0);
                table_[n_ + sgn * k] = R;
            }
        }
    }

    const Complex<Real>& saddle() const { return R0_; }
    const Complex<Real>& phi0() const { return phi0_; }
    const Real& tau_max() const { return tau_max_; }

    Complex<Real> point(const Real& tau) const
    {
        if (near_saddle(tau))
            return R0_ + d0_ * tau + c2_ * (tau * tau);
        return from_table(tau);
    }

    // R(tau) and dR/dtau = 2 tau / phi'(R); within sqrt(eps) of the saddle
    // phi'(R) is rounding-dominated, so the local Taylor inversion of
    // phi - phi0 = tau^2 takes over there
    Complex<Real> point_and_deriv(const Real& tau, Complex<Real>& deriv) const
    {
        if (near_saddle(tau)) {
            deriv = d0_ + Real(2) * (c2_ * tau);
            return R0_ + d0_ * tau + c2_ * (tau * tau);
        }
        Complex<Real> R = from_table(tau);
        deriv = Complex<Real>(Real(2) * tau) / phase_.derivative(R);
        return R;
    }

  private:
    bool near_saddle(const Real& tau) const
    {
        using std::abs; using std::sqrt;
        return abs(tau) <= sqrt(std::numeric_limits<Real>::epsilon());
    }

    Complex<Real> from_table(const Real& tau) const
    {
        using std::floor;
        long idx = static_cast<long>(to_long(floor(tau / dtau_ + Real(0.5))));
        if (idx < -n_) idx = -n_;
        if (idx > n_) idx = n_;
        return advance(table_[n_ + idx], Real(idx) * dtau_, tau, 0);
    }

    Complex<Real> predict(const Complex<Real>& R, const Real& from,
                          const Real& to) const
    {
        if (from == Real(0))
            return R + d0_ * to;
        return R + (Real(2) * from / phase_.derivative(R)) * (to - from);
    }

    // Newton continuation along the level curve.  Where the curve passes near
    // a neighboring saddle the single-step basin shrinks; bisecting the step
    // restores convergence.
    Complex<Real> advance(const Complex<Real>& R, const Real& from, const Real& to,
                          int depth) const
    {
        if (from == to)
            return R;
        try {
            return polish(predict(R, from, to), to);
        } catch (const accuracy_error&) {
            if (depth >= 40)
                throw;
            Real mid = (from + to) / 2;
            Complex<Real> Rm = advance(R, from, mid, depth + 1);
            return advance(Rm, mid, to, depth + 1);
        }
    }

    Complex<Real> polish(Complex<Real> R, const Real& tau) const
    {
        using std::abs;
        const Real eps = std::numeric_limits<Real>::epsilon();
        const Real tol = eps * 100;
        // where phi' is small (near the saddle) the step criterion is
        // unreachable: the residual bottoms out at rounding scale first
        const Real res_floor = 100 * eps * (kbessel::abs(phi0_) + tau * tau + 1);
        for (int it = 0; it < 80; ++it) {
            Complex<Real> res = phase_(R) - phi0_ - Complex<Real>(tau * tau);
            if (kbessel::abs(res) <= res_floor)
                return R;
            Complex<Real> corr = res / phase_.derivative(R);
            R -= corr;
            if (kbessel::abs(corr) < tol * (Real(1) + kbessel::abs(R)))
                return R;
        }
        throw accuracy_error("osc contour: Newton did not converge");
    }

    static long to_long(const Real& x)
    {
        return static_cast<long>(static_cast<double>(x));
    }

    PhaseFunction<Real> phase_;
    int b_;
    Complex<Real> R0_, phi0_, d0_, c2_;
    Real tau_max_, dtau_;
    int n_;
    std::vector<Complex<Real>> table_;
};

} // namespace detail

template <class Real>
Complex<Real> descent_path_osc(const Real& mu, OscBranch branch, const Real& s)
{
    using std::abs;
    if (!(mu > Real(0)))
        throw domain_error("descent_path_osc: mu must be positive");
    Real span = abs(s) + Real(1);
    detail::OscContourTracer<Real> tracer(mu, static_cast<int>(branch), span);
    return tracer.point(s);
}

// chi = y (sinh mu - mu cosh mu), the conserved imaginary part of y*phi
// along the oscillatory descent branches (+chi on L+, -chi on L-).
template <class Real>
Real chi_constant(const Real& mu, const Real& y)
{
    if (!(mu > Real(0)))
        throw domain_error("chi_constant: mu must be positive");
    return -y * detail::xcoshx_minus_sinhx(mu);
}

// CFU saddle-separation parameter, monotonic case; theta in (0, pi/2],
// nonnegative, vanishing at theta = pi/2.
template <class Real>
Real cfu_zeta_mono(const Real& theta)
{
    using std::pow;
    const Real pi = detail::pi_const<Real>();
    Real tt = theta - pi / 2;
    Real s3 = detail::xcosx_minus_sinx(tt);  // >= 0 for tt <= 0
    if (s3 == Real(0))
        return Real(0);
    return pow(Real(1.5) * s3, Real(2) / 3);
}

// CFU parameter, oscillatory case; mu >= 0, nonpositive, vanishing at mu = 0.
template <class Real>
Real cfu_zeta_osc(const Real& mu)
{
    using std::pow;
    Real m3 = detail::xcoshx_minus_sinhx(mu);
    if (m3 == Real(0))
        return Real(0);
    return -pow(Real(1.5) * m3, Real(2) / 3);
}

enum class CfuCase { Mono, Osc };

template <class Real>
struct SaddleData {
    std::vector<Complex<Real>> saddles;
    Real zeta = Real(0);
    Real a_coeff = Real(0);
    Complex<Real> p0;
    Complex<Real> q0;
    std::optional<Real> chi;
};

// Leading CFU coefficients p0, q0 together with zeta and A.
// Mono: param is theta-tilde = theta - pi/2 in [-window, 0].
// Osc: param is mu in [0, window].  param = 0 uses the exact Taylor limits
// (the ratio zeta^{1/2}/sin(-theta-tilde) tends to 2^{-1/3}).
template <class Real>
SaddleData<Real> cfu_coefficients(const Real& r, const Real& param, CfuCase c)
{
    using std::sin; using std::cos; using std::sinh; using std::cosh;
    using std::sqrt; using std::pow; using std::abs;
    const Real pi = detail::pi_const<Real>();
    const Real window = Real(uniform_window);

    SaddleData<Real> out;
    Complex<Real> ph = exp(Complex<Real>(Real(0), r * pi / 2));  // e^{i r pi/2}
    Real inv_sqrt2 = Real(1) / sqrt(Real(2));
    Real cbrt2 = pow(Real(2), Real(1) / 3);

    if (c == CfuCase::Mono) {
        Real tt = param;
        if (tt > Real(0) || tt < -window)
            throw window_error("cfu_coefficients: theta-tilde outside window");
        Real theta = tt + pi / 2;
        out.saddles = {{Real(0), theta}, {Real(0), pi - theta}};
        out.a_coeff = -(pi / 2) * cos(tt);
        Real s3 = detail::xcosx_minus_sinx(tt);
        Real zr;    // zeta^{1/2}
        Real ratio; // zeta^{1/2} / sin(-theta-tilde)
        Real sq;    // sin(r tt) / zeta^{1/2}
        if (tt == Real(0)) {
            out.zeta = Real(0);
            zr = Real(0);
            ratio = Real(1) / cbrt2;
            sq = -r * cbrt2;
        } else {
            zr = pow(Real(1.5) * s3, Real(1) / 3);
            out.zeta = zr * zr;
            ratio = zr / sin(-tt);
            sq = sin(r * tt) / zr;
        }
        Real S = sqrt(ratio);
        out.p0 = Complex<Real>(Real(0), -inv_sqrt2) * ph * (cos(r * tt) * S);
        out.q0 = Complex<Real>(inv_sqrt2) * ph * (sq * S);
    } else {
        Real mu = param;
        if (mu < Real(0) || mu > window)
            throw window_error("cfu_coefficients: mu outside window");
        out.saddles = {{-mu, pi / 2}, {mu, pi / 2}};
        out.a_coeff = -(pi / 2) * cosh(mu);
        Real m3 = detail::xcoshx_minus_sinhx(mu);
        Real zr, ratio, sq;
        if (mu == Real(0)) {
            out.zeta = Real(0);
            zr = Real(0);
            ratio = Real(1) / cbrt2;
            sq = -r * cbrt2;
        } else {
            zr = pow(Real(1.5) * m3, Real(1) / 3);  // |zeta|^{1/2}
            out.zeta = -zr * zr;
            ratio = zr / sinh(mu);
            sq = -sinh(r * mu) / zr;
        }
        Real S = sqrt(ratio);
        out.p0 = Complex<Real>(Real(0), -inv_sqrt2) * ph * (cosh(r * mu) * S);
        out.q0 = Complex<Real>(inv_sqrt2) * ph * (sq * S);
    }
    return out;
}

} // namespace kbessel

#endif
