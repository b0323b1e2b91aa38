#ifndef KBESSEL_AIRY_HPP
#define KBESSEL_AIRY_HPP

#include <cmath>
#include <limits>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "gamma.hpp"

namespace kbessel {

namespace detail {

struct AiryPair {
    BigReal ai;
    BigReal aip;
};

struct AirySeriesSums {
    BigReal f, g, fp, gp;
};

// Maclaurin sums f, g (DLMF 9.4 basis solutions) and their derivatives,
// at the current precision.  Caller is responsible for any cancellation
// guard digits.
inline AirySeriesSums airy_maclaurin_sums(const BigReal& x)
{
    using std::abs;
    if (x == 0)
        return {BigReal(1), BigReal(0), BigReal(0), BigReal(1)};

    const BigReal eps = std::numeric_limits<BigReal>::epsilon();
    BigReal x3 = x * x * x;
    BigReal tf(1), tg = x;
    BigReal f(1), g = x, fp(0), gp(1);
    for (unsigned k = 1; k < 100000; ++k) {
        tf *= x3 / BigReal(3 * k * (3 * k - 1));
        tg *= x3 / BigReal((3 * k + 1) * (3 * k));
        f += tf;
        g += tg;
        fp += tf * BigReal(3 * k) / x;
        gp += tg * BigReal(3 * k + 1) / x;
        BigReal scale = abs(f) + abs(g) + 1;
        if (abs(tf) < eps * scale && abs(tg) < eps * scale)
            return {f, g, fp, gp};
    }
    throw accuracy_error("airy_maclaurin_sums: no convergence");
}

// u_k, v_k coefficient walker for the large-|x| expansions (DLMF 9.7).
struct AiryUV {
    BigReal u{1}, v{1};
    unsigned k = 0;
    void advance()
    {
        ++k;
        u *= BigReal((6 * k - 5)) * BigReal((6 * k - 3)) * BigReal((6 * k - 1))
           / (BigReal(216) * BigReal(k) * BigReal(2 * k - 1));
        v = u * BigReal(6 * k + 1) / BigReal(1 - static_cast<long>(6 * k));
    }
};

inline AiryPair airy_asymptotic_pos(const BigReal& x)
{
    using std::abs; using std::atan; using std::exp; using std::sqrt; using std::pow;
    const BigReal eps = std::numeric_limits<BigReal>::epsilon();
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigReal xi = BigReal(2) / 3 * x * sqrt(x);
    BigReal sa(1), sp(1);
    AiryUV uv;
    BigReal xpow(1), prev_mag(1);
    int sign = -1;
    for (unsigned k = 1; k < 100000; ++k) {
        uv.advance();
        xpow /= xi;
        BigReal tu = uv.u * xpow, tv = uv.v * xpow;
        BigReal mag = abs(tu);
        if (mag > prev_mag)
            throw accuracy_error("airy asymptotic: divergence before tolerance");
        sa += BigReal(sign) * tu;
        sp += BigReal(sign) * tv;
        if (mag < eps)
            break;
        prev_mag = mag;
        sign = -sign;
    }
    BigReal x4 = sqrt(sqrt(x));
    BigReal pre = exp(-xi) / (2 * sqrt(pi));
    return {pre * sa / x4, -pre * x4 * sp};
}

inline AiryPair airy_asymptotic_neg(const BigReal& x)
{
    using std::abs; using std::atan; using std::sqrt; using std::cos; using std::sin;
    const BigReal eps = std::numeric_limits<BigReal>::epsilon();
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigReal z = -x;
    BigReal xi = BigReal(2) / 3 * z * sqrt(z);

    // split Sum (-1)^k c_k xi^{-k} into even/odd parts (DLMF 9.7.9, 9.7.10)
    BigReal ue(1), uo(0), ve(1), vo(0);
    AiryUV uv;
    BigReal xpow(1), prev_mag(1);
    for (unsigned k = 1; k < 100000; ++k) {
        uv.advance();
        xpow /= xi;
        BigReal mag = abs(uv.u * xpow);
        if (mag > prev_mag)
            throw accuracy_error("airy asymptotic: divergence before tolerance");
        int half = k / 2;
        BigReal s = (half % 2 == 0) ? BigReal(1) : BigReal(-1);
        if (k % 2 == 0) {
            ue += s * uv.u * xpow;
            ve += s * uv.v * xpow;
        } else {
            uo += s * uv.u * xpow;
            vo += s * uv.v * xpow;
        }
        if (mag < eps)
            break;
        prev_mag = mag;
    }
    BigReal c = cos(xi - pi / 4), s = sin(xi - pi / 4);
    BigReal z4 = sqrt(sqrt(z));
    BigReal sq = sqrt(pi);
    return {(c * ue + s * uo) / (sq * z4),
            (s * ve - c * vo) * z4 / sq};
}

// Both Ai and Ai' at the current precision.
inline AiryPair airy_pair_big(const BigReal& x)
{
    using std::abs; using std::log; using std::pow; using std::ceil;
    if (abs(x) > BigReal(1e8))
        throw domain_error("airy: |x| too large");

    unsigned digits = BigReal::default_precision();
    // the asymptotic series bottoms out near e^{-2 xi}; below this |x| it
    // cannot reach the digit target and the series is used instead
    double ln10 = 2.302585092994046;
    double x_cut = std::pow(0.75 * (digits + 6) * ln10, 2.0 / 3.0);
    if (x_cut < 12)
        x_cut = 12;

    double xd = to_double(x);
    if (xd > x_cut)
        return airy_asymptotic_pos(x);
    if (xd < -x_cut) {
        // large oscillation phase: carry enough digits to reduce cos/sin args
        unsigned boost = digits + 10
                       + static_cast<unsigned>(std::log10(1 + std::abs(xd)) * 1.5);
        ScopedPrecision sp(boost);
        AiryPair p = airy_asymptotic_neg(BigReal(x));
        return p;
    }

    // Maclaurin with a cancellation guard: the two basis solutions grow like
    // e^{(2/3)x^{3/2}} while Ai decays like e^{-(2/3)x^{3/2}}
    unsigned boost = digits + 10
                   + static_cast<unsigned>(0.579 * std::pow(std::abs(xd), 1.5));
    ScopedPrecision sp(boost);
    AirySeriesSums s = airy_maclaurin_sums(BigReal(x));
    BigReal c1 = pow(BigReal(3), BigReal(-2) / 3) / gamma_real(BigReal(2) / 3);
    BigReal c2 = pow(BigReal(3), BigReal(-1) / 3) / gamma_real(BigReal(1) / 3);
    return {c1 * s.f - c2 * s.g, c1 * s.fp - c2 * s.gp};
}

// Independent second solution from the same Maclaurin basis; test-only
// (Wronskian check), adequate for moderate |x|.
inline AiryPair airy_bi_series(const BigReal& x)
{
    using std::pow; using std::sqrt;
    AirySeriesSums s = airy_maclaurin_sums(x);
    BigReal c1 = pow(BigReal(3), BigReal(-2) / 3) / gamma_real(BigReal(2) / 3);
    BigReal c2 = pow(BigReal(3), BigReal(-1) / 3) / gamma_real(BigReal(1) / 3);
    BigReal r3 = sqrt(BigReal(3));
    return {r3 * (c1 * s.f + c2 * s.g), r3 * (c1 * s.fp + c2 * s.gp)};
}

} // namespace detail

struct AiryValue {
    double ai;
    double ai_prime;
    double arg;
};

inline BigReal airy_ai(const BigReal& x) { return detail::airy_pair_big(x).ai; }
inline BigReal airy_ai_prime(const BigReal& x) { return detail::airy_pair_big(x).aip; }

inline double airy_ai(double x)
{
    ScopedPrecision sp(25);
    return to_double(detail::airy_pair_big(BigReal(x)).ai);
}

inline double airy_ai_prime(double x)
{
    ScopedPrecision sp(25);
    return to_double(detail::airy_pair_big(BigReal(x)).aip);
}

inline AiryValue airy(double x)
{
    ScopedPrecision sp(25);
    detail::AiryPair p = detail::airy_pair_big(BigReal(x));
    return {to_double(p.ai), to_double(p.aip), x};
}

} // namespace kbessel

#endif
