#ifndef KBESSEL_ZETA_HPP
#define KBESSEL_ZETA_HPP

#include <cmath>
#include <limits>

#include "bigfloat.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "gamma.hpp"

namespace kbessel {

struct ZetaValue {
    BigComplex s;
    BigComplex zeta;
    BigComplex xi;  // pi^{-s/2} Gamma(s/2) zeta(s)
};

namespace detail {

// Euler-Maclaurin zeta at the current precision.
inline BigComplex zeta_euler_maclaurin(const BigComplex& s)
{
    using std::log; using std::abs; using std::ceil;
    unsigned digits = BigReal::default_precision();
    double ts = std::abs(to_double(s.im));
    long N = 30 + static_cast<long>(1.6 * (ts + digits));
    long K = static_cast<long>(0.55 * digits) + 5;

    BigComplex sum{BigReal(0), BigReal(0)};
    for (long n = 1; n <= N; ++n)
        sum += kbessel::exp(-(s * BigComplex(log(BigReal(n)))));

    BigReal lnN = log(BigReal(N));
    BigComplex Nms = kbessel::exp(-(s * BigComplex(lnN)));          // N^{-s}
    BigComplex tail = kbessel::exp((BigReal(1) - s) * BigComplex(lnN))
                    / (s - BigReal(1));                             // N^{1-s}/(s-1)
    BigComplex acc = sum + tail - Nms * BigComplex(BigReal(1) / 2);

    // correction terms B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    BigComplex poch{BigReal(1), BigReal(0)};  // (s)_{2k-1} accumulated
    BigComplex Npow = Nms * BigComplex(kbessel::exp(BigComplex(lnN)).re);  // N^{-s+1}
    BigReal fact(1);  // (2k)!
    for (long k = 1; k <= K; ++k) {
        poch = (k == 1) ? BigComplex(s)
                        : poch * (s + BigReal(2 * k - 3)) * (s + BigReal(2 * k - 2));
        fact *= BigReal((2 * k) * (2 * k - 1));
        Npow = Npow / BigComplex(BigReal(N * N));  // N^{-s-2k+1}
        acc += BigComplex(bernoulli_2k(k) / fact) * poch * Npow;
    }
    return acc;
}

} // namespace detail

inline BigComplex zeta_complex_value(const BigComplex& s)
{
    if (s.im == 0 && s.re == 1)
        throw pole_error("zeta_complex: pole at s = 1");
    if (std::abs(to_double(s.im)) > 500)
        throw domain_error("zeta_complex: |Im s| above 500");
    return detail::zeta_euler_maclaurin(s);
}

inline BigComplex xi_complex(const BigComplex& s)
{
    using std::log; using std::atan;
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigComplex half_s = s * BigComplex(BigReal(1) / 2);
    return kbessel::exp(-(half_s * BigComplex(log(pi))))
         * gamma_complex(half_s) * zeta_complex_value(s);
}

inline ZetaValue zeta_complex(const BigComplex& s)
{
    ZetaValue out;
    out.s = s;
    out.zeta = zeta_complex_value(s);
    out.xi = xi_complex(s);
    return out;
}

// ln |xi(s)|; usable far beyond the dynamic range of xi itself.
inline BigReal log_abs_xi(const BigComplex& s)
{
    using std::log; using std::atan;
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigComplex half_s = s * BigComplex(BigReal(1) / 2);
    return -half_s.re * log(pi) + log_gamma_complex(half_s).re
         + log(kbessel::abs(zeta_complex_value(s)));
}

} // namespace kbessel

#endif
