#ifndef KBESSEL_GAMMA_HPP
#define KBESSEL_GAMMA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <mutex>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "complex.hpp"
#include "errors.hpp"

namespace kbessel {

namespace detail {

using mpz = boost::multiprecision::mpz_int;

// Tangent numbers T_1 = 1, T_2 = 2, T_3 = 16, ... via the integer triangle
// recurrence.  Exact integers, so the cache is valid at every precision
// (a floating-point Bernoulli cache keyed to its first-use precision would
// not be).
inline const std::vector<mpz>& tangent_numbers(std::size_t n)
{
    static std::vector<mpz> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (cache.size() < n) {
        // grow geometrically: the triangle recurrence is quadratic, so
        // rebuilding one entry at a time would be cubic overall
        n = std::max({n, 2 * cache.size(), std::size_t(64)});
        std::vector<mpz> t(n + 1);
        t[1] = 1;
        for (std::size_t k = 2; k <= n; ++k)
            t[k] = mpz(k - 1) * t[k - 1];
        for (std::size_t k = 2; k <= n; ++k)
            for (std::size_t j = k; j <= n; ++j)
                t[j] = mpz(j - k) * t[j - 1] + mpz(j - k + 2) * t[j];
        cache.assign(t.begin() + 1, t.end());
    }
    return cache;
}

// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)), k >= 1, at current precision.
inline BigReal bernoulli_2k(std::size_t k)
{
    const auto& tang = tangent_numbers(k);
    mpz four_k = mpz(1) << (2 * k);
    mpz num = mpz(2 * k) * tang[k - 1];
    mpz den = four_k * (four_k - 1);
    BigReal b = BigReal(num.str()) / BigReal(den.str());
    return (k % 2 == 1) ? b : -b;
}

// Stirling series for ln Gamma, valid for Re w > 0 and |w| large enough for
// the current precision.
inline BigComplex log_gamma_stirling(const BigComplex& w)
{
    using std::log; using std::atan; using std::abs;
    const BigReal half(0.5);
    const BigReal pi = BigReal(4) * atan(BigReal(1));
    BigComplex lw = kbessel::log(w);
    BigComplex acc = (w - half) * lw - w + half * log(BigReal(2) * pi);

    BigReal tol = std::numeric_limits<BigReal>::epsilon() / 100;
    BigComplex w2 = w * w;
    BigComplex wpow = w;  // w^{2k-1}
    for (std::size_t k = 1; k < 4000; ++k) {
        BigReal b = bernoulli_2k(k);
        BigComplex term = BigComplex(b / BigReal(2 * k * (2 * k - 1))) / wpow;
        acc += term;
        if (kbessel::abs(term) < tol)
            return acc;
        wpow *= w2;
    }
    throw accuracy_error("log_gamma_stirling: series did not reach tolerance");
}

} // namespace detail

// ln Gamma(z) at the current BigReal precision.  The real part is accurate;
// the imaginary part is correct modulo 2*pi (exp of the result is the exact
// Gamma value), which is all downstream users need.
inline BigComplex log_gamma_complex(const BigComplex& z)
{
    using std::atan; using std::log; using std::floor; using std::abs;
    const BigReal pi = BigReal(4) * atan(BigReal(1));

    if (z.im == 0 && z.re <= 0 && z.re == floor(z.re))
        throw pole_error("log_gamma_complex: pole at nonpositive integer");

    if (z.im < 0)
        return conj(log_gamma_complex(conj(z)));

    if (z.re < BigReal(0.5)) {
        // reflection: ln Gamma(z) = ln(pi) - ln sin(pi z) - ln Gamma(1-z),
        // with ln sin(pi z) = -i pi z + log(E - 1) - log(2i), E = e^{2 pi i z}
        // (stable for large Im z; |E| <= 1 here)
        BigComplex E = kbessel::exp(BigComplex(BigReal(0), 2 * pi) * z);
        BigComplex lsin = BigComplex(BigReal(0), -pi) * z
                        + kbessel::log(E - BigReal(1))
                        - BigComplex(log(BigReal(2)), pi / 2);
        return BigComplex(log(pi)) - lsin - log_gamma_complex(BigReal(1) - z);
    }

    unsigned digits = BigReal::default_precision();
    BigReal radius = BigReal(0.6) * BigReal(digits) + 10;
    BigComplex w = z;
    BigComplex shift{BigReal(0), BigReal(0)};
    while (kbessel::abs(w) < radius) {
        shift += kbessel::log(w);
        w += BigReal(1);
    }
    return detail::log_gamma_stirling(w) - shift;
}

inline BigComplex gamma_complex(const BigComplex& z)
{
    return kbessel::exp(log_gamma_complex(z));
}

inline BigReal gamma_real(const BigReal& x)
{
    return gamma_complex(BigComplex(x)).re;
}

} // namespace kbessel

#endif
