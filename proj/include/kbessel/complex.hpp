#ifndef KBESSEL_COMPLEX_HPP
#define KBESSEL_COMPLEX_HPP

#include <cmath>
#include <ostream>

#include "bigfloat.hpp"

namespace kbessel {

// Minimal complex template.  std::complex is only specified for the builtin
// floating types, so multiprecision reals get their own small type here.
template <class Real>
struct Complex {
    Real re{};
    Real im{};

    Complex() = default;
    Complex(const Real& r) : re(r), im(Real(0)) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}

    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o)
    {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
};

template <class Real>
Complex<Real> operator+(Complex<Real> a, const Complex<Real>& b) { return a += b; }
template <class Real>
Complex<Real> operator-(Complex<Real> a, const Complex<Real>& b) { return a -= b; }
template <class Real>
Complex<Real> operator*(Complex<Real> a, const Complex<Real>& b) { return a *= b; }

template <class Real>
Complex<Real> operator*(const Real& s, Complex<Real> a) { a.re *= s; a.im *= s; return a; }
template <class Real>
Complex<Real> operator*(Complex<Real> a, const Real& s) { a.re *= s; a.im *= s; return a; }

template <class Real>
Complex<Real> operator/(const Complex<Real>& a, const Real& s)
{
    return {a.re / s, a.im / s};
}

template <class Real>
Complex<Real> operator/(const Complex<Real>& a, const Complex<Real>& b)
{
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

template <class Real>
Complex<Real> operator/(const Real& s, const Complex<Real>& b)
{
    Real d = b.re * b.re + b.im * b.im;
    return {s * b.re / d, -s * b.im / d};
}

template <class Real>
Complex<Real> operator+(Complex<Real> a, const Real& s) { a.re += s; return a; }
template <class Real>
Complex<Real> operator+(const Real& s, Complex<Real> a) { a.re += s; return a; }
template <class Real>
Complex<Real> operator-(Complex<Real> a, const Real& s) { a.re -= s; return a; }
template <class Real>
Complex<Real> operator-(const Real& s, const Complex<Real>& a) { return {s - a.re, -a.im}; }

template <class Real>
Complex<Real> conj(const Complex<Real>& a) { return {a.re, -a.im}; }

template <class Real>
Real norm(const Complex<Real>& a) { return a.re * a.re + a.im * a.im; }

template <class Real>
Real abs(const Complex<Real>& a)
{
    using std::hypot;
    return hypot(a.re, a.im);
}

template <class Real>
Real arg(const Complex<Real>& a)
{
    using std::atan2;
    return atan2(a.im, a.re);
}

template <class Real>
Complex<Real> exp(const Complex<Real>& a)
{
    using std::exp; using std::cos; using std::sin;
    Real m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}

// cosh(u+iv) = cosh u cos v + i sinh u sin v
template <class Real>
Complex<Real> cosh(const Complex<Real>& a)
{
    using std::cosh; using std::sinh; using std::cos; using std::sin;
    return {cosh(a.re) * cos(a.im), sinh(a.re) * sin(a.im)};
}

template <class Real>
Complex<Real> sinh(const Complex<Real>& a)
{
    using std::cosh; using std::sinh; using std::cos; using std::sin;
    return {sinh(a.re) * cos(a.im), cosh(a.re) * sin(a.im)};
}

// sin(a+bi) = sin a cosh b + i cos a sinh b
template <class Real>
Complex<Real> sin(const Complex<Real>& a)
{
    using std::cosh; using std::sinh; using std::cos; using std::sin;
    return {sin(a.re) * cosh(a.im), cos(a.re) * sinh(a.im)};
}

// principal log
template <class Real>
Complex<Real> log(const Complex<Real>& a)
{
    using std::log;
    return {log(abs(a)), arg(a)};
}

// z^w = exp(w log z), principal branch
template <class Real>
Complex<Real> pow(const Complex<Real>& z, const Complex<Real>& w)
{
    return exp(w * log(z));
}

template <class Real>
std::ostream& operator<<(std::ostream& os, const Complex<Real>& a)
{
    return os << "(" << a.re << (a.im < Real(0) ? "" : "+") << a.im << "i)";
}

using BigComplex = Complex<BigReal>;

inline Complex<double> to_double(const BigComplex& z)
{
    return {to_double(z.re), to_double(z.im)};
}

} // namespace kbessel

#endif
