#ifndef KBESSEL_BIGFLOAT_HPP
#define KBESSEL_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

namespace kbessel {

// Variable-precision real. Expression templates are disabled: results then
// carry the precision that was current when they were constructed, which is
// what the scoped-precision ladder below relies on.
using BigReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// RAII guard: set the default working precision (decimal digits) for all
// BigReal temporaries created inside the scope.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned digits10)
        : prev_(BigReal::default_precision())
    {
        BigReal::default_precision(digits10);
    }
    ~ScopedPrecision() { BigReal::default_precision(prev_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned prev_;
};

struct PrecisionPolicy {
    unsigned working_digits = 30;
    unsigned cancellation_guard_digits = 15;
};

// Digit budget for the series oracle at order imaginary part t.  The
// I_{-nu} - I_nu difference loses about pi*|t|/ln(10) digits to cancellation.
inline unsigned series_digits(double t, const PrecisionPolicy& pol = {})
{
    double extra = 1.3644 * (t < 0 ? -t : t);   // pi/ln(10) = 1.36437...
    return pol.working_digits + static_cast<unsigned>(extra) + 1
         + pol.cancellation_guard_digits;
}

// Contour quadrature is non-oscillatory along steepest descent, so its digit
// count does not grow with t.
inline unsigned contour_digits(const PrecisionPolicy& pol = {})
{
    return pol.working_digits + pol.cancellation_guard_digits;
}

inline double to_double(const BigReal& x) { return x.convert_to<double>(); }

} // namespace kbessel

#endif
