#ifndef KBESSEL_VERIFY_HPP
#define KBESSEL_VERIFY_HPP

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "eisenstein.hpp"

namespace kbessel {

// Self-check suites shared by the CLI verify command and the acceptance
// runner.  Each suite compares an evaluator against the oracle (or a closed
// form) and reports measured quantities against fixed thresholds.

struct VerifyRow {
    std::string label;
    double p1 = 0;
    double p2 = 0;
    double p3 = 0;
    double measured = 0;
    double threshold = 0;
    bool pass = true;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<VerifyRow> rows;

    void add(const std::string& label, double p1, double p2, double p3,
             double measured, double threshold, bool ok)
    {
        rows.push_back({label, p1, p2, p3, measured, threshold, ok});
        pass = pass && ok;
    }
};

namespace detail {

inline double rel_dev_big(const Complex<double>& approx, const BigComplex& exact)
{
    BigComplex a{BigReal(approx.re), BigReal(approx.im)};
    return to_double(kbessel::abs(a - exact) / kbessel::abs(exact));
}

} // namespace detail

// Mono dominant term: e(2y)/e(y) <= 0.65 along y = 50, 100, 200.
inline SuiteResult verify_mono_decay()
{
    const double pi = 4 * std::atan(1.0);
    SuiteResult res{"mono-decay"};
    PrecisionPolicy pol;
    for (double r : {0.0, 1.0, 1.5}) {
        for (double theta : {pi / 6, pi / 3}) {
            double prev = 0;
            for (double y : {50.0, 100.0, 200.0}) {
                auto approx = k_mono_nonuniform(r, theta, y);
                BigComplex oracle = k_contour({BigReal(r), BigReal(y * std::sin(theta))},
                                              BigReal(y), pol);
                double e = detail::rel_dev_big(approx.value, oracle);
                if (prev > 0)
                    res.add("e(2y)/e(y)", r, theta, y, e / prev, 0.65, e / prev <= 0.65);
                else
                    res.add("e(y)", r, theta, y, e, 0, true);
                prev = e;
            }
        }
    }
    return res;
}

// theta = pi/2 branch: oracle K_{it}(t) vs the closed-form dominant term.
inline SuiteResult verify_branch_constant()
{
    const double pi = 4 * std::atan(1.0);
    SuiteResult res{"branch-constant"};
    PrecisionPolicy pol;
    double prev = 0;
    for (double t : {100.0, 200.0}) {
        BigComplex oracle = k_contour({BigReal(0), BigReal(t)}, BigReal(t), pol);
        double closed = std::exp(-pi * t / 2) * std::pow(t, -1.0 / 3)
                      * 1.4052573853713080;
        double d = detail::rel_dev_big({closed, 0.0}, oracle);
        double cap = std::pow(t, -1.0 / 3);  // C = 1
        res.add("rel-dev", 0, t, 0, d, cap, d <= cap);
        if (prev > 0)
            res.add("shrinks", 0, t, 0, d / prev, 1.0, d < prev);
        prev = d;
    }
    return res;
}

namespace detail {

// Max envelope-normalized deviation of the osc dominant bracket over 20
// phase samples spanning one oscillation period, keeping samples where the
// bracket is above half its envelope.
inline double osc_window_error(double r, double mu, double y,
                               const PrecisionPolicy& pol)
{
    const double pi = 4 * std::atan(1.0);
    double c = std::sinh(mu) - mu * std::cosh(mu);
    double step = pi / (20 * std::abs(c));
    double worst = 0;
    for (int j = 0; j < 20; ++j) {
        double yy = y + j * step;
        auto approx = k_osc_nonuniform(r, mu, yy);
        if (kbessel::abs(approx.value) < approx.envelope / 2)
            continue;
        BigComplex oracle = k_contour({BigReal(r), BigReal(yy * std::cosh(mu))},
                                      BigReal(yy), pol);
        BigComplex a{BigReal(approx.value.re), BigReal(approx.value.im)};
        double e = to_double(kbessel::abs(a - oracle)) / approx.envelope;
        worst = std::max(worst, e);
    }
    return worst;
}

} // namespace detail

// Osc dominant term: decay of the envelope-normalized error, plus the r = 0
// classical-formula identity.
inline SuiteResult verify_osc_decay()
{
    const double pi = 4 * std::atan(1.0);
    SuiteResult res{"osc-decay"};
    PrecisionPolicy pol;
    for (double mu : {0.5, 1.0}) {
        for (double r : {0.0, 1.5}) {
            double prev = 0;
            for (double y : {50.0, 100.0, 200.0}) {
                double e = detail::osc_window_error(r, mu, y, pol);
                if (prev > 0)
                    res.add("e(2y)/e(y)", r, mu, y, e / prev, 0.65, e / prev <= 0.65);
                else
                    res.add("e(y)", r, mu, y, e, 0, true);
                prev = e;
            }
        }
    }
    // r = 0 classical form: sqrt(2pi) (t^2-y^2)^{-1/4} e^{-t pi/2} sin(...)
    for (double mu : {0.5, 1.0}) {
        double y = 30, t = y * std::cosh(mu);
        auto o = k_osc_nonuniform(0.0, mu, y);
        double q = std::sqrt(t * t - y * y);
        double classical = std::sqrt(2 * pi) * std::pow(t * t - y * y, -0.25)
                         * std::exp(-t * pi / 2)
                         * std::sin(pi / 4 - q + t * std::acosh(t / y));
        double rel = std::abs(o.value.re - classical) / std::abs(classical);
        bool ok = rel <= 1e-12 && o.value.im == 0.0;
        res.add("classical-r0", 0, mu, y, rel, 1e-12, ok);
    }
    return res;
}

// Uniform evaluators at the coalescence point: mono side vs the branch
// constant, osc side vs mono side.
inline SuiteResult verify_uniform_limits()
{
    const double pi = 4 * std::atan(1.0);
    SuiteResult res{"uniform-limits"};
    for (double r : {0.0, 1.0, 1.5}) {
        double y = 100;
        // the Ai channel alone carries the dominant term; the Ai' channel is
        // the next order and vanishes only at r = 0
        auto terms = detail::uniform_terms(r, 0.0, CfuCase::Mono, y);
        auto b = k_mono_nonuniform(r, pi / 2, y);
        double rel = kbessel::abs(terms.ai_term - b.value) / kbessel::abs(b.value);
        res.add("mono-pi/2", r, 0, y, rel, 1e-12, rel <= 1e-12);
        auto u = k_uniform_mono(r, pi / 2, y);
        auto v = k_uniform_osc(r, 0.0, y);
        bool exact = v.value.re == u.value.re && v.value.im == u.value.im;
        res.add("osc-mu0-exact", r, 0, y, exact ? 0.0 : 1.0, 0, exact);
    }
    return res;
}

// Two-term uniform formula across t/y in [0.96, 1.04] at y = 400 and 800.
inline SuiteResult verify_uniform_window()
{
    SuiteResult res{"uniform-window"};
    PrecisionPolicy pol;
    ScopedPrecision sp(45);
    for (double r : {0.0, 1.0, 1.5}) {
        double prev_max = 0;
        for (double y : {400.0, 800.0}) {
            double worst = 0;
            for (int k = 0; k < 9; ++k) {
                double ratio = 0.96 + 0.01 * k;
                BigReal t = BigReal(ratio) * BigReal(y);
                auto u = evaluate(BigReal(r), t, BigReal(y));
                BigComplex oracle = k_contour({BigReal(r), t}, BigReal(y), pol);
                double e = to_double(kbessel::abs(u.value - oracle)
                                     / kbessel::abs(oracle));
                worst = std::max(worst, e);
            }
            res.add("max-rel", r, 0, y, worst, 3e-2, worst <= 3e-2);
            if (prev_max > 0)
                res.add("shrinks", r, 0, y, worst / prev_max, 1.0, worst < prev_max);
            prev_max = worst;
        }
    }
    return res;
}

// Small-y envelope over a random grid, and the coarse envelope on
// y >= (pi/2)|t|.
inline SuiteResult verify_envelopes()
{
    const double pi = 4 * std::atan(1.0);
    SuiteResult res{"envelopes"};
    PrecisionPolicy pol;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ur(0.5, 1.5), ut(30.0, 150.0),
        uy(0.001, 0.999);
    int violations = 0;
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        double rr = ur(rng), t = ut(rng), y = uy(rng);
        BigComplex K = k_series({BigReal(rr - 0.5), BigReal(t)}, BigReal(y), pol);
        double env = small_y_envelope(rr, t, y);
        double ratio = to_double(kbessel::abs(K)) / env;
        worst = std::max(worst, ratio);
        if (ratio > 1)
            ++violations;
    }
    res.add("small-y-max-ratio", 0, 0, 0, worst, 1.0, violations == 0);

    double worst_c = 0;
    int violations_c = 0;
    for (double r : {0.0, 1.0, 1.5}) {
        for (double t : {30.0, 60.0}) {
            for (double f : {1.0, 1.25, 1.5}) {
                double y = (pi / 2) * t * f;
                BigComplex K = k_contour({BigReal(r), BigReal(t)}, BigReal(y), pol);
                double ratio = to_double(kbessel::abs(K)) / coarse_envelope(r, y);
                worst_c = std::max(worst_c, ratio);
                if (ratio > 1)
                    ++violations_c;
            }
        }
    }
    res.add("coarse-max-ratio", 0, 0, 0, worst_c, 1.0, violations_c == 0);
    return res;
}

// Series oracle vs contour oracle on the overlap strip.
inline SuiteResult verify_dual_oracle()
{
    SuiteResult res{"dual-oracle"};
    PrecisionPolicy pol;
    double worst = 0;
    for (double r : {0.0, 0.5, 1.0}) {
        for (double t : {5.0, 30.0, 60.0}) {
            for (double y : {1.0, 1.3, 1.6, 1.9}) {
                BigComplex a = k_series({BigReal(r), BigReal(t)}, BigReal(y), pol);
                BigComplex b = k_contour({BigReal(r), BigReal(t)}, BigReal(y), pol);
                double d = to_double(kbessel::abs(a - b) / kbessel::abs(b));
                worst = std::max(worst, d);
            }
        }
    }
    res.add("max-rel", 0, 0, 0, worst, 1e-12, worst <= 1e-12);
    return res;
}

// Fourier-side evaluator vs the definition-level coset sum.
inline SuiteResult verify_eisenstein_cross()
{
    SuiteResult res{"eisenstein-cross"};
    for (double r : {1.2, 1.5}) {
        for (double t : {30.0, 40.0}) {
            for (double y : {0.8, 1.5, 3.0}) {
                for (double x : {0.0, 0.3}) {
                    Complex<double> s{r, t};
                    auto p = eisenstein_eval(x, y, s);
                    Complex<double> cs = direct_coset_sum(x, y, s, 3000);
                    double d = kbessel::abs(p.value - cs) / kbessel::abs(cs);
                    res.add("rel-dev", r, t, y, d, 1e-5, d <= 1e-5);
                }
            }
        }
    }
    return res;
}

// Fitted decay rate of the mode sum in y against -2pi.
inline SuiteResult verify_eisenstein_decay()
{
    const double pi = 4 * std::atan(1.0);
    SuiteResult res{"eisenstein-decay"};
    Complex<double> s{1.0, 40.0};
    std::vector<double> ys = {25, 28, 31, 34, 37, 40}, ls;
    for (double y : ys)
        ls.push_back(std::log(kbessel::abs(eisenstein_tail(0.3, y, s))));
    double mx = 0, ml = 0;
    for (size_t i = 0; i < ys.size(); ++i) {
        mx += ys[i];
        ml += ls[i];
    }
    mx /= ys.size();
    ml /= ls.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < ys.size(); ++i) {
        num += (ys[i] - mx) * (ls[i] - ml);
        den += (ys[i] - mx) * (ys[i] - mx);
    }
    double slope = num / den;
    double dev = std::abs(slope + 2 * pi) / (2 * pi);
    res.add("slope-dev", s.re, s.im, 0, dev, 0.05, dev <= 0.05);
    return res;
}

// Scaled coefficient mass against the exponential-free bound shape.
inline SuiteResult verify_coefficient_shape()
{
    SuiteResult res{"coefficient-shape"};
    const double cap = 10.0;
    for (double r : {0.6, 1.0, 1.5}) {
        auto rows = bound_shape_check(r, {30.0, 60.0, 90.0, 120.0}, {});
        double worst = 0;
        for (const auto& row : rows)
            if (row.kind == "coeff")
                worst = std::max(worst, row.ratio);
        res.add("max-ratio", r, 0, 0, worst, cap, worst <= cap);
    }
    return res;
}

} // namespace kbessel

#endif
