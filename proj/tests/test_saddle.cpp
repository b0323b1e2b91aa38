#include <catch2/catch_amalgamated.hpp>

#include <kbessel/saddle.hpp>

using namespace kbessel;

static const double pi = 4 * std::atan(1.0);

TEST_CASE("saddle points kill the phase derivative")
{
    auto mono = PhaseFunction<double>::mono(pi / 5);
    for (auto R : saddle_points(mono, -2, 2))
        CHECK(abs(mono.derivative(R)) < 1e-14);

    auto osc = PhaseFunction<double>::osc(1.3);
    for (auto R : saddle_points(osc, -1, 1))
        CHECK(abs(osc.derivative(R)) < 1e-13);
}

TEST_CASE("mono descent path reference point")
{
    auto R = descent_path_mono(pi / 6, 2.0);
    CHECK(R.re == 2.0);
    CHECK(R.im == Catch::Approx(0.279339243622242333).epsilon(1e-14));
}

TEST_CASE("mono descent path conserves the imaginary phase")
{
    for (double theta : {0.3, 1.0, 1.5}) {
        auto phase = PhaseFunction<double>::mono(theta);
        double im0 = phase(descent_path_mono(theta, 1e-9)).im;
        double prev_re = phase(descent_path_mono(theta, 1e-9)).re;
        for (double u : {0.5, 1.0, 2.0, 4.0}) {
            auto v = phase(descent_path_mono(theta, u));
            CHECK(std::abs(v.im - im0) < 1e-12);
            CHECK(v.re > prev_re);
            prev_re = v.re;
        }
    }
}

TEST_CASE("mono descent path domain")
{
    CHECK_THROWS_AS(descent_path_mono(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(descent_path_mono(pi / 2, 1.0), domain_error);
    CHECK_THROWS_AS(descent_path_mono(-0.2, 1.0), domain_error);
}

TEST_CASE("osc descent branches")
{
    double mu = 1.2;
    auto phase = PhaseFunction<double>::osc(mu);
    for (auto branch : {OscBranch::Lminus, OscBranch::Lplus}) {
        auto R0 = descent_path_osc(mu, branch, 0.0);
        CHECK(R0.re == Catch::Approx(static_cast<int>(branch) * mu).epsilon(1e-14));
        CHECK(R0.im == Catch::Approx(pi / 2).epsilon(1e-14));
        auto phi0 = phase(R0);
        for (double s : {-1.5, -0.4, 0.7, 2.0}) {
            auto d = phase(descent_path_osc(mu, branch, s)) - phi0;
            // level curve: phi - phi0 = s^2, exactly real
            CHECK(d.re == Catch::Approx(s * s).epsilon(1e-10));
            CHECK(std::abs(d.im) < 1e-10);
        }
    }
    CHECK_THROWS_AS(descent_path_osc(0.0, OscBranch::Lplus, 1.0), domain_error);
}

TEST_CASE("chi constant")
{
    CHECK(chi_constant(1.0, 10.0)
          == Catch::Approx(-3.67879441171442322).epsilon(1e-14));
    // matches Im(y phi) at the L+ saddle
    double mu = 1.0, y = 10.0;
    auto phase = PhaseFunction<double>::osc(mu);
    auto R0 = descent_path_osc(mu, OscBranch::Lplus, 0.0);
    CHECK(y * phase(R0).im == Catch::Approx(chi_constant(mu, y)).epsilon(1e-13));
    CHECK_THROWS_AS(chi_constant(-1.0, 5.0), domain_error);
}

TEST_CASE("cfu zeta values")
{
    CHECK(cfu_zeta_mono(pi / 3) == Catch::Approx(0.169567109914483774).epsilon(1e-13));
    CHECK(cfu_zeta_mono(pi / 2) == 0.0);
    CHECK(cfu_zeta_osc(0.0) == 0.0);
    CHECK(cfu_zeta_osc(0.1) == Catch::Approx(-0.00630380578634610654).epsilon(1e-12));
    CHECK(cfu_zeta_osc(1.0) == Catch::Approx(-0.672766748172095127).epsilon(1e-13));
}

TEST_CASE("cfu zeta scaling near coalescence")
{
    // zeta ~ +-2^{-2/3} param^2 near the turning point
    double c = std::pow(2.0, -2.0 / 3);
    CHECK(cfu_zeta_mono(pi / 2 - 1e-4) == Catch::Approx(c * 1e-8).epsilon(1e-6));
    CHECK(cfu_zeta_osc(1e-4) == Catch::Approx(-c * 1e-8).epsilon(1e-6));
}

TEST_CASE("cfu coefficient limits at the turning point")
{
    for (double r : {0.0, 0.5, 1.5}) {
        auto m = cfu_coefficients(r, 0.0, CfuCase::Mono);
        auto o = cfu_coefficients(r, 0.0, CfuCase::Osc);
        CHECK(m.zeta == 0.0);
        CHECK(o.zeta == 0.0);
        CHECK(abs(m.p0 - o.p0) < 1e-15);
        CHECK(abs(m.q0 - o.q0) < 1e-15);
        // |p0| = 2^{-1/6}/sqrt(2), independent of r at the turning point
        CHECK(abs(m.p0) == Catch::Approx(std::pow(2.0, -1.0 / 6) / std::sqrt(2.0))
              .epsilon(1e-14));
    }
}

TEST_CASE("cfu coefficients are continuous through the turning point")
{
    double r = 1.2, h = 1e-6;
    auto at0 = cfu_coefficients(r, 0.0, CfuCase::Osc);
    auto mono = cfu_coefficients(r, -h, CfuCase::Mono);
    auto osc = cfu_coefficients(r, h, CfuCase::Osc);
    CHECK(abs(mono.p0 - at0.p0) < 1e-5);
    CHECK(abs(osc.p0 - at0.p0) < 1e-5);
    CHECK(abs(mono.q0 - at0.q0) < 1e-5);
    CHECK(abs(osc.q0 - at0.q0) < 1e-5);
}

TEST_CASE("cfu window enforcement")
{
    CHECK_THROWS_AS(cfu_coefficients(0.5, 0.36, CfuCase::Osc), window_error);
    CHECK_THROWS_AS(cfu_coefficients(0.5, -0.36, CfuCase::Mono), window_error);
    CHECK_THROWS_AS(cfu_coefficients(0.5, 0.01, CfuCase::Mono), window_error);
    CHECK_THROWS_AS(cfu_coefficients(0.5, -0.01, CfuCase::Osc), window_error);
    CHECK_NOTHROW(cfu_coefficients(0.5, 0.35, CfuCase::Osc));
    CHECK_NOTHROW(cfu_coefficients(0.5, -0.35, CfuCase::Mono));
}

TEST_CASE("cancellation-free kernels")
{
    // small-argument series paths agree with the direct formulas
    for (double x : {0.4, 0.49}) {
        CHECK(detail::xcosx_minus_sinx(x)
              == Catch::Approx(x * std::cos(x) - std::sin(x)).epsilon(1e-13));
        CHECK(detail::xcoshx_minus_sinhx(x)
              == Catch::Approx(x * std::cosh(x) - std::sinh(x)).epsilon(1e-13));
        CHECK(detail::sinhx_minus_x(x)
              == Catch::Approx(std::sinh(x) - x).epsilon(1e-13));
    }
    // leading-order behavior at tiny arguments, where the direct form dies
    double x = 1e-8;
    CHECK(detail::xcosx_minus_sinx(x) == Catch::Approx(-x * x * x / 3).epsilon(1e-12));
    CHECK(detail::xcoshx_minus_sinhx(x) == Catch::Approx(x * x * x / 3).epsilon(1e-12));
    CHECK(detail::sinhx_minus_x(x) == Catch::Approx(x * x * x / 6).epsilon(1e-12));
}
