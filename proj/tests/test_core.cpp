#include <catch2/catch_amalgamated.hpp>

#include <kbessel/core.hpp>
#include <kbessel/oracle.hpp>

using namespace kbessel;

static const double pi = 4 * std::atan(1.0);

TEST_CASE("regime routing")
{
    auto a = classify_regime(0.5, 50, 100);
    CHECK(a.regime == Regime::MonoNonuniform);
    REQUIRE(a.theta.has_value());
    CHECK(*a.theta == Catch::Approx(pi / 6).epsilon(1e-14));

    auto b = classify_regime(1.0, 100, 100);
    CHECK(b.regime == Regime::UniformNearCoalescence);

    auto c = classify_regime(0.5, 120, 0.5);
    CHECK(c.regime == Regime::SmallArgument);

    auto d = classify_regime(0.0, 300, 100);
    CHECK(d.regime == Regime::OscNonuniform);
    REQUIRE(d.mu.has_value());
}

TEST_CASE("parameter round-trip")
{
    for (double t : {20.0, 55.0, 99.0}) {
        auto spec = classify_regime(0.5, t, 100);
        REQUIRE(spec.theta.has_value());
        CHECK(100 * std::sin(*spec.theta) == Catch::Approx(t).epsilon(1e-14));
    }
    for (double t : {110.0, 200.0, 400.0}) {
        auto spec = classify_regime(0.5, t, 100);
        REQUIRE(spec.mu.has_value());
        CHECK(100 * std::cosh(*spec.mu) == Catch::Approx(t).epsilon(1e-14));
    }
}

TEST_CASE("negative t maps to conjugation")
{
    auto a = classify_regime(0.5, 60, 100);
    auto b = classify_regime(0.5, -60, 100);
    CHECK(a.regime == b.regime);
    REQUIRE(b.theta.has_value());
    CHECK(*a.theta == *b.theta);
    CHECK(b.conjugate);
    CHECK_FALSE(a.conjugate);
}

TEST_CASE("domain guards")
{
    CHECK_THROWS_AS(classify_regime(0.5, 10, 0), domain_error);
    CHECK_THROWS_AS(classify_regime(0.5, 10, -1), domain_error);
    CHECK_THROWS_AS(classify_regime(2.0, 10, 5), order_out_of_range);
}

TEST_CASE("precision policy covers the series cancellation")
{
    PrecisionPolicy pol;
    for (double t : {0.0, 40.0, 133.0}) {
        double base = pol.working_digits + pol.cancellation_guard_digits;
        CHECK(series_digits(t, pol) >= base + std::ceil(pi * t / std::log(10.0)));
    }
}

TEST_CASE("complex helpers")
{
    Complex<double> z{3.0, -4.0};
    CHECK(abs(z) == Catch::Approx(5.0));
    CHECK(norm(z) == Catch::Approx(25.0));
    CHECK(conj(z).im == 4.0);
    auto e = exp(Complex<double>{0.0, pi});
    CHECK(e.re == Catch::Approx(-1.0));
    CHECK(std::abs(e.im) < 1e-15);
    // abs must not underflow for tiny components
    Complex<double> tiny{1e-180, 1e-180};
    CHECK(abs(tiny) > 1e-180);
}

TEST_CASE("error order table")
{
    ErrorOrder mono{-3, 2};
    CHECK(mono.value() == Catch::Approx(-1.5));
    ErrorOrder branch{-2, 3};
    CHECK(branch.value() == Catch::Approx(-2.0 / 3));
    ErrorOrder uni{-4, 3};
    CHECK(uni.value() == Catch::Approx(-4.0 / 3));
}
