#include <catch2/catch_amalgamated.hpp>

#include <kbessel/gamma.hpp>
#include <kbessel/zeta.hpp>

using namespace kbessel;

namespace {

double rel_dev(const BigComplex& got, const char* re, const char* im)
{
    BigComplex want{BigReal(re), BigReal(im)};
    return to_double(kbessel::abs(got - want) / kbessel::abs(want));
}

} // namespace

TEST_CASE("gamma reference values")
{
    ScopedPrecision sp(30);
    auto g1 = gamma_complex(BigComplex{BigReal(0.5), BigReal(30)});
    CHECK(rel_dev(g1, "-8.37364769671325817908772011275e-21",
                     "1.86653765229449211914198747934e-21") < 1e-25);
    auto g2 = gamma_complex(BigComplex{BigReal(-2.5), BigReal(1)});
    CHECK(rel_dev(g2, "-0.0417366258078936137447601383098",
                     "-0.086369107369763484694186279347") < 1e-25);
    CHECK(to_double(gamma_real(BigReal(5))) == Catch::Approx(24.0).epsilon(1e-28));
    CHECK(to_double(gamma_real(BigReal(0.5)) * gamma_real(BigReal(0.5)))
          == Catch::Approx(4 * std::atan(1.0)).epsilon(1e-28));
}

TEST_CASE("gamma recurrence and reflection")
{
    ScopedPrecision sp(35);
    BigComplex z{BigReal("1.7"), BigReal("23.4")};
    auto lhs = gamma_complex(z + BigReal(1));
    auto rhs = z * gamma_complex(z);
    CHECK(to_double(kbessel::abs(lhs - rhs) / kbessel::abs(lhs)) < 1e-32);

    const BigReal pi = BigReal(4) * atan(BigReal(1));
    auto prod = gamma_complex(z) * gamma_complex(BigReal(1) - z);
    auto want = BigComplex(pi) / kbessel::sin(BigComplex(pi) * z);
    CHECK(to_double(kbessel::abs(prod - want) / kbessel::abs(want)) < 1e-30);
}

TEST_CASE("log gamma exponentiates to gamma")
{
    // Im part is only pinned down mod 2 pi, so test through exp
    ScopedPrecision sp(30);
    BigComplex z{BigReal(3), BigReal(4)};
    auto direct = gamma_complex(z);
    auto via_log = kbessel::exp(log_gamma_complex(z));
    CHECK(to_double(kbessel::abs(direct - via_log) / kbessel::abs(direct)) < 1e-28);
}

TEST_CASE("log gamma pole guard")
{
    ScopedPrecision sp(30);
    CHECK_THROWS_AS(log_gamma_complex(BigComplex{BigReal(0), BigReal(0)}), pole_error);
    CHECK_THROWS_AS(log_gamma_complex(BigComplex{BigReal(-3), BigReal(0)}), pole_error);
}

TEST_CASE("bernoulli numbers")
{
    ScopedPrecision sp(30);
    CHECK(to_double(detail::bernoulli_2k(1)) == Catch::Approx(1.0 / 6).epsilon(1e-28));
    CHECK(to_double(detail::bernoulli_2k(2)) == Catch::Approx(-1.0 / 30).epsilon(1e-28));
    CHECK(to_double(detail::bernoulli_2k(3)) == Catch::Approx(1.0 / 42).epsilon(1e-28));
    CHECK(to_double(detail::bernoulli_2k(5)) == Catch::Approx(5.0 / 66).epsilon(1e-28));
}

TEST_CASE("zeta reference values")
{
    ScopedPrecision sp(30);
    auto z1 = zeta_complex_value(BigComplex{BigReal(3), BigReal(4)});
    CHECK(rel_dev(z1, "0.89055490696507325814268921559",
                     "-0.00807594542432725984680909073844") < 1e-25);
    auto z2 = zeta_complex_value(BigComplex{BigReal(0.5), BigReal(30)});
    CHECK(rel_dev(z2, "-0.120642287590043699914021147312",
                     "-0.583691214763706288757635825664") < 1e-25);
    auto z3 = zeta_complex_value(BigComplex{BigReal("2.6"), BigReal(80)});
    CHECK(rel_dev(z3, "1.09892054341477980826951025989",
                     "0.187510290380658793615314437127") < 1e-25);

    const BigReal pi = BigReal(4) * atan(BigReal(1));
    auto z4 = zeta_complex_value(BigComplex{BigReal(2), BigReal(0)});
    CHECK(to_double(kbessel::abs(z4 - BigComplex(pi * pi / 6))) < 1e-28);
}

TEST_CASE("zeta near the first nontrivial zero")
{
    ScopedPrecision sp(30);
    BigComplex rho{BigReal(1) / 2, BigReal("14.1347251417346937904572519836")};
    CHECK(to_double(kbessel::abs(zeta_complex_value(rho))) < 1e-27);
}

TEST_CASE("completed zeta symmetry")
{
    // xi(s) = xi(1-s)
    ScopedPrecision sp(30);
    for (double tt : {7.0, 21.0, 44.0}) {
        BigComplex s{BigReal("0.7"), BigReal(tt)};
        auto a = xi_complex(s);
        auto b = xi_complex(BigComplex{BigReal(1)} - s);
        CHECK(to_double(kbessel::abs(a - b) / kbessel::abs(a)) < 1e-25);
    }
}

TEST_CASE("xi reference value")
{
    ScopedPrecision sp(30);
    auto x = xi_complex(BigComplex{BigReal("2.6"), BigReal(80)});
    CHECK(rel_dev(x, "5.84142165786415599628497596646e-27",
                   "2.15092094853104868594617124521e-27") < 1e-23);
    CHECK(to_double(log_abs_xi(BigComplex{BigReal("2.6"), BigReal(80)})
          - log(kbessel::abs(x))) == Catch::Approx(0.0).margin(1e-24));
}

TEST_CASE("zeta domain guards")
{
    ScopedPrecision sp(30);
    CHECK_THROWS_AS(zeta_complex_value(BigComplex{BigReal(1), BigReal(0)}), pole_error);
    CHECK_THROWS_AS(zeta_complex_value(BigComplex{BigReal(2), BigReal(600)}), domain_error);
}
