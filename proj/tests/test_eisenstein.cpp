#include <catch2/catch_amalgamated.hpp>

#include <kbessel/eisenstein.hpp>

using namespace kbessel;

namespace {

double rel(const Complex<double>& a, const Complex<double>& b)
{
    return abs(a - b) / abs(b);
}

} // namespace

TEST_CASE("first coefficient is 2/xi(2s)")
{
    Complex<double> s{1.3, 40.0};
    auto c1 = fourier_coefficient(1, s);
    auto xi2s = to_double(detail::xi_of_2s(s));
    CHECK(rel(c1, Complex<double>(2.0) / xi2s) < 1e-13);
}

TEST_CASE("coefficient ratio c2/c1")
{
    Complex<double> s{1.3, 40.0};
    auto c1 = fourier_coefficient(1, s);
    auto c2 = fourier_coefficient(2, s);
    auto want = detail::cpow(2.0, s - Complex<double>(0.5))
              * (Complex<double>(1.0)
                 + detail::cpow(2.0, Complex<double>(1.0) - 2.0 * s));
    CHECK(rel(c2 / c1, want) < 1e-12);
}

TEST_CASE("sixth coefficient reference value")
{
    Complex<double> s{1.3, 40.0};
    auto c6 = fourier_coefficient(6, s);
    Complex<double> want{-1459933165422758377111361519.5,
                         1176161457501718947498196296.47};
    CHECK(rel(c6, want) < 1e-12);
}

TEST_CASE("coefficients are multiplicative in the Hecke sense")
{
    Complex<double> s{0.8, 33.0};
    auto c1 = fourier_coefficient(1, s);
    auto c2 = fourier_coefficient(2, s);
    auto c3 = fourier_coefficient(3, s);
    auto c6 = fourier_coefficient(6, s);
    CHECK(rel(c2 * c3, c1 * c6) < 1e-12);
}

TEST_CASE("coefficient symmetry and guards")
{
    Complex<double> s{1.1, 45.0};
    auto p = fourier_coefficient(7, s);
    auto m = fourier_coefficient(-7, s);
    CHECK(p.re == m.re);
    CHECK(p.im == m.im);
    CHECK_THROWS_AS(fourier_coefficient(0, s), domain_error);
}

TEST_CASE("scattering term")
{
    auto phi = scattering_term({1.3, 40.0});
    CHECK(phi.re == Catch::Approx(0.266958170792185650).epsilon(1e-12));
    CHECK(phi.im == Catch::Approx(-0.158849642176400459).epsilon(1e-12));
    // unitary on the critical line
    CHECK(abs(scattering_term({0.5, 30.0})) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(scattering_term({1.0, 0.0}), pole_error);
    CHECK_THROWS_AS(scattering_term({0.5, 0.2}), domain_error);
}

TEST_CASE("truncation length rule")
{
    const double pi = 4 * std::atan(1.0);
    for (double t : {30.0, 60.0, 120.0}) {
        for (double y : {0.8, 2.0, 10.0}) {
            long N = truncation_length(t, y);
            double need = std::max(pi * t / 2 + 40, t + 40);
            CHECK(2 * pi * (N + 1) * y >= need - 1e-9);
            if (N > 1)
                CHECK(2 * pi * N * y < need);
        }
    }
    CHECK(truncation_length(30.0, 100.0) == 1);
}

TEST_CASE("direct coset sum at bound 1")
{
    double x = 0.3, y = 1.4;
    Complex<double> s{1.2, 0.0};
    // c = 0 coset plus c = 1, d in {-1, 0, 1}
    auto expected = detail::cpow(y, s);
    for (int d : {-1, 0, 1}) {
        double w = (x + d) * (x + d) + y * y;
        expected += detail::cpow(y / w, s);
    }
    auto got = direct_coset_sum(x, y, s, 1, false);
    CHECK(rel(got, expected) < 1e-14);
}

TEST_CASE("direct coset sum guards")
{
    CHECK_THROWS_AS(direct_coset_sum(0.0, 1.0, {0.9, 30.0}, 100), divergence_error);
    CHECK_THROWS_AS(direct_coset_sum(0.0, -1.0, {1.2, 0.0}, 100), domain_error);
    CHECK_THROWS_AS(coset_tail_estimate({1.0, 10.0}, 100), divergence_error);
    CHECK(coset_tail_estimate({1.5, 0.0}, 100) == Catch::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("evaluator invariance under the modular translations")
{
    Complex<double> s{1.2, 32.0};
    auto a = eisenstein_eval(0.21, 1.3, s);
    auto b = eisenstein_eval(1.21, 1.3, s);
    auto c = eisenstein_eval(-0.21, 1.3, s);
    CHECK(rel(b.value, a.value) < 1e-12);
    CHECK(rel(c.value, a.value) < 1e-12);
}

TEST_CASE("evaluator matches the definition sum")
{
    Complex<double> s{1.2, 30.0};
    double x = 0.3, y = 1.5;
    auto fourier = eisenstein_eval(x, y, s);
    auto direct = direct_coset_sum(x, y, s, 1500);
    CHECK(rel(fourier.value, direct) < 1e-4);
}

TEST_CASE("evaluator inversion symmetry")
{
    // E(-1/z, s) = E(z, s); take z = iy so -1/z = i/y
    Complex<double> s{1.1, 35.0};
    auto a = eisenstein_eval(0.0, 2.0, s);
    auto b = eisenstein_eval(0.0, 0.5, s);
    CHECK(rel(a.value, b.value) < 1e-7);
}

TEST_CASE("evaluator domain guards")
{
    CHECK_THROWS_AS(eisenstein_eval(0.0, -1.0, {1.2, 40.0}), domain_error);
    CHECK_THROWS_AS(eisenstein_eval(0.0, 1.0, {0.2, 40.0}), domain_error);
    CHECK_THROWS_AS(eisenstein_eval(0.0, 1.0, {1.2, 5.0}), domain_error);
}

TEST_CASE("shape-check rows are finite and labelled")
{
    auto rows = bound_shape_check(1.0, {30.0}, {0.8, 10.0, 20.0}, {10});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].kind == "coeff");
    for (const auto& row : rows) {
        CHECK(std::isfinite(row.ratio));
        CHECK(row.ratio >= 0);
        CHECK(row.bound > 0);
    }
    CHECK(rows[1].label == "y<1");
    CHECK(rows[2].label == "1<=y<=t/2");
    CHECK(rows[3].label == "y>t/2");
}
