#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "lbern/special_values.hpp"

using namespace lbern;

namespace {

using cplx = std::complex<double>;

double dist(cplx a, cplx b) { return std::abs(a - b); }

} // namespace

TEST_CASE("numeric embedding of exact scalars") {
    CHECK(to_complex(rational(1, 2)) == cplx(0.5, 0.0));
    CHECK(to_complex(rational(-7, 4)) == cplx(-1.75, 0.0));
    // Roots of unity land on the unit circle where they should, including
    // exponents past the power-basis cut.
    const long ms[] = {1, 2, 3, 4, 5, 6, 8, 12};
    for (long m : ms)
        for (long k = 0; k < m; ++k) {
            cplx direct = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
            CHECK(dist(to_complex(cyclotomic::root_of_unity(m, k)), direct) < 1e-12);
        }

    log_poly<rational> p(std::vector<rational>{rational(1), rational(-2)});
    cplx l2 = std::log(cplx(2.0, 0.0));
    CHECK(dist(eval_at_log(p, l2), cplx(1.0 - 2.0 * std::log(2.0), 0.0)) < 1e-14);
    CHECK(eval_at_log(log_poly<rational>(), l2) == cplx(0.0, 0.0));
}

TEST_CASE("hurwitz values at non-positive integers") {
    lambda_scalar<rational> one{rational(1), 0};
    // zeta(0, 1/5) = -B_1(1/5) = 3/10.
    CHECK(hurwitz_zeta_neg(one, 1, rational(1, 5)) == log_poly<rational>(rational(3, 10)));
    // zeta(-1, 1) = -B_2(1)/2 = -1/12.
    CHECK(hurwitz_zeta_neg(one, 2, rational(1)) == log_poly<rational>(rational(-1, 12)));
    CHECK_THROWS_AS(hurwitz_zeta_neg(one, 0, rational(1)), invalid_parameter);
}

TEST_CASE("numeric zeta series matches the exact values") {
    lambda_descriptor half = lambda_descriptor::from_rational(rational(1, 2));
    lambda_scalar<rational> hs = as_rational_scalar(half);
    cplx lnum(0.5, 0.0);
    cplx Lnum = std::log(lnum);
    const rational xs[] = {rational(1), rational(1, 2)};
    for (const rational& x : xs)
        for (long k = 1; k <= 4; ++k) {
            cplx exact = eval_at_log(hurwitz_zeta_neg(hs, k, x), Lnum);
            cplx series = zeta_series_numeric(lnum, cplx(1.0 - k, 0.0), x.to_double());
            CHECK(dist(exact, series) < 1e-10);
        }
    // A second base to make sure nothing is tuned to 1/2.
    lambda_scalar<rational> third{rational(1, 3), 1};
    cplx tnum(1.0 / 3.0, 0.0);
    for (long k = 1; k <= 3; ++k) {
        cplx exact = eval_at_log(hurwitz_zeta_neg(third, k, rational(1)), std::log(tnum));
        CHECK(dist(exact, zeta_series_numeric(tnum, cplx(1.0 - k, 0.0), 1.0)) < 1e-10);
    }
}

TEST_CASE("numeric series guard rails") {
    CHECK_THROWS_AS(zeta_series_numeric(cplx(1.2, 0.0), cplx(2.0, 0.0), 1.0), non_convergent);
    CHECK_THROWS_AS(zeta_series_numeric(cplx(1.0, 0.0), cplx(2.0, 0.0), 1.0), non_convergent);
    CHECK_THROWS_AS(zeta_series_numeric(cplx(0.0, 0.0), cplx(2.0, 0.0), 1.0), non_convergent);
    CHECK_THROWS_AS(zeta_series_numeric(cplx(0.5, 0.0), cplx(1.0, 0.0), 1.0), pole_at_one);
    CHECK_THROWS_AS(zeta_series_numeric(cplx(0.5, 0.0), cplx(2.0, 0.0), 0.0), invalid_parameter);
    auto chi = dirichlet_character::characters_mod(5)[1];
    CHECK_THROWS_AS(l_series_numeric(cplx(2.0, 0.0), cplx(2.0, 0.0), chi), non_convergent);
    CHECK_THROWS_AS(l_series_numeric(cplx(0.5, 0.0), cplx(1.0, 0.0), chi), pole_at_one);
}

TEST_CASE("twisted L series decomposes over partial zetas") {
    // L_lambda(s, chi) = f^{-s} sum_a chi(a) lambda^a zeta_{lambda^f}(s, a/f).
    auto c5 = dirichlet_character::characters_mod(5);
    auto c3 = dirichlet_character::characters_mod(3);
    const cplx lam(0.5, 0.0);
    const cplx ss[] = {cplx(2.0, 0.0), cplx(2.5, 0.0), cplx(3.0, 1.0)};
    for (const auto& chi : {c5[1], c3[1]}) {
        long f = chi.modulus();
        cplx lam_f = std::pow(lam, static_cast<double>(f));
        for (cplx s : ss) {
            cplx lhs = l_series_numeric(lam, s, chi);
            cplx rhs(0.0, 0.0);
            for (long a = 1; a <= f; ++a) {
                cplx cva = to_complex(chi.value(a));
                if (cva == cplx(0.0, 0.0))
                    continue;
                rhs += cva * std::pow(lam, static_cast<double>(a)) *
                       zeta_series_numeric(lam_f, s, static_cast<double>(a) / static_cast<double>(f));
            }
            rhs *= std::exp(-s * std::log(static_cast<double>(f)));
            CHECK(dist(lhs, rhs) < 1e-9);
        }
    }
}

TEST_CASE("L values at non-positive integers, exact and numeric") {
    auto c4 = dirichlet_character::characters_mod(4);
    auto c3 = dirichlet_character::characters_mod(3);
    auto c5 = dirichlet_character::characters_mod(5);
    lambda_descriptor one = lambda_descriptor::one();
    lambda_descriptor half = lambda_descriptor::from_rational(rational(1, 2));

    // L(0, chi_4) = 1/2 classically.
    log_poly<cyclotomic> v = l_value_neg(c4[1], one, 1);
    CHECK(v == log_poly<cyclotomic>(cyclotomic(rational(1, 2), 2)));
    CHECK_THROWS_AS(l_value_neg(c4[1], one, 0), invalid_parameter);

    // Numeric bridge at lambda = 1/2 for characters mod 3 and mod 5.
    cplx lnum(0.5, 0.0);
    cplx Lnum = std::log(lnum);
    for (const auto& chi : {c3[1], c5[1], c5[2]})
        for (long k = 1; k <= 3; ++k) {
            cplx exact = eval_at_log(l_value_neg(chi, half, k), Lnum);
            cplx series = l_series_numeric(lnum, cplx(1.0 - k, 0.0), chi);
            CHECK(dist(exact, series) < 1e-10);
        }
}

TEST_CASE("partial zeta values reassemble L values") {
    // Worked instance: H(0, 1|5) = -B_1(1/5) = 3/10 at lambda = 1.
    lambda_descriptor one = lambda_descriptor::one();
    CHECK(partial_zeta_neg(one, 1, 1, 5) == cyclotomic(rational(3, 10), 1));
    CHECK_THROWS_AS(partial_zeta_neg(one, 0, 1, 5), invalid_parameter);
    CHECK_THROWS_AS(partial_zeta_neg(one, 1, 0, 5), invalid_parameter);
    CHECK_THROWS_AS(partial_zeta_neg(one, 1, 6, 5), invalid_parameter);
    CHECK_THROWS_AS(partial_zeta_neg(lambda_descriptor::from_rational(rational(2)), 1, 1, 5), invalid_parameter);

    auto c3 = dirichlet_character::characters_mod(3);
    auto c4 = dirichlet_character::characters_mod(4);
    auto c5 = dirichlet_character::characters_mod(5);
    const lambda_descriptor lams[] = {lambda_descriptor::one(), lambda_descriptor::root(2, 1),
                                      lambda_descriptor::root(3, 1)};
    for (const auto& chi : {c3[1], c4[1], c5[1]}) {
        long f = chi.modulus();
        for (const auto& lam : lams) {
            long W = std::lcm(chi.order(), lam.is_root() ? lam.root_order() : 1L);
            for (long n = 1; n <= 5; ++n) {
                cyclotomic expect = l_value_neg(chi, lam, n).scalar_value(cyclotomic::zero(W));
                for (long F : {f, 2 * f}) {
                    cyclotomic acc = cyclotomic::zero(W);
                    for (long a = 1; a <= F; ++a) {
                        const cyclotomic& cva = chi.value(a);
                        if (cva.is_zero())
                            continue;
                        acc = add_mixed(acc, mul_mixed(cva, partial_zeta_neg(lam, n, a, F)));
                    }
                    CHECK(acc == expect);
                }
            }
        }
    }
}

TEST_CASE("multiple zeta values at non-positive integers") {
    // r = 1 recovers plain zeta.
    for (long m = 0; m <= 10; ++m)
        CHECK(multiple_zeta_neg(1, m) == riemann_zeta_neg(m));
    CHECK(multiple_zeta_neg(1, 1) == rational(-1, 12));
    CHECK(multiple_zeta_neg(2, 1) == rational(1, 12));
    CHECK(riemann_zeta_neg(0) == rational(-1, 2));
    CHECK(riemann_zeta_neg(2) == rational(0));

    // Two independent routes agree across the advertised range.
    for (long r = 1; r <= 4; ++r)
        for (long m = 0; m <= 6; ++m)
            CHECK(multiple_zeta_neg(r, m) == multiple_zeta_neg_via_zeta(r, m));

    CHECK_THROWS_AS(multiple_zeta_neg(0, 1), invalid_parameter);
    CHECK_THROWS_AS(multiple_zeta_neg(1, -1), invalid_parameter);
    CHECK_THROWS_AS(riemann_zeta_neg(-1), invalid_parameter);
}

TEST_CASE("twisted multiple zeta form and where it fails") {
    // At lambda = 1 the twisted display collapses to the plain value.
    lambda_scalar<rational> one{rational(1), 0};
    for (long r = 1; r <= 3; ++r)
        for (long m = 0; m <= 4; ++m)
            CHECK(multiple_zeta_twisted_rhs(one, r, m) == log_poly<rational>(multiple_zeta_neg(r, m)));

    // At lambda = -1, r = 1, m = 1 it gives -1/4 while the untwisted value is
    // -1/12: the display is lambda-dependent and cannot equal both.
    lambda_scalar<cyclotomic> minus{cyclotomic(rational(-1), 2), 0};
    log_poly<cyclotomic> tw = multiple_zeta_twisted_rhs(minus, 1, 1);
    CHECK(tw == log_poly<cyclotomic>(cyclotomic(rational(-1, 4), 2)));
    CHECK(multiple_zeta_neg(1, 1) == rational(-1, 12));

    CHECK_THROWS_AS(multiple_zeta_twisted_rhs(one, 0, 1), invalid_parameter);
}

TEST_CASE("log-shift resummation report stays descriptive") {
    lambda_descriptor lam = lambda_descriptor::from_rational(rational(9, 10));
    log_shift_report rep = log_shift_expansion(lam, 1, rational(0), 2, 8);
    REQUIRE(rep.residual_order_prefactor.size() == 9);
    REQUIRE(rep.residual_argument_prefactor.size() == 9);
    for (double v : rep.residual_order_prefactor)
        CHECK(std::isfinite(v));
    for (double v : rep.residual_argument_prefactor)
        CHECK(std::isfinite(v));
    // At lambda = 1 every truncation is exact for both prefactors.
    log_shift_report triv = log_shift_expansion(lambda_descriptor::one(), 2, rational(1, 2), 3, 4);
    for (double v : triv.residual_order_prefactor)
        CHECK(v < 1e-14);
    for (double v : triv.residual_argument_prefactor)
        CHECK(v < 1e-14);
    CHECK_THROWS_AS(log_shift_expansion(lambda_descriptor::root(3, 1), 1, rational(0), 2, 4), invalid_parameter);
}
