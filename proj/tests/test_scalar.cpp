#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lbern/cyclotomic.hpp"
#include "lbern/rational.hpp"

using lbern::cyclotomic;
using lbern::rational;

TEST_CASE("rational arithmetic and normalization") {
    rational a(lbern::Int(6), lbern::Int(4));
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "3/2");
    CHECK((a + rational(1, 2)).str() == "2");
    CHECK((a * rational(2, 3)).str() == "1");
    CHECK((rational(1) / rational(-3)).str() == "-1/3");
    CHECK(rational(5).is_integer());
    CHECK(rational(0).is_zero());
    CHECK(rational(2, 2).is_one());
    CHECK_THROWS_AS(rational(lbern::Int(1), lbern::Int(0)), lbern::invalid_parameter);
    CHECK_THROWS_AS(rational(1) / rational(0), lbern::zero_inverse);
    CHECK_THROWS_AS(lbern::inv(rational(0)), lbern::zero_inverse);
}

TEST_CASE("rational powers and parsing") {
    CHECK(rational(2, 3).pow(3) == rational(8, 27));
    CHECK(rational(2, 3).pow(-2) == rational(9, 4));
    CHECK(rational(7).pow(0) == rational(1));
    CHECK_THROWS_AS(rational(0).pow(-1), lbern::zero_inverse);
    CHECK(rational::parse("-5/10") == rational(-1, 2));
    CHECK(rational::parse("+7") == rational(7));
    CHECK(rational::parse("0") == rational(0));
    CHECK_THROWS_AS(rational::parse(""), lbern::invalid_parameter);
    CHECK_THROWS_AS(rational::parse("1/"), lbern::invalid_parameter);
    CHECK_THROWS_AS(rational::parse("a/2"), lbern::invalid_parameter);
    CHECK_THROWS_AS(rational::parse("1/0"), lbern::invalid_parameter);
    CHECK(rational::parse("3/2").str() == "3/2");
    CHECK(rational::parse("-4/1").str() == "-4");
}

TEST_CASE("p-adic valuation of rationals") {
    CHECK(lbern::val_p(rational(50), 5) == 2);
    CHECK(lbern::val_p(rational(3, 25), 5) == -2);
    CHECK(lbern::val_p(rational(7, 2), 5) == 0);
    CHECK(!lbern::val_p(rational(0), 5).has_value());
}

TEST_CASE("binomial cache") {
    CHECK(lbern::binomial(6, 3) == 20);
    CHECK(lbern::binomial(30, 15) == lbern::Int("155117520"));
    CHECK(lbern::binomial(5, -1) == 0);
    CHECK(lbern::binomial(5, 6) == 0);
}

TEST_CASE("cyclotomic basis has length phi(m)") {
    CHECK(lbern::euler_phi(1) == 1);
    CHECK(lbern::euler_phi(12) == 4);
    CHECK(cyclotomic::root_of_unity(12, 1).coeffs().size() == 4);
    CHECK(cyclotomic::zero(9).coeffs().size() == 6);
}

TEST_CASE("fourth root of unity squares to -1") {
    cyclotomic i = cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == cyclotomic(rational(-1), 4));
    CHECK(i.pow(4).is_one());
    CHECK(i.pow(-1) == i.pow(3));
}

TEST_CASE("inverse of a third root of unity") {
    cyclotomic z = cyclotomic::root_of_unity(3, 1);
    cyclotomic expect = -cyclotomic::one(3) - z;
    CHECK(z.inverse() == expect);
    CHECK((z * z.inverse()).is_one());
}

TEST_CASE("inverse of a generic fifth-order element") {
    cyclotomic z = cyclotomic::root_of_unity(5, 1);
    cyclotomic a = cyclotomic::one(5) + z;
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(cyclotomic::zero(5).inverse(), lbern::zero_inverse);
}

TEST_CASE("order mismatch is rejected, embedding reconciles") {
    cyclotomic a = cyclotomic::root_of_unity(3, 1);
    cyclotomic b = cyclotomic::root_of_unity(4, 1);
    CHECK_THROWS_AS(a + b, lbern::order_mismatch);
    CHECK_THROWS_AS(a * b, lbern::order_mismatch);
    auto [x, y] = lbern::lift_common(a, b);
    CHECK(x.order() == 12);
    CHECK((x * y).pow(12).is_one());
    // zeta_3 embeds into Q(zeta_6) as zeta_6^2 = zeta_6 - 1.
    cyclotomic z6 = cyclotomic::root_of_unity(6, 1);
    CHECK(a.embedded(6) == z6 * z6);
    CHECK(a.embedded(6) == z6 - rational(1));
    CHECK_THROWS_AS(a.embedded(4), lbern::order_mismatch);
}

TEST_CASE("second root of unity is -1") {
    cyclotomic m1 = cyclotomic::root_of_unity(2, 1);
    CHECK(m1 == cyclotomic(rational(-1), 2));
    CHECK((m1 * m1).is_one());
    CHECK(m1.is_rational());
    CHECK(m1.rational_part() == rational(-1));
}

TEST_CASE("sixth roots collapse as expected") {
    cyclotomic z6 = cyclotomic::root_of_unity(6, 1);
    CHECK(z6.pow(2) == cyclotomic::root_of_unity(3, 1).embedded(6));
    CHECK(z6.pow(3) == cyclotomic(rational(-1), 6));
    CHECK(z6.pow(6).is_one());
    CHECK(lbern::multiplicative_order(z6, 12) == 6);
    CHECK(lbern::multiplicative_order(z6.pow(2), 12) == 3);
}

TEST_CASE("randomized field axioms across orders") {
    std::mt19937_64 rng(0x5eed0001ULL);
    auto random_element = [&](long m) {
        long deg = lbern::euler_phi(m);
        std::vector<rational> coeffs;
        std::uniform_int_distribution<long> num(-4, 4);
        std::uniform_int_distribution<long> den(1, 3);
        for (long i = 0; i < deg; ++i)
            coeffs.push_back(rational(lbern::Int(num(rng)), lbern::Int(den(rng))));
        cyclotomic acc = cyclotomic::zero(m);
        cyclotomic z = cyclotomic::root_of_unity(m, 1);
        cyclotomic zp = cyclotomic::one(m);
        for (long i = 0; i < deg; ++i) {
            acc += zp * coeffs[static_cast<std::size_t>(i)];
            zp *= z;
        }
        return acc;
    };
    for (long m : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L}) {
        for (int iter = 0; iter < 8; ++iter) {
            cyclotomic a = random_element(m), b = random_element(m), c = random_element(m);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a.pow(-2) == (a * a).inverse());
            }
        }
    }
}

TEST_CASE("cyclotomic rendering") {
    cyclotomic z = cyclotomic::root_of_unity(3, 1);
    CHECK(z.str() == "z");
    CHECK((z * z).str() == "-1 - z");
    CHECK(cyclotomic::zero(3).str() == "0");
    CHECK((cyclotomic(rational(1, 2), 4) + cyclotomic::root_of_unity(4, 1) * rational(3)).str() == "1/2 + 3*z");
}
