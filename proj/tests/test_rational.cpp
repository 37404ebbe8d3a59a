#include "doctest.h"
#include "phc/rational.hpp"

using namespace phc;

TEST_SUITE("rational") {

TEST_CASE("parsing and canonical form") {
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0/5") == Rational(0));
    CHECK(rat_to_string(parse_rational("10/4")) == "5/2");
    CHECK(rat_to_string(Rational(-3)) == "-3");
    CHECK(rat_to_string(Rational(0)) == "0");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("no overflow") {
    Rational big = parse_rational("123456789012345678901234567890/7");
    CHECK(big * Rational(7) == parse_rational("123456789012345678901234567890"));
    Rational p(1);
    for (int i = 0; i < 200; ++i) p *= Rational(3, 2);
    Rational q(1);
    for (int i = 0; i < 200; ++i) q *= Rational(2, 3);
    CHECK(p * q == Rational(1));
}

TEST_CASE("gauss rational arithmetic") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    GaussRational z(Rational(1, 2), Rational(-3));
    CHECK(z + z.conj() == GaussRational(Rational(1)));
    CHECK(z * z.conj() == GaussRational(z.norm()));
    CHECK((z / z) == GaussRational(1));
    CHECK(!z.is_real());
    CHECK(GaussRational(Rational(5, 7)).is_real());
    CHECK_THROWS_AS(z / GaussRational(0), std::domain_error);
    CHECK(!gauss_to_string(z).empty());
}

}
