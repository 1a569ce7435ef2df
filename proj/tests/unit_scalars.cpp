#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fox/field.hpp"

using namespace fox;

namespace {

FieldElem rand_elem(FieldSpec f, std::mt19937_64& rng) {
    if (f.is_rational()) {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        return FieldElem::from_big(f, num(rng), den(rng));
    }
    std::uniform_int_distribution<std::int64_t> r(0, f.characteristic() - 1);
    return FieldElem::from_integer(f, r(rng));
}

} // namespace

TEST_CASE("field spec construction and round trip") {
    CHECK(FieldSpec::rationals().is_rational());
    CHECK(FieldSpec::rationals().characteristic() == 0);
    CHECK(FieldSpec::prime_field(5).characteristic() == 5);
    CHECK(FieldSpec::rationals().to_string() == "Q");
    CHECK(FieldSpec::prime_field(7).to_string() == "GF(7)");
    CHECK(FieldSpec::from_string("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::from_string("GF(5)") == FieldSpec::prime_field(5));
    CHECK(FieldSpec::from_string("gf:11") == FieldSpec::prime_field(11));
    CHECK_THROWS_AS(FieldSpec::prime_field(4), ParseError);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), ParseError);
    CHECK_THROWS_AS(FieldSpec::from_string("gf:9"), ParseError);
    CHECK_THROWS_AS(FieldSpec::from_string("R"), ParseError);
}

TEST_CASE("field axioms on random samples") {
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(5), FieldSpec::prime_field(101)}) {
        std::mt19937_64 rng(0);
        const FieldElem zero = FieldElem::zero(f);
        const FieldElem one = FieldElem::one(f);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElem a = rand_elem(f, rng);
            const FieldElem b = rand_elem(f, rng);
            const FieldElem c = rand_elem(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a - a == zero);
            if (!a.is_zero()) {
                CHECK(a * a.invert() == one);
                CHECK(a.invert().invert() == a);
            }
        }
    }
}

TEST_CASE("inverse of 2 over GF(5) is 3") {
    const FieldSpec f = FieldSpec::prime_field(5);
    CHECK(FieldElem::from_integer(f, 2).invert() == FieldElem::from_integer(f, 3));
}

TEST_CASE("inverse of 3/2 over the rationals is 2/3") {
    const FieldSpec f = FieldSpec::rationals();
    CHECK(FieldElem::from_big(f, 3, 2).invert() == FieldElem::from_big(f, 2, 3));
}

TEST_CASE("scalar parsing and printing") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec g5 = FieldSpec::prime_field(5);
    CHECK(FieldElem::parse(q, "3/2").to_string() == "3/2");
    CHECK(FieldElem::parse(q, "-4/2").to_string() == "-2");
    CHECK(FieldElem::parse(q, "7") == FieldElem::from_integer(q, 7));
    CHECK(FieldElem::parse(q, "-0") == FieldElem::zero(q));
    CHECK(FieldElem::parse(g5, "7").to_string() == "2");
    CHECK(FieldElem::parse(g5, "-1").to_string() == "4");
    CHECK(FieldElem::parse(g5, "3/2") == FieldElem::from_integer(g5, 4)); // 3 * inv(2) = 3*3 = 9 = 4
    CHECK_THROWS_AS(FieldElem::parse(g5, "1/5"), NonInvertibleDenominator);
    CHECK_THROWS_AS(FieldElem::parse(q, "1/0"), NonInvertibleDenominator);
    CHECK_THROWS_AS(FieldElem::parse(q, "a"), ParseError);
    CHECK_THROWS_AS(FieldElem::parse(q, ""), ParseError);
    // big values survive a round trip exactly
    const std::string big = "123456789012345678901234567891/7";
    CHECK(FieldElem::parse(q, big).to_string() == big);
    CHECK(FieldElem::parse(q, "123456789012345678901234567890/7").to_string() ==
          "17636684144620811271604938270"); // fraction reduces to an integer
}

TEST_CASE("mixed-field arithmetic is rejected") {
    const FieldElem a = FieldElem::one(FieldSpec::rationals());
    const FieldElem b = FieldElem::one(FieldSpec::prime_field(5));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);
    CHECK_THROWS_AS((void)(a == b), FieldMismatch);
}

TEST_CASE("characteristic wraps additively") {
    const FieldSpec g5 = FieldSpec::prime_field(5);
    FieldElem s = FieldElem::zero(g5);
    for (int k = 0; k < 5; ++k) s += FieldElem::one(g5);
    CHECK(s.is_zero());
}
