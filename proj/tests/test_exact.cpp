#include <doctest.h>

#include "rsums/exact.hpp"

using rsums::ExactInteger;
using rsums::ExactRational;

TEST_CASE("ExactInteger basics") {
    ExactInteger a(7L), b(-3L);
    CHECK(a + b == ExactInteger(4L));
    CHECK(a * b == ExactInteger(-21L));
    CHECK((a - b) == ExactInteger(10L));
    CHECK(ExactInteger::factorial(10) == ExactInteger(3628800L));
    CHECK(ExactInteger::binomial(8, 4) == ExactInteger(70L));
    CHECK(ExactInteger::pow(ExactInteger(2L), 64).to_string() == "18446744073709551616");
    CHECK(ExactInteger("123456789012345678901234567890").decimal_digits() == 30);
    CHECK(ExactInteger(21L).div_exact(ExactInteger(7L)) == ExactInteger(3L));
    CHECK_THROWS_AS(ExactInteger(22L).div_exact(ExactInteger(7L)), std::domain_error);
    CHECK_THROWS_AS(ExactInteger(1L).div_exact(ExactInteger(0L)), std::domain_error);
    CHECK(ExactInteger(-5L).is_odd());
    CHECK_FALSE(ExactInteger(0L).is_odd());
}

TEST_CASE("ExactRational stays canonical") {
    ExactRational r(6L, 8UL);
    CHECK(r.numerator() == ExactInteger(3L));
    CHECK(r.denominator() == ExactInteger(4L));
    ExactRational s(ExactInteger(-10L), ExactInteger(-15L));
    CHECK(s.numerator() == ExactInteger(2L));
    CHECK(s.denominator() == ExactInteger(3L));  // denominator stays positive
    CHECK(ExactRational(2L, 4UL) + ExactRational(1L, 2UL) == ExactRational(1L));
    CHECK_THROWS_AS(ExactRational(1L) / ExactRational(0L), std::domain_error);
}

TEST_CASE("ExactRational parsing") {
    CHECK(ExactRational::parse("1/3") == ExactRational(1L, 3UL));
    CHECK(ExactRational::parse("-7/2") == ExactRational(-7L, 2UL));
    CHECK(ExactRational::parse("0.25") == ExactRational(1L, 4UL));
    CHECK(ExactRational::parse("-4.8e-2") == ExactRational(-48L, 1000UL));
    CHECK(ExactRational::parse("1e-12") == ExactRational::pow10(-12));
    CHECK(ExactRational::parse("2.5E3") == ExactRational(2500L));
    CHECK(ExactRational::parse("42") == ExactRational(42L));
    CHECK(ExactRational::parse(".5") == ExactRational(1L, 2UL));
    CHECK_THROWS_AS(ExactRational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("arithmetic identities on a small grid") {
    for (long n1 = -6; n1 <= 6; ++n1)
        for (unsigned long d1 = 1; d1 <= 5; ++d1)
            for (long n2 = -4; n2 <= 4; ++n2)
                for (unsigned long d2 = 1; d2 <= 4; ++d2) {
                    ExactRational a(n1, d1), b(n2, d2);
                    CHECK(a + b - b == a);
                    CHECK((a * b) == (b * a));
                    if (!b.is_zero()) CHECK((a / b) * b == a);
                }
}

TEST_CASE("decimal rendering, half away from zero") {
    CHECK(ExactRational(1L, 2UL).to_decimal_string(0) == "1");
    CHECK(ExactRational(-1L, 2UL).to_decimal_string(0) == "-1");
    CHECK(ExactRational(1L, 3UL).to_decimal_string(6) == "0.333333");
    CHECK(ExactRational(2L, 3UL).to_decimal_string(6) == "0.666667");
    CHECK(ExactRational(21L, 32UL).to_decimal_string(5) == "0.65625");
    CHECK(ExactRational(-21L, 32UL).to_decimal_string(5) == "-0.65625");
    CHECK(ExactRational(7L).to_decimal_string(2) == "7.00");
    CHECK(ExactRational(0L).to_decimal_string(3) == "0.000");
}

TEST_CASE("scientific rendering") {
    CHECK(ExactRational::parse("-0.04750755798744").to_sci_string(2) == "-4.8e-02");
    CHECK(ExactRational::parse("0.000057578").to_sci_string(2) == "5.8e-05");
    CHECK(ExactRational::parse("0.0000388504").to_sci_string(2) == "3.9e-05");
    CHECK(ExactRational(999L, 100UL).to_sci_string(2) == "1.0e+01");
    CHECK(ExactRational(1L).to_sci_string(3) == "1.00e+00");
    CHECK(ExactRational(0L).to_sci_string(4) == "0");
    CHECK(ExactRational(1L, 1000000UL).to_sci_string(1) == "1e-06");
}

TEST_CASE("floor is toward minus infinity") {
    CHECK(ExactRational(7L, 2UL).floor_long() == 3);
    CHECK(ExactRational(-7L, 2UL).floor_long() == -4);
    CHECK(ExactRational(4L).floor_long() == 4);
}

TEST_CASE("pow") {
    CHECK(ExactRational::pow(ExactRational(-1L, 2UL), 5) == ExactRational(-1L, 32UL));
    CHECK(ExactRational::pow(ExactRational(2L, 3UL), 0) == ExactRational(1L));
    CHECK(ExactRational::pow10(-3) == ExactRational(1L, 1000UL));
    CHECK(ExactRational::pow10(2) == ExactRational(100L));
}
