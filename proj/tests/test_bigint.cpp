#include <doctest.h>

#include "sextic/bigint.hpp"

using namespace sextic;

namespace {

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("isqrt_exact") {
    CHECK(isqrt_exact(0) == 0);
    CHECK(isqrt_exact(6561) == 81);
    CHECK(kind_of([] { isqrt_exact(2); }) == ErrorKind::NotPerfectSquare);
    CHECK(kind_of([] { isqrt_exact(-4); }) == ErrorKind::NegativeInput);
    Int big = ipow(Int(10), 40) + 7;
    CHECK(isqrt_exact(big * big) == big);
    CHECK(is_perfect_square(Int(49)));
    CHECK_FALSE(is_perfect_square(Int(-49)));
}

TEST_CASE("exact division") {
    CHECK(exact_div(Int(-12), Int(4)) == -3);
    CHECK(kind_of([] { exact_div(Int(7), Int(2)); }) == ErrorKind::NonDivisible);
    CHECK(kind_of([] { exact_div(Int(7), Int(0)); }) == ErrorKind::NonDivisible);
}

TEST_CASE("square-free test") {
    for (int d : {1, 2, 3, 5, 6, 7, 10, 11, 15, 30, 31}) CHECK(is_square_free(Int(d)));
    for (int d : {4, 8, 9, 12, 18, 25, 27, 49, 50}) CHECK_FALSE(is_square_free(Int(d)));
}

TEST_CASE("parse_int") {
    CHECK(parse_int("-123456789012345678901234567890").get_str() == "-123456789012345678901234567890");
    CHECK(parse_int("+5") == 5);
    CHECK(kind_of([] { parse_int("12x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_int(""); }) == ErrorKind::ParseError);
}
