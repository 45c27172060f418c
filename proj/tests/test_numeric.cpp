#include <catch2/catch_amalgamated.hpp>

#include <hyplat/numeric.hpp>

using namespace hyplat;

TEST_CASE("rational parsing round-trips canonical forms") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-7/2") == Rat(-7, 2));
    CHECK(parse_rational("4/6") == Rat(2, 3));
    CHECK(to_string(Rat(-7, 2)) == "-7/2");
    CHECK(to_string(Rat(6, 3)) == "2");
}

TEST_CASE("decimal literals convert exactly") {
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("-1.5e-2") == Rat(-3, 200));
    CHECK(parse_rational("1e-8") == Rat(1, 100000000));
    CHECK(parse_rational("1.17628081") == Rat(117628081, 100000000));
}

TEST_CASE("bad literals are rejected") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("gcd_range") {
    std::vector<Int> v{12, -18, 30};
    CHECK(gcd_range(v.begin(), v.end()) == 6);
    std::vector<Int> empty;
    CHECK(gcd_range(empty.begin(), empty.end()) == 0);
}
