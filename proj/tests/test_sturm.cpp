#include <catch2/catch_amalgamated.hpp>

#include <hyplat/sturm.hpp>

using namespace hyplat;

namespace {
IntPoly ip(std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("sturm root counting") {
    // x^2 - 3x + 1, roots (3 +- sqrt 5)/2 ~ 0.382, 2.618 (quadratic-formula oracle)
    auto chain = sturm_chain(to_rational(ip({1, -3, 1})));
    CHECK(count_real_roots(chain) == 2);
    CHECK(count_roots(chain, Rat(0), Rat(1)) == 1);
    CHECK(count_roots(chain, Rat(2), Rat(3)) == 1);
    CHECK(count_roots_above(chain, Rat(1)) == 1);
    // x^2 + 1 has none
    CHECK(count_real_roots(sturm_chain(to_rational(ip({1, 0, 1})))) == 0);
}

TEST_CASE("isolation separates close roots") {
    // (x-1)(x-2)(2x-3) roots 1, 1.5, 2
    IntPoly p = ip({-1, 1}) * ip({-2, 1}) * ip({-3, 2});
    auto roots = isolate_real_roots(p, Rat(0), Rat(10));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].second <= roots[1].first);
    CHECK(roots[1].second <= roots[2].first);
}

TEST_CASE("isolation respects open interval endpoints") {
    IntPoly p = ip({-1, 1}) * ip({-2, 1});  // roots 1, 2
    CHECK(isolate_real_roots(p, Rat(1), Rat(3)).size() == 1);   // root at lo excluded
    CHECK(isolate_real_roots(p, Rat(0), Rat(2)).size() == 1);   // root at hi excluded
    CHECK(isolate_real_roots(p, Rat(1), Rat(2)).empty());
}

TEST_CASE("algebraic real comparison: equality and ordering") {
    IntPoly p = ip({1, -3, 1});
    AlgebraicReal big(p, Rat(2), Rat(3));
    AlgebraicReal small(p, Rat(0), Rat(1));
    CHECK(compare(small, big) < 0);
    CHECK(compare(big, big) == 0);
    // same value through a composite polynomial: root of (x^2-3x+1)(x-7) in (2,3)
    AlgebraicReal via_composite(p * ip({-7, 1}), Rat(2), Rat(3));
    CHECK(compare(big, via_composite) == 0);
    // rational vs algebraic
    CHECK(compare(big, Rat(2)) > 0);
    CHECK(compare(big, Rat(3)) < 0);
    CHECK(compare(AlgebraicReal(Rat(5, 2)), Rat(5, 2)) == 0);
}

TEST_CASE("refinement narrows but never loses the root") {
    AlgebraicReal r(ip({-2, 0, 1}), Rat(1), Rat(2));  // sqrt 2
    r.refine_below(Rat(1, 1000000000));
    CHECK(r.width() <= Rat(1, 1000000000));
    CHECK(r.lo() * r.lo() < 2);
    CHECK(r.hi() * r.hi() > 2);
    CHECK(r.approx() == Catch::Approx(1.41421356237309));
}

TEST_CASE("powers of algebraic reals") {
    AlgebraicReal sqrt2(ip({-2, 0, 1}), Rat(1), Rat(2));
    CHECK(compare(algebraic_power(sqrt2, 2), Rat(2)) == 0);
    CHECK(compare(algebraic_power(sqrt2, 4), Rat(4)) == 0);
    // golden-ratio-squared check: phi = (1+sqrt5)/2, phi^2 = phi + 1
    AlgebraicReal phi(ip({-1, -1, 1}), Rat(1), Rat(2));
    AlgebraicReal phi2 = algebraic_power(phi, 2);
    AlgebraicReal phi2_expect(ip({1, -3, 1}), Rat(2), Rat(3));  // x^2-3x+1 root ~2.618
    CHECK(compare(phi2, phi2_expect) == 0);
}

TEST_CASE("roots invert powers") {
    AlgebraicReal phi(ip({-1, -1, 1}), Rat(1), Rat(2));
    AlgebraicReal cube = algebraic_power(phi, 3);
    CHECK(compare(algebraic_root(cube, 3), phi) == 0);
    CHECK(compare(algebraic_root(AlgebraicReal(Rat(8)), 3), Rat(2)) == 0);
}

TEST_CASE("certification rejects bad intervals") {
    CHECK_THROWS_AS(AlgebraicReal(ip({1, -3, 1}), Rat(0), Rat(3)), ContractViolation);
    CHECK_THROWS_AS(AlgebraicReal(ip({1, -3, 1}), Rat(5), Rat(6)), ContractViolation);
}
