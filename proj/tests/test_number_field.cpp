#include <catch2/catch_amalgamated.hpp>

#include <hyplat/number_field.hpp>
#include <hyplat/salem.hpp>

using namespace hyplat;

namespace {

IntPoly ip(std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

NumberFieldPtr phi2_field() {
    // largest root of x^2 - 3x + 1, about 2.618
    IntPoly p = ip({1, -3, 1});
    return std::make_shared<const NumberField>(p, AlgebraicReal(p, Rat(2), Rat(3)));
}

}  // namespace

TEST_CASE("field arithmetic in Q(lambda), lambda^2 = 3 lambda - 1") {
    auto f = phi2_field();
    NFElem lam = NFElem::generator(f);
    NFElem one = NFElem::of_rational(f, Rat(1));

    CHECK(lam * lam == lam * Rat(3) - one);
    CHECK(lam * lam.inverse() == one);
    CHECK(lam.inverse() == NFElem::of_rational(f, Rat(3)) - lam);  // 1/lam = 3 - lam
    CHECK(lam.pow(4) == (lam * lam) * (lam * lam));
    CHECK((lam / lam) == one);
    CHECK_THROWS_AS(NFElem::of_rational(f, Rat(0)).inverse(), ContractViolation);
}

TEST_CASE("sign determination against the anchored root") {
    auto f = phi2_field();
    NFElem lam = NFElem::generator(f);
    CHECK((lam - NFElem::of_rational(f, Rat(2))).sign() > 0);
    CHECK((lam - NFElem::of_rational(f, Rat(3))).sign() < 0);
    CHECK((lam - lam).sign() == 0);
    // 2 lam - 5 is tiny (~0.236) but still resolved exactly
    CHECK((lam * Rat(2) - NFElem::of_rational(f, Rat(5))).sign() > 0);
    CHECK((lam * Rat(21) - NFElem::of_rational(f, Rat(55))).sign() < 0);  // 21*2.61803... < 55
}

TEST_CASE("to_algebraic matches independent powering") {
    auto f = phi2_field();
    NFElem lam = NFElem::generator(f);
    AlgebraicReal via_field = lam.pow(3).to_algebraic();
    AlgebraicReal via_resultant = algebraic_power(f->root(), 3);
    CHECK(compare(via_field, via_resultant) == 0);
    CHECK(lam.pow(3).approx() == Catch::Approx(17.94427190999916));  // 2.618^3
}

TEST_CASE("reduction in the Lehmer field") {
    IntPoly lp = lehmer_polynomial();
    auto f = std::make_shared<const NumberField>(lp, lehmer_root());
    NFElem lam = NFElem::generator(f);
    // lambda^10 = -lambda^9 + lambda^7 + lambda^6 + lambda^5 + lambda^4 + lambda^3 - lambda - 1
    NFElem expect(f, RatPoly(std::vector<Rat>{Rat(-1), Rat(-1), Rat(0), Rat(1), Rat(1), Rat(1),
                                              Rat(1), Rat(1), Rat(0), Rat(-1)}));
    CHECK(lam.pow(10) == expect);
    CHECK(lam.pow(10).approx() == Catch::Approx(std::pow(lehmer_root().approx(), 10)));
}

TEST_CASE("rational elements round-trip") {
    auto f = phi2_field();
    NFElem r = NFElem::of_rational(f, Rat(-7, 3));
    CHECK(r.is_rational());
    CHECK(r.rational_value() == Rat(-7, 3));
    CHECK(r.sign() < 0);
    CHECK_FALSE(NFElem::generator(f).is_rational());
    CHECK(compare(r.to_algebraic(), Rat(-7, 3)) == 0);
}
