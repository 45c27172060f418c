#include <catch2/catch_amalgamated.hpp>

#include <hyplat/cyclotomic.hpp>
#include <hyplat/polynomial.hpp>

using namespace hyplat;

namespace {
IntPoly ip(std::vector<long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("arithmetic basics") {
    IntPoly a = ip({1, 2, 1});   // (x+1)^2
    IntPoly b = ip({-1, 1});     // x-1
    CHECK((a * b) == ip({-1, -1, 1, 1}));
    CHECK((a + b) == ip({0, 3, 1}));
    CHECK(a.degree() == 2);
    CHECK(IntPoly().degree() == -1);
    CHECK(a.eval(Int(2)) == 9);
}

TEST_CASE("exact division") {
    IntPoly prod = ip({-1, -1, 1, 1});
    CHECK(divide_exact(prod, ip({-1, 1})).value() == ip({1, 2, 1}));
    CHECK_FALSE(divide_exact(prod, ip({1, 1, 1})).has_value());
}

TEST_CASE("gcd and square-free part") {
    RatPoly p = to_rational(ip({1, 2, 1}));  // (x+1)^2
    RatPoly d = p.derivative();
    RatPoly g = gcd(p, d);
    CHECK(g.degree() == 1);
    CHECK(square_free_part(ip({1, 2, 1})) == ip({1, 1}));
    CHECK(is_square_free(ip({-1, 0, 1})));
    CHECK_FALSE(is_square_free(ip({1, 2, 1})));
}

TEST_CASE("resultant agrees with root-product oracle") {
    // f = (x-1)(x-2), g = (x-3)(x+1): res(f,g) = prod g(root_f) = g(1)*g(2)
    RatPoly f = to_rational(ip({2, -3, 1}));
    RatPoly g = to_rational(ip({-3, -2, 1}));
    Rat expect = g.eval(Rat(1)) * g.eval(Rat(2));
    CHECK(resultant(f, g) == expect);
    // shared root -> 0
    CHECK(resultant(f, to_rational(ip({-1, 1}))) == 0);
}

TEST_CASE("interpolation reproduces polynomials exactly") {
    RatPoly p = to_rational(ip({3, 0, -2, 5}));
    std::vector<Rat> xs, ys;
    for (long i = 0; i <= 3; ++i) { xs.emplace_back(i); ys.push_back(p.eval(Rat(i))); }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ip({-1, 1}));
    CHECK(cyclotomic(2) == ip({1, 1}));
    CHECK(cyclotomic(3) == ip({1, 1, 1}));
    CHECK(cyclotomic(4) == ip({1, 0, 1}));
    // Phi_12 by dividing x^12 - 1 by Phi_d, d | 12, d < 12
    CHECK(cyclotomic(12) == ip({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(105).degree() == 48);  // first index with coefficient 2
    for (unsigned long k : {1ul, 2ul, 6ul, 12ul, 30ul})
        CHECK(cyclotomic(k).degree() == static_cast<long>(euler_phi(k)));
}

TEST_CASE("x^k - 1 recomposes from cyclotomic divisors") {
    for (unsigned long k : {4ul, 6ul, 12ul}) {
        IntPoly prod = IntPoly::constant(Int(1));
        for (unsigned long d : divisors(k)) prod = prod * cyclotomic(d);
        std::vector<Int> xk(k + 1, Int(0));
        xk[0] = -1;
        xk[k] = 1;
        CHECK(prod == IntPoly(std::move(xk)));
    }
}

TEST_CASE("palindrome and reversal") {
    CHECK(ip({1, -3, 1}).is_palindromic());
    CHECK_FALSE(ip({2, -3, 1}).is_palindromic());
    CHECK(ip({2, -3, 1}).reversed() == ip({1, -3, 2}));
}

TEST_CASE("polynomial printing") {
    CHECK(ip({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}).str() ==
          "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");
    CHECK(ip({-1}).str() == "-1");
    CHECK(IntPoly().str() == "0");
}
