#include <catch2/catch_amalgamated.hpp>

#include <hyplat/matrix.hpp>

#include <random>

using namespace hyplat;

namespace {

IntMat from_rows(std::vector<std::vector<long>> rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// cofactor-expansion oracle, exponential but independent of Bareiss
Int det_naive(const IntMat& m, std::vector<std::size_t> cols = {}) {
    if (cols.empty())
        for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
    std::size_t row = m.rows() - cols.size();
    if (cols.size() == 1) return m(row, cols[0]);
    Int acc = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest.push_back(cols[j]);
        Int term = m(row, cols[i]) * det_naive(m, rest);
        acc += (i % 2 == 0) ? term : Int(-term);
    }
    return acc;
}

}  // namespace

TEST_CASE("bareiss determinant matches cofactor expansion on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 5;
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
        CHECK(det_bareiss(m) == det_naive(m));
    }
}

TEST_CASE("kernel basis spans the null space") {
    RatMat m = to_rational(from_rows({{1, 2, 3}, {2, 4, 6}}));
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        auto mv = m * v;
        for (const auto& x : mv) CHECK(x == 0);
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    RatMat m = to_rational(from_rows({{2, 1}, {1, 3}}));
    auto x = solve(m, {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));

    RatMat sing = to_rational(from_rows({{1, 1}, {1, 1}}));
    CHECK_FALSE(solve(sing, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("unimodular inverse is exact") {
    IntMat m = from_rows({{2, 1}, {1, 1}});
    IntMat inv = unimodular_inverse(m);
    CHECK(m * inv == IntMat::identity(2));
    CHECK_THROWS_AS(unimodular_inverse(from_rows({{2, 0}, {0, 1}})), NotUnimodular);
}

TEST_CASE("inertia classifies definite and degenerate forms") {
    Inertia lorentz = inertia(to_rational(from_rows({{1, 0}, {0, -1}})));
    CHECK(lorentz.n_plus == 1);
    CHECK(lorentz.n_minus == 1);

    // A2 chain: negative definite
    CHECK(is_negative_definite(to_rational(from_rows({{-2, 1}, {1, -2}}))));
    // affine A1: semi-definite, determinant 0
    Inertia aff = inertia(to_rational(from_rows({{-2, 2}, {2, -2}})));
    CHECK(aff.n_zero == 1);
    CHECK_FALSE(is_negative_definite(to_rational(from_rows({{-2, 2}, {2, -2}}))));
    // zero diagonal, off-diagonal pairing (hyperbolic plane)
    Inertia hyp = inertia(to_rational(from_rows({{0, 1}, {1, 0}})));
    CHECK(hyp.n_plus == 1);
    CHECK(hyp.n_minus == 1);
}

TEST_CASE("inertia equals sign counts from eigenvalue-free diagonal probes") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + trial % 4;
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) { m(i, j) = dist(rng); m(j, i) = m(i, j); }
        Inertia in = inertia(to_rational(m));
        CHECK(in.n_plus + in.n_zero + in.n_minus == n);
        // rank check against rref
        CHECK(in.n_plus + in.n_minus == rank(to_rational(m)));
    }
}

TEST_CASE("integer kernel is integral and spans") {
    IntMat m = from_rows({{2, 4, 6}});
    auto basis = integer_kernel(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        Int acc = 0;
        for (std::size_t j = 0; j < 3; ++j) acc += m(0, j) * v[j];
        CHECK(acc == 0);
    }
    // primitive solutions like (2,-1,0) must be reachable over Z
    RatMat lift(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) lift(i, j) = Rat(basis[j][i]);
    auto x = solve(lift, {Rat(2), Rat(-1), Rat(0)});
    REQUIRE(x.has_value());
    for (const auto& c : *x) CHECK(is_integer(c));
}
