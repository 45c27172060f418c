#include <catch2/catch_amalgamated.hpp>

#include <hyplat/lattice.hpp>

#include <random>

using namespace hyplat;

namespace {

IntMat from_rows(std::vector<std::vector<long>> rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

LatticeVector canonical_class(const Lattice& lat) {
    std::vector<Rat> c(lat.rank(), Rat(1));
    c[0] = -3;
    return {lat, std::move(c)};
}

}  // namespace

TEST_CASE("lorentzian lattice construction") {
    Lattice l1 = make_lorentzian(1);
    CHECK(l1.rank() == 2);
    CHECK(l1.gram() == from_rows({{1, 0}, {0, -1}}));

    Lattice l10 = make_lorentzian(10);
    CHECK(l10.rank() == 11);
    CHECK(l10.signature() == std::pair<std::size_t, std::size_t>{1, 10});

    CHECK_THROWS_AS(make_lorentzian(0), DegenerateLattice);
    CHECK_THROWS_AS(Lattice(from_rows({{1, 2}, {2, 4}})), DegenerateLattice);   // singular
    CHECK_THROWS_AS(Lattice(from_rows({{1, 2}, {3, 4}})), DegenerateLattice);   // asymmetric
}

TEST_CASE("pairing values on Z^{1,n}") {
    Lattice l = make_lorentzian(10);
    LatticeVector e0 = basis_vector(l, 0), e1 = basis_vector(l, 1);
    CHECK(pair(e1, e1) == -1);
    CHECK(pair(e0, e1) == 0);
    CHECK(pair(e0 + e1, e0 - e1) == 2);
    LatticeVector k = canonical_class(l);
    CHECK(pair(k, k) == -1);  // 9 - 10
    CHECK(pair(k, e0) == -3);

    Lattice other = make_lorentzian(2);
    CHECK_THROWS_AS(pair(e0, basis_vector(other, 0)), MismatchedLattices);
}

TEST_CASE("certify_isometry accepts and rejects correctly") {
    Lattice l = make_lorentzian(2);
    CHECK_NOTHROW(certify_isometry(IntMat::identity(3), l));
    // swap e1, e2
    CHECK_NOTHROW(certify_isometry(from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), l));
    CHECK_THROWS_AS(certify_isometry(from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), l),
                    NotUnimodular);
    // unimodular but not form-preserving
    CHECK_THROWS_AS(certify_isometry(from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), l),
                    FormNotPreserved);
}

TEST_CASE("group operations") {
    Lattice l = make_lorentzian(2);
    Isometry swap12 = certify_isometry(from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}), l);
    CHECK(compose(swap12, swap12).is_identity());
    CHECK(inverse(swap12) == swap12);
    CHECK(power(swap12, 5) == swap12);
    CHECK(power(swap12, -2).is_identity());
    CHECK(power(swap12, 0).is_identity());

    Isometry gi = compose(swap12, inverse(swap12));
    CHECK(gi.is_identity());
}

TEST_CASE("certified isometries preserve all pairings") {
    Lattice l = make_lorentzian(3);
    // reflection in e1 - e2 composed with reflection in e2 - e3
    IntMat s1 = from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    IntMat s2 = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    Isometry g = compose(certify_isometry(s1, l), certify_isometry(s2, l));
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> a(4), b(4);
        for (int i = 0; i < 4; ++i) { a[i] = dist(rng); b[i] = dist(rng); }
        LatticeVector v{l, a}, w{l, b};
        CHECK(pair(g(v), g(w)) == pair(v, w));
    }
}

TEST_CASE("acceptance of m implies acceptance of its inverse and square") {
    Lattice l = make_lorentzian(2);
    IntMat m = from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    Isometry g = certify_isometry(m, l);
    CHECK_NOTHROW(certify_isometry(inverse(g).matrix(), l));
    CHECK_NOTHROW(certify_isometry(compose(g, g).matrix(), l));
}

TEST_CASE("primitive representative") {
    Lattice l = make_lorentzian(2);
    LatticeVector v{l, {Rat(4, 6), Rat(-2, 3), Rat(2)}};
    LatticeVector p = primitive_representative(v);
    CHECK(p.coords == std::vector<Rat>{Rat(1), Rat(-1), Rat(3)});
    LatticeVector neg{l, {Rat(-2), Rat(4), Rat(0)}};
    CHECK(primitive_representative(neg).coords == std::vector<Rat>{Rat(1), Rat(-2), Rat(0)});
}
