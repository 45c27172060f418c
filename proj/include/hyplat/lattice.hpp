#pragma once

#include <hyplat/matrix.hpp>

#include <memory>
#include <utility>
#include <vector>

namespace hyplat {

/// An integral lattice with a non-degenerate symmetric bilinear form.
/// Immutable after construction; copies share the underlying data, so vectors
/// and isometries can carry their lattice by value.
class Lattice {
  public:
    Lattice() = default;

    explicit Lattice(IntMat gram) {
        if (gram.rows() != gram.cols() || gram.rows() == 0)
            throw DegenerateLattice("gram matrix must be square and non-empty");
        if (!gram.is_symmetric()) throw DegenerateLattice("gram matrix must be symmetric");
        if (det_bareiss(gram) == 0) throw DegenerateLattice("gram matrix is singular");
        Inertia in = inertia(to_rational(gram));
        d_ = std::make_shared<const Data>(Data{std::move(gram), in});
    }

    std::size_t rank() const { return d_->gram.rows(); }
    const IntMat& gram() const { return d_->gram; }
    std::pair<std::size_t, std::size_t> signature() const {
        return {d_->inertia.n_plus, d_->inertia.n_minus};
    }
    bool is_hyperbolic() const { return d_->inertia.n_plus == 1; }

    /// Same lattice: identical storage or entry-wise equal gram.
    bool same_as(const Lattice& o) const {
        return d_ == o.d_ || d_->gram == o.d_->gram;
    }

  private:
    struct Data {
        IntMat gram;
        Inertia inertia;
    };
    std::shared_ptr<const Data> d_;
};

/// diag(1, -1, ..., -1) of rank n+1: the Minkowski lattice Z^{1,n}.
inline Lattice make_lorentzian(std::size_t n) {
    if (n < 1) throw DegenerateLattice("Z^{1,n} requires n >= 1");
    IntMat g(n + 1, n + 1);
    g(0, 0) = 1;
    for (std::size_t i = 1; i <= n; ++i) g(i, i) = -1;
    return Lattice(std::move(g));
}

struct LatticeVector {
    Lattice lattice;
    std::vector<Rat> coords;

    LatticeVector() = default;
    LatticeVector(Lattice lat, std::vector<Rat> c) : lattice(std::move(lat)), coords(std::move(c)) {
        if (coords.size() != lattice.rank())
            throw MismatchedLattices("coordinate length does not match lattice rank");
    }

    bool is_zero() const {
        for (const auto& v : coords)
            if (v != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& v : coords)
            if (!is_integer(v)) return false;
        return true;
    }

    LatticeVector operator+(const LatticeVector& o) const {
        require_same(o);
        std::vector<Rat> c(coords);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords[i];
        return {lattice, std::move(c)};
    }

    LatticeVector operator-(const LatticeVector& o) const {
        require_same(o);
        std::vector<Rat> c(coords);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords[i];
        return {lattice, std::move(c)};
    }

    LatticeVector operator*(const Rat& s) const {
        std::vector<Rat> c(coords);
        for (auto& v : c) v *= s;
        return {lattice, std::move(c)};
    }

    bool operator==(const LatticeVector& o) const {
        return lattice.same_as(o.lattice) && coords == o.coords;
    }

    void require_same(const LatticeVector& o) const {
        if (!lattice.same_as(o.lattice))
            throw MismatchedLattices("vectors belong to different lattices");
    }
};

inline LatticeVector basis_vector(const Lattice& lat, std::size_t i) {
    std::vector<Rat> c(lat.rank(), Rat(0));
    c.at(i) = 1;
    return {lat, std::move(c)};
}

inline LatticeVector vector_of(const Lattice& lat, std::initializer_list<long> entries) {
    std::vector<Rat> c;
    c.reserve(entries.size());
    for (long v : entries) c.emplace_back(v);
    return {lat, std::move(c)};
}

/// v . w = v^T G w, exact.
inline Rat pair(const LatticeVector& v, const LatticeVector& w) {
    v.require_same(w);
    const IntMat& g = v.lattice.gram();
    Rat acc(0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (v.coords[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0 && w.coords[j] != 0) row += Rat(g(i, j)) * w.coords[j];
        acc += v.coords[i] * row;
    }
    return acc;
}

inline Rat self_pair(const LatticeVector& v) { return pair(v, v); }

/// Scales to integral coordinates with content 1; sign of the first nonzero
/// entry made positive unless a reference orientation is supplied.
inline LatticeVector primitive_representative(const LatticeVector& v) {
    Int l = 1;
    for (const auto& c : v.coords) l = lcm(l, den(c));
    std::vector<Int> ints(v.coords.size());
    for (std::size_t i = 0; i < ints.size(); ++i) ints[i] = num(v.coords[i] * Rat(l));
    Int g = gcd_range(ints.begin(), ints.end());
    if (g == 0) return v;
    for (const auto& x : ints)
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    std::vector<Rat> c(ints.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(ints[i]) / Rat(g);
    return {v.lattice, std::move(c)};
}

/// An integer matrix certified to preserve the form and to be unimodular.
class Isometry {
  public:
    Isometry() = default;

    const Lattice& lattice() const { return lat_; }
    const IntMat& matrix() const { return m_; }
    std::size_t rank() const { return m_.rows(); }

    LatticeVector operator()(const LatticeVector& v) const {
        if (!lat_.same_as(v.lattice))
            throw MismatchedLattices("isometry applied to vector of another lattice");
        std::vector<Rat> out(m_.rows(), Rat(0));
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (m_(i, j) != 0 && v.coords[j] != 0) out[i] += Rat(m_(i, j)) * v.coords[j];
        return {lat_, std::move(out)};
    }

    bool operator==(const Isometry& o) const { return lat_.same_as(o.lat_) && m_ == o.m_; }
    bool is_identity() const { return m_ == IntMat::identity(m_.rows()); }

    friend Isometry certify_isometry(IntMat m, const Lattice& lat);
    friend Isometry compose(const Isometry& a, const Isometry& b);
    friend Isometry inverse(const Isometry& g);

  private:
    Isometry(Lattice lat, IntMat m) : lat_(std::move(lat)), m_(std::move(m)) {}
    Lattice lat_;
    IntMat m_;
};

/// Accepts m iff m^T G m = G exactly and det m = +-1.
inline Isometry certify_isometry(IntMat m, const Lattice& lat) {
    if (m.rows() != lat.rank() || m.cols() != lat.rank())
        throw FormNotPreserved("matrix size does not match lattice rank");
    Int d = det_bareiss(m);
    if (d != 1 && d != -1) throw NotUnimodular("determinant " + d.str());
    const IntMat& g = lat.gram();
    IntMat lhs = m.transposed() * g * m;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (lhs(i, j) != g(i, j))
                throw FormNotPreserved("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): got " + lhs(i, j).str() + ", expected " +
                                       g(i, j).str());
    return Isometry(lat, std::move(m));
}

inline Isometry compose(const Isometry& a, const Isometry& b) {
    if (!a.lattice().same_as(b.lattice()))
        throw MismatchedLattices("composition across different lattices");
    return Isometry(a.lat_, a.m_ * b.m_);
}

inline Isometry inverse(const Isometry& g) {
    return Isometry(g.lat_, unimodular_inverse(g.m_));
}

inline Isometry identity_isometry(const Lattice& lat) {
    return certify_isometry(IntMat::identity(lat.rank()), lat);
}

/// g^k by repeated squaring; exact integer inverse for k < 0.
inline Isometry power(const Isometry& g, long k) {
    Isometry base = k < 0 ? inverse(g) : g;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Isometry acc = identity_isometry(g.lattice());
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

}  // namespace hyplat
