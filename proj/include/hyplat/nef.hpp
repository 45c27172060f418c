#pragma once

#include <hyplat/number_field.hpp>
#include <hyplat/salem.hpp>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace hyplat {

/// A lattice class with coordinates in Q(lambda). After clearing denominators
/// the coordinates lie in Z[lambda].
struct NumberFieldVector {
    NumberFieldPtr field;
    Lattice lattice;
    std::vector<NFElem> coords;

    bool is_zero() const {
        for (const auto& v : coords)
            if (!v.is_zero()) return false;
        return true;
    }

    NumberFieldVector operator+(const NumberFieldVector& o) const {
        NumberFieldVector r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = r.coords[i] + o.coords[i];
        return r;
    }

    NumberFieldVector operator-() const {
        NumberFieldVector r = *this;
        for (auto& v : r.coords) v = -v;
        return r;
    }

    NumberFieldVector operator*(const NFElem& s) const {
        NumberFieldVector r = *this;
        for (auto& v : r.coords) v = v * s;
        return r;
    }
};

inline NumberFieldVector to_field_vector(const NumberFieldPtr& f, const LatticeVector& v) {
    NumberFieldVector out{f, v.lattice, {}};
    out.coords.reserve(v.coords.size());
    for (const auto& c : v.coords) out.coords.push_back(NFElem::of_rational(f, c));
    return out;
}

inline NumberFieldVector apply(const Isometry& g, const NumberFieldVector& v) {
    if (!g.lattice().same_as(v.lattice))
        throw MismatchedLattices("isometry applied to a vector of another lattice");
    NumberFieldVector out{v.field, v.lattice, {}};
    const IntMat& m = g.matrix();
    out.coords.assign(m.rows(), NFElem::of_rational(v.field, Rat(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                out.coords[i] = out.coords[i] + v.coords[j] * Rat(m(i, j));
    return out;
}

inline NFElem pair(const NumberFieldVector& v, const NumberFieldVector& w) {
    if (!v.lattice.same_as(w.lattice))
        throw MismatchedLattices("pairing across different lattices");
    const IntMat& g = v.lattice.gram();
    NFElem acc = NFElem::of_rational(v.field, Rat(0));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (v.coords[i].is_zero()) continue;
        NFElem row = NFElem::of_rational(v.field, Rat(0));
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0 && !w.coords[j].is_zero()) row = row + w.coords[j] * Rat(g(i, j));
        acc = acc + v.coords[i] * row;
    }
    return acc;
}

inline NFElem pair(const NumberFieldVector& v, const LatticeVector& w) {
    return pair(v, to_field_vector(v.field, w));
}

namespace detail {

/// Clears denominators, removes the integer content over Z[lambda], and makes
/// the pairing with e0 positive.
inline NumberFieldVector normalize_ray(NumberFieldVector v) {
    Int l = 1;
    for (const auto& e : v.coords)
        for (const auto& r : e.coeffs()) l = lcm(l, den(r));
    std::vector<Int> all;
    for (const auto& e : v.coords)
        for (const auto& r : e.coeffs()) all.push_back(num(r * Rat(l)));
    Int g = gcd_range(all.begin(), all.end());
    if (g == 0) throw ContractViolation("normalizing the zero ray");
    Rat scale = Rat(l) / Rat(g);
    for (auto& e : v.coords) e = e * scale;
    int s = pair(v, basis_vector(v.lattice, 0)).sign();
    if (s == 0) throw ContractViolation("leading ray orthogonal to the positive class");
    if (s < 0) v = -v;
    return v;
}

/// Eigenvector for lambda via the spectral projector P(x)/(x - lambda) applied
/// to a seed vector: coordinates land in Z[lambda] with no elimination needed.
inline NumberFieldVector lambda_eigenvector(const Isometry& g, const NumberFieldPtr& field) {
    const IntPoly p = char_poly(g);
    const std::size_t n = g.rank();
    NFElem lambda = NFElem::generator(field);
    // synthetic division: q_{n-1} = 1, q_{j-1} = p_j + lambda q_j
    std::vector<NFElem> q(n);
    q[n - 1] = NFElem::of_rational(field, Rat(1));
    for (std::size_t j = n - 1; j >= 1; --j)
        q[j - 1] = NFElem::of_rational(field, Rat(p.c[j])) + lambda * q[j];
    for (std::size_t seed = 0; seed < n; ++seed) {
        // w_j = g^j e_seed
        std::vector<std::vector<Rat>> w;
        LatticeVector cur = basis_vector(g.lattice(), seed);
        for (std::size_t j = 0; j < n; ++j) {
            w.push_back(cur.coords);
            cur = g(cur);
        }
        NumberFieldVector v{field, g.lattice(), {}};
        v.coords.assign(n, NFElem::of_rational(field, Rat(0)));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (w[j][i] != 0) v.coords[i] = v.coords[i] + q[j] * w[j][i];
        if (!v.is_zero()) return v;
    }
    throw EigenspaceDimensionNot1("projector vanished on every basis vector");
}

}  // namespace detail

/// L+ and L-: the nef eigenvector rays for lambda and 1/lambda, exact in
/// Q(lambda), normalized (integral, content-free, e0-positive). Postconditions
/// (L+)^2 = (L-)^2 = 0 and L+ . L- > 0 are asserted exactly.
inline std::pair<NumberFieldVector, NumberFieldVector> leading_eigenvectors(const Isometry& g) {
    EntropyClass cls = classify_entropy(g);
    if (!cls.positive) throw NotPositiveEntropy("leading eigenvectors need positive entropy");
    const IntPoly& f = cls.split.salem_factor;
    // a simple lambda needs the salem factor coprime to the cyclotomic part
    IntPoly cyclo = IntPoly::constant(Int(1));
    for (auto [k, m] : cls.split.cyclo_part)
        for (unsigned i = 0; i < m; ++i) cyclo = cyclo * cyclotomic(k);
    if (gcd(to_rational(f), to_rational(cyclo)).degree() > 0)
        throw EigenspaceDimensionNot1("salem factor shares a root with the cyclotomic part");
    auto field = std::make_shared<const NumberField>(f, *cls.lambda);

    NumberFieldVector l_plus = detail::normalize_ray(detail::lambda_eigenvector(g, field));
    NumberFieldVector l_minus = detail::normalize_ray(detail::lambda_eigenvector(inverse(g), field));

    NFElem lambda = NFElem::generator(field);
    NumberFieldVector gp = apply(g, l_plus);
    for (std::size_t i = 0; i < gp.coords.size(); ++i)
        if (gp.coords[i] != l_plus.coords[i] * lambda)  // g L+ = lambda L+
            throw ContractViolation("L+ is not a lambda eigenvector");
    NumberFieldVector gm = apply(g, l_minus);
    for (std::size_t i = 0; i < gm.coords.size(); ++i)
        if (gm.coords[i] * lambda != l_minus.coords[i])  // g L- = lambda^{-1} L-
            throw ContractViolation("L- is not a 1/lambda eigenvector");

    if (!pair(l_plus, l_plus).is_zero() || !pair(l_minus, l_minus).is_zero())
        throw ContractViolation("leading rays are not isotropic");
    NFElem cross = pair(l_plus, l_minus);
    if (cross.sign() <= 0) throw ContractViolation("L+ . L- must be positive");
    NumberFieldVector big = l_plus + l_minus;
    if (pair(big, big).sign() <= 0) throw ContractViolation("(L+ + L-)^2 must be positive");
    return {std::move(l_plus), std::move(l_minus)};
}

struct PowerIterationResult {
    std::vector<double> direction;  // unit vector along the iterated ray
    double residual = 0;            // direction change at the final step
    unsigned iterations = 0;
};

inline std::vector<double> ray_direction(const NumberFieldVector& v) {
    std::vector<double> out(v.coords.size());
    double norm = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = v.coords[i].approx();
        norm += out[i] * out[i];
    }
    norm = std::sqrt(norm);
    for (auto& x : out) x /= norm;
    return out;
}

/// Angle between rays (sign-insensitive); chord form keeps small angles exact.
inline double ray_angle(const std::vector<double>& a, const std::vector<double>& b) {
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    const double flip = dot < 0 ? -1.0 : 1.0;
    double chord2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] / na - flip * b[i] / nb;
        chord2 += d * d;
    }
    double half = std::sqrt(chord2) / 2;
    if (half > 1) half = 1;
    return 2 * std::asin(half);
}

/// Float cross-check of the limit formula L+ = lim g^n B / lambda^n. Not a
/// source of truth; leading_eigenvectors is.
inline PowerIterationResult power_iterate(const Isometry& g, const LatticeVector& b,
                                          unsigned max_iter, const Rat& tol) {
    EntropyClass cls = classify_entropy(g);
    if (!cls.positive) throw NotPositiveEntropy("power iteration needs positive entropy");
    if (self_pair(b) <= 0 || hyplat::pair(b, basis_vector(b.lattice, 0)) <= 0)
        throw ContractViolation("seed must be a big e0-positive class (B^2 > 0, B.e0 > 0)");
    const std::size_t n = g.rank();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = to_double(g.matrix()(i, j));
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = to_double(b.coords[i]);
    cls.lambda->refine_below(Rat(1, Int(1) << 60));
    const double lam = cls.lambda->approx();
    const double tol_d = to_double(tol);
    double residual = 0;
    for (unsigned it = 1; it <= max_iter; ++it) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next[i] += m[i][j] * v[j];
        for (auto& x : next) x /= lam;  // the limit formula's lambda^n rescaling
        residual = ray_angle(next, v);
        v = std::move(next);
        if (residual < tol_d) {
            double norm = 0;
            for (double x : v) norm += x * x;
            norm = std::sqrt(norm);
            for (auto& x : v) x /= norm;
            return {std::move(v), residual, it};
        }
    }
    throw NoConvergence("residual " + std::to_string(residual) + " after " +
                        std::to_string(max_iter) + " iterations");
}

struct SplittingBasis {
    std::vector<LatticeVector> v_g_basis;   // f_g(g) kernel
    std::vector<LatticeVector> fixed_basis; // (g^s - I) kernel
    Inertia fixed_inertia;
};

namespace detail {

inline IntMat eval_poly_at_matrix(const IntPoly& p, const IntMat& m) {
    const std::size_t n = m.rows();
    IntMat acc(n, n);
    for (std::size_t i = p.c.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += p.c[i];
    }
    return acc;
}

inline RatMat rows_from_vectors(const std::vector<LatticeVector>& vs) {
    RatMat m(vs.size(), vs.empty() ? 0 : vs[0].coords.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs[i].coords.size(); ++j) m(i, j) = vs[i].coords[j];
    return m;
}

}  // namespace detail

/// NS_Q = V_g (+) V_{g^s = 1}: rational kernel bases of f_g(g) and g^s - I,
/// with the dimension, orthogonality and definiteness checks asserted.
inline SplittingBasis invariant_splitting(const Isometry& g) {
    auto [s, e] = invariant_exponents(g);
    EntropyClass cls = classify_entropy(g);
    auto [l_plus, l_minus] = leading_eigenvectors(g);

    SplittingBasis out;
    IntMat fg = detail::eval_poly_at_matrix(cls.split.salem_factor, g.matrix());
    for (auto& v : kernel_basis(to_rational(fg)))
        out.v_g_basis.push_back(LatticeVector{g.lattice(), std::move(v)});
    IntMat gs = power(g, static_cast<long>(s)).matrix();
    for (std::size_t i = 0; i < gs.rows(); ++i) gs(i, i) -= 1;
    for (auto& v : kernel_basis(to_rational(gs)))
        out.fixed_basis.push_back(LatticeVector{g.lattice(), std::move(v)});

    if (out.fixed_basis.size() != e)
        throw SplittingFailed("fixed space dimension " + std::to_string(out.fixed_basis.size()) +
                              ", expected e = " + std::to_string(e));
    if (out.v_g_basis.size() + e != g.rank())
        throw SplittingFailed("V_g dimension " + std::to_string(out.v_g_basis.size()));
    std::vector<LatticeVector> all = out.v_g_basis;
    all.insert(all.end(), out.fixed_basis.begin(), out.fixed_basis.end());
    if (rank(detail::rows_from_vectors(all)) != g.rank())
        throw SplittingFailed("V_g + fixed space is not a direct sum");

    for (const auto& v : out.fixed_basis)
        if (!pair(l_plus, v).is_zero() || !pair(l_minus, v).is_zero())
            throw SplittingFailed("fixed vector not orthogonal to the leading rays");

    RatMat gram(e, e);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j)
            gram(i, j) = hyplat::pair(out.fixed_basis[i], out.fixed_basis[j]);
    out.fixed_inertia = inertia(gram);
    if (out.fixed_inertia.n_plus != 0)
        throw SplittingFailed("fixed-space form has a positive direction");
    return out;
}

struct NefViolation {
    std::size_t curve_index;
    std::string note;
};

/// Curves pairing strictly negatively with M, decided exactly in Q(lambda).
inline std::vector<NefViolation> check_nef_against(const NumberFieldVector& m,
                                                   const std::vector<LatticeVector>& curves) {
    std::vector<NefViolation> out;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        NFElem p = pair(m, curves[i]);
        if (p.sign() < 0) out.push_back({i, "M . C < 0"});
    }
    return out;
}

inline std::vector<NefViolation> check_nef_against(const LatticeVector& m,
                                                   const std::vector<LatticeVector>& curves) {
    std::vector<NefViolation> out;
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (hyplat::pair(m, curves[i]) < 0) out.push_back({i, "M . C < 0"});
    return out;
}

}  // namespace hyplat
