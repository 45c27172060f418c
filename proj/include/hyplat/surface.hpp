#pragma once

#include <hyplat/nef.hpp>
#include <hyplat/zariski.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyplat {

/// Blowup model of a rational surface: Z^{1,n} with the canonical class and a
/// user-declared curve configuration. The artifact never invents geometry:
/// every "all curves on X" statement is relative to the declared classes.
struct SurfaceModel {
    Lattice lattice;
    LatticeVector canonical;
    CurveConfig curves;
};

/// K = -3 e0 + sum e_i on Z^{1,n}; K^2 = 9 - n, K . e0 = -3.
inline SurfaceModel blowup_model(std::size_t n) {
    Lattice lat = make_lorentzian(n);
    std::vector<Rat> k(n + 1, Rat(1));
    k[0] = -3;
    SurfaceModel m{lat, LatticeVector{lat, std::move(k)}, CurveConfig(lat, {})};
    if (self_pair(m.canonical) != Rat(9) - Rat(static_cast<long>(n)))
        throw ContractViolation("K^2 != 9 - n");
    return m;
}

inline SurfaceModel with_curves(const SurfaceModel& m,
                                std::vector<std::pair<std::string, LatticeVector>> entries) {
    return {m.lattice, m.canonical, CurveConfig(m.lattice, std::move(entries))};
}

/// Null(L+) as curve names, asserted equal to Null(L-) and Null(L+ + L-),
/// with negative definite Gram and size < rank (Lemma-level sanity for the
/// declared classes; a mismatch means some class cannot be a curve on this
/// dynamical system and is reported as the witness).
inline std::vector<std::string> stab_set(const Isometry& g, const SurfaceModel& model) {
    if (!g.lattice().same_as(model.lattice))
        throw MismatchedLattices("isometry and model live on different lattices");
    auto [l_plus, l_minus] = leading_eigenvectors(g);
    NumberFieldVector l = l_plus + l_minus;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < model.curves.size(); ++i) {
        const LatticeVector& c = model.curves.curve(i);
        bool zp = pair(l_plus, c).is_zero();
        bool zm = pair(l_minus, c).is_zero();
        bool zs = pair(l, c).is_zero();
        if (zp != zm || zp != zs)
            throw NullSetMismatch("curve '" + model.curves.name(i) +
                                  "' separates Null(L+), Null(L-), Null(L)");
        if (zp) out.push_back(model.curves.name(i));
    }
    if (!out.empty()) {
        if (out.size() >= g.rank())
            throw ContractViolation("|Null(L)| must be smaller than the rank");
        if (!is_negative_definite(out, model.curves))
            throw ContractViolation("Null(L) Gram matrix is not negative definite");
    }
    return out;
}

inline bool is_minus_one_class(const LatticeVector& c, const LatticeVector& k) {
    return self_pair(c) == -1 && pair(k, c) == -1;
}

struct MinimalityResult {
    bool minimal = true;
    std::vector<std::string> sigma;  // a g-stable set of disjoint (-1)-classes
};

/// Collects the (-1)-classes in Stab(g), prunes pairwise-meeting candidates,
/// and closes under the g-action. A g-image that leaves the declared
/// configuration altogether is an incomplete model, not a guess.
inline MinimalityResult minimality_check(const Isometry& g, const SurfaceModel& model) {
    std::vector<std::string> stab = stab_set(g, model);
    std::vector<std::size_t> cand;
    for (const auto& name : stab) {
        std::size_t i = model.curves.index_of(name);
        if (is_minus_one_class(model.curves.curve(i), model.canonical)) cand.push_back(i);
    }
    // disjointness: drop every candidate that meets another one
    std::vector<std::size_t> disjoint;
    for (std::size_t i : cand) {
        bool ok = true;
        for (std::size_t j : cand)
            if (i != j && model.curves.pairing(i, j) != 0) ok = false;
        if (ok) disjoint.push_back(i);
    }
    // closure under g: image must stay inside the surviving set
    auto class_index = [&](const LatticeVector& v) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < model.curves.size(); ++i)
            if (model.curves.curve(i) == v) return i;
        return std::nullopt;
    };
    std::vector<std::size_t> sigma = disjoint;
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::size_t> next;
        for (std::size_t i : sigma) {
            auto img = class_index(g(model.curves.curve(i)));
            if (!img)
                throw OrbitNotClosed("image of '" + model.curves.name(i) +
                                     "' is not a declared curve class");
            if (std::find(sigma.begin(), sigma.end(), *img) != sigma.end())
                next.push_back(i);
            else
                changed = true;
        }
        sigma = std::move(next);
    }
    if (sigma.empty()) return {true, {}};
    MinimalityResult r{false, {}};
    for (std::size_t i : sigma) r.sigma.push_back(model.curves.name(i));
    return r;
}

namespace detail {

/// Looks for a unimodular change of basis sending the form to diag(1,-1,...).
/// Exhaustive small-coefficient search (entries within +-4); empty when the
/// search space is too large or no frame is found.
inline std::optional<IntMat> lorentzian_frame(const IntMat& gram) {
    const std::size_t r = gram.rows();
    if (r > 6) return std::nullopt;
    const long bound = 4;
    std::vector<std::vector<Int>> frame;

    auto pair_with = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int acc = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) acc += a[i] * gram(i, j) * b[j];
        return acc;
    };
    // enumerate coefficient vectors in lexicographic order for determinism
    auto search = [&](const Int& target_square) -> std::optional<std::vector<Int>> {
        std::vector<long> c(r, -bound);
        for (;;) {
            std::vector<Int> v(c.begin(), c.end());
            bool nonzero = false;
            for (const auto& x : v) nonzero = nonzero || x != 0;
            if (nonzero && pair_with(v, v) == target_square) {
                bool orth = true;
                for (const auto& f : frame) orth = orth && pair_with(v, f) == 0;
                if (orth) return v;
            }
            std::size_t pos = 0;
            while (pos < r && ++c[pos] > bound) { c[pos] = -bound; ++pos; }
            if (pos == r) return std::nullopt;
        }
    };

    auto u = search(Int(1));
    if (!u) return std::nullopt;
    frame.push_back(*u);
    for (std::size_t k = 1; k < r; ++k) {
        auto v = search(Int(-1));
        if (!v) return std::nullopt;
        frame.push_back(*v);
    }
    IntMat t(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) t(i, j) = frame[j][i];
    Int det = det_bareiss(t);
    if (det != 1 && det != -1) return std::nullopt;  // found a proper sublattice frame
    return t;
}

}  // namespace detail

/// Contracts a g-stable set of pairwise disjoint (-1)-classes: the new lattice
/// is the integral orthogonal complement, the isometry restricts, the
/// canonical class projects (K - sum E_i), and the Salem factor is preserved.
inline std::pair<SurfaceModel, Isometry> equivariant_blowdown(
    const Isometry& g, const std::vector<std::string>& sigma_names, const SurfaceModel& model) {
    if (sigma_names.empty()) throw NotGStable("empty contraction set");
    std::vector<LatticeVector> sigma;
    for (const auto& name : sigma_names)
        sigma.push_back(model.curves.curve(model.curves.index_of(name)));
    for (const auto& c : sigma)
        if (!is_minus_one_class(c, model.canonical))
            throw NotDisjoint("class is not a (-1)-class: C^2 = " + to_string(self_pair(c)) +
                              ", K.C = " + to_string(pair(model.canonical, c)));
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (sigma[i] == sigma[j]) throw NotDisjoint("repeated class in the contraction set");
            if (pair(sigma[i], sigma[j]) != 0)
                throw NotDisjoint("classes " + sigma_names[i] + " and " + sigma_names[j] +
                                  " meet nontrivially");
        }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        LatticeVector img = g(sigma[i]);
        bool found = false;
        for (const auto& s : sigma) found = found || s == img;
        if (!found) throw NotGStable("image of " + sigma_names[i] + " leaves the set");
    }

    const std::size_t rank = g.rank();
    // integral orthogonal complement: kernel of x -> (x . sigma_i)
    IntMat pairings(sigma.size(), rank);
    for (std::size_t s = 0; s < sigma.size(); ++s) {
        std::vector<Rat> row(rank, Rat(0));
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t k = 0; k < rank; ++k)
                row[j] += Rat(model.lattice.gram()(j, k)) * sigma[s].coords[k];
        for (std::size_t j = 0; j < rank; ++j) pairings(s, j) = num(row[j]);
    }
    auto basis = integer_kernel(pairings);
    if (basis.size() != rank - sigma.size())
        throw NoIntegralBasis("complement rank " + std::to_string(basis.size()) + ", expected " +
                              std::to_string(rank - sigma.size()));
    const std::size_t r = basis.size();
    IntMat b(rank, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < rank; ++i) b(i, j) = basis[j][i];

    IntMat new_gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Int acc = 0;
            for (std::size_t a = 0; a < rank; ++a)
                for (std::size_t c = 0; c < rank; ++c)
                    acc += b(a, i) * model.lattice.gram()(a, c) * b(c, j);
            new_gram(i, j) = acc;
        }

    // express the restriction of g and the projected K in the new basis
    RatMat bq = to_rational(b);
    auto in_new_basis = [&](const LatticeVector& v) {
        auto x = solve(bq, v.coords);
        if (!x) throw NoIntegralBasis("vector outside the complement span");
        for (const auto& c : *x)
            if (!is_integer(c)) throw NoIntegralBasis("vector has non-integral coordinates");
        return *x;
    };
    IntMat induced(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        LatticeVector bj{model.lattice, {}};
        bj.coords.assign(rank, Rat(0));
        for (std::size_t i = 0; i < rank; ++i) bj.coords[i] = Rat(b(i, j));
        auto col = in_new_basis(g(bj));
        for (std::size_t i = 0; i < r; ++i) induced(i, j) = num(col[i]);
    }
    LatticeVector k_proj = model.canonical;
    for (const auto& s : sigma) k_proj = k_proj - s * (pair(model.canonical, s) / self_pair(s));
    auto k_new = in_new_basis(k_proj);

    // optional re-basing to the Lorentzian normal form
    auto frame = detail::lorentzian_frame(new_gram);
    if (frame) {
        IntMat t = *frame;
        IntMat tinv = unimodular_inverse(t);
        IntMat diag_gram = t.transposed() * new_gram * t;
        new_gram = std::move(diag_gram);
        induced = tinv * induced * t;
        std::vector<Rat> k2(r, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) k2[i] += Rat(tinv(i, j)) * k_new[j];
        k_new = std::move(k2);
    }

    Lattice new_lat(new_gram);
    Isometry g_new = certify_isometry(induced, new_lat);
    LatticeVector k_class{new_lat, k_new};

    // K'^2 = K^2 + |Sigma|, and the Salem factor survives the contraction
    if (self_pair(k_class) != self_pair(model.canonical) + Rat(static_cast<long>(sigma.size())))
        throw ContractViolation("canonical square mismatch after contraction");
    if (peel_cyclotomic(char_poly(g)).salem_factor !=
        peel_cyclotomic(char_poly(g_new)).salem_factor)
        throw ContractViolation("Salem factor changed under equivariant blowdown");

    SurfaceModel out{new_lat, k_class, CurveConfig(new_lat, {})};
    return {std::move(out), std::move(g_new)};
}

struct StabReport {
    std::vector<std::string> stab;
    std::vector<std::pair<std::string, Rat>> delta;  // Supp(Delta) with coefficients > 0
    std::optional<LatticeVector> delta_class;
    std::optional<unsigned long> d_index;
    std::vector<std::string> minus_two_extras;
    std::vector<std::string> k_plus_delta_violations;  // cfg classes meeting K + Delta
    bool some_square_le_minus3 = false;                // relevant when d >= 2
    std::string tree_note;
};

/// Solves (K + sum a_i C_i) . C_j = 0 over the stab set; the negative definite
/// Gram makes the solution unique. Zero-coefficient components must be
/// (-2)-classes orthogonal to K and disjoint from Supp(Delta).
inline StabReport anticanonical_delta(const Isometry& g, const SurfaceModel& model) {
    std::vector<std::string> stab = stab_set(g, model);
    if (stab.empty()) throw EmptyStab("stab set is empty");
    MinimalityResult min = minimality_check(g, model);
    if (!min.minimal)
        throw ContractViolation("model is not minimal: contract " + min.sigma.front() + " first");
    std::vector<std::size_t> idx;
    for (const auto& name : stab) {
        std::size_t i = model.curves.index_of(name);
        if (self_pair(model.curves.curve(i)) > -2)
            throw ContractViolation("stab class '" + name + "' has C^2 > -2");
        idx.push_back(i);
    }
    const std::size_t m = idx.size();
    RatMat gramm(m, m);
    std::vector<Rat> rhs(m);
    for (std::size_t a = 0; a < m; ++a) {
        rhs[a] = -pair(model.canonical, model.curves.curve(idx[a]));
        for (std::size_t b2 = 0; b2 < m; ++b2) gramm(a, b2) = model.curves.pairing(idx[a], idx[b2]);
    }
    auto sol = solve(gramm, rhs);
    if (!sol) throw ContractViolation("negative definite stab system failed to solve");

    StabReport rep;
    rep.stab = stab;
    std::string bad;
    for (std::size_t a = 0; a < m; ++a)
        if ((*sol)[a] < 0) bad += (bad.empty() ? "" : ", ") + stab[a] + " = " + to_string((*sol)[a]);
    if (!bad.empty())
        throw NegativeCoefficient("solution has negative coefficients: " + bad);

    std::vector<std::size_t> support;
    for (std::size_t a = 0; a < m; ++a) {
        if ((*sol)[a] > 0) {
            support.push_back(a);
            rep.delta.emplace_back(stab[a], (*sol)[a]);
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        if ((*sol)[a] != 0) continue;
        const LatticeVector& c = model.curves.curve(idx[a]);
        if (self_pair(c) != -2 || pair(model.canonical, c) != 0)
            throw ContractViolation("zero-coefficient class '" + stab[a] + "' is not a (-2)-class");
        for (std::size_t s : support)
            if (model.curves.pairing(idx[a], idx[s]) != 0)
                throw ContractViolation("(-2)-class '" + stab[a] + "' meets Supp(Delta)");
        rep.minus_two_extras.push_back(stab[a]);
    }

    if (!support.empty()) {
        LatticeVector delta{model.lattice, std::vector<Rat>(model.lattice.rank(), Rat(0))};
        Int d = 1;
        for (std::size_t s : support) {
            delta = delta + model.curves.curve(idx[s]) * (*sol)[s];
            d = lcm(d, den((*sol)[s]));
        }
        std::vector<Int> scaled;
        for (std::size_t s : support) scaled.push_back(num((*sol)[s] * Rat(d)));
        if (gcd_range(scaled.begin(), scaled.end()) != 1)
            throw ContractViolation("gcd of d Delta coefficients is not 1");
        rep.delta_class = delta;
        rep.d_index = d.convert_to<unsigned long>();

        // numerical triviality of K + Delta against every declared class
        LatticeVector k_delta = model.canonical + delta;
        for (std::size_t i = 0; i < model.curves.size(); ++i)
            if (pair(k_delta, model.curves.curve(i)) != 0)
                rep.k_plus_delta_violations.push_back(model.curves.name(i));

        // Delta^2 = -K . Delta, from (K + Delta) . Delta = 0
        if (self_pair(delta) != -pair(model.canonical, delta))
            throw ContractViolation("Delta^2 != -K . Delta");

        if (*rep.d_index >= 2) {
            for (std::size_t a = 0; a < m; ++a)
                if (self_pair(model.curves.curve(idx[a])) <= -3) rep.some_square_le_minus3 = true;
            rep.tree_note =
                "rational-tree condition is not lattice-decidable; necessary conditions: "
                "all C^2 <= -2 hold, some C^2 <= -3 " +
                std::string(rep.some_square_le_minus3 ? "holds" : "FAILS");
        }
    }
    return rep;
}

enum class IndexDiagnostic { Ok, Warning };

/// Advisory log-Enriques bound: d <= 21.
inline IndexDiagnostic index_diagnostic(const StabReport& report) {
    if (report.d_index && *report.d_index > 21) return IndexDiagnostic::Warning;
    return IndexDiagnostic::Ok;
}

}  // namespace hyplat
