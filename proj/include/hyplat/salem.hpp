#pragma once

#include <hyplat/cyclotomic.hpp>
#include <hyplat/lattice.hpp>
#include <hyplat/sturm.hpp>

#include <optional>
#include <vector>

namespace hyplat {

/// det(xI - M), monic, by exact interpolation through integer nodes with
/// fraction-free (Bareiss) determinants.
inline IntPoly char_poly_of(const IntMat& m) {
    const std::size_t n = m.rows();
    std::vector<Rat> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        IntMat a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = i == j ? Int(k) - m(i, j) : Int(-m(i, j));
        xs.emplace_back(static_cast<long>(k));
        ys.emplace_back(det_bareiss(a));
    }
    RatPoly p = interpolate(xs, ys);
    std::vector<Int> c(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (!is_integer(p.c[i])) throw ContractViolation("characteristic polynomial not integral");
        c[i] = num(p.c[i]);
    }
    IntPoly out(std::move(c));
    if (!out.is_monic()) throw ContractViolation("characteristic polynomial not monic");
    return out;
}

inline IntPoly char_poly(const Isometry& g) { return char_poly_of(g.matrix()); }

/// P = salem_factor * prod Phi_k^m with the salem factor free of cyclotomic
/// divisors; s = lcm of the peeled orders, e = total peeled degree.
struct SalemSplit {
    IntPoly salem_factor;                                     // constant 1 when P is cyclotomic
    std::vector<std::pair<unsigned long, unsigned>> cyclo_part;  // (k, multiplicity)
    unsigned long s_exponent = 1;
    unsigned long e_exponent = 0;

    bool null_entropy() const { return salem_factor.degree() <= 0; }
};

/// Divides out every cyclotomic factor. Enumerates k <= 2 deg(P)^2, which is
/// exhaustive because phi(k) >= sqrt(k/2).
inline SalemSplit peel_cyclotomic(IntPoly p) {
    if (!p.is_monic()) throw NonMonic("peel_cyclotomic needs a monic polynomial");
    if (p.c.front() != 1 && p.c.front() != -1)
        throw BadConstantTerm("constant term must be +-1, got " + p.c.front().str());
    SalemSplit out;
    const unsigned long deg = static_cast<unsigned long>(p.degree());
    const unsigned long kmax = 2 * deg * deg;
    for (unsigned long k = 1; k <= kmax && p.degree() > 0; ++k) {
        if (euler_phi(k) > static_cast<unsigned long>(p.degree())) continue;
        unsigned mult = 0;
        for (;;) {
            auto q = divide_exact(p, cyclotomic(k));
            if (!q) break;
            p = std::move(*q);
            ++mult;
        }
        if (mult > 0) {
            out.cyclo_part.emplace_back(k, mult);
            out.s_exponent = static_cast<unsigned long>(
                lcm(Int(out.s_exponent), Int(k)).convert_to<unsigned long>());
            out.e_exponent += mult * euler_phi(k);
        }
    }
    out.salem_factor = std::move(p);
    return out;
}

inline IntPoly recompose(const SalemSplit& s) {
    IntPoly p = s.salem_factor;
    for (auto [k, m] : s.cyclo_part)
        for (unsigned i = 0; i < m; ++i) p = p * cyclotomic(k);
    return p;
}

/// x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
inline const IntPoly& lehmer_polynomial() {
    static const IntPoly p(std::vector<Int>{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    return p;
}

/// The largest root of the Lehmer polynomial, about 1.17628081.
inline const AlgebraicReal& lehmer_root() {
    static const AlgebraicReal r = [] {
        auto roots = isolate_real_roots(lehmer_polynomial(), Rat(1), Rat(2));
        if (roots.size() != 1) throw ContractViolation("Lehmer root isolation failed");
        return AlgebraicReal(lehmer_polynomial(), roots[0].first, roots[0].second);
    }();
    return r;
}

struct EntropyClass {
    bool positive = false;
    SalemSplit split;
    std::optional<AlgebraicReal> lambda;  // spectral radius, present iff positive
};

/// Null entropy iff the characteristic polynomial is a product of cyclotomics
/// (Kronecker); otherwise isolates the unique real eigenvalue > 1 and checks
/// the Salem-factor contract (reciprocal, square-free, single root above 1).
inline EntropyClass classify_entropy(const Isometry& g) {
    auto [n_plus, n_minus] = g.lattice().signature();
    if (n_plus != 1)
        throw SignatureUnsupported("entropy classification needs signature (1,n), got (" +
                                   std::to_string(n_plus) + "," + std::to_string(n_minus) + ")");
    EntropyClass out;
    out.split = peel_cyclotomic(char_poly(g));
    if (out.split.null_entropy()) return out;

    const IntPoly& f = out.split.salem_factor;
    if (f.degree() < 2)
        throw SalemContractViolated("non-cyclotomic residual of degree " +
                                    std::to_string(f.degree()));
    if (!f.is_palindromic())
        throw SalemContractViolated("salem factor is not reciprocal: " + f.str());
    if (!is_square_free(f)) throw SalemContractViolated("salem factor is not square-free");
    auto roots = isolate_real_roots(f, Rat(1), cauchy_root_bound(f) + 1);
    if (roots.size() != 1)
        throw SalemContractViolated("expected exactly one real root > 1, found " +
                                    std::to_string(roots.size()));
    out.positive = true;
    out.lambda = AlgebraicReal(f, roots[0].first, roots[0].second);
    return out;
}

/// lambda >= the Lehmer root, decided exactly.
inline bool lehmer_check(const AlgebraicReal& lambda) {
    return compare(lambda, lehmer_root()) >= 0;
}

/// (s, e) of the split, cross-checked: the cyclotomic part of g^s must be
/// exactly (x-1)^e.
inline std::pair<unsigned long, unsigned long> invariant_exponents(const Isometry& g) {
    EntropyClass cls = classify_entropy(g);
    if (!cls.positive) throw NotPositiveEntropy("invariant exponents need positive entropy");
    unsigned long s = cls.split.s_exponent, e = cls.split.e_exponent;
    SalemSplit again = peel_cyclotomic(char_poly(power(g, static_cast<long>(s))));
    bool ok = again.e_exponent == e;
    if (e > 0)
        ok = ok && again.cyclo_part.size() == 1 && again.cyclo_part[0].first == 1 &&
             again.cyclo_part[0].second == e;
    else
        ok = ok && again.cyclo_part.empty();
    if (!ok) throw VerificationFailed("cyclotomic part of g^s is not (x-1)^e");
    return {s, e};
}

enum class Audit { Verified, Unchecked };

namespace detail {

inline Int isqrt_ceil(const Int& n) {
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n ? r : Int(r + 1);
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r = 1;
    for (unsigned long i = 0; i < k; ++i) { r *= Int(n - i); r /= Int(i + 1); }
    return r;
}

inline std::vector<Int> signed_divisors(const Int& v) {
    Int a = abs(v);
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        if (d * d != a) { out.push_back(a / d); out.push_back(-(a / d)); }
    }
    return out;
}

}  // namespace detail

/// Exhaustive factor search for monic f of degree <= 12 (Kronecker tuples with
/// a Mignotte coefficient cut). Throws ReducibleSalemFactor when a proper
/// factorization exists; degree > 12 is reported Unchecked.
inline Audit irreducibility_audit(const IntPoly& f) {
    if (f.degree() < 2 || !f.is_monic())
        throw ContractViolation("audit expects a monic polynomial of degree >= 2");
    const unsigned long deg = static_cast<unsigned long>(f.degree());
    if (deg > 12) return Audit::Unchecked;

    Int norm2 = 0;
    for (const auto& c : f.c) norm2 += c * c;
    const Int norm = detail::isqrt_ceil(norm2);

    for (unsigned long d = 1; d <= deg / 2; ++d) {
        // nodes with small |f| keep the divisor tuples short
        std::vector<std::pair<Int, long>> nodes;
        for (long x = 0; nodes.size() < 2 * d + 3; x = x > 0 ? -x : -x + 1) {
            Int v = f.eval(Int(x));
            if (v == 0)  // integer root
                throw ReducibleSalemFactor("root at x = " + std::to_string(x));
            nodes.emplace_back(abs(v), x);
        }
        std::sort(nodes.begin(), nodes.end());
        nodes.resize(d + 1);
        std::vector<Rat> xs(d + 1);
        std::vector<std::vector<Int>> choices(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
            xs[i] = Rat(nodes[i].second);
            choices[i] = detail::signed_divisors(f.eval(Int(nodes[i].second)));
        }
        std::vector<std::size_t> idx(d + 1, 0);
        std::vector<Rat> ys(d + 1);
        for (;;) {
            for (std::size_t i = 0; i <= d; ++i) ys[i] = Rat(choices[i][idx[i]]);
            RatPoly h = interpolate(xs, ys);
            if (h.degree() == static_cast<long>(d)) {
                bool integral = true;
                for (const auto& c : h.c)
                    if (!is_integer(c)) { integral = false; break; }
                if (integral && (h.lc() == 1 || h.lc() == -1)) {
                    std::vector<Int> hc(h.c.size());
                    bool within = true;
                    for (std::size_t i = 0; i < h.c.size() && within; ++i) {
                        hc[i] = num(h.c[i]) * (h.lc() == -1 ? -1 : 1);
                        within = abs(hc[i]) <= detail::binomial(d, i) * norm;  // Mignotte
                    }
                    if (within) {
                        IntPoly cand(std::move(hc));
                        if (cand.degree() == static_cast<long>(d) && divides(cand, f))
                            throw ReducibleSalemFactor("factor " + cand.str());
                    }
                }
            }
            std::size_t pos = 0;
            while (pos <= d && ++idx[pos] == choices[pos].size()) { idx[pos] = 0; ++pos; }
            if (pos > d) break;
        }
    }
    return Audit::Verified;
}

}  // namespace hyplat
