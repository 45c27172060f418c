#pragma once

#include <hyplat/polynomial.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace hyplat {

/// Sturm chain of a square-free polynomial.
inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        if (b.is_zero()) break;
        auto [q, r] = divmod(a, b);
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_at(const RatPoly& p, const Rat& x) { return sign(p.eval(x)); }

inline int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int variations_at_plus_inf(const std::vector<RatPoly>& chain) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign(p.lc());
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline int variations_at_minus_inf(const std::vector<RatPoly>& chain) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign(p.lc());
        if (p.degree() % 2) s = -s;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

/// Number of real roots in (lo, hi]; p square-free.
inline int count_roots(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi) {
    return variations_at(chain, lo) - variations_at(chain, hi);
}

inline int count_roots_above(const std::vector<RatPoly>& chain, const Rat& lo) {
    return variations_at(chain, lo) - variations_at_plus_inf(chain);
}

inline int count_real_roots(const std::vector<RatPoly>& chain) {
    return variations_at_minus_inf(chain) - variations_at_plus_inf(chain);
}

/// Isolating intervals, left to right, for all real roots of square-free p in
/// (lo, hi). Rational roots come back as degenerate [r, r] intervals; all other
/// intervals have non-root endpoints and contain exactly one root.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p_in, Rat lo, Rat hi) {
    IntPoly p = square_free_part(p_in);
    RatPoly pr = to_rational(p);
    auto chain = sturm_chain(pr);
    if (lo >= hi) return {};
    // nudge root endpoints inward without crossing another root
    if (pr.eval(lo) == 0) {
        Rat eps = (hi - lo) / 2;
        while (pr.eval(lo + eps) == 0 || count_roots(chain, lo, lo + eps) != 0) eps /= 2;
        lo += eps;
    }
    if (pr.eval(hi) == 0) {
        Rat eps = (hi - lo) / 2;
        while (pr.eval(hi - eps) == 0 || count_roots(chain, hi - eps, hi) != 1) eps /= 2;
        hi -= eps;
    }
    struct Seg { Rat lo, hi; int n; };
    std::vector<Seg> stack{{lo, hi, count_roots(chain, lo, hi)}};
    std::vector<std::pair<Rat, Rat>> found;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            found.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (pr.eval(mid) == 0) {
            found.emplace_back(mid, mid);
            Rat eps = (s.hi - s.lo) / 4;
            while (pr.eval(mid - eps) == 0 || pr.eval(mid + eps) == 0 ||
                   count_roots(chain, mid - eps, mid + eps) != 1)
                eps /= 2;  // shrink until the exact root is the only one inside
            stack.push_back({s.lo, mid - eps, count_roots(chain, s.lo, mid - eps)});
            stack.push_back({mid + eps, s.hi, count_roots(chain, mid + eps, s.hi)});
        } else {
            stack.push_back({s.lo, mid, count_roots(chain, s.lo, mid)});
            stack.push_back({mid, s.hi, count_roots(chain, mid, s.hi)});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return found;
}

/// A real algebraic number: a square-free integer polynomial together with an
/// isolating interval certified (by Sturm count) to contain exactly one root.
/// lo == hi encodes an exact rational value.
class AlgebraicReal {
  public:
    AlgebraicReal() : poly_(IntPoly::x()), lo_(0), hi_(0) {}

    explicit AlgebraicReal(const Rat& r)
        : poly_(IntPoly(std::vector<Int>{-num(r), den(r)})), lo_(r), hi_(r) {}

    /// Certifies the interval isolates exactly one root of square_free_part(p).
    AlgebraicReal(const IntPoly& p, const Rat& lo, const Rat& hi) : lo_(lo), hi_(hi) {
        poly_ = square_free_part(p);
        RatPoly pr = to_rational(poly_);
        if (lo == hi) {
            if (pr.eval(lo) != 0)
                throw ContractViolation("degenerate interval does not hit a root");
            return;
        }
        if (lo > hi) throw ContractViolation("inverted isolating interval");
        if (pr.eval(lo) == 0 || pr.eval(hi) == 0)
            throw ContractViolation("isolating interval endpoint is a root");
        auto chain = sturm_chain(pr);
        if (count_roots(chain, lo, hi) != 1)
            throw ContractViolation("interval does not isolate exactly one root");
    }

    const IntPoly& min_poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    Rat width() const { return hi_ - lo_; }
    long degree() const { return poly_.degree(); }

    /// One bisection step. The isolated root is simple, so the endpoint signs
    /// differ and plain sign bisection is sound.
    void refine_once() const {
        if (is_exact()) return;
        RatPoly pr = to_rational(poly_);
        Rat mid = (lo_ + hi_) / 2;
        int sm = sign(pr.eval(mid));
        if (sm == 0) {
            lo_ = hi_ = mid;
            return;
        }
        int sl = sign(pr.eval(lo_));
        if (sm == sl) lo_ = mid; else hi_ = mid;
    }

    void refine_below(const Rat& width) const {
        while (!is_exact() && hi_ - lo_ > width) refine_once();
    }

    double approx() const {
        refine_below(Rat(1, Int(1) << 80));
        return to_double((lo_ + hi_) / 2);
    }

  private:
    IntPoly poly_;
    mutable Rat lo_, hi_;  // refinement narrows the interval, never moves the root
};

/// Total order on real algebraic numbers. Termination: distinct values separate
/// under bisection; equal values are caught by a common root of gcd(p_a, p_b)
/// surviving inside the overlap.
inline int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_exact() && b.is_exact())
        return a.lo() < b.lo() ? -1 : (a.lo() == b.lo() ? 0 : 1);
    std::optional<RatPoly> g;
    std::optional<std::vector<RatPoly>> gchain;
    for (;;) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        // overlapping; test for a shared root inside the overlap
        if (!g) {
            g = gcd(to_rational(a.min_poly()), to_rational(b.min_poly()));
            if (g->degree() >= 1) gchain = sturm_chain(*g);
        }
        if (g->degree() >= 1) {
            Rat ilo = std::max(a.lo(), b.lo());
            Rat ihi = std::min(a.hi(), b.hi());
            if (g->eval(ilo) == 0 || g->eval(ihi) == 0) return 0;
            if (ilo < ihi && count_roots(*gchain, ilo, ihi) >= 1) return 0;
        }
        if (a.is_exact() && b.is_exact())
            return a.lo() < b.lo() ? -1 : (a.lo() == b.lo() ? 0 : 1);
        a.refine_once();
        b.refine_once();
    }
}

inline int compare(const AlgebraicReal& a, const Rat& r) { return compare(a, AlgebraicReal(r)); }

inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
inline bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
inline bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) <= 0; }

/// Minimal-polynomial candidate for y^k where p(y) = 0: the square-free part of
/// Res_y(p(y), x - y^k), computed by evaluation-interpolation in x.
inline IntPoly power_minpoly(const IntPoly& p, unsigned long k) {
    long d = p.degree();
    if (d < 1) throw ContractViolation("power_minpoly of constant");
    RatPoly pr = to_rational(p);
    std::vector<Rat> xs, ys;
    for (long i = 0; i <= d; ++i) {
        Rat x0(i);
        // q(y) = x0 - y^k
        std::vector<Rat> qc(k + 1, Rat(0));
        qc[0] = x0;
        qc[k] = -1;
        xs.push_back(x0);
        ys.push_back(resultant(pr, RatPoly(std::move(qc))));
    }
    RatPoly res = interpolate(xs, ys);
    return square_free_part(primitive_part(res));
}

/// a^k for a > 0, as a certified algebraic real.
inline AlgebraicReal algebraic_power(const AlgebraicReal& a, unsigned long k) {
    if (k == 0) return AlgebraicReal(Rat(1));
    if (k == 1) return a;
    if (a.is_exact()) {
        Rat v(1);
        for (unsigned long i = 0; i < k; ++i) v *= a.lo();
        return AlgebraicReal(v);
    }
    if (!(a.lo() >= 0)) a.refine_below(Rat(1, 1024));
    if (!(a.lo() >= 0)) throw ContractViolation("algebraic_power expects a positive value");
    IntPoly mp = power_minpoly(a.min_poly(), k);
    RatPoly mpr = to_rational(mp);
    auto chain = sturm_chain(mpr);
    for (;;) {
        Rat lo(1), hi(1);
        for (unsigned long i = 0; i < k; ++i) { lo *= a.lo(); hi *= a.hi(); }
        if (mpr.eval(lo) != 0 && mpr.eval(hi) != 0 && count_roots(chain, lo, hi) == 1)
            return AlgebraicReal(mp, lo, hi);
        a.refine_once();
        if (a.is_exact()) return algebraic_power(a, k);
    }
}

/// Positive real m-th root of a > 0.
inline AlgebraicReal algebraic_root(const AlgebraicReal& a, unsigned long m) {
    if (m == 1) return a;
    if (compare(a, Rat(0)) <= 0) throw ContractViolation("algebraic_root expects a positive value");
    // substitute x^m into the minimal polynomial
    std::vector<Int> c(static_cast<std::size_t>(a.min_poly().degree()) * m + 1, Int(0));
    for (std::size_t i = 0; i < a.min_poly().c.size(); ++i) c[i * m] = a.min_poly().c[i];
    IntPoly q = square_free_part(IntPoly(std::move(c)));
    RatPoly qr = to_rational(q);
    auto chain = sturm_chain(qr);
    a.refine_below(Rat(1, 1024));
    Rat lo(0), hi = std::max(a.hi(), Rat(1)) + 1;  // x^m increasing on x >= 0
    for (;;) {
        if (qr.eval(lo) != 0 && qr.eval(hi) != 0 && count_roots(chain, lo, hi) == 1)
            return AlgebraicReal(q, lo, hi);
        Rat mid = (lo + hi) / 2;
        Rat midm(1);
        for (unsigned long i = 0; i < m; ++i) midm *= mid;
        int c3 = compare(a, midm);
        if (c3 == 0) return AlgebraicReal(q, mid, mid);
        if (c3 > 0) lo = mid; else hi = mid;
    }
}

}  // namespace hyplat
