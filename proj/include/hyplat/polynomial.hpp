#pragma once

#include <hyplat/errors.hpp>
#include <hyplat/numeric.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyplat {

/// Univariate polynomial with exact coefficients, ascending order.
/// The zero polynomial is the empty coefficient list (degree -1).
template <class T>
struct Poly {
    std::vector<T> c;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly zero() { return Poly(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const T& lc() const { return c.back(); }
    T coeff(std::size_t i) const { return i < c.size() ? c[i] : T(0); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), T(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
        r.normalize();
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, T(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        r.normalize();
        return r;
    }

    Poly operator*(const T& s) const {
        Poly r = *this;
        for (auto& v : r.c) v *= s;
        r.normalize();
        return r;
    }

    /// Horner evaluation; expression-template arguments collapse to T here.
    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    /// Evaluation in another ring (intervals, number-field elements, ...).
    template <class U>
    U eval_in(const U& x) const {
        U acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + U(c[i]);
        return acc;
    }

    Poly derivative() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * T(static_cast<long>(i));
        return r;
    }

    /// x^deg * p(1/x); well-defined for p with nonzero constant term.
    Poly reversed() const {
        Poly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.normalize();
        return r;
    }

    bool is_palindromic() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != c[c.size() - 1 - i]) return false;
        return !c.empty();
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            std::string term;
            T a = c[i];
            bool neg = a < 0;
            T mag = neg ? T(-a) : a;
            if (i == 0 || mag != 1) term += to_string(mag);
            if (i >= 1) {
                if (!term.empty()) term += "*";
                term += var;
                if (i >= 2) term += "^" + std::to_string(i);
            }
            if (out.empty()) out = (neg ? "-" : "") + term;
            else out += (neg ? " - " : " + ") + term;
        }
        return out;
    }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c(p.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.c[i]);
    return RatPoly(std::move(c));
}

/// Clears denominators and divides by integer content; sign fixed so lc > 0.
inline IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int l = 1;
    for (const auto& v : p.c) l = lcm(l, den(v));
    std::vector<Int> c(p.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = num(p.c[i] * Rat(l));
    Int g = gcd_range(c.begin(), c.end());
    if (c.back() < 0) g = -g;
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ContractViolation("polynomial division by zero");
    RatPoly r = a, q;
    if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat f = r.lc() / b.lc();
        std::size_t shift = r.degree() - b.degree();
        q.c[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

/// Exact division of integer polynomials; nullopt when b does not divide a over Z.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero()) return std::nullopt;
    for (const auto& v : q.c)
        if (!is_integer(v)) return std::nullopt;
    std::vector<Int> c(q.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = num(q.c[i]);
    return IntPoly(std::move(c));
}

inline bool divides(const IntPoly& b, const IntPoly& a) { return divide_exact(a, b).has_value(); }

/// Monic gcd over Q.
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat inv = a.lc();
    for (auto& v : a.c) v /= inv;
    return a;
}

/// Primitive square-free part of an integer polynomial.
inline IntPoly square_free_part(const IntPoly& p) {
    if (p.degree() <= 0) return p;
    RatPoly pr = to_rational(p);
    RatPoly g = gcd(pr, pr.derivative());
    if (g.degree() <= 0) return primitive_part(pr);
    auto [q, r] = divmod(pr, g);
    if (!r.is_zero()) throw ContractViolation("square-free division not exact");
    return primitive_part(q);
}

inline bool is_square_free(const IntPoly& p) {
    RatPoly pr = to_rational(p);
    return gcd(pr, pr.derivative()).degree() <= 0;
}

/// res(f, g) over Q via the Euclidean remainder sequence.
inline Rat resultant(RatPoly f, RatPoly g) {
    if (f.is_zero() || g.is_zero()) return Rat(0);
    Rat acc(1);
    bool flip = false;
    while (g.degree() > 0) {
        auto [q, r] = divmod(f, g);
        (void)q;
        long df = f.degree(), dg = g.degree(), dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return Rat(0);
        // res(f,g) = (-1)^{df*dg} lc(g)^{df-dr} res(g,r)
        if ((df % 2) && (dg % 2)) flip = !flip;
        Rat l = g.lc();
        Rat p(1);
        for (long i = 0; i < df - dr; ++i) p *= l;
        acc *= p;
        f = std::move(g);
        g = std::move(r);
    }
    // g is a nonzero constant: res(f, g) = g^{deg f}
    Rat p(1);
    for (long i = 0; i < f.degree(); ++i) p *= g.c[0];
    acc *= p;
    return flip ? Rat(-acc) : acc;
}

/// Exact Lagrange interpolation through (xs[i], ys[i]).
inline RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly term = RatPoly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * RatPoly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + term * (ys[i] / denom);
    }
    return acc;
}

/// Cauchy bound: every real root lies in (-B, B) with B = 1 + max |a_i/a_n|.
inline Rat cauchy_root_bound(const IntPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m(0);
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i)
        m = std::max(m, abs(Rat(p.c[i], p.lc())));
    return m + 1;
}

}  // namespace hyplat
