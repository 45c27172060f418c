#pragma once

#include <hyplat/sturm.hpp>

#include <cstdlib>
#include <memory>
#include <utility>
#include <vector>

namespace hyplat {

/// Polynomial-degree guard, overridable via HYPLAT_MAX_DEGREE.
inline unsigned long max_poly_degree() {
    if (const char* env = std::getenv("HYPLAT_MAX_DEGREE")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned long>(v);
    }
    return 64;
}

/// Closed rational interval with outward arithmetic, for sign determination.
struct RatInterval {
    Rat lo, hi;
    RatInterval() : lo(0), hi(0) {}
    RatInterval(const Rat& v) : lo(v), hi(v) {}  // NOLINT: implicit by design
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    int determined_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
};

/// Q(lambda) for a root lambda of a monic square-free integer polynomial.
/// Elements are reduced polynomials in lambda with rational coefficients; signs
/// are decided by refining lambda's isolating interval, which is sound because
/// a nonzero reduced element of degree < deg f cannot vanish at a root of an
/// irreducible f.
class NumberField {
  public:
    NumberField(IntPoly min_poly, AlgebraicReal root)
        : f_(std::move(min_poly)), fr_(to_rational(f_)), root_(std::move(root)) {
        if (!f_.is_monic() || f_.degree() < 1)
            throw ContractViolation("number field needs a monic minimal polynomial");
        if (static_cast<unsigned long>(f_.degree()) > max_poly_degree())
            throw DegreeCapExceeded("minimal polynomial degree " + std::to_string(f_.degree()));
        if (root_.min_poly() != f_ && !divides(root_.min_poly(), f_) &&
            !divides(f_, root_.min_poly()))
            throw ContractViolation("root does not match the minimal polynomial");
    }

    const IntPoly& min_poly() const { return f_; }
    const RatPoly& min_poly_q() const { return fr_; }
    const AlgebraicReal& root() const { return root_; }
    unsigned long degree() const { return static_cast<unsigned long>(f_.degree()); }

  private:
    IntPoly f_;
    RatPoly fr_;
    AlgebraicReal root_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
  public:
    NFElem() = default;
    NFElem(NumberFieldPtr field, RatPoly rep) : f_(std::move(field)) {
        auto [q, r] = divmod(rep, f_->min_poly_q());
        (void)q;
        c_ = r.c;
        c_.resize(f_->degree(), Rat(0));
    }
    static NFElem of_rational(NumberFieldPtr field, const Rat& v) {
        return NFElem(std::move(field), RatPoly::constant(v));
    }
    static NFElem generator(NumberFieldPtr field) {
        return NFElem(std::move(field), RatPoly::x());
    }

    const NumberFieldPtr& field() const { return f_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_value() const { return c_.empty() ? Rat(0) : c_[0]; }

    bool operator==(const NFElem& o) const { return c_ == o.c_; }
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    NFElem operator+(const NFElem& o) const {
        NFElem r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    NFElem operator-() const {
        NFElem r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    NFElem operator-(const NFElem& o) const { return *this + (-o); }

    NFElem operator*(const NFElem& o) const {
        return NFElem(f_, RatPoly(c_) * RatPoly(o.c_));
    }
    NFElem operator*(const Rat& s) const {
        NFElem r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    /// Extended Euclid against the minimal polynomial; maintains t_i u = r_i (mod f).
    NFElem inverse() const {
        if (is_zero()) throw ContractViolation("inverse of zero field element");
        RatPoly r0 = f_->min_poly_q(), r1 = RatPoly(c_);
        RatPoly t0 = RatPoly::zero(), t1 = RatPoly::constant(Rat(1));
        while (r1.degree() > 0) {
            auto [q, r2] = divmod(r0, r1);
            RatPoly t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r1.is_zero())  // gcd(rep, f) nontrivial: f was not irreducible after all
            throw ContractViolation("element shares a factor with the minimal polynomial");
        return NFElem(f_, t1 * (Rat(1) / r1.c[0]));
    }
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }

    NFElem pow(unsigned long k) const {
        NFElem acc = of_rational(f_, Rat(1));
        NFElem base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// Sign of the real value at lambda, exact. A spurious zero (possible only
    /// if the field polynomial is reducible and this element lies in the other
    /// factor's ideal) is detected via a gcd certificate and reported.
    int sign() const {
        if (is_zero()) return 0;
        RatPoly u(c_);
        if (u.degree() == 0) return hyplat::sign(u.c[0]);
        const AlgebraicReal& root = f_->root();
        for (int round = 0;; ++round) {
            RatInterval iv = u.eval_in(RatInterval(root.lo(), root.hi()));
            int s = iv.determined_sign();
            if (s != 0) return s;
            if (round == 48) {
                RatPoly g = gcd(u, f_->min_poly_q());
                if (g.degree() >= 1) {
                    auto chain = sturm_chain(g);
                    if (g.eval(root.lo()) == 0 || g.eval(root.hi()) == 0 ||
                        count_roots(chain, root.lo(), root.hi()) > 0)
                        throw ContractViolation(
                            "element vanishes at lambda: minimal polynomial is reducible");
                }
            }
            root.refine_once();
        }
    }

    /// This value as a standalone algebraic real (resultant elimination).
    AlgebraicReal to_algebraic() const {
        if (is_rational()) return AlgebraicReal(rational_value());
        RatPoly u(c_);
        const RatPoly& f = f_->min_poly_q();
        long d = f.degree();
        std::vector<Rat> xs, ys;
        for (long i = 0; i <= d; ++i) {
            Rat x0(i);
            RatPoly q = RatPoly::constant(x0) - u;  // x0 - u(y)
            xs.emplace_back(x0);
            ys.push_back(resultant(f, q));
        }
        IntPoly r = square_free_part(primitive_part(interpolate(xs, ys)));
        RatPoly rr = to_rational(r);
        auto chain = sturm_chain(rr);
        const AlgebraicReal& root = f_->root();
        for (;;) {
            RatInterval iv = u.eval_in(RatInterval(root.lo(), root.hi()));
            if (rr.eval(iv.lo) != 0 && rr.eval(iv.hi) != 0 &&
                count_roots(chain, iv.lo, iv.hi) == 1)
                return AlgebraicReal(r, iv.lo, iv.hi);
            root.refine_once();
        }
    }

    double approx() const {
        const AlgebraicReal& root = f_->root();
        root.refine_below(Rat(1, Int(1) << 80));
        RatInterval iv = RatPoly(c_).eval_in(RatInterval(root.lo(), root.hi()));
        return to_double((iv.lo + iv.hi) / 2);
    }

  private:
    NumberFieldPtr f_;
    std::vector<Rat> c_;
};

}  // namespace hyplat
