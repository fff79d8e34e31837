#pragma once

#include <utility>

#include "binsum/errors.hpp"
#include "binsum/poly.hpp"
#include "binsum/rat.hpp"

namespace binsum {

/// Reduced rational function num/den over Q in one variable. Canonical form:
/// den monic and nonzero, gcd(num, den) = 1, zero is 0/1. Because the form is
/// unique, operator== is plain representational equality.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(int n) : num_(Rat(n)), den_(Rat(1)) {}
    RatFun(long n) : num_(Rat(n)), den_(Rat(1)) {}
    RatFun(Rat r) : num_(std::move(r)), den_(Rat(1)) {}
    RatFun(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0).is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rat constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFun: not a constant");
        return num_.coeff(0);
    }

    RatFun operator-() const { return raw(-num_, den_); }
    // Classical reduced-fraction addition: with d = gcd(d1, d2) and
    // t = n1 (d2/d) + n2 (d1/d), only gcd(t, d) can still cancel.
    RatFun operator+(const RatFun& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        Poly d = gcd(den_, o.den_);
        if (d.degree() <= 0)
            return raw_monic(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
        Poly e1 = den_.divrem(d).first, e2 = o.den_.divrem(d).first;
        Poly t = num_ * e2 + o.num_ * e1;
        if (t.is_zero()) return {};
        Poly g = gcd(t, d);
        if (g.degree() > 0) {
            t = t.divrem(g).first;
            d = d.divrem(g).first;
        }
        return raw_monic(std::move(t), d * e1 * e2);
    }
    RatFun operator-(const RatFun& o) const { return *this + (-o); }
    // Cross-reduction leaves nothing to cancel in the product.
    RatFun operator*(const RatFun& o) const {
        if (is_zero() || o.is_zero()) return {};
        Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
        Poly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
        if (g1.degree() > 0) {
            n1 = num_.divrem(g1).first;
            d2 = o.den_.divrem(g1).first;
        }
        if (g2.degree() > 0) {
            n2 = o.num_.divrem(g2).first;
            d1 = den_.divrem(g2).first;
        }
        return raw_monic(n1 * n2, d1 * d2);
    }
    RatFun operator/(const RatFun& o) const {
        if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
        return *this * raw_monic(o.den_, o.num_);
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Substitution v -> v + j. Preserves canonical form, so no re-reduction.
    RatFun shifted(long j) const {
        if (j == 0) return *this;
        return raw(num_.shifted(Rat(j)), den_.shifted(Rat(j)));
    }

    bool has_pole_at(const Rat& at) const { return den_(at).is_zero(); }

    Rat operator()(const Rat& at) const {
        Rat d = den_(at);
        if (d.is_zero())
            throw PoleError("RatFun: pole at v = " + at.str());
        return num_(at) / d;
    }

    /// deg num + deg den; used as a pivot-size measure.
    int complexity() const { return (is_zero() ? 0 : num_.degree()) + den_.degree(); }

private:
    static RatFun raw(Poly num, Poly den) {
        RatFun f;
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        return f;
    }

    // Already-reduced pair; only restores the monic-denominator normal form.
    static RatFun raw_monic(Poly num, Poly den) {
        if (num.is_zero()) return {};
        const Rat& lc = den.leading();
        if (!lc.is_one()) {
            num = num / lc;
            den = den / lc;
        }
        return raw(std::move(num), std::move(den));
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        Rat lc = den_.leading();
        if (!lc.is_one()) {
            num_ = num_ / lc;
            den_ = den_ / lc;
        }
    }

    Poly num_, den_;
};

/// Polynomials in x whose coefficients live in Q(k); the basis-expansion
/// systems are assembled and solved over this ring.
using KPoly = Polynomial<RatFun>;

/// The rational function v (handy when building coefficients like k + c).
inline RatFun ratfun_var() { return RatFun(Poly::variable()); }

/// v + c as a rational function.
inline RatFun ratfun_linear(const Rat& c) { return RatFun(Poly{c, Rat(1)}); }

}  // namespace binsum
