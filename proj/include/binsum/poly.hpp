#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binsum/rat.hpp"

namespace binsum {

/// Dense univariate polynomial over a field F (F = Rat gives Q[v]; F = RatFun
/// gives Q(k)[x], which the basis expansion works in). Coefficients are stored
/// by ascending degree with trailing zeros trimmed; the zero polynomial is the
/// empty list and has degree -1.
///
/// F must provide: default construction (= 0), construction from long,
/// +, -, *, /, unary -, ==, and is_zero().
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(F constant) { c_.push_back(std::move(constant)); trim(); }
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(int deg, F coeff = F(1)) {
        if (deg < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
        std::vector<F> c(static_cast<size_t>(deg) + 1);
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }
    /// The identity polynomial v.
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of v^i (zero beyond the stored range).
    const F& coeff(int i) const {
        static const F zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }
    const F& leading() const {
        if (is_zero()) throw std::domain_error("Polynomial: zero has no leading coefficient");
        return c_.back();
    }
    const std::vector<F>& coeffs() const { return c_; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<F> r(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const F& s) const {
        if (s.is_zero()) return {};
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Polynomial(std::move(r));
    }
    Polynomial operator/(const F& s) const {
        if (s.is_zero()) throw std::domain_error("Polynomial: division by zero scalar");
        std::vector<F> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / s;
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    /// Quotient and remainder with deg rem < deg divisor.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        Polynomial q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            F t = r.leading() / d.leading();
            int e = r.degree() - d.degree();
            Polynomial step = monomial(e, t);
            q += step;
            r -= step * d;
        }
        return {q, r};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this / leading();
    }

    /// Horner evaluation at a point of F itself.
    F operator()(const F& at) const {
        F acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    /// Horner evaluation into any ring G constructible from F (e.g. a Q[v]
    /// polynomial evaluated at a rational function, or at an operator matrix
    /// on the caller's side).
    template <class G>
    G eval_as(const G& at) const {
        G acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * at + G(c_[i]);
        return acc;
    }

    /// p(v + offset).
    Polynomial shifted(const F& offset) const {
        Polynomial lin{offset, F(1)};
        Polynomial acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Polynomial(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
Polynomial<F> operator*(const F& s, const Polynomial<F>& p) { return p * s; }

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth down
    }
    return a.monic();
}

using Poly = Polynomial<Rat>;

/// Over Q the rational Euclid suffers severe coefficient blowup; this
/// specialization runs a primitive pseudo-remainder sequence on integer
/// polynomials instead.
template <>
Poly gcd<Rat>(Poly a, Poly b);

/// Clears denominators and convolves in raw integers; one canonicalization
/// per output coefficient instead of one per multiply-add.
template <>
Poly Poly::operator*(const Poly& o) const;

/// Common-denominator addition in raw integers.
template <>
Poly Poly::operator+(const Poly& o) const;

}  // namespace binsum
