#pragma once

#include <map>
#include <span>
#include <vector>

#include "binsum/ratfun.hpp"
#include "binsum/sequence.hpp"

namespace binsum {

/// Name of the recurrence variable an operator acts in.
enum class Var : char { N = 'n', K = 'k' };

inline char var_symbol(Var v) { return static_cast<char>(v); }

/// Laurent skew polynomial sum_i a_i(v) E^i over Q(v) with the commutation
/// rule E a(v) = a(v+1) E. Exponents may be negative (the multiplication
/// images genuinely contain E^-1); only right division and gcrd insist on
/// low >= 0. Terms map exponents to nonzero coefficients; the zero operator
/// has an empty map.
class OreOp {
public:
    explicit OreOp(Var v = Var::N) : var_(v) {}

    static OreOp zero(Var v) { return OreOp(v); }
    static OreOp one(Var v) { return term(v, 0, RatFun(1)); }
    /// c(v) E^exp, dropped entirely when c = 0.
    static OreOp term(Var v, int exp, RatFun coeff) {
        OreOp op(v);
        if (!coeff.is_zero()) op.terms_[exp] = std::move(coeff);
        return op;
    }
    /// The multiply-by-v operator (order zero).
    static OreOp variable(Var v) { return term(v, 0, ratfun_var()); }

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_constant();
    }

    int order() const {
        require_nonzero("order");
        return terms_.rbegin()->first;
    }
    int low() const {
        require_nonzero("low");
        return terms_.begin()->first;
    }

    const RatFun& coeff(int i) const {
        static const RatFun zero{};
        auto it = terms_.find(i);
        return it == terms_.end() ? zero : it->second;
    }
    const RatFun& leading() const {
        require_nonzero("leading");
        return terms_.rbegin()->second;
    }
    const std::map<int, RatFun>& terms() const { return terms_; }

    /// True when every coefficient is a polynomial (denominator 1).
    bool has_polynomial_coeffs() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_polynomial()) return false;
        return true;
    }

    OreOp operator-() const;
    OreOp operator+(const OreOp& o) const;
    OreOp operator-(const OreOp& o) const;
    /// Noncommutative product; E^i a(v) = a(v+i) E^i applies inside.
    OreOp operator*(const OreOp& o) const;
    OreOp& operator+=(const OreOp& o) { *this = *this + o; return *this; }
    OreOp& operator-=(const OreOp& o) { *this = *this - o; return *this; }
    OreOp& operator*=(const OreOp& o) { *this = *this * o; return *this; }

    /// Scalar scaling (left multiplication by an order-0 function).
    OreOp scaled(const RatFun& s) const;

    OreOp pow(unsigned e) const;

    bool operator==(const OreOp& o) const { return var_ == o.var_ && terms_ == o.terms_; }
    bool operator!=(const OreOp& o) const { return !(*this == o); }

    /// Divides through by the leading coefficient.
    OreOp monic() const {
        if (is_zero()) return *this;
        return scaled(RatFun(1) / leading());
    }

private:
    void require_nonzero(const char* what) const {
        if (is_zero()) throw std::domain_error(std::string("OreOp: ") + what + " of the zero operator");
    }
    void check_same_var(const OreOp& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument(std::string("OreOp: variable mismatch (") + var_symbol(var_) +
                                        " vs " + var_symbol(o.var_) + ")");
    }

    Var var_;
    std::map<int, RatFun> terms_;
};

inline OreOp operator*(const RatFun& s, const OreOp& op) { return op.scaled(s); }

/// sum_i a_i(at) c_{at+i}, reading c below index 0 as 0. Throws PoleError if
/// some a_i has a pole at the evaluation point.
Rat apply(const OreOp& op, const Sequence& c, long at);

/// E^s A with s = max(0, -low A), so the result has low >= 0.
OreOp clear_negative(const OreOp& op);

/// Right division A = Q B + R with order R < order B. Requires low >= 0 on
/// both operands and B nonzero.
std::pair<OreOp, OreOp> rdivrem(const OreOp& a, const OreOp& b);

/// Monic greatest common right divisor. Zero inputs are skipped (all zero
/// gives the zero operator); inputs with negative low are cleared with
/// clear_negative first; folding stops early on reaching order 0 (unit).
OreOp gcrd(std::span<const OreOp> ops);
OreOp gcrd(const OreOp& a, const OreOp& b);

/// Clears coefficient denominators and removes rational content: the unique
/// positive-leading integer-primitive polynomial-coefficient multiple.
OreOp cleared_primitive(const OreOp& op);

}  // namespace binsum
