#include "binsum/ore.hpp"

#include <numeric>

#include "binsum/errors.hpp"

namespace binsum {

OreOp OreOp::operator-() const {
    OreOp r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

OreOp OreOp::operator+(const OreOp& o) const {
    check_same_var(o);
    OreOp r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

OreOp OreOp::operator-(const OreOp& o) const { return *this + (-o); }

OreOp OreOp::operator*(const OreOp& o) const {
    check_same_var(o);
    OreOp r(var_);
    for (const auto& [i, a] : terms_) {
        for (const auto& [j, b] : o.terms_) {
            // a E^i * b E^j = a * b(v+i) E^{i+j}
            RatFun c = a * b.shifted(i);
            if (c.is_zero()) continue;
            auto it = r.terms_.find(i + j);
            if (it == r.terms_.end()) {
                r.terms_[i + j] = std::move(c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

OreOp OreOp::scaled(const RatFun& s) const {
    OreOp r(var_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = s * c;
    return r;
}

OreOp OreOp::pow(unsigned e) const {
    // A commutes with itself, so square-and-multiply is sound even though
    // the algebra is noncommutative.
    OreOp acc = OreOp::one(var_);
    OreOp base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Rat apply(const OreOp& op, const Sequence& c, long at) {
    Rat acc(0);
    Rat point(at);
    for (const auto& [i, a] : op.terms()) {
        if (a.has_pole_at(point))
            throw PoleError("apply: coefficient of E^" + std::to_string(i) + " has a pole at " +
                            std::string(1, var_symbol(op.var())) + " = " + point.str());
        acc += a(point) * c.at(at + i);
    }
    return acc;
}

OreOp clear_negative(const OreOp& op) {
    if (op.is_zero() || op.low() >= 0) return op;
    return OreOp::term(op.var(), -op.low(), RatFun(1)) * op;
}

std::pair<OreOp, OreOp> rdivrem(const OreOp& a, const OreOp& b) {
    if (b.is_zero()) throw std::domain_error("rdivrem: zero divisor");
    if ((!a.is_zero() && a.low() < 0) || b.low() < 0)
        throw std::invalid_argument("rdivrem: operands must have low >= 0");
    OreOp q(a.var()), r = a;
    while (!r.is_zero() && r.order() >= b.order()) {
        int e = r.order() - b.order();
        OreOp step = OreOp::term(a.var(), e, r.leading() / b.leading().shifted(e));
        q += step;
        r -= step * b;
    }
    return {q, r};
}

OreOp gcrd(const OreOp& a, const OreOp& b) {
    OreOp g = clear_negative(a), h = clear_negative(b);
    if (g.is_zero()) return h.monic();
    if (h.is_zero()) return g.monic();
    while (!h.is_zero()) {
        auto [q, r] = rdivrem(g, h);
        (void)q;
        g = std::move(h);
        h = r.monic();
    }
    return g.monic();
}

OreOp gcrd(std::span<const OreOp> ops) {
    if (ops.empty()) throw std::invalid_argument("gcrd: empty input list");
    OreOp g = OreOp::zero(ops.front().var());
    for (const OreOp& op : ops) {
        if (op.is_zero()) continue;
        g = g.is_zero() ? clear_negative(op).monic() : gcrd(g, op);
        if (!g.is_zero() && g.order() == 0) return OreOp::one(g.var());
    }
    return g;
}

OreOp cleared_primitive(const OreOp& op) {
    if (op.is_zero()) return op;
    // lcm of all coefficient denominators (each monic, so the lcm is monic).
    Poly den_lcm(Rat(1));
    for (const auto& [e, c] : op.terms()) {
        Poly g = gcd(den_lcm, c.den());
        den_lcm = den_lcm * c.den().divrem(g).first;
    }
    OreOp cleared = op.scaled(RatFun(den_lcm));
    // Rational content: gcd of numerators over lcm of denominators of every
    // polynomial coefficient, signed by the leading term.
    mpz_class num_gcd(0), den_lcm_z(1);
    for (const auto& [e, c] : cleared.terms()) {
        for (const Rat& r : c.num().coeffs()) {
            if (r.is_zero()) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), r.num().get_mpz_t());
            num_gcd = g;
            mpz_lcm(l.get_mpz_t(), den_lcm_z.get_mpz_t(), r.den().get_mpz_t());
            den_lcm_z = l;
        }
    }
    Rat content(num_gcd, den_lcm_z);
    if (cleared.leading().num().leading().sign() < 0) content = -content;
    return cleared.scaled(RatFun(Rat(1) / content));
}

}  // namespace binsum
