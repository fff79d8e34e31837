#include "binsum/poly.hpp"

#include <vector>

namespace binsum {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, trailing zeros trimmed

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators and removes content; the rational prefactor is dropped
// (gcds are only defined up to units anyway).
ZPoly primitive_parts(const Poly& p) {
    mpz_class den_lcm(1);
    for (const Rat& c : p.coeffs()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) z.push_back(c.num() * (den_lcm / c.den()));
    mpz_class content(0);
    for (const mpz_class& c : z) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        content = g;
    }
    if (content > 1)
        for (mpz_class& c : z) c /= content;
    return z;
}

void make_primitive(ZPoly& p) {
    mpz_class content(0);
    for (const mpz_class& c : p) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        content = g;
    }
    if (content > 1)
        for (mpz_class& c : p) c /= content;
}

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b,
// computed with exact integer arithmetic.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const size_t shift = a.size() - b.size();
        mpz_class top = a.back();
        for (mpz_class& c : a) c *= lb;
        for (size_t i = 0; i < db; ++i) a[i + shift] -= top * b[i];
        a[db + shift] = 0;
        trim(a);
    }
    return a;
}

}  // namespace

namespace {

mpz_class den_lcm_of(const std::vector<Rat>& coeffs) {
    mpz_class l(1);
    for (const Rat& c : coeffs) {
        mpz_class t;
        mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        l = t;
    }
    return l;
}

ZPoly scaled_to_integer(const std::vector<Rat>& coeffs, const mpz_class& den) {
    ZPoly z;
    z.reserve(coeffs.size());
    for (const Rat& c : coeffs) z.push_back(c.num() * (den / c.den()));
    return z;
}

}  // namespace

template <>
Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    mpz_class d1 = den_lcm_of(coeffs()), d2 = den_lcm_of(o.coeffs());
    ZPoly z1 = scaled_to_integer(coeffs(), d1), z2 = scaled_to_integer(o.coeffs(), d2);
    ZPoly r(z1.size() + z2.size() - 1);
    for (size_t i = 0; i < z1.size(); ++i) {
        if (z1[i] == 0) continue;
        for (size_t j = 0; j < z2.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), z1[i].get_mpz_t(), z2[j].get_mpz_t());
    }
    mpz_class den = d1 * d2;
    std::vector<Rat> out;
    out.reserve(r.size());
    for (const mpz_class& c : r) out.emplace_back(c, den);
    return Poly(std::move(out));
}

template <>
Poly Poly::operator+(const Poly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    mpz_class d1 = den_lcm_of(coeffs()), d2 = den_lcm_of(o.coeffs());
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
    ZPoly z1 = scaled_to_integer(coeffs(), den), z2 = scaled_to_integer(o.coeffs(), den);
    if (z1.size() < z2.size()) std::swap(z1, z2);
    for (size_t i = 0; i < z2.size(); ++i) z1[i] += z2[i];
    std::vector<Rat> out;
    out.reserve(z1.size());
    for (const mpz_class& c : z1) out.emplace_back(c, den);
    return Poly(std::move(out));
}

template <>
Poly gcd<Rat>(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly za = primitive_parts(a), zb = primitive_parts(b);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        ZPoly r = pseudo_rem(za, zb);
        make_primitive(r);
        za = std::move(zb);
        zb = std::move(r);
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(za.size());
    for (const mpz_class& c : za) coeffs.emplace_back(c, za.back());
    return Poly(std::move(coeffs));
}

}  // namespace binsum
