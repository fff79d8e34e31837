#include "binsum/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "binsum/linsolve.hpp"

namespace binsum {

BasisSpec::BasisSpec(std::vector<long> a_, std::vector<Rat> b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("BasisSpec: a and b must be nonempty and of equal length");
    for (long ai : a)
        if (ai < 1) throw std::invalid_argument("BasisSpec: every a_i must be >= 1");
}

long BasisSpec::max_a() const { return *std::max_element(a.begin(), a.end()); }

namespace {

// C(ax+b, e) as a Poly in x: prod_{s=0}^{e-1} (ax+b-s) / e!.
Poly binom_factor(long a, const Rat& b, long e) {
    Poly p(Rat(1));
    for (long s = 0; s < e; ++s) p *= Poly{b - Rat(s), Rat(a)};
    return p / factorial(e);
}

}  // namespace

Poly basis_poly(const BasisSpec& spec, long n) {
    if (n < 0) throw std::invalid_argument("basis_poly: n must be >= 0");
    const int m = spec.m();
    long k = n / m;
    int j = static_cast<int>(n % m);
    Poly p(Rat(1));
    for (int t = 1; t <= m; ++t)
        p *= binom_factor(spec.a[t - 1], spec.b[t - 1], k + (t <= j ? 1 : 0));
    return p;
}

std::vector<Rat> expand_in_basis(const BasisSpec& spec, const Poly& p) {
    std::vector<Rat> c(static_cast<size_t>(p.degree() + 1));
    Poly work = p;
    for (long n = p.degree(); n >= 0; --n) {
        if (work.degree() < n) continue;
        Poly pn = basis_poly(spec, n);
        Rat cn = work.leading() / pn.leading();
        c[static_cast<size_t>(n)] = cn;
        work -= pn * cn;
    }
    return c;
}

namespace {

// Accumulates a product of linear factors (a*x + b - (k + off)) over Q(k),
// each divided by the scalar (k + off + 1); used to assemble basis-element
// ratios without ever expanding a k-dependent number of factors.
struct RatioBuilder {
    KPoly poly{RatFun(1)};
    RatFun scalar{1};

    // *= (a*x + b - k - off) / (k + off + 1)
    void telescoped_factor(long a, const Rat& b, long off) {
        RatFun c0 = RatFun(Poly{b - Rat(off), Rat(-1)});  // (b - off) - k
        poly *= KPoly{c0, RatFun(Rat(a))};
        scalar /= ratfun_linear(Rat(off + 1));
    }

    // *= (a*x + c) with a constant c (no k).
    void plain_factor(long a, const Rat& c) { poly *= KPoly{RatFun(c), RatFun(Rat(a))}; }

    KPoly result() const { return poly * scalar; }
};

// P_{mk+j-i}(x) / P_{m(k-A)+j}(x) as a polynomial of degree mA - i in x over
// Q(k), for 0 <= i <= mA.
KPoly ratio_poly(const BasisSpec& spec, int j, int i) {
    const int m = spec.m();
    const long A = spec.max_a();
    int jp = ((j - i) % m + m) % m;
    long dk = (j - i - jp) / m;  // k' = k + dk
    RatioBuilder rb;
    for (int t = 1; t <= m; ++t) {
        long hi_off = dk + (t <= jp ? 1 : 0);
        long lo_off = -A + (t <= j ? 1 : 0);
        for (long off = lo_off; off < hi_off; ++off)
            rb.telescoped_factor(spec.a[t - 1], spec.b[t - 1], off);
    }
    return rb.result();
}

// P_{mk+j}(x+1) / P_{m(k-A)+j}(x), degree mA in x over Q(k). Per factor t,
// rewriting a(x+1)+b-s = ax+b-(s-a) splits the quotient into a constant head
// prod_{u=1}^{a} (ax+b+u), the scalar a!/prod_{u=1}^{a}(K_lo+u) left by the
// cancelled middle range, and a telescoped tail of A-a factors.
KPoly shifted_ratio_poly(const BasisSpec& spec, int j) {
    const int m = spec.m();
    const long A = spec.max_a();
    RatioBuilder rb;
    for (int t = 1; t <= m; ++t) {
        const long a = spec.a[t - 1];
        const Rat& b = spec.b[t - 1];
        long hi_off = (t <= j ? 1 : 0);   // K_hi = k + hi_off
        long lo_off = hi_off - A;         // K_lo = k + lo_off
        // The head factors carry 1/a! which cancels against the a! left by the
        // cancelled middle range, leaving only the (K_lo+u) scalars.
        for (long u = 1; u <= a; ++u) rb.plain_factor(a, b + Rat(u));
        for (long u = 1; u <= a; ++u) rb.scalar /= ratfun_linear(Rat(lo_off + u));
        for (long off = lo_off; off < hi_off - a; ++off) {
            rb.telescoped_factor(a, b, off);
            // telescoped_factor divides by (k+off+1); the tail's scalar is
            // (k+off+a+1), so adjust.
            rb.scalar *= ratfun_linear(Rat(off + 1));
            rb.scalar /= ratfun_linear(Rat(off + a + 1));
        }
    }
    return rb.result();
}

}  // namespace

std::vector<std::vector<RatFun>> shift_expansion(const BasisSpec& spec) {
    const int band = spec.shift_band();
    std::vector<std::vector<RatFun>> table;
    table.reserve(static_cast<size_t>(spec.m()));
    for (int j = 0; j < spec.m(); ++j) {
        KPoly lhs = shifted_ratio_poly(spec, j);
        std::vector<KPoly> ratios;
        ratios.reserve(static_cast<size_t>(band) + 1);
        for (int i = 0; i <= band; ++i) ratios.push_back(ratio_poly(spec, j, i));

        RatFunMatrix mat(static_cast<size_t>(band) + 1,
                         std::vector<RatFun>(static_cast<size_t>(band) + 1));
        std::vector<RatFun> rhs(static_cast<size_t>(band) + 1);
        for (int p = 0; p <= band; ++p) {
            for (int i = 0; i <= band; ++i) mat[p][i] = ratios[static_cast<size_t>(i)].coeff(p);
            rhs[static_cast<size_t>(p)] = lhs.coeff(p);
        }
        table.push_back(solve_linear_system(std::move(mat), std::move(rhs)));
    }
    return table;
}

std::vector<std::array<RatFun, 2>> x_expansion(const BasisSpec& spec) {
    std::vector<std::array<RatFun, 2>> table;
    table.reserve(static_cast<size_t>(spec.m()));
    RatFun k = ratfun_var();
    for (int j = 0; j < spec.m(); ++j) {
        RatFun a(Rat(spec.a[static_cast<size_t>(j)]));
        RatFun b(spec.b[static_cast<size_t>(j)]);
        table.push_back({(k - b) / a, (k + RatFun(1)) / a});
    }
    return table;
}

ExpansionTable expansion_table(const BasisSpec& spec) {
    return ExpansionTable{spec, shift_expansion(spec), x_expansion(spec)};
}

CompatReport check_compatibility(const BasisSpec& spec, long kmax) {
    const int band = spec.shift_band();
    if (kmax < band)
        throw std::invalid_argument("check_compatibility: kmax must be >= m*A");
    CompatReport report;
    for (long n = band; n <= kmax; ++n) {
        Poly shifted = basis_poly(spec, n).shifted(Rat(1));
        bool deg_ok = shifted.degree() == n;
        auto [q, r] = shifted.divrem(basis_poly(spec, n - band));
        (void)q;
        report.checks.push_back({n, deg_ok, r.is_zero()});
    }
    return report;
}

bool check_expansion_identity(const BasisSpec& spec, const std::vector<std::vector<RatFun>>& e,
                              long k0, int j) {
    const int band = spec.shift_band();
    const int m = spec.m();
    Poly lhs = basis_poly(spec, m * k0 + j).shifted(Rat(1));
    Poly rhs;
    Rat at(k0);
    for (int i = 0; i <= band; ++i) {
        const RatFun& alpha = e[static_cast<size_t>(j)][static_cast<size_t>(i)];
        long n = m * k0 + j - i;
        if (n < 0) {
            if (!alpha(at).is_zero()) return false;
            continue;
        }
        rhs += basis_poly(spec, n) * alpha(at);
    }
    return lhs == rhs;
}

}  // namespace binsum
