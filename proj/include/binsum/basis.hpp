#pragma once

#include <array>
#include <string>
#include <vector>

#include "binsum/poly.hpp"
#include "binsum/ratfun.hpp"

namespace binsum {

/// A product binomial-coefficient basis: m factors C(a_i x + b_i, .) with
/// a_i >= 1 and rational b_i. The basis elements are
///   P_{mk+j}(x) = prod_{i<=j} C(a_i x + b_i, k+1) * prod_{i>j} C(a_i x + b_i, k).
struct BasisSpec {
    std::vector<long> a;
    std::vector<Rat> b;

    BasisSpec(std::vector<long> a_, std::vector<Rat> b_);

    int m() const { return static_cast<int>(a.size()); }
    /// max_i a_i; the basis is (m*A, 0)-compatible with the shift.
    long max_a() const;
    /// m*A, the width of the E-expansion.
    int shift_band() const { return m() * static_cast<int>(max_a()); }

    bool operator==(const BasisSpec& o) const { return a == o.a && b == o.b; }
};

/// The compatibility coefficients of E and X on a basis. e[j][i] is the
/// coefficient of P_{mk+j-i}(x) in P_{mk+j}(x+1), for i = 0..mA (entries
/// beyond the true support are explicit zeros, and e[j][0] = 1). x[j] holds
/// {(k - b_{j+1})/a_{j+1}, (k+1)/a_{j+1}}: the coefficients of P_{mk+j} and
/// P_{mk+j+1} in x*P_{mk+j}(x).
struct ExpansionTable {
    BasisSpec spec;
    std::vector<std::vector<RatFun>> e;
    std::vector<std::array<RatFun, 2>> x;
};

/// The n-th basis polynomial, expanded (degree n, exact).
Poly basis_poly(const BasisSpec& spec, long n);

/// Coefficients c_0..c_{deg p} with p = sum c_n P_n, by repeated leading-term
/// elimination. Empty for p = 0.
std::vector<Rat> expand_in_basis(const BasisSpec& spec, const Poly& p);

/// E-compatibility coefficients alpha_{k,j,i} in Q(k), computed by equating
/// powers of x in P_{mk+j}(x+1)/P_{m(k-A)+j}(x) = sum_i alpha_i *
/// P_{mk+j-i}(x)/P_{m(k-A)+j}(x), where each ratio is assembled as a product
/// of linear factors via C(c,k+d)/C(c,k+g) = prod_{s=k+g}^{k+d-1} (c-s)/(s+1)
/// and the index shift a(x+1)+b-t = ax+b-(t-a).
std::vector<std::vector<RatFun>> shift_expansion(const BasisSpec& spec);

/// X-compatibility coefficients (closed form, no solve).
std::vector<std::array<RatFun, 2>> x_expansion(const BasisSpec& spec);

/// Both tables.
ExpansionTable expansion_table(const BasisSpec& spec);

struct CompatCheck {
    long n;
    bool degree_ok;
    bool divisibility_ok;
    bool pass() const { return degree_ok && divisibility_ok; }
};

struct CompatReport {
    std::vector<CompatCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

/// Verifies deg P_n(x+1) = n and P_{n-mA} | P_n(x+1) for n = mA..kmax with
/// exact polynomial arithmetic.
CompatReport check_compatibility(const BasisSpec& spec, long kmax);

/// Instantiates the E-table at k = k0 and checks the expansion identity
/// P_{m k0 + j}(x+1) = sum_i alpha_{k0,j,i} P_{m k0 + j - i}(x) as an exact
/// Poly equality. Requires k0 >= mA (below that the table entries may have
/// poles).
bool check_expansion_identity(const BasisSpec& spec, const std::vector<std::vector<RatFun>>& e,
                              long k0, int j);

}  // namespace binsum
