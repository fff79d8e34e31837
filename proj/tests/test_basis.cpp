#include "doctest.h"

#include "binsum/basis.hpp"
#include "binsum/parser.hpp"
#include "test_util.hpp"

using namespace binsum;
using namespace binsum::testutil;

namespace {

// Rational functions written as order-0 operator expressions.
RatFun rf(const char* text) {
    OreOp op = parse_rational_operator(text, Var::K);
    if (op.is_zero()) return RatFun();
    REQUIRE(op.order() == 0);
    return op.coeff(0);
}

const BasisSpec kSquare({1, 1}, {Rat(0), Rat(0)});       // C(x,k)^2 family
const BasisSpec kTwoThree({2, 3}, {Rat(0), Rat(0)});     // C(2x,k) C(3x,k)
const BasisSpec kShifted({2, 3}, {Rat(-1), Rat(4)});     // C(2x-1,k) C(3x+4,k)
const BasisSpec kFourFour({4, 4}, {Rat(0), Rat(0)});     // C(4x,k)^2

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("basis_poly basics") {
    CHECK(basis_poly(kSquare, 0) == Poly(Rat(1)));
    CHECK(basis_poly(kTwoThree, 0) == Poly(Rat(1)));
    // P_2 = C(x,1)^2 = x^2
    CHECK(basis_poly(kSquare, 2) == Poly::monomial(2));
    // P_3 = C(2x,2) C(3x,1) = x(2x-1) * 3x = 6x^3 - 3x^2
    CHECK(basis_poly(kTwoThree, 3) == Poly{Rat(0), Rat(0), Rat(-3), Rat(6)});
    auto [q, r] = basis_poly(kTwoThree, 3).divrem(basis_poly(kTwoThree, 2));
    CHECK(r.is_zero());
}

TEST_CASE("factorial basis axioms") {
    for (const BasisSpec& spec : {kSquare, kTwoThree, kShifted, kFourFour}) {
        for (long n = 0; n <= 30; ++n) {
            CHECK(basis_poly(spec, n).degree() == n);
            if (n > 0) {
                auto [q, r] = basis_poly(spec, n).divrem(basis_poly(spec, n - 1));
                CHECK(r.is_zero());
            }
        }
    }
}

TEST_CASE("expand_in_basis") {
    // x^2 = P_2
    auto c = expand_in_basis(kSquare, Poly::monomial(2));
    CHECK(c == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

    // expanding a basis element gives a unit vector
    auto e5 = expand_in_basis(kSquare, basis_poly(kSquare, 5));
    CHECK(e5 == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});

    // x P_2 = 2 P_3 + P_2 (the k = 1 instance of x P_2k = (k+1)P_2k+1 + k P_2k)
    auto xc = expand_in_basis(kSquare, Poly::monomial(1) * basis_poly(kSquare, 2));
    CHECK(xc == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(2)});

    CHECK(expand_in_basis(kSquare, Poly()).empty());

    // round trip on random short coefficient vectors
    for (const BasisSpec& spec : {kSquare, kTwoThree, kShifted}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> coeffs(static_cast<size_t>(rand_int(1, 8)));
            for (auto& x : coeffs) x = rand_rat();
            Poly p;
            for (size_t n = 0; n < coeffs.size(); ++n)
                p += basis_poly(spec, static_cast<long>(n)) * coeffs[n];
            std::vector<Rat> back = expand_in_basis(spec, p);
            back.resize(coeffs.size(), Rat(0));
            CHECK(back == coeffs);
        }
    }
}

TEST_CASE("shift_expansion reproduces Pascal-squared") {
    auto e = shift_expansion(kSquare);
    CHECK(e[0] == std::vector<RatFun>{rf("1"), rf("2"), rf("1")});
    CHECK(e[1] == std::vector<RatFun>{rf("1"), rf("(2*k+1)/(k+1)"), rf("k/(k+1)")});
}

TEST_CASE("shift_expansion for C(2x,k)C(3x,k)") {
    auto e = shift_expansion(kTwoThree);
    CHECK(e[0] == std::vector<RatFun>{rf("1"), rf("6"), rf("3*(7*k-3)/(2*k)"),
                                      rf("(131*k-64)/(12*k)"),
                                      rf("(211*k^2-374*k+120)/(36*(k-1)*k)"),
                                      rf("2*(2*k-3)/(9*(k-1))"), rf("0")});
    CHECK(e[1] == std::vector<RatFun>{rf("1"), rf("2*(2*k+1)/(k+1)"), rf("(17*k+7)/(2*(k+1))"),
                                      rf("(131*k^2-6*k-17)/(18*k*(k+1))"),
                                      rf("2*(10*k^2-6*k-1)/(9*k*(k+1))"),
                                      rf("4*(k-2)*(2*k-3)/(27*(k-1)*(k+1))"),
                                      rf("-2*k*(2*k-3)/(27*(k-1)*(k+1))")});
}

TEST_CASE("shift_expansion for C(2x-1,k)C(3x+4,k)") {
    auto e = shift_expansion(kShifted);
    CHECK(e[0] == std::vector<RatFun>{rf("1"), rf("6"), rf("(21*k+13)/(2*k)"),
                                      rf("(131*k-97)/(12*k)"),
                                      rf("(211*k^2+330*k+791)/(36*(k-1)*k)"),
                                      rf("2*(k-7)*(2*k-11)/(9*(k-1)*k)"), rf("0")});
    CHECK(e[1] == std::vector<RatFun>{rf("1"), rf("2*(2*k+1)/(k+1)"), rf("(17*k-15)/(2*(k+1))"),
                                      rf("(131*k^2-39*k+214)/(18*k*(k+1))"),
                                      rf("4*(5*k^2-47*k+104)/(9*k*(k+1))"),
                                      rf("4*(k-7)*(k-2)*(2*k-11)/(27*(k-1)*k*(k+1))"),
                                      rf("-2*(k-7)*(k+11)*(2*k-11)/(27*(k-1)*k*(k+1))")});
}

TEST_CASE("shift_expansion for C(4x,k)^2") {
    auto e = shift_expansion(kFourFour);
    CHECK(e[0] == std::vector<RatFun>{rf("1"), rf("8"), rf("4*(7*k-3)/k"), rf("28*(2*k-1)/k"),
                                      rf("2*(35*k^2-63*k+22)/((k-1)*k)"),
                                      rf("8*(7*k^2-14*k+5)/((k-1)*k)"),
                                      rf("4*(7*k^3-28*k^2+32*k-9)/((k-2)*(k-1)*k)"),
                                      rf("4*(2*k-3)*(k^2-3*k+1)/((k-2)*(k-1)*k)"), rf("1")});
    CHECK(e[1] == std::vector<RatFun>{rf("1"), rf("4*(2*k+1)/(k+1)"), rf("4*(7*k+3)/(k+1)"),
                                      rf("8*(7*k^2-1)/(k*(k+1))"),
                                      rf("2*(35*k^2-7*k-6)/(k*(k+1))"),
                                      rf("4*(2*k-1)*(7*k^2-7*k-2)/((k-1)*k*(k+1))"),
                                      rf("4*(7*k^3-14*k^2+4*k+1)/((k-1)*k*(k+1))"),
                                      rf("8*(k-1)/(k+1)"), rf("(k-3)/(k+1)")});
}

TEST_CASE("m = 1 shift expansion is the Chu-Vandermonde row") {
    for (long a = 1; a <= 4; ++a) {
        for (const Rat& b : {Rat(0), Rat(-1), Rat(1, 2)}) {
            BasisSpec spec({a}, {b});
            auto e = shift_expansion(spec);
            REQUIRE(e[0].size() == static_cast<size_t>(a) + 1);
            for (long i = 0; i <= a; ++i)
                CHECK(e[0][static_cast<size_t>(i)] == RatFun(binomial(Rat(a), i)));
        }
    }
}

TEST_CASE("leading alpha is 1 for every j") {
    for (const BasisSpec& spec : {kSquare, kTwoThree, kShifted, kFourFour}) {
        auto e = shift_expansion(spec);
        for (int j = 0; j < spec.m(); ++j) CHECK(e[j][0].is_one());
    }
}

TEST_CASE("x_expansion closed forms") {
    auto x1 = x_expansion(kSquare);
    CHECK(x1[0][0] == rf("k"));
    CHECK(x1[0][1] == rf("k+1"));
    auto x2 = x_expansion(kTwoThree);
    CHECK(x2[0][0] == rf("k/2"));
    CHECK(x2[0][1] == rf("(k+1)/2"));
    auto x3 = x_expansion(kShifted);
    CHECK(x3[1][0] == rf("(k-4)/3"));
    CHECK(x3[1][1] == rf("(k+1)/3"));
}

TEST_CASE("expansion identity instantiates exactly") {
    for (const BasisSpec& spec : {kSquare, kTwoThree, kShifted}) {
        auto e = shift_expansion(spec);
        long band = spec.shift_band();
        for (long k0 = band; k0 <= band + 3; ++k0)
            for (int j = 0; j < spec.m(); ++j) CHECK(check_expansion_identity(spec, e, k0, j));
    }
}

TEST_CASE("check_compatibility") {
    CHECK(check_compatibility(kSquare, 12).all_pass());
    CHECK(check_compatibility(kShifted, 12).all_pass());

    // negative control: a perturbed table must fail the identity check
    auto e = shift_expansion(kSquare);
    e[1][2] += RatFun(Rat(1));
    CHECK_FALSE(check_expansion_identity(kSquare, e, 4, 1));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(BasisSpec({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(BasisSpec({1, 2}, {Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(BasisSpec({0}, {Rat(0)}), std::invalid_argument);
}

}  // TEST_SUITE
