#include "doctest.h"

#include <span>

#include "binsum/errors.hpp"
#include "binsum/ore.hpp"
#include "binsum/parser.hpp"
#include "binsum/printer.hpp"
#include "test_util.hpp"

using namespace binsum;
using namespace binsum::testutil;

namespace {

OreOp op_n(const char* text) { return parse_rational_operator(text, Var::N); }
OreOp op_k(const char* text) { return parse_rational_operator(text, Var::K); }

Sequence ones(long len) {
    return Sequence::generate(len, [](long) { return Rat(1); });
}

// Fibonacci F_0 = 0, F_1 = 1, ...
Sequence fibonacci(long len) {
    Sequence f;
    for (long i = 0; i < len; ++i)
        f.push_back(i < 2 ? Rat(i) : f.at(i - 1) + f.at(i - 2));
    return f;
}

}  // namespace

TEST_SUITE("ore") {

TEST_CASE("additive structure") {
    CHECK(op_n("E + 1") + op_n("-1") == op_n("E"));
    OreOp a = rand_ore(Var::N, 3, 2, -2);
    CHECK((a + (-a)).is_zero());
    CHECK(op_n("E - 1").scaled(RatFun(Poly{Rat(1), Rat(1)})) == op_n("(n+1)*E - (n+1)"));
    CHECK_THROWS_AS(OreOp::one(Var::N) + OreOp::one(Var::K), std::invalid_argument);
}

TEST_CASE("multiplication commutes E past coefficients") {
    // E * n = (n+1) E
    CHECK(op_n("E") * op_n("n") == op_n("(n+1)*E"));
    // (E-1)(E+1) = E^2 - 1 over constants
    CHECK(op_n("E - 1") * op_n("E + 1") == op_n("E^2 - 1"));
    // order adds when leading coefficients do not cancel
    for (int trial = 0; trial < 20; ++trial) {
        OreOp a = rand_ore(Var::K, 2, 2), b = rand_ore(Var::K, 2, 2);
        CHECK((a * b).order() == a.order() + b.order());
    }
}

TEST_CASE("apply") {
    CHECK(apply(op_n("E + 1"), ones(10), 5) == Rat(2));
    CHECK(apply(OreOp::zero(Var::N), ones(3), 1) == Rat(0));

    // h_k = (-1)^k F_k is annihilated by E^2 + E - 1
    Sequence f = fibonacci(20);
    Sequence h = Sequence::generate(18, [&](long i) { return (i % 2 ? -f.at(i) : f.at(i)); });
    OreOp lp = op_n("E^2 + E - 1");
    for (long n = 0; n <= 15; ++n) CHECK(apply(lp, h, n) == Rat(0));

    CHECK_THROWS_AS(apply(op_n("(1/(n-2))*E"), ones(5), 2), PoleError);
    try {
        apply(op_n("(1/(n-2))*E"), ones(5), 2);
    } catch (const PoleError& e) {
        // names the exponent and the point
        CHECK(std::string(e.what()).find("E^1") != std::string::npos);
        CHECK(std::string(e.what()).find("n = 2") != std::string::npos);
    }
}

TEST_CASE("apply composes like multiplication") {
    for (int trial = 0; trial < 25; ++trial) {
        OreOp a = rand_ore(Var::N, 2, 2, -1), b = rand_ore(Var::N, 2, 2, -1);
        Sequence c = Sequence::generate(16, [](long) { return rand_rat(); });
        OreOp ab = a * b;
        // b applied to c on a window wide enough for a; n >= 1 keeps every
        // read inside it (a has low >= -1)
        Sequence bc;
        for (long i = 0; i < 8; ++i) bc.push_back(apply(b, c, i));
        for (long n = 1; n <= 4; ++n) CHECK(apply(ab, c, n) == apply(a, bc, n));
    }
}

TEST_CASE("clear_negative") {
    // E * (n E^-1 + n) = (n+1) + (n+1) E
    OreOp x = op_n("n*E^(-1) + n");
    OreOp cleared = clear_negative(x);
    CHECK(cleared == op_n("(n+1)*E + (n+1)"));
    CHECK(cleared.low() == 0);
    CHECK(clear_negative(op_n("E - 1")) == op_n("E - 1"));
    for (int trial = 0; trial < 10; ++trial) {
        OreOp a = rand_ore(Var::K, 2, 2, -2);
        if (a.low() >= 0) continue;
        CHECK(clear_negative(a).low() == 0);
    }
}

TEST_CASE("left E-multiples keep solutions on the shifted window") {
    Sequence f = fibonacci(20);
    Sequence h = Sequence::generate(18, [&](long i) { return (i % 2 ? -f.at(i) : f.at(i)); });
    OreOp lp = op_n("E^2 + E - 1");
    OreOp shifted = op_n("E") * lp;
    for (long n = 0; n <= 14; ++n) CHECK(apply(shifted, h, n) == Rat(0));
}

TEST_CASE("rdivrem") {
    auto [q, r] = rdivrem(op_k("E^2 - 1"), op_k("E - 1"));
    CHECK(q == op_k("E + 1"));
    CHECK(r.is_zero());
    CHECK(q * op_k("E - 1") == op_k("E^2 - 1"));

    OreOp b = rand_ore(Var::K, 2, 2);
    auto [qb, rb] = rdivrem(b, b);
    CHECK(qb == OreOp::one(Var::K));
    CHECK(rb.is_zero());

    OreOp a = rand_ore(Var::K, 3, 2);
    auto [qa, ra] = rdivrem(a, OreOp::one(Var::K));
    CHECK(qa == a);
    CHECK(ra.is_zero());

    CHECK_THROWS_AS(rdivrem(a, OreOp::zero(Var::K)), std::domain_error);

    for (int trial = 0; trial < 30; ++trial) {
        OreOp aa = rand_ore(Var::K, 4, 2), bb = rand_ore(Var::K, 2, 2);
        auto [qq, rr] = rdivrem(aa, bb);
        CHECK(qq * bb + rr == aa);
        if (!rr.is_zero()) CHECK(rr.order() < bb.order());
    }
}

TEST_CASE("gcrd") {
    // gcrd((k+1)(E-1), 3(k+1)(E-1)) = E - 1
    OreOp g = gcrd(op_k("(k+1)*E - (k+1)"), op_k("(3*k+3)*E - (3*k+3)"));
    CHECK(g == op_k("E - 1"));

    // gcrd(A, A) = monic(A)
    OreOp a = rand_ore(Var::K, 3, 2);
    CHECK(gcrd(a, a) == a.monic());

    // monic output; zero remainders against both inputs
    for (int trial = 0; trial < 15; ++trial) {
        OreOp common = rand_ore(Var::K, 1, 1);
        OreOp x = rand_ore(Var::K, 1, 1) * common;
        OreOp y = rand_ore(Var::K, 1, 1) * common;
        OreOp gg = gcrd(x, y);
        CHECK(gg.leading().is_one());
        CHECK(gg.order() >= common.order());
        CHECK(rdivrem(x, gg).second.is_zero());
        CHECK(rdivrem(y, gg).second.is_zero());
    }

    // list form: zeros are skipped, all-zero gives zero, unit stops early
    std::vector<OreOp> zs{OreOp::zero(Var::K), OreOp::zero(Var::K)};
    CHECK(gcrd(std::span<const OreOp>(zs)).is_zero());
    std::vector<OreOp> with_unit{op_k("E - 1"), op_k("E + 1")};
    CHECK(gcrd(std::span<const OreOp>(with_unit)) == OreOp::one(Var::K));
}

TEST_CASE("gcrd of the order-2 column pair") {
    // The two column entries with E^-1 terms; the list form clears them by a
    // left E factor before dividing.
    OreOp l00 = op_k(
        "4*(2*k+3)^2*(4*k+3)*E^2"
        " + 2*(592*k^4+1388*k^3+1254*k^2+519*k+81)/(k+1)*E"
        " + 676*k^3 - 889*k^2 - 466*k - 99 - (244*k+41)*k^2*E^(-1)");
    OreOp l10 = op_k(
        "8*(2*k+3)*(28*k^3+108*k^2+132*k+51)/(k+2)*E^2"
        " + 4*(360*k^3+720*k^2+451*k+82)*E"
        " - 2*(k+1)*(74*k^2+377*k+133) - 60*(k+1)*k^2*E^(-1)");
    std::vector<OreOp> column{l00, l10};
    OreOp g = gcrd(std::span<const OreOp>(column));
    CHECK(g == op_k("E - (k+1)/(2*(2*k+1))"));
}

TEST_CASE("cleared_primitive") {
    OreOp g = op_k("E - (k+1)/(2*(2*k+1))");
    CHECK(cleared_primitive(g) == op_k("(4*k+2)*E - (k+1)"));
    CHECK(print_operator(cleared_primitive(g)) == "(4*k+2)*E - (k+1)");
    // scaling invariance
    CHECK(cleared_primitive(g.scaled(RatFun(Rat(-7, 3)))) == cleared_primitive(g));
}

}  // TEST_SUITE
