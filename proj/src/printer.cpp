#include "binsum/printer.hpp"

#include <sstream>

#include "json.hpp"

namespace binsum {

namespace {

// Smallest positive lambda with lambda*p integer-primitive.
Rat clearing_factor(const Poly& p) {
    mpz_class num_gcd(0), den_lcm(1);
    for (const Rat& r : p.coeffs()) {
        if (r.is_zero()) continue;
        mpz_class g, l;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), r.num().get_mpz_t());
        num_gcd = g;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
        den_lcm = l;
    }
    return Rat(den_lcm, num_gcd);
}

std::string monomial_str(const Rat& c, char var, int deg, bool lead) {
    std::ostringstream os;
    Rat a = c.abs();
    if (!lead) os << (c.sign() < 0 ? "-" : "+");
    else if (c.sign() < 0) os << "-";
    if (deg == 0) {
        os << a.str();
    } else {
        if (!a.is_one()) os << a.str() << "*";
        os << var;
        if (deg != 1) os << "^" << deg;
    }
    return os.str();
}

bool is_single_monomial(const Poly& p) {
    if (p.is_zero()) return true;
    for (int i = 0; i < p.degree(); ++i)
        if (!p.coeff(i).is_zero()) return false;
    return true;
}

// var | var^d | integer: safe as a bare '/' divisor without parentheses.
bool is_single_factor(const Poly& p) {
    return is_single_monomial(p) && (p.degree() <= 0 || p.leading().is_one());
}

}  // namespace

std::string poly_str(const Poly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (int d = p.degree(); d >= 0; --d) {
        const Rat& c = p.coeff(d);
        if (c.is_zero()) continue;
        out += monomial_str(c, var, d, lead);
        lead = false;
    }
    return out;
}

std::string ratfun_str(const RatFun& f, char var) {
    if (f.is_polynomial()) return poly_str(f.num(), var);
    Rat lam_d = clearing_factor(f.den());
    Poly den_int = f.den() * lam_d;
    Poly num_scaled = f.num() * lam_d;
    Rat lam_n = clearing_factor(num_scaled);
    Poly num_int = num_scaled * lam_n;
    // f = num_int / (lam_n * den_int); with lam_n = u/w this is the
    // all-integer (w * num_int) / (u * den_int).
    Rat u(lam_n.num()), w(lam_n.den());

    std::string num_str;
    if (is_single_monomial(num_int)) {
        num_str = poly_str(num_int * w, var);
    } else if (w.is_one()) {
        num_str = "(" + poly_str(num_int, var) + ")";
    } else {
        num_str = w.str() + "*(" + poly_str(num_int, var) + ")";
    }

    std::string den_str;
    if (u.is_one()) {
        den_str = poly_str(den_int, var);
        if (!is_single_factor(den_int)) den_str = "(" + den_str + ")";
    } else if (is_single_monomial(den_int)) {
        den_str = "(" + poly_str(den_int * u, var) + ")";
    } else {
        den_str = "(" + u.str() + "*(" + poly_str(den_int, var) + "))";
    }
    return num_str + "/" + den_str;
}

namespace {

std::string text_render(const OreOp& op) {
    if (op.is_zero()) return "0";
    const char var = var_symbol(op.var());
    std::string out;
    bool first = true;
    // Descending powers of E.
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        const int exp = it->first;
        const RatFun& c = it->second;
        // Sign comes from the numerator's leading coefficient (den is monic).
        bool neg = c.num().leading().sign() < 0;
        RatFun mag = neg ? -c : c;

        std::string body;
        bool mag_is_one = mag.is_one();
        std::string cstr = ratfun_str(mag, var);
        bool needs_parens = mag.is_polynomial() && !is_single_monomial(mag.num());
        if (needs_parens) cstr = "(" + cstr + ")";

        std::string estr;
        if (exp == 1) estr = "E";
        else if (exp > 1) estr = "E^" + std::to_string(exp);
        else if (exp < 0) estr = "E^(-" + std::to_string(-exp) + ")";

        if (exp == 0) body = cstr;
        else if (mag_is_one) body = estr;
        else body = cstr + "*" + estr;

        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string latex_poly(const Poly& p, char var) {
    std::string s = poly_str(p, var);
    std::string out;
    for (char c : s)
        if (c != '*') out += c;
    return out;
}

std::string latex_render(const OreOp& op) {
    if (op.is_zero()) return "0";
    const char var = var_symbol(op.var());
    std::string out;
    bool first = true;
    for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
        const int exp = it->first;
        const RatFun& c = it->second;
        bool neg = c.num().leading().sign() < 0;
        RatFun mag = neg ? -c : c;

        std::string cstr;
        if (mag.is_polynomial()) {
            cstr = latex_poly(mag.num(), var);
            if (!is_single_monomial(mag.num())) cstr = "\\left(" + cstr + "\\right)";
        } else {
            cstr = "\\frac{" + latex_poly(mag.num(), var) + "}{" + latex_poly(mag.den(), var) + "}";
        }

        std::string estr;
        if (exp != 0) {
            estr = std::string("E_") + var;
            if (exp != 1) estr += "^{" + std::to_string(exp) + "}";
        }

        std::string body;
        if (exp == 0) body = cstr;
        else if (mag.is_one()) body = estr;
        else body = cstr + " " + estr;

        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string json_render(const OreOp& op) {
    nlohmann::json j;
    j["var"] = std::string(1, var_symbol(op.var()));
    j["terms"] = nlohmann::json::array();
    if (!op.is_zero()) {
        j["order"] = op.order();
        j["low"] = op.low();
        for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it)
            j["terms"].push_back({{"exp", it->first}, {"coeff", ratfun_str(it->second, var_symbol(op.var()))}});
    }
    return j.dump();
}

}  // namespace

std::string print_operator(const OreOp& op, PrintStyle style) {
    switch (style) {
        case PrintStyle::Text: return text_render(op);
        case PrintStyle::Json: return json_render(op);
        case PrintStyle::Latexish: return latex_render(op);
    }
    return {};
}

}  // namespace binsum
