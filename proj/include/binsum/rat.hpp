#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace binsum {

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. All operations are pure; values are immutable
/// in practice (operators return fresh values).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading sign.
    static Rat parse(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && v_ >= 0; }
    int sign() const { return sgn(v_); }

    /// Value as long; requires an integer that fits.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("Rat: not a machine integer: " + str());
        return v_.get_num().get_si();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat abs() const { return v_ < 0 ? -*this : *this; }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }

private:
    mpq_class v_;
};

inline Rat Rat::parse(std::string_view s) {
    auto bad = [&] {
        return std::invalid_argument("Rat::parse: malformed rational '" + std::string(s) + "'");
    };
    if (s.empty()) throw bad();
    // GMP rejects an explicit '+' and empty parts; validate and strip first.
    auto checked_int = [&](std::string_view part) {
        if (!part.empty() && part[0] == '+') part.remove_prefix(1);
        if (part.empty()) throw bad();
        size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return mpz_class(std::string(part));
    };
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(checked_int(s));
    mpz_class num = checked_int(s.substr(0, slash));
    mpz_class den = checked_int(s.substr(slash + 1));
    return Rat(num, den);
}

inline Rat factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

/// Generalized binomial C(q, k) = q(q-1)...(q-k+1)/k! for rational q.
inline Rat binomial(const Rat& q, long k) {
    if (k < 0) return Rat(0);
    Rat prod(1);
    for (long s = 0; s < k; ++s) prod *= q - Rat(s);
    return prod / factorial(k);
}

}  // namespace binsum
