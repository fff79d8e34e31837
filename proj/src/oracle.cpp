#include "binsum/oracle.hpp"

#include <stdexcept>

#include "binsum/errors.hpp"

namespace binsum {

std::optional<long> KernelSpec::termination_bound(long n) const {
    std::optional<long> bound;
    for (size_t i = 0; i < spec.a.size(); ++i) {
        if (!spec.b[i].is_nonneg_integer()) continue;
        long t = spec.a[i] * n + spec.b[i].to_long();
        if (!bound || t < *bound) bound = t;
    }
    return bound;
}

Rat KernelSpec::kernel_value(long n, long k) const {
    Rat prod(1);
    for (size_t i = 0; i < spec.a.size(); ++i)
        prod *= binomial(Rat(spec.a[i] * n) + spec.b[i], k);
    return prod;
}

Sequence unroll(const OreOp& lp, const std::vector<Rat>& initial, long upto) {
    if (lp.is_zero()) throw std::invalid_argument("unroll: zero operator");
    if (upto < 0) throw std::invalid_argument("unroll: upto must be >= 0");
    const int order = lp.order();

    std::vector<Rat> h = initial;
    for (long kq = 0; kq + order <= upto; ++kq) {
        Rat point(kq);
        for (const auto& [i, c] : lp.terms())
            if (c.has_pole_at(point))
                throw PoleError("unroll: coefficient of E^" + std::to_string(i) +
                                " has a pole at k = " + point.str());
        Rat lead = lp.coeff(order)(point);
        auto known = [&](long idx) -> Rat {
            if (idx < 0) return Rat(0);
            if (idx >= static_cast<long>(h.size()))
                throw std::invalid_argument(
                    "unroll: insufficient initial values (h_" + std::to_string(idx) +
                    " needed for the equation at k = " + std::to_string(kq) + ")");
            return h[static_cast<size_t>(idx)];
        };
        if (!lead.is_zero()) {
            Rat acc(0);
            for (const auto& [i, c] : lp.terms())
                if (i != order) acc += c(point) * known(kq + i);
            Rat value = -acc / lead;
            if (kq + order < static_cast<long>(h.size())) {
                if (h[static_cast<size_t>(kq + order)] != value)
                    throw std::invalid_argument(
                        "unroll: inconsistent initial data at index " + std::to_string(kq + order) +
                        " (expected " + value.str() + ", got " +
                        h[static_cast<size_t>(kq + order)].str() + ")");
            } else {
                h.push_back(std::move(value));
            }
        } else {
            // The equation at kq only constrains already-known values
            // (cf. the h_1 = 0 constraint forced at n = 0 by E - n - n E^-1).
            Rat acc(0);
            for (const auto& [i, c] : lp.terms())
                if (i != order) acc += c(point) * known(kq + i);
            if (!acc.is_zero())
                throw std::invalid_argument(
                    "unroll: initial data violates the equation at k = " + std::to_string(kq) +
                    " (leading coefficient vanishes there; residual " + acc.str() + ")");
            if (kq + order >= static_cast<long>(h.size()))
                throw std::invalid_argument(
                    "unroll: h_" + std::to_string(kq + order) +
                    " is undetermined (leading coefficient vanishes at k = " + std::to_string(kq) +
                    "); supply it as an initial value");
        }
    }
    if (static_cast<long>(h.size()) < upto + 1)
        throw std::invalid_argument("unroll: insufficient initial values to reach index " +
                                    std::to_string(upto));
    h.resize(static_cast<size_t>(upto) + 1);
    return Sequence(std::move(h));
}

Rat eval_sum(const KernelSpec& kernel, const Sequence& h, long n, std::optional<long> truncation) {
    if (n < 0) throw std::invalid_argument("eval_sum: n must be >= 0");
    std::optional<long> bound = kernel.termination_bound(n);
    if (!bound && !truncation)
        throw std::invalid_argument(
            "eval_sum: the kernel never terminates (no b_i in N); supply a truncation");
    long kmax = bound ? *bound : *truncation;
    if (truncation && *truncation < kmax) kmax = *truncation;
    Rat acc(0);
    for (long k = 0; k <= kmax; ++k) acc += kernel.kernel_value(n, k) * h.at(k);
    return acc;
}

VerifyReport verify_solution(const OreOp& l, const KernelSpec& kernel, const Sequence& h,
                             long nmax, std::optional<long> truncation) {
    if (l.is_zero()) throw std::invalid_argument("verify_solution: zero operator");
    const int order = l.order();
    Sequence y;
    for (long n = 0; n <= nmax + order; ++n) y.push_back(eval_sum(kernel, h, n, truncation));

    VerifyReport report;
    for (long n = 0; n <= nmax; ++n) {
        Rat r = apply(l, y, n);
        if (!r.is_zero()) {
            report.pass = false;
            report.first_failure = n;
            report.residual = std::move(r);
            return report;
        }
        report.checked_to = n;
    }
    return report;
}

Sequence msection(const Sequence& c, int m, int j) {
    if (m < 1 || j < 0 || j >= m) throw std::invalid_argument("msection: need 0 <= j < m");
    Sequence s;
    for (long k = 0; m * k + j < c.size(); ++k) s.push_back(c.at(m * k + j));
    return s;
}

Sequence interlace(const std::vector<Sequence>& parts) {
    if (parts.empty()) throw std::invalid_argument("interlace: need at least one sequence");
    const long m = static_cast<long>(parts.size());
    Sequence c;
    for (long k = 0;; ++k) {
        const Sequence& part = parts[static_cast<size_t>(k % m)];
        if (k / m >= part.size()) break;
        c.push_back(part.at(k / m));
    }
    return c;
}

}  // namespace binsum
