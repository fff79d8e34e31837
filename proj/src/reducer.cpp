#include "binsum/reducer.hpp"

#include <span>
#include <stdexcept>

namespace binsum {

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
    if (m_ != o.m_) throw std::invalid_argument("OpMatrix: size mismatch");
    OpMatrix r(m_, var_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
    if (m_ != o.m_) throw std::invalid_argument("OpMatrix: size mismatch");
    OpMatrix r(m_, var_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) {
            OreOp acc = OreOp::zero(var_);
            for (int t = 0; t < m_; ++t) acc += at(i, t) * o.at(t, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

std::vector<OreOp> OpMatrix::operator*(const std::vector<OreOp>& col) const {
    if (static_cast<int>(col.size()) != m_)
        throw std::invalid_argument("OpMatrix: column size mismatch");
    std::vector<OreOp> r(static_cast<size_t>(m_), OreOp::zero(var_));
    for (int i = 0; i < m_; ++i)
        for (int t = 0; t < m_; ++t) r[static_cast<size_t>(i)] += at(i, t) * col[static_cast<size_t>(t)];
    return r;
}

OpMatrix OpMatrix::scaled(const Rat& s) const {
    OpMatrix r(m_, var_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].scaled(RatFun(s));
    return r;
}

namespace {

Var matrix_var(const BasisSpec& spec) { return spec.m() == 1 ? Var::N : Var::K; }

}  // namespace

OpMatrix build_re(const ExpansionTable& table) {
    const BasisSpec& spec = table.spec;
    const int m = spec.m();
    const int band = spec.shift_band();
    const Var v = matrix_var(spec);
    OpMatrix re(m, v);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j < m; ++j)
            for (int i = 0; i <= band; ++i) {
                if (((j - i) % m + m) % m != r) continue;
                int e = (r + i - j) / m;
                const RatFun& alpha = table.e[static_cast<size_t>(j)][static_cast<size_t>(i)];
                re.at(r, j) += OreOp::term(v, e, alpha.shifted(e));
            }
    return re;
}

OpMatrix build_rx(const BasisSpec& spec) {
    const int m = spec.m();
    const Var v = matrix_var(spec);
    RatFun k = ratfun_var();
    OpMatrix rx(m, v);
    for (int j = 0; j < m; ++j) {
        RatFun a(Rat(spec.a[static_cast<size_t>(j)]));
        RatFun b(spec.b[static_cast<size_t>(j)]);
        rx.at(j, j) += OreOp::term(v, 0, (k - b) / a);
        if (j + 1 < m) rx.at(j + 1, j) += OreOp::term(v, 0, (k + RatFun(1)) / a);
        if (j == m - 1) rx.at(0, j) += OreOp::term(v, -1, k / a);
    }
    return rx;
}

void require_input_operator(const OreOp& op) {
    if (op.var() != Var::N)
        throw std::invalid_argument("input operator must be in the variable n");
    if (op.is_zero()) throw std::invalid_argument("input operator must be nonzero");
    if (op.low() < 0)
        throw std::invalid_argument("input operator must not contain negative powers of E");
    if (!op.has_polynomial_coeffs())
        throw std::invalid_argument(
            "input operator must have polynomial coefficients; clear denominators first");
}

namespace {

// p([RX]) * u by Horner on matrix-vector products; the scalar coefficients of
// p are central, so association is free.
std::vector<OreOp> horner_column(const Poly& p, const OpMatrix& rx, const std::vector<OreOp>& u) {
    std::vector<OreOp> w(u.size(), OreOp::zero(rx.var()));
    for (int e = p.degree(); e >= 0; --e) {
        w = rx * w;
        const Rat& c = p.coeff(e);
        if (c.is_zero()) continue;
        for (size_t t = 0; t < u.size(); ++t) w[t] += u[t].scaled(RatFun(c));
    }
    return w;
}

OpMatrix horner_matrix(const Poly& p, const OpMatrix& rx) {
    OpMatrix w(rx.size(), rx.var());
    OpMatrix id = OpMatrix::identity(rx.size(), rx.var());
    for (int e = p.degree(); e >= 0; --e) {
        w = rx * w;
        const Rat& c = p.coeff(e);
        if (!c.is_zero()) w = w + id.scaled(c);
    }
    return w;
}

}  // namespace

ReductionResult reduce_first_column(const OreOp& input, const BasisSpec& spec) {
    require_input_operator(input);
    const int m = spec.m();
    ExpansionTable table = expansion_table(spec);
    OpMatrix re = build_re(table);
    OpMatrix rx = build_rx(spec);
    const Var v = re.var();

    std::vector<OreOp> column(static_cast<size_t>(m), OreOp::zero(v));
    std::vector<OreOp> u(static_cast<size_t>(m), OreOp::zero(v));
    u[0] = OreOp::one(v);

    const int order = input.order();
    for (int d = 0; d <= order; ++d) {
        const RatFun& cd = input.coeff(d);
        if (!cd.is_zero()) {
            std::vector<OreOp> w = horner_column(cd.num(), rx, u);
            for (int t = 0; t < m; ++t)
                column[static_cast<size_t>(t)] += w[static_cast<size_t>(t)];
        }
        if (d < order) u = re * u;
    }

    ReductionResult result{OreOp::zero(v), column, std::move(table), std::vector<int>(static_cast<size_t>(m), 0)};
    if (m == 1) {
        // Direct RL: keep any negative exponents (cf. n(E^-1+1) images).
        result.lprime = column[0].monic();
        return result;
    }
    std::vector<OreOp> cleared;
    for (int t = 0; t < m; ++t) {
        const OreOp& entry = column[static_cast<size_t>(t)];
        if (entry.is_zero()) continue;
        result.shifts[static_cast<size_t>(t)] = std::max(0, -entry.low());
        cleared.push_back(clear_negative(entry));
    }
    if (!cleared.empty()) result.lprime = gcrd(std::span<const OreOp>(cleared));
    return result;
}

OpMatrix reduce_full_matrix(const OreOp& input, const ExpansionTable& table) {
    require_input_operator(input);
    const BasisSpec& spec = table.spec;
    const int m = spec.m();
    OpMatrix re = build_re(table);
    OpMatrix rx = build_rx(spec);
    const Var v = re.var();

    OpMatrix acc(m, v);
    OpMatrix re_pow = OpMatrix::identity(m, v);
    const int order = input.order();
    for (int d = 0; d <= order; ++d) {
        const RatFun& cd = input.coeff(d);
        if (!cd.is_zero()) acc = acc + horner_matrix(cd.num(), rx) * re_pow;
        if (d < order) re_pow = re * re_pow;
    }
    return acc;
}

OpMatrix reduce_full_matrix(const OreOp& input, const BasisSpec& spec) {
    return reduce_full_matrix(input, expansion_table(spec));
}

}  // namespace binsum
