#pragma once

#include <optional>
#include <vector>

#include "binsum/basis.hpp"
#include "binsum/ore.hpp"
#include "binsum/sequence.hpp"

namespace binsum {

/// The summation kernel F(n,k) = prod_i C(a_i n + b_i, k). The sum over k
/// terminates whenever some b_i is a nonnegative integer.
struct KernelSpec {
    BasisSpec spec;

    /// Largest k with F(n,k) possibly nonzero, or nullopt when no b_i is in N.
    std::optional<long> termination_bound(long n) const;

    Rat kernel_value(long n, long k) const;
};

/// Extends `initial` to h_0..h_upto with L h = 0 at every point where the
/// equation applies. Where the leading coefficient vanishes, the equation is
/// checked as a constraint on already-known values instead (inconsistency is
/// an error), and the next value must come from `initial`.
Sequence unroll(const OreOp& lp, const std::vector<Rat>& initial, long upto);

/// y_n = sum_k F(n,k) h_k, summed exactly to min(termination bound,
/// truncation). Requires a truncation when the kernel never terminates.
Rat eval_sum(const KernelSpec& kernel, const Sequence& h, long n,
             std::optional<long> truncation = std::nullopt);

struct VerifyReport {
    bool pass = true;
    long checked_to = -1;
    std::optional<long> first_failure;
    Rat residual{0};
};

/// Computes y_n for n = 0..nmax+ord(L) from h through the kernel and checks
/// (L y)_n = 0 for n = 0..nmax. Failures are report content, not errors.
VerifyReport verify_solution(const OreOp& l, const KernelSpec& kernel, const Sequence& h,
                             long nmax, std::optional<long> truncation = std::nullopt);

/// (s_j^m c)_k = c_{mk+j}.
Sequence msection(const Sequence& c, int m, int j);
/// Two-sided inverse of multisection: c_k = parts[k mod m][k div m].
Sequence interlace(const std::vector<Sequence>& parts);

}  // namespace binsum
