#pragma once

#include <vector>

#include "binsum/basis.hpp"
#include "binsum/ore.hpp"

namespace binsum {

/// Square matrix of recurrence operators sharing one variable. Multiplication
/// is noncommutative in the entries ((AB)_{r,j} = sum_t A_{r,t} * B_{t,j} with
/// the left factor applied first in operator order).
class OpMatrix {
public:
    OpMatrix(int m, Var v) : m_(m), var_(v), e_(static_cast<size_t>(m) * m, OreOp::zero(v)) {
        if (m < 1) throw std::invalid_argument("OpMatrix: size must be >= 1");
    }

    static OpMatrix identity(int m, Var v) {
        OpMatrix id(m, v);
        for (int i = 0; i < m; ++i) id.at(i, i) = OreOp::one(v);
        return id;
    }

    int size() const { return m_; }
    Var var() const { return var_; }

    OreOp& at(int r, int c) { return e_[static_cast<size_t>(r) * m_ + c]; }
    const OreOp& at(int r, int c) const { return e_[static_cast<size_t>(r) * m_ + c]; }

    OpMatrix operator+(const OpMatrix& o) const;
    OpMatrix operator*(const OpMatrix& o) const;
    /// Matrix times column of operators.
    std::vector<OreOp> operator*(const std::vector<OreOp>& col) const;
    /// Entrywise scaling by a rational constant.
    OpMatrix scaled(const Rat& s) const;

    bool operator==(const OpMatrix& o) const { return m_ == o.m_ && var_ == o.var_ && e_ == o.e_; }

private:
    int m_;
    Var var_;
    std::vector<OreOp> e_;
};

/// [RE]: the matrix image of the shift operator on the basis,
///   E_{r,j} = sum_{i = 0..mA, j-i = r (mod m)} alpha_{k+e, j, i} E_k^e,
/// e = (r+i-j)/m. Entries live in n for m = 1 and in k otherwise.
OpMatrix build_re(const ExpansionTable& table);

/// [RX]: the matrix image of multiplication by x,
///   X_{r,j} = [r=j](k-b_{j+1})/a_{j+1} + [r=0 & j=m-1](k/a_{j+1}) E_k^{-1}
///           + [r=j+1](k+1)/a_{j+1}.
OpMatrix build_rx(const BasisSpec& spec);

struct ReductionResult {
    /// gcrd of the cleared column entries (monic); for m = 1 the single column
    /// entry itself, monic, with negative exponents kept. Zero when the whole
    /// column vanished (then every section-0 series solves L y = 0); the unit
    /// operator 1 when the gcrd is trivial (only h = 0 works).
    OreOp lprime;
    /// Raw first column L_{0,0}..L_{m-1,0} (may contain E^-1 terms).
    std::vector<OreOp> column;
    ExpansionTable table;
    /// Power of E each column entry was premultiplied by before the gcrd.
    std::vector<int> shifts;
};

/// Throws unless op is a nonzero element of K[x]<E> in n: polynomial
/// coefficients and no negative exponents.
void require_input_operator(const OreOp& op);

/// Algorithm core: substitute E -> [RE], x -> [RX], 1 -> I into L, keeping
/// only the first-column image ([RE]^j e1 built right-to-left, polynomial
/// coefficients applied to [RX] by Horner), then take the gcrd of the column.
ReductionResult reduce_first_column(const OreOp& input, const BasisSpec& spec);

/// Full m x m image of L under the substitution homomorphism.
OpMatrix reduce_full_matrix(const OreOp& input, const BasisSpec& spec);
OpMatrix reduce_full_matrix(const OreOp& input, const ExpansionTable& table);

}  // namespace binsum
