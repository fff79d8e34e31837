#include "binsum/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace binsum {

std::vector<RatFun> solve_linear_system(RatFunMatrix A, std::vector<RatFun> rhs) {
    const size_t n = A.size();
    if (rhs.size() != n)
        throw std::invalid_argument("solve_linear_system: rhs size mismatch");
    for (const auto& row : A)
        if (row.size() != n)
            throw std::invalid_argument("solve_linear_system: matrix not square");

    for (size_t col = 0; col < n; ++col) {
        size_t best = n;
        for (size_t r = col; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            if (best == n || A[r][col].complexity() < A[best][col].complexity()) best = r;
        }
        if (best == n)
            throw SingularMatrixError(
                "solve_linear_system: singular at elimination stage " + std::to_string(col),
                static_cast<int>(col));
        std::swap(A[col], A[best]);
        std::swap(rhs[col], rhs[best]);

        for (size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            RatFun f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }

    std::vector<RatFun> x(n);
    for (size_t col = n; col-- > 0;) {
        RatFun acc = rhs[col];
        for (size_t c = col + 1; c < n; ++c) acc -= A[col][c] * x[c];
        x[col] = acc / A[col][col];
    }
    return x;
}

}  // namespace binsum
