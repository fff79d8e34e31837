#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binsum {

/// Evaluation of a rational function at a zero of its denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Exact elimination hit an all-zero pivot column; `stage` is the column
/// (0-based) at which elimination stopped.
class SingularMatrixError : public std::domain_error {
public:
    SingularMatrixError(const std::string& what, int stage)
        : std::domain_error(what), stage_(stage) {}
    int stage() const { return stage_; }

private:
    int stage_;
};

/// Syntax error with the offset of the offending token.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    size_t pos() const { return pos_; }

private:
    size_t pos_;
};

}  // namespace binsum
