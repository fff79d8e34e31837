#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binsum/rat.hpp"

namespace binsum {

/// A published prefix of an element of Q^Z that is zero on negative indices.
/// Reads below 0 return 0; reads past the stored prefix are a caller error.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Rat> values) : v_(std::move(values)) {}

    static Sequence generate(long len, const std::function<Rat(long)>& f) {
        std::vector<Rat> v;
        v.reserve(static_cast<size_t>(len));
        for (long i = 0; i < len; ++i) v.push_back(f(i));
        return Sequence(std::move(v));
    }

    long size() const { return static_cast<long>(v_.size()); }

    Rat at(long i) const {
        if (i < 0) return Rat(0);
        if (i >= size())
            throw std::out_of_range("Sequence: index " + std::to_string(i) +
                                    " beyond published prefix of length " + std::to_string(size()));
        return v_[static_cast<size_t>(i)];
    }

    void push_back(Rat r) { v_.push_back(std::move(r)); }
    const std::vector<Rat>& values() const { return v_; }

    bool operator==(const Sequence& o) const { return v_ == o.v_; }

private:
    std::vector<Rat> v_;
};

}  // namespace binsum
