#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "ribbongate/errors.hpp"

namespace ribbongate {

// All invariant computations run over exact integers. Iterated connected
// sums push determinants to det(K)^n, so fixed-width words are not an option.
using Zint = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Zint(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Zint> entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Zint& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Zint& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Zint>& entries() const { return a_; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix mul(const IntMatrix& rhs) const;

    /// Copy with row r and column c removed.
    IntMatrix minor_without(std::size_t r, std::size_t c) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Zint> a_;
};

/// Smith decomposition U*M*V = S with U, V unimodular and S diagonal with a
/// divisibility chain. invariant_factors is the full diagonal of S (zeros,
/// if any, come last; every integer divides 0 so the chain is intact).
struct SnfResult {
    IntMatrix u, s, v;
    std::vector<Zint> invariant_factors;

    std::vector<Zint> nonzero_factors() const;
    std::size_t zero_count() const;
};

/// Smith normal form. Pivot rule: smallest nonzero absolute value in the
/// remaining block, ties broken by row-major position, so the decomposition
/// is deterministic and entry growth stays tame.
SnfResult snf(const IntMatrix& m);

/// Rank of m over F_p (p checked prime by trial division).
std::size_t rank_mod_p(const IntMatrix& m, long long p);

/// Exact determinant by fraction-free (Bareiss) elimination.
Zint det_exact(const IntMatrix& m);

bool is_prime(long long p);

}  // namespace ribbongate
