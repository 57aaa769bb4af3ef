#include "ribbongate/intmatrix.hpp"

#include <algorithm>
#include <utility>

namespace ribbongate {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Zint> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw BadParameter("entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw BadParameter("dimension mismatch in matrix product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Zint& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::minor_without(std::size_t r, std::size_t c) const {
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == c) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

std::vector<Zint> SnfResult::nonzero_factors() const {
    std::vector<Zint> out;
    for (const Zint& d : invariant_factors)
        if (d != 0) out.push_back(d);
    return out;
}

std::size_t SnfResult::zero_count() const {
    return invariant_factors.size() - nonzero_factors().size();
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Row/column elementary operations applied to S and mirrored into U or V.
void row_swap(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}

void col_swap(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}

void row_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Zint& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(dst, k) += f * m.at(src, k);
}

void col_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Zint& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, dst) += f * m.at(k, src);
}

void row_negate(IntMatrix& m, std::size_t i) {
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

// Smallest nonzero |entry| in the block starting at (k,k); row-major ties.
bool find_pivot(const IntMatrix& s, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Zint best = 0;
    for (std::size_t i = k; i < s.rows(); ++i)
        for (std::size_t j = k; j < s.cols(); ++j) {
            const Zint& e = s.at(i, j);
            if (e == 0) continue;
            Zint a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    SnfResult r;
    r.s = m;
    r.u = IntMatrix::identity(m.rows());
    r.v = IntMatrix::identity(m.cols());
    IntMatrix& s = r.s;

    const std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pi = k, pj = k;
        if (!find_pivot(s, k, pi, pj)) break;  // remaining block is zero
        row_swap(s, k, pi);
        row_swap(r.u, k, pi);
        col_swap(s, k, pj);
        col_swap(r.v, k, pj);

        for (;;) {
            // Clear column k below and row k right of the pivot. Remainders
            // smaller than the pivot may appear; looping re-pivots on them.
            bool dirty = false;
            for (std::size_t i = k + 1; i < s.rows(); ++i) {
                if (s.at(i, k) == 0) continue;
                Zint q = s.at(i, k) / s.at(k, k);
                row_addmul(s, i, k, -q);
                row_addmul(r.u, i, k, -q);
                if (s.at(i, k) != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < s.cols(); ++j) {
                if (s.at(k, j) == 0) continue;
                Zint q = s.at(k, j) / s.at(k, k);
                col_addmul(s, j, k, -q);
                col_addmul(r.v, j, k, -q);
                if (s.at(k, j) != 0) dirty = true;
            }
            if (dirty) {
                std::size_t qi = k, qj = k;
                find_pivot(s, k, qi, qj);
                row_swap(s, k, qi);
                row_swap(r.u, k, qi);
                col_swap(s, k, qj);
                col_swap(r.v, k, qj);
                continue;
            }

            // Pivot is lone. Enforce that it divides the rest of the block;
            // if not, fold the offending row in and keep reducing.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < s.rows() && divides_all; ++i)
                for (std::size_t j = k + 1; j < s.cols(); ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        row_addmul(s, k, i, 1);
                        row_addmul(r.u, k, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }

        if (s.at(k, k) < 0) {
            row_negate(s, k);
            row_negate(r.u, k);
        }
    }

    r.invariant_factors.reserve(nmin);
    for (std::size_t k = 0; k < nmin; ++k) r.invariant_factors.push_back(s.at(k, k));
    return r;
}

std::size_t rank_mod_p(const IntMatrix& m, long long p) {
    if (!is_prime(p)) throw BadParameter("modulus must be prime, got " + std::to_string(p));

    // Independent route: plain Gaussian elimination over F_p.
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Zint e = m.at(i, j) % p;
            if (e < 0) e += p;
            a[i][j] = static_cast<long long>(e);
        }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);

        // Modular inverse by Fermat; p is prime.
        long long inv = 1, base = a[rank][col] % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (std::size_t j = col; j < cols; ++j) a[rank][j] = (a[rank][j] * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                a[i][j] = (a[i][j] - f * a[rank][j]) % p;
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

Zint det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    Zint prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            row_swap(a, k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Zint num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Zint(-a.at(n - 1, n - 1));
}

}  // namespace ribbongate
