#include <doctest.h>

#include <random>

#include "ribbongate/intmatrix.hpp"

using namespace ribbongate;

namespace {

// Independent determinant oracle: straight cofactor expansion, usable up to
// n = 8 or so. Stays ignorant of the Bareiss path on purpose.
Zint cofactor_det(const IntMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Zint acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Zint term = m.at(0, j) * cofactor_det(m.minor_without(0, j));
        acc += (j % 2 == 0) ? term : Zint(-term);
    }
    return acc;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        long long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

}  // namespace

TEST_CASE("det_exact matches hand values and the cofactor oracle") {
    IntMatrix m(2, 2, {Zint(2), Zint(1), Zint(1), Zint(2)});
    CHECK(det_exact(m) == 3);
    CHECK(det_exact(IntMatrix::identity(5)) == 1);
    CHECK(det_exact(IntMatrix(0, 0)) == 1);

    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 8;
        IntMatrix a = random_matrix(rng, n, n, 9);
        CHECK(det_exact(a) == cofactor_det(a));
    }
}

TEST_CASE("det_exact rejects non-square input") {
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), NotSquare);
}

TEST_CASE("snf on worked examples") {
    SUBCASE("already diagonal with a zero") {
        IntMatrix m(2, 2, {Zint(2), Zint(0), Zint(0), Zint(0)});
        SnfResult r = snf(m);
        CHECK(r.nonzero_factors() == std::vector<Zint>{Zint(2)});
        CHECK(r.zero_count() == 1);
    }
    SUBCASE("[[2,4],[6,8]]") {
        IntMatrix m(2, 2, {Zint(2), Zint(4), Zint(6), Zint(8)});
        SnfResult r = snf(m);
        CHECK(r.invariant_factors == std::vector<Zint>{Zint(2), Zint(4)});
        CHECK(r.u.mul(m).mul(r.v) == r.s);
    }
    SUBCASE("identity") {
        SnfResult r = snf(IntMatrix::identity(3));
        CHECK(r.invariant_factors == std::vector<Zint>{Zint(1), Zint(1), Zint(1)});
    }
    SUBCASE("empty") {
        SnfResult r = snf(IntMatrix(0, 0));
        CHECK(r.invariant_factors.empty());
    }
}

TEST_CASE("snf properties on random matrices") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        IntMatrix m = random_matrix(rng, rows, cols, 20);
        SnfResult r = snf(m);

        CHECK(r.u.mul(m).mul(r.v) == r.s);
        if (rows <= 8) CHECK(abs(cofactor_det(r.u)) == 1);
        if (cols <= 8) CHECK(abs(cofactor_det(r.v)) == 1);
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
            const Zint& a = r.invariant_factors[i];
            const Zint& b = r.invariant_factors[i + 1];
            if (a != 0) CHECK(b % a == 0);
            if (a == 0) CHECK(b == 0);
        }
    }
}

TEST_CASE("det equals the product of invariant factors up to sign") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 7;
        IntMatrix m = random_matrix(rng, n, n, 9);
        Zint det = det_exact(m);
        if (det == 0) continue;
        Zint prod = 1;
        for (const Zint& f : snf(m).invariant_factors) prod *= f;
        CHECK(abs(det) == prod);
    }
}

TEST_CASE("rank_mod_p") {
    CHECK(rank_mod_p(IntMatrix(1, 1, {Zint(3)}), 3) == 0);
    CHECK(rank_mod_p(IntMatrix(2, 2, {Zint(2), Zint(4), Zint(6), Zint(8)}), 3) == 2);
    CHECK(rank_mod_p(IntMatrix::identity(6), 5) == 6);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 4), BadParameter);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 1), BadParameter);

    // Agreement with invariant factors.
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 10;
        IntMatrix m = random_matrix(rng, rows, cols, 15);
        SnfResult r = snf(m);
        for (long long p : {3LL, 5LL, 7LL}) {
            std::size_t not_div = 0;
            for (const Zint& f : r.invariant_factors)
                if (f != 0 && f % p != 0) ++not_div;
            CHECK(rank_mod_p(m, p) == not_div);
        }
    }
}

TEST_CASE("is_prime trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
