#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "maxdet/constructions.hpp"
#include "maxdet/matrix.hpp"

using namespace maxdet;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
ExactInt naive_det(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    ExactInt det = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<int>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        det += sign * m[0][j] * naive_det(sub);
        sign = -sign;
    }
    return det;
}

std::vector<std::vector<int>> to_rows(const SignMatrix& m) {
    std::vector<std::vector<int>> rows(m.order(), std::vector<int>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

SignMatrix random_sign(std::mt19937_64& rng, int n) {
    SignMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, (rng() & 1) ? 1 : -1);
    return m;
}

SignMatrix two_by_two() {
    SignMatrix m(2);
    m.set(1, 1, -1);
    return m;
}

}  // namespace

TEST_CASE("det_exact on the small reference cases") {
    CHECK(det_exact(SignMatrix(1)) == 1);
    CHECK(det_exact(two_by_two()) == -2);
    const ExactInt d4 = det_exact(sylvester(2));
    CHECK(abs(d4) == 16);
    CHECK(d4 * d4 == 256);
}

TEST_CASE("det_exact matches cofactor expansion on random inputs") {
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const SignMatrix m = random_sign(rng, n);
            CHECK(det_exact(m) == naive_det(to_rows(m)));
        }
    }
}

TEST_CASE("determinants of sign matrices are multiples of 2^{n-1}") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n) {
        const ExactInt pow2 = ExactInt(1) << (n - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const ExactInt d = det_exact(random_sign(rng, n));
            CHECK(d % pow2 == 0);
        }
    }
}

TEST_CASE("is_hadamard") {
    CHECK(is_hadamard(SignMatrix(1)));
    CHECK(is_hadamard(sylvester(2)));
    CHECK_FALSE(is_hadamard(SignMatrix(3, +1)));
    // Gram check agrees with |det| = n^{n/2} on a Hadamard matrix.
    const ExactInt d = det_exact(sylvester(3));
    CHECK(d * d == ExactInt("16777216"));  // 8^8
}

TEST_CASE("beta_map reference cases") {
    const BinMatrix b2 = beta_map(two_by_two());
    CHECK(b2.order() == 1);
    CHECK(b2.at(0, 0) == 1);

    const BinMatrix b4 = beta_map(sylvester(2));
    CHECK(b4.order() == 3);
    CHECK(abs(det_exact(b4)) == 2);  // 16 / 2^3

    SignMatrix dup(3, +1);
    dup.set(2, 1, -1);  // rows 0 and 1 equal
    CHECK(det_exact(beta_map(dup)) == 0);
}

TEST_CASE("beta determinant identity |det A| = 2^{n-1} |det beta(A)|") {
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const SignMatrix a = random_sign(rng, n);
            const ExactInt lhs = abs(det_exact(a));
            const ExactInt rhs =
                (ExactInt(1) << (n - 1)) * abs(det_exact(beta_map(a)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("beta_inverse") {
    BinMatrix one(1, 1);
    CHECK(abs(det_exact(beta_inverse(one))) == 2);

    BinMatrix id3(3);
    for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
    CHECK(abs(det_exact(beta_inverse(id3))) == 8);

    CHECK(det_exact(beta_inverse(BinMatrix(2, 0))) == 0);
}

TEST_CASE("beta round-trip reproduces the bit matrix") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        BinMatrix b(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) b.set(i, j, rng() & 1);
        CHECK(beta_map(beta_inverse(b)) == b);
    }
}

TEST_CASE("excess") {
    CHECK(excess(SignMatrix(2, +1)) == 4);
    CHECK(excess(two_by_two()) == 2);
}

TEST_CASE("complementary_split") {
    const SignMatrix s2 = two_by_two();
    const Split sp = complementary_split(s2, {0}, {0});
    CHECK(sp.minor.order() == 1);
    CHECK(sp.minor.at(0, 0) == s2.at(0, 0));
    CHECK(sp.complement.at(0, 0) == s2.at(1, 1));

    const SignMatrix s4 = sylvester(2);
    const Split corner = complementary_split(s4, {3}, {3});
    CHECK(corner.minor.order() == 1);
    CHECK(abs(det_exact(corner.complement)) == 4);

    // Complementary 2x2 blocks of a Hadamard matrix have equal |det|.
    const Split half = complementary_split(s4, {0, 1}, {0, 1});
    CHECK(abs(det_exact(half.minor)) == abs(det_exact(half.complement)));

    CHECK_THROWS_AS(complementary_split(s4, {0, 5}, {0, 1}),
                    precondition_error);
    CHECK_THROWS_AS(complementary_split(s4, {0, 1}, {1}), precondition_error);
    CHECK_THROWS_AS(complementary_split(s4, {}, {}), precondition_error);
}

TEST_CASE("nonsingular_complement") {
    const SignMatrix s4 = sylvester(2);
    const PivotSets p1 = nonsingular_complement(s4, 1);
    CHECK(p1.rows == std::vector<int>{0});
    CHECK(p1.cols == std::vector<int>{0});

    const PivotSets p2 = nonsingular_complement(s4, 2);
    const Split sp2 = complementary_split(s4, p2.rows, p2.cols);
    CHECK(abs(det_exact(sp2.minor)) == 2);

    const PivotSets p3 = nonsingular_complement(s4, 3);
    const Split sp3 = complementary_split(s4, p3.rows, p3.cols);
    CHECK(abs(det_exact(sp3.minor)) == 4);

    CHECK_THROWS_AS(nonsingular_complement(SignMatrix(3, +1), 2), error);
    CHECK_THROWS_AS(nonsingular_complement(s4, 0), precondition_error);
    CHECK_THROWS_AS(nonsingular_complement(s4, 4), precondition_error);
}

TEST_CASE("nonsingular_complement always yields a nonzero minor") {
    const SignMatrix h = paley_one(11);
    for (int d = 1; d < 12; ++d) {
        const PivotSets p = nonsingular_complement(h, d);
        const Split sp = complementary_split(h, p.rows, p.cols);
        CHECK(det_exact(sp.minor) != 0);
    }
}

TEST_CASE("matrix text format round trip") {
    const SignMatrix h = paley_one(7);
    std::stringstream buf;
    write_matrix(buf, h);
    CHECK(read_sign_matrix(buf) == h);

    const BinMatrix b = beta_map(h);
    std::stringstream bbuf;
    write_matrix(bbuf, b);
    CHECK(read_bin_matrix(bbuf) == b);
}

TEST_CASE("matrix text format rejects malformed input") {
    CHECK_THROWS_AS(parse_sign_matrix(""), parse_error);
    CHECK_THROWS_AS(parse_sign_matrix("x\n+\n"), parse_error);
    CHECK_THROWS_AS(parse_sign_matrix("2\n++\n+\n"), parse_error);
    CHECK_THROWS_AS(parse_sign_matrix("2\n++\n+0\n"), parse_error);
    CHECK_THROWS_AS(parse_sign_matrix("1\n+\njunk\n"), parse_error);
    CHECK_NOTHROW(parse_sign_matrix("1\n+\n"));
}
