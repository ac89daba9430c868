#include <random>

#include "doctest.h"
#include "rmrank/errors.hpp"
#include "rmrank/field.hpp"
#include "rmrank/matrix.hpp"

using namespace rmrank;

namespace {

Matrix<Scalar> random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix<Scalar> m(r, c, f.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

// determinant by permutation expansion, independent of the elimination code
Scalar det_by_permutations(const Matrix<Scalar>& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Scalar total = m.proto();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar term = m.proto().one_like();
        for (std::size_t i = 0; i < n; ++i) term = term * m.at(i, perm[i]);
        total = inversions % 2 ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("determinant against permutation expansion") {
    std::mt19937_64 rng(5);
    for (const Field& f : {Field::rationals(), Field::prime(13)}) {
        for (int trial = 0; trial < 30; ++trial) {
            Matrix<Scalar> m = random_matrix(f, 4, 4, rng);
            Scalar expected = det_by_permutations(m);
            CHECK(det_bareiss(m) == expected);
            CHECK(det_gauss(m) == expected);
        }
    }
}

TEST_CASE("inverse and solve") {
    std::mt19937_64 rng(6);
    Field q = Field::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Scalar> a = random_matrix(q, 5, 5, rng);
        if (det_bareiss(a).is_zero()) continue;
        auto inv = inverse(a);
        REQUIRE(inv.has_value());
        CHECK(a * *inv == Matrix<Scalar>::identity(5, q.zero()));

        std::vector<Scalar> b;
        for (int i = 0; i < 5; ++i) b.push_back(random_scalar(q, rng));
        auto x = solve_linear(a, b);
        REQUIRE(x.has_value());
        CHECK(a.multiply_vector(*x) == b);
    }
    Matrix<Scalar> sing(2, 2, q.one());  // all ones
    CHECK(!inverse(sing).has_value());
    CHECK(det_bareiss(sing).is_zero());
    CHECK(det_gauss(sing).is_zero());
}

TEST_CASE("rank, kernel, row space") {
    std::mt19937_64 rng(7);
    Field f = Field::prime(7);
    for (int trial = 0; trial < 30; ++trial) {
        // build a matrix of known rank: product of random 6xr and rx8
        std::size_t r = 1 + rng() % 5;
        Matrix<Scalar> m = random_matrix(f, 6, r, rng) * random_matrix(f, r, 8, rng);
        std::size_t rk = rank(m);
        CHECK(rk <= r);

        Matrix<Scalar> ker = kernel_basis(m);
        CHECK(ker.rows() == 8 - rk);
        for (std::size_t i = 0; i < ker.rows(); ++i) {
            std::vector<Scalar> row;
            for (std::size_t j = 0; j < 8; ++j) row.push_back(ker.at(i, j));
            for (const Scalar& y : m.multiply_vector(row)) CHECK(y.is_zero());
        }
        CHECK(rank(ker) == ker.rows());

        Matrix<Scalar> rs = row_space_basis(m);
        CHECK(rs.rows() == rk);
        CHECK(rank(rs) == rk);

        // rank is invariant under an invertible change of basis on the left
        Matrix<Scalar> c = random_matrix(f, 6, 6, rng);
        while (!inverse(c).has_value()) c = random_matrix(f, 6, 6, rng);
        CHECK(rank(c * m) == rk);
    }
}

TEST_CASE("shape guards") {
    Field q = Field::rationals();
    Matrix<Scalar> a(2, 3, q.zero());
    Matrix<Scalar> b(2, 2, q.zero());
    CHECK_THROWS_AS(a + b, ShapeMismatch);
    CHECK_THROWS_AS(det_bareiss(a), ShapeMismatch);
    CHECK_THROWS_AS(a.multiply_vector(std::vector<Scalar>(2, q.zero())), ShapeMismatch);
    CHECK(a.transposed().rows() == 3);
    Matrix<Scalar> s = a.submatrix({1}, {0, 2});
    CHECK(s.rows() == 1);
    CHECK(s.cols() == 2);
}
