#include <random>

#include "doctest.h"
#include "rmrank/errors.hpp"
#include "rmrank/skew.hpp"

using namespace rmrank;

namespace {

ThetaPoly monomial(const Tower& tw, std::size_t idx, const AlgebraElement& c) {
    ThetaPoly p(&tw);
    p.set_coeff(idx, c);
    return p;
}

ThetaPoly random_poly(const Tower& tw, std::mt19937_64& rng) {
    ThetaPoly p(&tw);
    for (std::size_t i = 0; i < tw.degree(); ++i) p.set_coeff(i, tw.random_element(rng));
    return p;
}

AlgebraElement square_iterate(AlgebraElement x, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) x = x * x;
    return x;
}

}  // namespace

TEST_CASE("composition is the skew product") {
    TowerPtr tw = Tower::build_kummer({2, 3});
    std::mt19937_64 rng(21);

    ThetaPoly id = monomial(*tw, 0, tw->one_element());
    ThetaPoly b = random_poly(*tw, rng);
    CHECK(id.compose(b) == b);
    CHECK(b.compose(id) == b);

    // monomial rule: (a g_i) o (b g_j) = (a g_i(b)) g_{i+j}
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            AlgebraElement x = tw->random_element(rng);
            AlgebraElement y = tw->random_element(rng);
            ThetaPoly prod = monomial(*tw, i, x).compose(monomial(*tw, j, y));
            std::size_t k = group_mul_index(tw->shape(), i, j);
            CHECK(prod == monomial(*tw, k, x * y.apply_aut(i)));
        }

    // exhaustive monomial endomorphism check: endo(A o B) = endo(A) endo(B)
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t bi = 0; bi < 4; ++bi)
                for (std::size_t bj = 0; bj < 4; ++bj) {
                    ThetaPoly a = monomial(*tw, i, tw->basis_element(bi));
                    ThetaPoly b2 = monomial(*tw, j, tw->basis_element(bj));
                    CHECK(a.compose(b2).endo_matrix() == a.endo_matrix() * b2.endo_matrix());
                }
}

TEST_CASE("composition matches endomorphism product on random pairs") {
    std::mt19937_64 rng(22);
    for (TowerPtr tw : {Tower::build_finite(2, Shape({3, 2})),
                        Tower::build_artin_schreier({F2Rat::from_string("2")})}) {
        for (int trial = 0; trial < 15; ++trial) {
            ThetaPoly a = random_poly(*tw, rng);
            ThetaPoly b = random_poly(*tw, rng);
            CHECK(a.compose(b).endo_matrix() == a.endo_matrix() * b.endo_matrix());
            CHECK(a.compose(b).evaluate(tw->basis_element(1)) ==
                  a.evaluate(b.evaluate(tw->basis_element(1))));
        }
    }
}

TEST_CASE("evaluation") {
    TowerPtr tw = Tower::build_kummer({2, 3, 5});
    std::mt19937_64 rng(23);
    AlgebraElement r2 = tw->basis_element(1);

    ThetaPoly id = monomial(*tw, 0, tw->one_element());
    CHECK(id.evaluate(r2) == r2);

    ThetaPoly theta1 = monomial(*tw, phi(tw->shape(), {1, 0, 0}), tw->one_element());
    CHECK(theta1.evaluate(r2) == -r2);

    ThetaPoly a = random_poly(*tw, rng);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement x = tw->random_element(rng);
        AlgebraElement y = tw->random_element(rng);
        Scalar lam = random_scalar(tw->base_field(), rng);
        CHECK(a.evaluate(x.scaled(lam) + y) == a.evaluate(x).scaled(lam) + a.evaluate(y));
    }
}

TEST_CASE("endomorphism matrix and rank") {
    TowerPtr tw = Tower::build_finite(2, Shape({3, 2}));
    ThetaPoly id = monomial(*tw, 0, tw->one_element());
    CHECK(id.endo_matrix() == Matrix<Scalar>::identity(6, tw->base_field().zero()));
    CHECK(id.rank() == 6);

    // the trace element maps everything into K, so its rank is 1
    ThetaPoly tr(tw.get());
    for (std::size_t i = 0; i < 6; ++i) tr.set_coeff(i, tw->one_element());
    CHECK(tr.rank() == 1);
    CHECK(ThetaPoly(tw.get()).rank() == 0);
}

TEST_CASE("theta degree") {
    TowerPtr tw = Tower::build_kummer({2, 3});
    CHECK(!ThetaPoly(tw.get()).theta_degree().has_value());
    CHECK(monomial(*tw, 0, tw->one_element()).theta_degree() == 0);
    CHECK(monomial(*tw, phi(tw->shape(), {1, 0}), tw->one_element()).theta_degree() == 1);
    ThetaPoly p = monomial(*tw, phi(tw->shape(), {1, 1}), tw->one_element());
    CHECK(p.theta_degree() == 2);
}

TEST_CASE("dickson matrix layout") {
    // cyclic tower: the q-power circulant — column j applies Frob^j to the
    // j-step downward shift of the coefficient column
    TowerPtr tw = Tower::build_finite(2, Shape({7}));
    std::mt19937_64 rng(24);
    ThetaPoly a = random_poly(*tw, rng);
    Matrix<AlgebraElement> d = a.dickson();
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(d.at(i, 0) == a.coeff(i));
        for (std::size_t j = 0; j < 7; ++j)
            CHECK(d.at(i, j) == square_iterate(a.coeff((i + 7 - j) % 7), j));
    }

    // constant polynomial: diagonal of conjugates
    TowerPtr kt = Tower::build_kummer({2, 3});
    AlgebraElement c = kt->random_element(rng);
    Matrix<AlgebraElement> dc = monomial(*kt, 0, c).dickson();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j)
                CHECK(dc.at(i, j) == c.apply_aut(j));
            else
                CHECK(dc.at(i, j).is_zero());
        }
}

TEST_CASE("dickson columns represent the conjugated endomorphism") {
    // gamma_j(A(x)) = sum_i D(i,j) gamma_i(x) for all x: pins every entry
    std::mt19937_64 rng(25);
    for (TowerPtr tw : {Tower::build_kummer({2, 3}), Tower::build_finite(2, Shape({3, 2}))}) {
        ThetaPoly a = random_poly(*tw, rng);
        Matrix<AlgebraElement> d = a.dickson();
        for (int trial = 0; trial < 5; ++trial) {
            AlgebraElement x = tw->random_element(rng);
            for (std::size_t j = 0; j < tw->degree(); ++j) {
                AlgebraElement lhs = a.evaluate(x).apply_aut(j);
                AlgebraElement rhs = tw->zero_element();
                for (std::size_t i = 0; i < tw->degree(); ++i)
                    rhs = rhs + d.at(i, j) * x.apply_aut(i);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("rank of the polynomial equals rank of its dickson matrix") {
    std::mt19937_64 rng(26);
    for (TowerPtr tw : {Tower::build_kummer({2, 3}), Tower::build_finite(2, Shape({3, 2}))}) {
        for (int trial = 0; trial < 10; ++trial) {
            ThetaPoly a = random_poly(*tw, rng);
            CHECK(a.rank() == rank(a.dickson()));
        }
        for (std::size_t t = 1; t <= tw->degree() / 2; ++t) {
            ThetaPoly e = random_rank_error(*tw, t, rng);
            CHECK(e.rank() == t);
            CHECK(rank(e.dickson()) == t);
        }
    }
}

TEST_CASE("rank error minors are invertible") {
    std::mt19937_64 rng(27);

    // exhaustive over all 2x2 minors on a degree-4 tower
    TowerPtr kt = Tower::build_kummer({2, 3});
    ThetaPoly e2 = random_rank_error(*kt, 2, rng);
    Matrix<AlgebraElement> d2 = e2.dickson();
    DetAlgo algo = det_algo_for(kt->base_field());
    for (std::size_t r1 = 0; r1 < 4; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < 4; ++r2)
            for (std::size_t c1 = 0; c1 < 4; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < 4; ++c2)
                    CHECK(!det(d2.submatrix({r1, r2}, {c1, c2}), algo).is_zero());

    // sampled t x t minors on the degree-15 tower
    TowerPtr ft = Tower::build_finite(2, Shape({5, 3}));
    for (std::size_t t : {std::size_t{2}, std::size_t{4}}) {
        ThetaPoly e = random_rank_error(*ft, t, rng);
        Matrix<AlgebraElement> d = e.dickson();
        DetAlgo falgo = det_algo_for(ft->base_field());
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::size_t> rows, cols;
            while (rows.size() < t) {
                std::size_t r = rng() % 15;
                if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(r);
            }
            while (cols.size() < t) {
                std::size_t c = rng() % 15;
                if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
            }
            CHECK(!det(d.submatrix(rows, cols), falgo).is_zero());
        }
    }
}
