#include <random>

#include "doctest.h"
#include "rmrank/errors.hpp"
#include "rmrank/tower.hpp"

using namespace rmrank;

namespace {

AlgebraElement pow_element(AlgebraElement x, std::uint64_t e) {
    AlgebraElement r = x.one_like();
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

void check_all_gammas_distinct(const Tower& tw) {
    for (std::size_t i = 0; i < tw.degree(); ++i)
        for (std::size_t j = i + 1; j < tw.degree(); ++j)
            CHECK(tw.gamma_aut(i) != tw.gamma_aut(j));
}

void check_automorphism_laws(const TowerPtr& tw, std::mt19937_64& rng) {
    for (int trial = 0; trial < 10; ++trial) {
        AlgebraElement x = tw->random_element(rng);
        AlgebraElement y = tw->random_element(rng);
        std::size_t g = rng() % tw->degree();
        CHECK(x.apply_aut(0) == x);
        CHECK((x * y).apply_aut(g) == x.apply_aut(g) * y.apply_aut(g));
        CHECK((x + y).apply_aut(g) == x.apply_aut(g) + y.apply_aut(g));
        CHECK(tw->trace(x.apply_aut(g)) == tw->trace(x));
        if (!y.is_zero()) CHECK((x * y) * y.inv() == x);
    }
    // trace matches its definition as the sum over the group
    AlgebraElement x = tw->random_element(rng);
    AlgebraElement s = tw->zero_element();
    for (std::size_t g = 0; g < tw->degree(); ++g) s = s + x.apply_aut(g);
    CHECK(s == tw->from_base(tw->trace(x)));
}

void check_dual_basis(const TowerPtr& tw) {
    auto duals = tw->dual_basis();
    for (std::size_t i = 0; i < tw->degree(); ++i)
        for (std::size_t j = 0; j < tw->degree(); ++j) {
            Scalar tr = tw->trace(tw->basis_element(i) * duals[j]);
            CHECK(tr == (i == j ? tw->base_field().one() : tw->base_field().zero()));
        }
}

}  // namespace

TEST_CASE("finite tower with shape (3,2)") {
    TowerPtr tw = Tower::build_finite(2, Shape({3, 2}));
    CHECK(tw->degree() == 6);
    CHECK(tw->family() == TowerFamily::Finite);

    const auto& a0 = tw->generator_aut(0);
    const auto& a1 = tw->generator_aut(1);
    auto id = Matrix<Scalar>::identity(6, tw->base_field().zero());
    CHECK(a0 != id);
    CHECK(a0 * a0 != id);
    CHECK(a0 * a0 * a0 == id);  // order 3
    CHECK(a1 != id);
    CHECK(a1 * a1 == id);  // order 2
    check_all_gammas_distinct(*tw);

    // generators are the canonical Frobenius powers: theta_1 = Frob^4 (the
    // power that is 1 mod 3 and 0 mod 2), theta_2 = Frob^3
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 8; ++trial) {
        AlgebraElement x = tw->random_element(rng);
        CHECK(x.apply_aut(phi(tw->shape(), {1, 0})) == pow_element(x, 1 << 4));
        CHECK(x.apply_aut(phi(tw->shape(), {0, 1})) == pow_element(x, 1 << 3));
    }
    check_automorphism_laws(tw, rng);
    check_dual_basis(tw);
}

TEST_CASE("cyclic finite tower is the classical setting") {
    TowerPtr tw = Tower::build_finite(2, Shape({7}));
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 8; ++trial) {
        AlgebraElement x = tw->random_element(rng);
        CHECK(x.apply_aut(1) == x * x);  // theta = Frobenius
    }
    check_automorphism_laws(tw, rng);
}

TEST_CASE("finite tower rejects non-coprime shapes") {
    CHECK_THROWS_AS(Tower::build_finite(2, Shape({2, 2})), NonCoprimeShape);
    CHECK_THROWS_AS(Tower::build_finite(3, Shape({6, 3})), NonCoprimeShape);
}

TEST_CASE("finite tower modulus is checked and reproducible") {
    TowerPtr tw = Tower::build_finite(2, Shape({3, 2}), 99);
    TowerPtr again =
        Tower::build_finite_with_modulus(2, Shape({3, 2}), tw->finite_modulus(), tw->finite_seed());
    CHECK(again->finite_modulus() == tw->finite_modulus());
    CHECK(again->mul_table(3) == tw->mul_table(3));
    // x^2 is reducible
    CHECK_THROWS_AS(Tower::build_finite_with_modulus(2, Shape({2}), {0, 0, 1}, 1),
                    NoIrreducibleFound);
    CHECK_THROWS_AS(Tower::build_finite_with_modulus(2, Shape({2}), {1, 1}, 1), NoIrreducibleFound);
}

TEST_CASE("trace over F_4 is x + x^2") {
    TowerPtr tw = Tower::build_finite(2, Shape({2}));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        AlgebraElement x = tw->random_element(rng);
        CHECK(tw->from_base(tw->trace(x)) == x + x * x);
    }
}

TEST_CASE("multiquadratic rational tower (2,3,5)") {
    TowerPtr tw = Tower::build_kummer({2, 3, 5});
    CHECK(tw->degree() == 8);
    CHECK(tw->basis_labels() ==
          std::vector<std::string>{"1", "sqrt(2)", "sqrt(3)", "sqrt(6)", "sqrt(5)", "sqrt(10)",
                                   "sqrt(15)", "sqrt(30)"});

    AlgebraElement r2 = tw->basis_element(1);
    AlgebraElement r3 = tw->basis_element(2);
    AlgebraElement r5 = tw->basis_element(4);
    CHECK(r2 * r3 == tw->basis_element(3));                  // sqrt(6)
    CHECK(r2 * r5 == tw->basis_element(5));                  // sqrt(10)
    CHECK(r2 * r2 == tw->from_base(tw->base_field().from_int(2)));
    CHECK(r2 * r3 * r5 == tw->basis_element(7));             // sqrt(30)

    // theta_1 flips sqrt(2) and fixes sqrt(3), sqrt(5)
    std::size_t t1 = phi(tw->shape(), {1, 0, 0});
    CHECK(r2.apply_aut(t1) == -r2);
    CHECK(r3.apply_aut(t1) == r3);
    CHECK(r5.apply_aut(t1) == r5);

    CHECK(tw->trace(tw->one_element()) == tw->base_field().from_int(8));
    CHECK(tw->trace(r2) == tw->base_field().zero());

    check_all_gammas_distinct(*tw);
    std::mt19937_64 rng(4);
    check_automorphism_laws(tw, rng);
    check_dual_basis(tw);

    // composition of composite automorphisms follows the index group law
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::size_t k = sigma_inverse(tw->shape(), j, i);
            CHECK(tw->gamma_aut(j) * tw->gamma_aut(k) == tw->gamma_aut(i));
        }
}

TEST_CASE("dependent radicands are rejected") {
    CHECK_THROWS_AS(Tower::build_kummer({2, 8}), DependentRadicands);    // 2*8 = 16
    CHECK_THROWS_AS(Tower::build_kummer({4}), DependentRadicands);      // already square
    CHECK_THROWS_AS(Tower::build_kummer({2, 3, 6}), DependentRadicands);  // 2*3*6 = 36
    CHECK_THROWS_AS(Tower::build_kummer({0, 3}), DependentRadicands);
    CHECK_THROWS_AS(Tower::build_kummer({mpq_class(9, 4)}), DependentRadicands);
}

TEST_CASE("single quadratic tower") {
    TowerPtr tw = Tower::build_kummer({2});
    AlgebraElement r2 = tw->basis_element(1);
    CHECK(r2.apply_aut(1) == -r2);
    Field q = tw->base_field();
    AlgebraElement x = tw->element({q.one(), q.one()});  // 1 + sqrt(2)
    CHECK(x.inv() == tw->element({q.from_int(-1), q.one()}));
    CHECK_THROWS_AS(tw->zero_element().inv(), ZeroInverse);
    // negative radicands are fine: Q(i)
    TowerPtr gauss = Tower::build_kummer({-1});
    AlgebraElement i = gauss->basis_element(1);
    CHECK(i * i == -gauss->one_element());
}

TEST_CASE("artin-schreier towers") {
    Field k = Field::rational_functions_gf2();
    F2Rat t = F2Rat::from_string("2");

    TowerPtr tw = Tower::build_artin_schreier({t});
    CHECK(tw->degree() == 2);
    AlgebraElement alpha = tw->basis_element(1);
    CHECK(alpha * alpha == tw->element({k.parse("2"), k.one()}));  // alpha + t
    CHECK(alpha.apply_aut(1) == tw->element({k.one(), k.one()}));  // alpha + 1

    TowerPtr tw2 = Tower::build_artin_schreier({t, F2Rat::from_string("8")});
    CHECK(tw2->degree() == 4);
    CHECK(tw2->basis_labels() ==
          std::vector<std::string>{"1", "alpha1", "alpha2", "alpha1*alpha2"});
    check_all_gammas_distinct(*tw2);
    std::mt19937_64 rng(5);
    check_automorphism_laws(tw2, rng);
    check_dual_basis(tw2);

    // the constant-field extension F_4(t) is a legal degree-2 tower
    TowerPtr constant = Tower::build_artin_schreier({F2Rat::from_string("1")});
    CHECK(constant->degree() == 2);

    CHECK_THROWS_AS(Tower::build_artin_schreier({F2Rat::from_string("6")}),
                    ReducibleArtinSchreier);  // t^2 + t = image of t
    CHECK_THROWS_AS(Tower::build_artin_schreier({t, F2Rat::from_string("4")}),
                    DependentExtensions);  // t + t^2 is an image
}

TEST_CASE("expansion matrix") {
    TowerPtr tw = Tower::build_kummer({2, 3});
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < 4; ++i) basis.push_back(tw->basis_element(i));
    CHECK(exp_basis(basis) == Matrix<Scalar>::identity(4, tw->base_field().zero()));

    AlgebraElement r2 = tw->basis_element(1);
    std::vector<AlgebraElement> v = {tw->one_element(), r2, tw->one_element() + r2};
    CHECK(coordinate_rank(v) == 2);
    CHECK(coordinate_rank({tw->zero_element()}) == 0);
    CHECK_THROWS_AS(exp_basis({}), LengthMismatch);
}

TEST_CASE("foreign elements are rejected") {
    TowerPtr a = Tower::build_kummer({2});
    TowerPtr b = Tower::build_kummer({3});
    CHECK_THROWS_AS(a->one_element() + b->one_element(), TowerMismatch);
    CHECK_THROWS_AS(a->trace(b->one_element()), TowerMismatch);
    CHECK_THROWS_AS(a->from_base(Field::prime(5).one()), FieldMismatch);
}
