#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rmrank/field.hpp"
#include "rmrank/group.hpp"
#include "rmrank/matrix.hpp"

namespace rmrank {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

// Element of L as a coordinate vector over K in the tower basis B.
// Holds a plain pointer to its tower; towers outlive their elements.
class AlgebraElement {
  public:
    AlgebraElement(const Tower* tower, std::vector<Scalar> coords);

    const Tower* tower() const { return tower_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    bool is_one() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator/(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement inv() const;  // throws ZeroInverse
    AlgebraElement scaled(const Scalar& c) const;

    // Action of the composite automorphism gamma_idx (phi order).
    AlgebraElement apply_aut(std::size_t gamma_idx) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement zero_like() const;
    AlgebraElement one_like() const;
    std::string to_string() const;

  private:
    const Tower* tower_;
    std::vector<Scalar> coords_;
};

enum class TowerFamily { Finite, Kummer, ArtinSchreier };

// The Galois extension L/K with abelian group of the given shape, presented
// as a K-algebra by structure constants plus the generator automorphisms.
class Tower {
    struct Private {};

  public:
    // L = F_{p^N} over F_p with N = prod n_i; requires pairwise coprime n_i
    // so the Frobenius group splits as the product of the cyclic factors.
    // Throws NonCoprimeShape, NoIrreducibleFound.
    static TowerPtr build_finite(std::uint64_t p, Shape shape, std::uint64_t seed = 1);

    // Same, but uses a caller-supplied irreducible modulus (checked).
    static TowerPtr build_finite_with_modulus(std::uint64_t p, Shape shape,
                                              std::vector<std::uint64_t> modulus,
                                              std::uint64_t seed);

    // L = Q(sqrt(a_1),...,sqrt(a_m)); requires all nonempty subset products
    // of the radicands to be non-squares. Throws DependentRadicands.
    static TowerPtr build_kummer(const std::vector<mpq_class>& radicands);

    // L = F_2(t)(alpha_1,...,alpha_m), alpha_i^2 = alpha_i + a_i; requires
    // all nonempty subset sums of the radicands to avoid {b^2 + b}.
    // Throws ReducibleArtinSchreier, DependentExtensions.
    static TowerPtr build_artin_schreier(const std::vector<F2Rat>& radicands);

    // Degree-2^m tower over an arbitrary base field. Used by the recursive
    // decoder to re-root a binary tower at an intermediate field; performs
    // the structural validation but no independence check.
    static TowerPtr build_binary_over(const Field& base, TowerFamily fam,
                                      std::vector<Scalar> radicands);

    Tower(Private, Field base, Shape shape, TowerFamily fam);

    const Field& base_field() const { return base_; }
    const Shape& shape() const { return shape_; }
    std::size_t degree() const { return shape_.order(); }  // N
    TowerFamily family() const { return family_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }

    const Matrix<Scalar>& mul_table(std::size_t j) const { return mul_tables_[j]; }
    const Matrix<Scalar>& generator_aut(std::size_t i) const { return aut_matrices_[i]; }
    const Matrix<Scalar>& gamma_aut(std::size_t idx) const { return gamma_[idx]; }

    // Tr(x) = sum over G of g(x), as a K-linear functional on coordinates.
    const std::vector<Scalar>& trace_functional() const { return trace_functional_; }
    Scalar trace(const AlgebraElement& x) const;
    // B* with Tr(beta_i beta*_j) = delta_ij.
    std::vector<AlgebraElement> dual_basis() const;

    // Inverse of the evaluation matrix (gamma_i(beta_j))_{j,i}; solves
    // interpolation of a theta-polynomial from its values on B. Lazy, cached.
    const Matrix<AlgebraElement>& interpolation_inverse() const;

    AlgebraElement zero_element() const;
    AlgebraElement one_element() const;
    AlgebraElement basis_element(std::size_t j) const;
    AlgebraElement from_base(const Scalar& c) const;  // c * 1
    AlgebraElement element(std::vector<Scalar> coords) const;
    AlgebraElement random_element(std::mt19937_64& rng) const;

    // family payload, for serialization
    std::uint64_t finite_p() const;
    const std::vector<std::uint64_t>& finite_modulus() const;
    std::uint64_t finite_seed() const;
    const std::vector<Scalar>& radicands() const;

  private:
    friend class AlgebraElement;
    void finish_construction();  // gammas, distinctness, trace, dual basis

    Field base_;
    Shape shape_;
    TowerFamily family_;
    std::vector<std::string> basis_labels_;
    std::vector<Matrix<Scalar>> mul_tables_;
    std::vector<Matrix<Scalar>> aut_matrices_;
    std::vector<Matrix<Scalar>> gamma_;

    std::vector<Scalar> trace_functional_;
    std::optional<Matrix<Scalar>> gram_inverse_;

    // finite family payload
    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t seed_ = 0;
    // kummer / artin-schreier payload
    std::vector<Scalar> radicands_;

    mutable std::once_flag interp_once_;
    mutable std::unique_ptr<Matrix<AlgebraElement>> interp_inv_;
};

// Exp_B: N x n matrix over K; column j holds the coordinates of v_j.
Matrix<Scalar> exp_basis(const std::vector<AlgebraElement>& v);

// K-dimension of the span of v (rank of Exp_B(v)).
std::size_t coordinate_rank(const std::vector<AlgebraElement>& v);

}  // namespace rmrank
