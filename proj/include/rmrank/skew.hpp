#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rmrank/tower.hpp"

namespace rmrank {

// Element of the skew group algebra L[G]: sum of a_i gamma_i over the phi
// order, coefficients in L. Acts on L as the K-endomorphism
// x -> sum a_i gamma_i(x).
class ThetaPoly {
  public:
    explicit ThetaPoly(const Tower* tower);  // zero
    ThetaPoly(const Tower* tower, std::vector<AlgebraElement> coeffs);

    const Tower* tower() const { return tower_; }
    const std::vector<AlgebraElement>& coeffs() const { return coeffs_; }
    const AlgebraElement& coeff(std::size_t i) const { return coeffs_[i]; }
    void set_coeff(std::size_t i, AlgebraElement v);

    bool is_zero() const;

    // max |phi_inv(i)| over nonzero coefficients; nullopt for the zero
    // polynomial (treated as lying in every degree bound).
    std::optional<int> theta_degree() const;

    ThetaPoly operator+(const ThetaPoly& o) const;
    ThetaPoly operator-(const ThetaPoly& o) const;
    ThetaPoly scaled(const AlgebraElement& c) const;  // c * A (left coefficient scale)

    // skew product: (a gamma_i) o (b gamma_j) = a gamma_i(b) gamma_{i+j}
    ThetaPoly compose(const ThetaPoly& o) const;

    AlgebraElement evaluate(const AlgebraElement& x) const;

    // column j = coordinates of A(beta_j); the induced K-endomorphism
    Matrix<Scalar> endo_matrix() const;
    std::size_t rank() const;

    // G-Dickson matrix over L: entry (i,j) = gamma_j(a_{sigma_j^{-1}(i)})
    Matrix<AlgebraElement> dickson() const;

    bool operator==(const ThetaPoly& o) const;
    bool operator!=(const ThetaPoly& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    const Tower* tower_;
    std::vector<AlgebraElement> coeffs_;
};

// Trace-form element of rank exactly t: sum_k alpha_k T_{beta_k} with both
// scalar tuples K-linearly independent, T_beta = sum_i gamma_i(beta) gamma_i.
// Resamples until independent (bounded retries).
ThetaPoly random_rank_error(const Tower& tower, std::size_t t, std::mt19937_64& rng);

// Elimination strategy for exact determinants over this base field:
// fraction-free Bareiss keeps coefficient growth polynomial over the infinite
// fields; plain Gaussian elimination is cheaper over prime fields.
DetAlgo det_algo_for(const Field& base);

}  // namespace rmrank
