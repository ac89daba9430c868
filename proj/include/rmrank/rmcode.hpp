#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "rmrank/skew.hpp"
#include "rmrank/tower.hpp"

namespace rmrank {

// Parameters of the order-r code on a non-increasing shape. (s, ell) is the
// unique decomposition r = sum_{i=s+1}^m (n_i - 1) + ell with 0 <= ell < n_s,
// which drives the minimum distance d = (n_s - ell) * prod_{i<s} n_i.
struct CodeParams {
    std::size_t N = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t s = 0;  // 1-based factor index
    std::uint32_t ell = 0;
};

// Throws InvalidShape unless n is non-increasing; OrderOutOfRange unless
// 0 <= r <= sum (n_i - 1).
CodeParams code_params(const Shape& n, long r);

// A Reed-Muller code instance over a tower: the span of the monomials
// gamma_i with |phi_inv(i)| <= r, as theta-polynomials or as length-N
// vectors of evaluations at the basis.
class CodeSpec {
  public:
    CodeSpec(TowerPtr tower, long r);

    const TowerPtr& tower() const { return tower_; }
    long r() const { return r_; }
    const CodeParams& params() const { return params_; }
    // phi indices of the monomials of degree <= r, ascending (= revlex order)
    const std::vector<std::size_t>& monomials() const { return monomials_; }

    ThetaPoly encode(const std::vector<AlgebraElement>& message) const;  // LengthMismatch
    std::vector<AlgebraElement> extract_message(const ThetaPoly& c) const;

    // k x N over L: row i = evaluations of the i-th monomial at the basis
    Matrix<AlgebraElement> generator_matrix() const;
    // (N-k) x N over L with generator * dual^T = 0; cached
    const Matrix<AlgebraElement>& dual_generator() const;

    bool is_codeword(const std::vector<AlgebraElement>& y) const;  // LengthMismatch
    bool is_codeword(const ThetaPoly& c) const;

  private:
    TowerPtr tower_;
    long r_;
    CodeParams params_;
    std::vector<std::size_t> monomials_;
    mutable std::once_flag dual_once_;
    mutable std::unique_ptr<Matrix<AlgebraElement>> dual_;
};

// Evaluations (C(beta_1), ..., C(beta_N)).
std::vector<AlgebraElement> evaluate_at_basis(const ThetaPoly& c);

// Coefficient vector of the theta-polynomial taking the given values at the
// basis (the inverse of evaluate_at_basis).
ThetaPoly interpolate_at_basis(const Tower& tower, const std::vector<AlgebraElement>& values);

// Generator of the order-r code on a (2,...,2) shape, assembled by the
// two-block recursion over the quadratic sub-extensions; its row space
// equals generator_matrix of the same code. Throws NotBinaryShape.
Matrix<AlgebraElement> binary_generator(const Tower& tower, long r);

// Dual-side companion: N-k rows annihilating the order-(m-s-1) code; the
// degenerate s = m case yields an invertible N x N matrix. Throws
// NotBinaryShape; OrderOutOfRange unless 0 <= s <= m.
Matrix<AlgebraElement> binary_dual_generator(const Tower& tower, long s);

}  // namespace rmrank
