#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rmrank {

// Shape n = (n_1,...,n_m) of the abelian group Z/n_1 x ... x Z/n_m.
class Shape {
  public:
    explicit Shape(std::vector<std::uint32_t> n);  // throws InvalidShape unless all n_i >= 2

    std::size_t m() const { return n_.size(); }
    std::uint32_t operator[](std::size_t i) const { return n_[i]; }
    const std::vector<std::uint32_t>& factors() const { return n_; }
    std::size_t order() const { return order_; }  // N = prod n_i

    bool non_increasing() const;
    bool is_binary() const;  // all factors equal 2

    bool operator==(const Shape& o) const { return n_ == o.n_; }
    bool operator!=(const Shape& o) const { return !(*this == o); }

  private:
    std::vector<std::uint32_t> n_;
    std::size_t order_;
};

// Exponent vector (i_1,...,i_m), 0 <= i_k < n_k.
using Exponents = std::vector<std::uint32_t>;

// Mixed-radix bijection Lambda(n) <-> [0, N-1]:
// phi(a) = a_1 + a_2 n_1 + a_3 n_1 n_2 + ...
std::size_t phi(const Shape& n, const Exponents& a);    // throws OutOfRange on bad exponents
Exponents phi_inv(const Shape& n, std::size_t x);       // throws OutOfRange

int degree(const Exponents& a);  // |a| = a_1 + ... + a_m

// Reverse-lexicographic comparison: decided by the last differing coordinate.
// Returns -1, 0, or 1. Agrees with integer order through phi.
int revlex_cmp(const Shape& n, const Exponents& a, const Exponents& b);  // throws ShapeMismatch

struct AddResult {
    Exponents sum;    // componentwise mod n
    bool carry_free;  // true iff a_k + b_k < n_k for all k; then phi(sum) = phi(a) + phi(b)
};
AddResult group_add(const Shape& n, const Exponents& a, const Exponents& b);

// Index arithmetic on phi-indices of group elements.
std::size_t group_mul_index(const Shape& n, std::size_t i, std::size_t j);  // gamma_i gamma_j
std::size_t group_inverse_index(const Shape& n, std::size_t i);             // gamma_i^{-1}

// The unique k with gamma_j gamma_k = gamma_i, i.e.
// phi_inv(k) = phi_inv(i) - phi_inv(j) componentwise mod n.
std::size_t sigma_inverse(const Shape& n, std::size_t j, std::size_t i);

}  // namespace rmrank
