#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rmrank {

// Polynomial over GF(2), bit-packed: bit i (of word i/64) is the coefficient
// of t^i. Word vector is kept trimmed, so equal polynomials compare equal.
class F2Poly {
  public:
    F2Poly() = default;  // zero polynomial

    static F2Poly one();
    static F2Poly t();                                  // the indeterminate
    static F2Poly monomial(std::size_t exponent);       // t^exponent
    static F2Poly from_hex(const std::string& hex);     // throws ParseError

    // degree of the zero polynomial is -1
    int degree() const;
    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool v);

    // Hex of the coefficient bitstring, LSB = constant term ("0" for zero).
    std::string to_hex() const;

    friend F2Poly operator+(const F2Poly& a, const F2Poly& b);  // = subtraction in char 2
    friend F2Poly operator*(const F2Poly& a, const F2Poly& b);

    // quotient and remainder; b must be nonzero
    static std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& b);
    static F2Poly gcd(F2Poly a, F2Poly b);

    // A polynomial over GF(2) is a square iff every exponent is even.
    bool is_square() const;
    F2Poly sqrt() const;  // precondition: is_square()

    F2Poly shifted(std::size_t k) const;  // multiply by t^k

    bool operator==(const F2Poly&) const = default;

  private:
    std::vector<std::uint64_t> w_;
    void trim();
};

// Rational function over GF(2): num/den in lowest terms, den nonzero. Over
// GF(2) every nonzero polynomial is monic, so lowest terms is canonical and
// equality is representation equality.
class F2Rat {
  public:
    F2Rat() : num_(), den_(F2Poly::one()) {}  // zero
    F2Rat(F2Poly num, F2Poly den);            // reduces; throws DivisionByZero if den = 0
    explicit F2Rat(F2Poly num) : num_(std::move(num)), den_(F2Poly::one()) {}

    static F2Rat from_string(const std::string& s);  // "hex/hex" or "hex"

    const F2Poly& num() const { return num_; }
    const F2Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend F2Rat operator+(const F2Rat& a, const F2Rat& b);
    friend F2Rat operator*(const F2Rat& a, const F2Rat& b);
    F2Rat inv() const;  // throws DivisionByZero on zero

    std::string to_string() const;  // always "hex/hex"

    bool operator==(const F2Rat&) const = default;

  private:
    F2Poly num_, den_;
};

// Decides whether a = b^2 + b for some rational function b over GF(2).
// The map b -> b^2 + b is GF(2)-linear, so this is a linear solve; used for
// the Artin-Schreier irreducibility and independence checks.
bool is_artin_schreier_split(const F2Rat& a);

}  // namespace rmrank
