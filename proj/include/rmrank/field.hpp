#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>

#include "rmrank/f2poly.hpp"

namespace rmrank {

class Scalar;
struct QuadExtDesc;

enum class FieldKind { Prime, Rational, RatFunc2, QuadExt };

// Descriptor of a supported base field K: a prime field F_p (64-bit p), the
// rationals Q, the rational function field F_2(t), or a quadratic extension
// of one of these (used internally by the recursive decoder; quadratic
// extensions have no textual encoding and never appear in files).
class Field {
  public:
    static Field prime(std::uint64_t p);  // throws NotPrime
    static Field rationals();
    static Field rational_functions_gf2();
    static Field quadratic_extension(std::shared_ptr<const QuadExtDesc> desc);

    FieldKind kind() const { return kind_; }
    std::uint64_t prime_modulus() const;
    const QuadExtDesc& ext() const;
    const std::shared_ptr<const QuadExtDesc>& ext_ptr() const { return ext_; }

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;

    // Textual encoding: decimal residue for F_p, "num/den" for Q,
    // "hex/hex" for F_2(t). Throws ParseError (and for QuadExt always).
    Scalar parse(const std::string& text) const;

    std::string describe() const;

  private:
    Field(FieldKind k, std::uint64_t p, std::shared_ptr<const QuadExtDesc> e)
        : kind_(k), p_(p), ext_(std::move(e)) {}
    FieldKind kind_;
    std::uint64_t p_ = 0;
    std::shared_ptr<const QuadExtDesc> ext_;
};

// An element of a base field, immutable and canonical:
// residues in [0, p); rational num/den in lowest terms with positive
// denominator (mpq canonical form); GF(2)(t) fractions in lowest terms.
class Scalar {
  public:
    static Scalar make_prime(const Field& f, std::uint64_t value);  // reduces mod p
    static Scalar make_rational(mpq_class q);
    static Scalar make_ratfunc(F2Rat r);
    static Scalar make_ext(const Field& f, Scalar re, Scalar im);  // re + alpha*im

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar operator-() const;
    Scalar inv() const;  // throws DivisionByZero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar zero_like() const { return field_.zero(); }
    Scalar one_like() const { return field_.one(); }

    std::string to_string() const;

    // kind-specific accessors (throw FieldMismatch on the wrong kind)
    std::uint64_t prime_value() const;
    const mpq_class& rational_value() const;
    const F2Rat& ratfunc_value() const;
    const Scalar& ext_re() const;
    const Scalar& ext_im() const;

  private:
    struct ExtVal;
    Scalar(Field f, std::variant<std::uint64_t, mpq_class, F2Rat, std::shared_ptr<const ExtVal>> v)
        : field_(std::move(f)), v_(std::move(v)) {}
    Field field_;
    std::variant<std::uint64_t, mpq_class, F2Rat, std::shared_ptr<const ExtVal>> v_;
};

// alpha^2 = lin*alpha + con over base (Kummer: lin = 0; Artin-Schreier: lin = 1).
struct QuadExtDesc {
    Field base;
    Scalar lin;
    Scalar con;
    std::string label;
};

Field make_quadratic_extension(const Field& base, const Scalar& lin, const Scalar& con,
                               std::string label);

// Uniform residue for F_p; small random fractions for the infinite fields
// (kept small so exact determinants stay cheap in randomized tests).
Scalar random_scalar(const Field& f, std::mt19937_64& rng);

bool is_prime_u64(std::uint64_t n);

}  // namespace rmrank
