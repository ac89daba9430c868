#include "rmrank/field.hpp"

#include <utility>

#include "rmrank/errors.hpp"
#include "rmrank/opcount.hpp"

namespace rmrank {

struct Scalar::ExtVal {
    Scalar re;
    Scalar im;
};

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t addmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t r = a + b;
    if (r < a || r >= p) r -= p;
    return r;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin witness set for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p));
    return Field(FieldKind::Prime, p, nullptr);
}

Field Field::rationals() { return Field(FieldKind::Rational, 0, nullptr); }

Field Field::rational_functions_gf2() { return Field(FieldKind::RatFunc2, 0, nullptr); }

Field Field::quadratic_extension(std::shared_ptr<const QuadExtDesc> desc) {
    if (!desc) throw InternalError("null quadratic extension descriptor");
    return Field(FieldKind::QuadExt, 0, std::move(desc));
}

std::uint64_t Field::prime_modulus() const {
    if (kind_ != FieldKind::Prime) throw FieldMismatch("prime_modulus on " + describe());
    return p_;
}

const QuadExtDesc& Field::ext() const {
    if (kind_ != FieldKind::QuadExt) throw FieldMismatch("ext on " + describe());
    return *ext_;
}

bool Field::operator==(const Field& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case FieldKind::Prime:
            return p_ == other.p_;
        case FieldKind::Rational:
        case FieldKind::RatFunc2:
            return true;
        case FieldKind::QuadExt:
            if (ext_ == other.ext_) return true;
            return ext_->base == other.ext_->base && ext_->lin == other.ext_->lin &&
                   ext_->con == other.ext_->con;
    }
    return false;
}

Scalar Field::zero() const {
    switch (kind_) {
        case FieldKind::Prime:
            return Scalar::make_prime(*this, 0);
        case FieldKind::Rational:
            return Scalar::make_rational(mpq_class(0));
        case FieldKind::RatFunc2:
            return Scalar::make_ratfunc(F2Rat());
        case FieldKind::QuadExt:
            return Scalar::make_ext(*this, ext_->base.zero(), ext_->base.zero());
    }
    throw InternalError("unreachable field kind");
}

Scalar Field::one() const {
    switch (kind_) {
        case FieldKind::Prime:
            return Scalar::make_prime(*this, 1);
        case FieldKind::Rational:
            return Scalar::make_rational(mpq_class(1));
        case FieldKind::RatFunc2:
            return Scalar::make_ratfunc(F2Rat(F2Poly::one()));
        case FieldKind::QuadExt:
            return Scalar::make_ext(*this, ext_->base.one(), ext_->base.zero());
    }
    throw InternalError("unreachable field kind");
}

Scalar Field::from_int(long v) const {
    switch (kind_) {
        case FieldKind::Prime: {
            long long r = static_cast<long long>(v) % static_cast<long long>(p_);
            if (r < 0) r += static_cast<long long>(p_);
            return Scalar::make_prime(*this, static_cast<std::uint64_t>(r));
        }
        case FieldKind::Rational:
            return Scalar::make_rational(mpq_class(v));
        case FieldKind::RatFunc2:
            return (v % 2 == 0) ? zero() : one();
        case FieldKind::QuadExt:
            return Scalar::make_ext(*this, ext_->base.from_int(v), ext_->base.zero());
    }
    throw InternalError("unreachable field kind");
}

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw ParseError("empty scalar literal");
    switch (kind_) {
        case FieldKind::Prime: {
            bool negative = text[0] == '-';
            std::size_t start = negative || text[0] == '+' ? 1 : 0;
            if (start == text.size()) throw ParseError("bad residue: '" + text + "'");
            std::uint64_t acc = 0;
            for (std::size_t i = start; i < text.size(); ++i) {
                char c = text[i];
                if (c < '0' || c > '9') throw ParseError("bad residue: '" + text + "'");
                acc = addmod_u64(mulmod_u64(acc, 10 % p_, p_), static_cast<std::uint64_t>(c - '0') % p_, p_);
            }
            if (negative && acc) acc = p_ - acc;
            return Scalar::make_prime(*this, acc);
        }
        case FieldKind::Rational: {
            mpq_class q;
            if (q.set_str(text, 10) != 0) throw ParseError("bad rational: '" + text + "'");
            if (q.get_den() == 0) throw DivisionByZero("zero denominator: '" + text + "'");
            q.canonicalize();
            return Scalar::make_rational(std::move(q));
        }
        case FieldKind::RatFunc2:
            return Scalar::make_ratfunc(F2Rat::from_string(text));
        case FieldKind::QuadExt:
            throw ParseError("extension scalars have no textual encoding");
    }
    throw InternalError("unreachable field kind");
}

std::string Field::describe() const {
    switch (kind_) {
        case FieldKind::Prime:
            return "F_" + std::to_string(p_);
        case FieldKind::Rational:
            return "Q";
        case FieldKind::RatFunc2:
            return "F_2(t)";
        case FieldKind::QuadExt:
            return ext_->base.describe() + "(" + ext_->label + ")";
    }
    return "?";
}

Field make_quadratic_extension(const Field& base, const Scalar& lin, const Scalar& con,
                               std::string label) {
    if (lin.field() != base || con.field() != base)
        throw FieldMismatch("extension coefficients must lie in the base field");
    auto desc = std::make_shared<QuadExtDesc>(QuadExtDesc{base, lin, con, std::move(label)});
    return Field::quadratic_extension(std::move(desc));
}

Scalar Scalar::make_prime(const Field& f, std::uint64_t value) {
    return Scalar(f, value % f.prime_modulus());
}

Scalar Scalar::make_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::make_ratfunc(F2Rat r) { return Scalar(Field::rational_functions_gf2(), std::move(r)); }

Scalar Scalar::make_ext(const Field& f, Scalar re, Scalar im) {
    const QuadExtDesc& d = f.ext();
    if (re.field() != d.base || im.field() != d.base)
        throw FieldMismatch("extension components from the wrong field");
    return Scalar(f, std::make_shared<const ExtVal>(ExtVal{std::move(re), std::move(im)}));
}

bool Scalar::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::Prime:
            return std::get<std::uint64_t>(v_) == 0;
        case FieldKind::Rational:
            return std::get<mpq_class>(v_) == 0;
        case FieldKind::RatFunc2:
            return std::get<F2Rat>(v_).is_zero();
        case FieldKind::QuadExt: {
            const auto& e = *std::get<std::shared_ptr<const ExtVal>>(v_);
            return e.re.is_zero() && e.im.is_zero();
        }
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_.kind()) {
        case FieldKind::Prime:
            return std::get<std::uint64_t>(v_) == 1;
        case FieldKind::Rational:
            return std::get<mpq_class>(v_) == 1;
        case FieldKind::RatFunc2:
            return std::get<F2Rat>(v_).is_one();
        case FieldKind::QuadExt: {
            const auto& e = *std::get<std::shared_ptr<const ExtVal>>(v_);
            return e.re.is_one() && e.im.is_zero();
        }
    }
    return false;
}

namespace {
void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatch(a.field().describe() + " vs " + b.field().describe());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_.kind()) {
        case FieldKind::Prime:
            opcount::tick();
            return Scalar(field_, addmod_u64(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                                             field_.prime_modulus()));
        case FieldKind::Rational:
            opcount::tick();
            return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
        case FieldKind::RatFunc2:
            opcount::tick();
            return Scalar(field_, std::get<F2Rat>(v_) + std::get<F2Rat>(o.v_));
        case FieldKind::QuadExt: {
            const auto& a = *std::get<std::shared_ptr<const ExtVal>>(v_);
            const auto& b = *std::get<std::shared_ptr<const ExtVal>>(o.v_);
            return make_ext(field_, a.re + b.re, a.im + b.im);
        }
    }
    throw InternalError("unreachable field kind");
}

Scalar Scalar::operator-() const {
    switch (field_.kind()) {
        case FieldKind::Prime: {
            std::uint64_t r = std::get<std::uint64_t>(v_);
            return Scalar(field_, r ? field_.prime_modulus() - r : 0);
        }
        case FieldKind::Rational:
            return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
        case FieldKind::RatFunc2:
            return *this;  // char 2
        case FieldKind::QuadExt: {
            const auto& e = *std::get<std::shared_ptr<const ExtVal>>(v_);
            return make_ext(field_, -e.re, -e.im);
        }
    }
    throw InternalError("unreachable field kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_.kind()) {
        case FieldKind::Prime: {
            opcount::tick();
            std::uint64_t a = std::get<std::uint64_t>(v_);
            std::uint64_t b = std::get<std::uint64_t>(o.v_);
            std::uint64_t p = field_.prime_modulus();
            return Scalar(field_, a >= b ? a - b : a + (p - b));
        }
        case FieldKind::Rational:
            opcount::tick();
            return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
        case FieldKind::RatFunc2:
            opcount::tick();
            return Scalar(field_, std::get<F2Rat>(v_) + std::get<F2Rat>(o.v_));
        case FieldKind::QuadExt: {
            const auto& a = *std::get<std::shared_ptr<const ExtVal>>(v_);
            const auto& b = *std::get<std::shared_ptr<const ExtVal>>(o.v_);
            return make_ext(field_, a.re - b.re, a.im - b.im);
        }
    }
    throw InternalError("unreachable field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(*this, o);
    switch (field_.kind()) {
        case FieldKind::Prime:
            opcount::tick();
            return Scalar(field_, mulmod_u64(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                                             field_.prime_modulus()));
        case FieldKind::Rational:
            opcount::tick();
            return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
        case FieldKind::RatFunc2:
            opcount::tick();
            return Scalar(field_, std::get<F2Rat>(v_) * std::get<F2Rat>(o.v_));
        case FieldKind::QuadExt: {
            // (a + alpha b)(c + alpha d) with alpha^2 = lin*alpha + con
            const auto& x = *std::get<std::shared_ptr<const ExtVal>>(v_);
            const auto& y = *std::get<std::shared_ptr<const ExtVal>>(o.v_);
            const QuadExtDesc& d = field_.ext();
            Scalar bd = x.im * y.im;
            Scalar re = x.re * y.re + bd * d.con;
            Scalar im = x.re * y.im + x.im * y.re + bd * d.lin;
            return make_ext(field_, std::move(re), std::move(im));
        }
    }
    throw InternalError("unreachable field kind");
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.describe());
    switch (field_.kind()) {
        case FieldKind::Prime: {
            opcount::tick();
            std::uint64_t p = field_.prime_modulus();
            return Scalar(field_, powmod_u64(std::get<std::uint64_t>(v_), p - 2, p));
        }
        case FieldKind::Rational:
            opcount::tick();
            return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
        case FieldKind::RatFunc2:
            opcount::tick();
            return Scalar(field_, std::get<F2Rat>(v_).inv());
        case FieldKind::QuadExt: {
            // (a + alpha b)^-1 = (a + lin*b - alpha b) / (a^2 + lin*a*b - con*b^2)
            const auto& e = *std::get<std::shared_ptr<const ExtVal>>(v_);
            const QuadExtDesc& d = field_.ext();
            Scalar norm = e.re * e.re + d.lin * e.re * e.im - d.con * e.im * e.im;
            Scalar ninv = norm.inv();
            return make_ext(field_, (e.re + d.lin * e.im) * ninv, -(e.im * ninv));
        }
    }
    throw InternalError("unreachable field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(*this, o);
    if (o.is_zero()) throw DivisionByZero("division by zero in " + field_.describe());
    switch (field_.kind()) {
        case FieldKind::Prime: {
            opcount::tick();
            std::uint64_t p = field_.prime_modulus();
            return Scalar(field_, mulmod_u64(std::get<std::uint64_t>(v_),
                                             powmod_u64(std::get<std::uint64_t>(o.v_), p - 2, p), p));
        }
        case FieldKind::Rational:
            opcount::tick();
            return Scalar(field_, mpq_class(std::get<mpq_class>(v_) / std::get<mpq_class>(o.v_)));
        case FieldKind::RatFunc2:
            opcount::tick();
            return Scalar(field_, std::get<F2Rat>(v_) * std::get<F2Rat>(o.v_).inv());
        case FieldKind::QuadExt:
            return *this * o.inv();
    }
    throw InternalError("unreachable field kind");
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field()) return false;
    switch (field_.kind()) {
        case FieldKind::Prime:
            return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
        case FieldKind::Rational:
            return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
        case FieldKind::RatFunc2:
            return std::get<F2Rat>(v_) == std::get<F2Rat>(o.v_);
        case FieldKind::QuadExt: {
            const auto& a = *std::get<std::shared_ptr<const ExtVal>>(v_);
            const auto& b = *std::get<std::shared_ptr<const ExtVal>>(o.v_);
            return a.re == b.re && a.im == b.im;
        }
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Prime:
            return std::to_string(std::get<std::uint64_t>(v_));
        case FieldKind::Rational: {
            const mpq_class& q = std::get<mpq_class>(v_);
            std::string s = q.get_str();
            if (s.find('/') == std::string::npos) s += "/1";
            return s;
        }
        case FieldKind::RatFunc2:
            return std::get<F2Rat>(v_).to_string();
        case FieldKind::QuadExt: {
            const auto& e = *std::get<std::shared_ptr<const ExtVal>>(v_);
            return "(" + e.re.to_string() + ")+(" + e.im.to_string() + ")*" + field_.ext().label;
        }
    }
    return "?";
}

std::uint64_t Scalar::prime_value() const {
    if (field_.kind() != FieldKind::Prime) throw FieldMismatch("prime_value on " + field_.describe());
    return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational_value() const {
    if (field_.kind() != FieldKind::Rational)
        throw FieldMismatch("rational_value on " + field_.describe());
    return std::get<mpq_class>(v_);
}

const F2Rat& Scalar::ratfunc_value() const {
    if (field_.kind() != FieldKind::RatFunc2)
        throw FieldMismatch("ratfunc_value on " + field_.describe());
    return std::get<F2Rat>(v_);
}

const Scalar& Scalar::ext_re() const {
    if (field_.kind() != FieldKind::QuadExt) throw FieldMismatch("ext_re on " + field_.describe());
    return std::get<std::shared_ptr<const ExtVal>>(v_)->re;
}

const Scalar& Scalar::ext_im() const {
    if (field_.kind() != FieldKind::QuadExt) throw FieldMismatch("ext_im on " + field_.describe());
    return std::get<std::shared_ptr<const ExtVal>>(v_)->im;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    switch (f.kind()) {
        case FieldKind::Prime: {
            std::uniform_int_distribution<std::uint64_t> dist(0, f.prime_modulus() - 1);
            return Scalar::make_prime(f, dist(rng));
        }
        case FieldKind::Rational: {
            std::uniform_int_distribution<int> num(-20, 20);
            std::uniform_int_distribution<int> den(1, 10);
            return Scalar::make_rational(mpq_class(num(rng), den(rng)));
        }
        case FieldKind::RatFunc2: {
            std::uniform_int_distribution<int> bits(0, 15);
            F2Poly num, den;
            for (int i = 0; i < 4; ++i) num.set_coeff(static_cast<std::size_t>(i), bits(rng) >> i & 1);
            int d = bits(rng);
            for (int i = 0; i < 3; ++i) den.set_coeff(static_cast<std::size_t>(i), d >> i & 1);
            if (den.is_zero()) den = F2Poly::one();
            return Scalar::make_ratfunc(F2Rat(num, den));
        }
        case FieldKind::QuadExt: {
            const QuadExtDesc& d = f.ext();
            return Scalar::make_ext(f, random_scalar(d.base, rng), random_scalar(d.base, rng));
        }
    }
    throw InternalError("unreachable field kind");
}

}  // namespace rmrank
