#include "rmrank/tower.hpp"

#include <algorithm>
#include <numeric>

#include "rmrank/errors.hpp"

namespace rmrank {

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const Tower* tower, std::vector<Scalar> coords)
    : tower_(tower), coords_(std::move(coords)) {
    if (!tower_) throw InternalError("element without tower");
    if (coords_.size() != tower_->degree()) throw LengthMismatch("coordinate vector length");
}

namespace {
void require_same_tower(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.tower() != b.tower()) throw TowerMismatch("elements from different towers");
}
}  // namespace

bool AlgebraElement::is_zero() const {
    for (const Scalar& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool AlgebraElement::is_one() const {
    if (!coords_[0].is_one()) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (!coords_[i].is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_tower(*this, o);
    std::vector<Scalar> r;
    r.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) r.push_back(coords_[i] + o.coords_[i]);
    return AlgebraElement(tower_, std::move(r));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_same_tower(*this, o);
    std::vector<Scalar> r;
    r.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) r.push_back(coords_[i] - o.coords_[i]);
    return AlgebraElement(tower_, std::move(r));
}

AlgebraElement AlgebraElement::operator-() const {
    std::vector<Scalar> r;
    r.reserve(coords_.size());
    for (const Scalar& c : coords_) r.push_back(-c);
    return AlgebraElement(tower_, std::move(r));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    require_same_tower(*this, o);
    std::size_t n = coords_.size();
    std::vector<Scalar> r(n, tower_->base_field().zero());
    for (std::size_t j = 0; j < n; ++j) {
        if (o.coords_[j].is_zero()) continue;
        std::vector<Scalar> t = tower_->mul_table(j).multiply_vector(coords_);
        for (std::size_t k = 0; k < n; ++k)
            if (!t[k].is_zero()) r[k] = r[k] + t[k] * o.coords_[j];
    }
    return AlgebraElement(tower_, std::move(r));
}

AlgebraElement AlgebraElement::inv() const {
    if (is_zero()) throw ZeroInverse("inverse of zero in the tower algebra");
    std::size_t n = coords_.size();
    // columns of the multiplication-by-x matrix: x * beta_i
    Matrix<Scalar> mul(n, n, tower_->base_field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> col = tower_->mul_table(i).multiply_vector(coords_);
        for (std::size_t k = 0; k < n; ++k) mul.at(k, i) = col[k];
    }
    std::vector<Scalar> e1(n, tower_->base_field().zero());
    e1[0] = tower_->base_field().one();
    auto sol = solve_linear(std::move(mul), std::move(e1));
    if (!sol) throw ZeroInverse("element is a zero divisor");
    return AlgebraElement(tower_, std::move(*sol));
}

AlgebraElement AlgebraElement::operator/(const AlgebraElement& o) const { return *this * o.inv(); }

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    std::vector<Scalar> r;
    r.reserve(coords_.size());
    for (const Scalar& x : coords_) r.push_back(x * c);
    return AlgebraElement(tower_, std::move(r));
}

AlgebraElement AlgebraElement::apply_aut(std::size_t gamma_idx) const {
    return AlgebraElement(tower_, tower_->gamma_aut(gamma_idx).multiply_vector(coords_));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return tower_ == o.tower_ && coords_ == o.coords_;
}

AlgebraElement AlgebraElement::zero_like() const { return tower_->zero_element(); }

AlgebraElement AlgebraElement::one_like() const { return tower_->one_element(); }

std::string AlgebraElement::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    const auto& labels = tower_->basis_labels();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coords_[i].to_string() + ")";
        if (i) s += "*" + labels[i];
    }
    return s;
}

// ---------------------------------------------------------------------------
// F_p[x] helpers for the finite family

namespace {

using FpPoly = std::vector<std::uint64_t>;  // coefficients, ascending, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

void poly_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    poly_trim(r);
    return r;
}

// remainder mod monic f
FpPoly poly_rem(FpPoly a, const FpPoly& f, std::uint64_t p) {
    int df = poly_deg(f);
    while (poly_deg(a) >= df) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t sub = mulmod(lead, f[i], p);
            std::uint64_t& c = a[shift + i];
            c = c >= sub ? c - sub : c + p - sub;
        }
        poly_trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
    return poly_rem(poly_mul(a, b, p), f, p);
}

// g^p mod f
FpPoly poly_pow_char(const FpPoly& g, const FpPoly& f, std::uint64_t p) {
    FpPoly r{1};
    FpPoly base = g;
    std::uint64_t e = p;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly poly_make_monic(FpPoly a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = poly_rem(a, poly_make_monic(b, p), p);
        // scale remainder consistently: gcd only cares about monic associates
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(a, p);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            ps.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin's test: f (monic, degree N) is irreducible over F_p iff
// x^(p^N) = x mod f and gcd(x^(p^(N/l)) - x, f) = 1 for all primes l | N.
bool poly_is_irreducible(const FpPoly& f, std::uint64_t p) {
    int n = poly_deg(f);
    if (n < 1) return false;
    FpPoly x{0, 1};
    if (n == 1) return true;

    auto frob_iterate = [&](FpPoly g, std::uint64_t times) {
        for (std::uint64_t i = 0; i < times; ++i) g = poly_pow_char(g, f, p);
        return g;
    };

    for (std::uint64_t l : prime_divisors(static_cast<std::uint64_t>(n))) {
        FpPoly g = frob_iterate(x, static_cast<std::uint64_t>(n) / l);
        // g - x
        FpPoly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = diff[1] >= 1 ? diff[1] - 1 : diff[1] + p - 1;
        poly_trim(diff);
        FpPoly d = poly_gcd(f, diff, p);
        if (poly_deg(d) != 0) return false;
    }
    FpPoly g = frob_iterate(x, static_cast<std::uint64_t>(n));
    return g == x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower construction

Tower::Tower(Private, Field base, Shape shape, TowerFamily fam)
    : base_(std::move(base)), shape_(std::move(shape)), family_(fam) {}

TowerPtr Tower::build_finite(std::uint64_t p, Shape shape, std::uint64_t seed) {
    const auto& f = shape.factors();
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (std::gcd(f[i], f[j]) != 1)
                throw NonCoprimeShape("factors " + std::to_string(f[i]) + " and " +
                                      std::to_string(f[j]));

    std::size_t n = shape.order();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    std::size_t budget = 64 * n;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        FpPoly cand(n + 1, 0);
        cand[n] = 1;
        cand[0] = nonzero(rng);
        for (std::size_t i = 1; i < n; ++i) cand[i] = coeff(rng);
        if (poly_is_irreducible(cand, p))
            return build_finite_with_modulus(p, shape, cand, seed);
    }
    throw NoIrreducibleFound("degree " + std::to_string(n) + " over F_" + std::to_string(p));
}

TowerPtr Tower::build_finite_with_modulus(std::uint64_t p, Shape shape,
                                          std::vector<std::uint64_t> modulus, std::uint64_t seed) {
    std::size_t n = shape.order();
    FpPoly f = modulus;
    poly_trim(f);
    if (poly_deg(f) != static_cast<int>(n) || f.back() != 1)
        throw NoIrreducibleFound("modulus must be monic of degree " + std::to_string(n));
    for (auto c : f)
        if (c >= p) throw NoIrreducibleFound("modulus coefficient out of range");
    if (!poly_is_irreducible(f, p)) throw NoIrreducibleFound("supplied modulus is reducible");

    Field base = Field::prime(p);
    auto tower = std::make_shared<Tower>(Private{}, base, shape, TowerFamily::Finite);
    tower->p_ = p;
    tower->modulus_ = f;
    tower->seed_ = seed;

    tower->basis_labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        tower->basis_labels_.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));

    // powers of x mod f up to x^(2N-2)
    std::vector<FpPoly> xpow(2 * n - 1);
    xpow[0] = FpPoly{1};
    for (std::size_t k = 1; k < xpow.size(); ++k) {
        FpPoly next = xpow[k - 1];
        next.insert(next.begin(), 0);  // multiply by x
        xpow[k] = poly_rem(std::move(next), f, p);
    }
    auto to_column = [&](const FpPoly& g, Matrix<Scalar>& m, std::size_t col) {
        for (std::size_t k = 0; k < n; ++k)
            m.at(k, col) = Scalar::make_prime(base, k < g.size() ? g[k] : 0);
    };

    tower->mul_tables_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix<Scalar> m(n, n, base.zero());
        for (std::size_t i = 0; i < n; ++i) to_column(xpow[i + j], m, i);
        tower->mul_tables_.push_back(std::move(m));
    }

    // theta_i = Frob^{c_i}: the generator of the order-n_i factor of the
    // cyclic Frobenius group, acting trivially on the complementary factors.
    const auto& factors = shape.factors();
    tower->aut_matrices_.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint64_t ni = factors[i];
        std::uint64_t cof = static_cast<std::uint64_t>(n) / ni;
        std::uint64_t u = 1;
        while ((cof % ni) * u % ni != 1) ++u;
        std::uint64_t ci = cof * u;

        FpPoly sigma_x{0, 1};
        for (std::uint64_t k = 0; k < ci; ++k) sigma_x = poly_pow_char(sigma_x, f, p);

        Matrix<Scalar> m(n, n, base.zero());
        FpPoly power{1};
        for (std::size_t col = 0; col < n; ++col) {
            to_column(power, m, col);
            if (col + 1 < n) power = poly_mulmod(power, sigma_x, f, p);
        }
        tower->aut_matrices_.push_back(std::move(m));
    }

    tower->finish_construction();
    return tower;
}

namespace {

bool mpq_is_square(const mpq_class& q) {
    if (q <= 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

std::string rational_label(const Scalar& s) {
    if (s.field().kind() == FieldKind::Rational) return s.rational_value().get_str();
    return s.to_string();
}

}  // namespace

TowerPtr Tower::build_kummer(const std::vector<mpq_class>& radicands) {
    std::size_t m = radicands.size();
    if (m == 0) throw InvalidShape("at least one radicand required");
    for (const auto& a : radicands)
        if (a == 0) throw DependentRadicands("zero radicand");
    // multiplicative independence mod squares: every nonempty subset product
    // must be a non-square (singletons included)
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        mpq_class prod(1);
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) prod *= radicands[i];
        if (mpq_is_square(prod))
            throw DependentRadicands("subset product " + prod.get_str() + " is a square");
    }
    std::vector<Scalar> rads;
    rads.reserve(m);
    for (const auto& a : radicands) rads.push_back(Scalar::make_rational(a));
    return build_binary_over(Field::rationals(), TowerFamily::Kummer, std::move(rads));
}

TowerPtr Tower::build_artin_schreier(const std::vector<F2Rat>& radicands) {
    std::size_t m = radicands.size();
    if (m == 0) throw InvalidShape("at least one radicand required");
    // additive independence modulo {b^2 + b}: every nonempty subset sum must
    // stay outside the image of b -> b^2 + b
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        F2Rat sum;
        int bits = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                sum = sum + radicands[i];
                ++bits;
            }
        if (is_artin_schreier_split(sum)) {
            if (bits == 1)
                throw ReducibleArtinSchreier("X^2 + X + (" + sum.to_string() + ") has a root");
            throw DependentExtensions("subset sum " + sum.to_string() + " splits");
        }
    }
    std::vector<Scalar> rads;
    rads.reserve(m);
    for (const auto& a : radicands) rads.push_back(Scalar::make_ratfunc(a));
    return build_binary_over(Field::rational_functions_gf2(), TowerFamily::ArtinSchreier,
                             std::move(rads));
}

TowerPtr Tower::build_binary_over(const Field& base, TowerFamily fam,
                                  std::vector<Scalar> radicands) {
    if (fam == TowerFamily::Finite) throw InvalidShape("binary builder is for Kummer/Artin-Schreier");
    std::size_t m = radicands.size();
    if (m == 0) throw InvalidShape("at least one radicand required");
    if (m >= 20) throw InvalidShape("tower too large");
    for (const auto& a : radicands)
        if (a.field() != base) throw FieldMismatch("radicand from the wrong field");

    Shape shape(std::vector<std::uint32_t>(m, 2));
    std::size_t n = shape.order();
    auto tower = std::make_shared<Tower>(Private{}, base, shape, fam);
    tower->radicands_ = radicands;

    // basis = subset products, subsets encoded by phi order bitmasks
    tower->basis_labels_.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (s == 0) {
            tower->basis_labels_.push_back("1");
            continue;
        }
        if (fam == TowerFamily::Kummer) {
            Scalar prod = base.one();
            for (std::size_t i = 0; i < m; ++i)
                if (s >> i & 1) prod = prod * radicands[i];
            tower->basis_labels_.push_back("sqrt(" + rational_label(prod) + ")");
        } else {
            std::string lbl;
            for (std::size_t i = 0; i < m; ++i)
                if (s >> i & 1) lbl += (lbl.empty() ? "" : "*") + ("alpha" + std::to_string(i + 1));
            tower->basis_labels_.push_back(lbl);
        }
    }

    tower->mul_tables_.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        Matrix<Scalar> mt(n, n, base.zero());
        for (std::size_t s = 0; s < n; ++s) {
            std::size_t inter = s & t;
            std::size_t sym = s ^ t;
            if (fam == TowerFamily::Kummer) {
                Scalar c = base.one();
                for (std::size_t i = 0; i < m; ++i)
                    if (inter >> i & 1) c = c * radicands[i];
                mt.at(sym, s) = mt.at(sym, s) + c;
            } else {
                // prod over inter of (alpha_i + a_i), times alpha_(sym):
                // sum over U subset of inter of (prod of a_i outside U) alpha_(U|sym)
                std::size_t u = inter;
                while (true) {
                    Scalar c = base.one();
                    for (std::size_t i = 0; i < m; ++i)
                        if ((inter & ~u) >> i & 1) c = c * radicands[i];
                    mt.at(u | sym, s) = mt.at(u | sym, s) + c;
                    if (u == 0) break;
                    u = (u - 1) & inter;
                }
            }
        }
        tower->mul_tables_.push_back(std::move(mt));
    }

    tower->aut_matrices_.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        Matrix<Scalar> a(n, n, base.zero());
        for (std::size_t s = 0; s < n; ++s) {
            if (fam == TowerFamily::Kummer) {
                a.at(s, s) = (s >> k & 1) ? -base.one() : base.one();
            } else {
                a.at(s, s) = base.one();
                if (s >> k & 1) {
                    std::size_t without = s & ~(std::size_t{1} << k);
                    a.at(without, s) = a.at(without, s) + base.one();
                }
            }
        }
        tower->aut_matrices_.push_back(std::move(a));
    }

    tower->finish_construction();
    return tower;
}

void Tower::finish_construction() {
    std::size_t n = degree();
    const Scalar zero = base_.zero();

    if (mul_tables_.size() != n || aut_matrices_.size() != shape_.m())
        throw InternalError("tower tables incomplete");
    if (mul_tables_[0] != Matrix<Scalar>::identity(n, zero))
        throw InternalError("first basis element is not 1");

    // generator orders and commutation
    for (std::size_t i = 0; i < shape_.m(); ++i) {
        Matrix<Scalar> pw = Matrix<Scalar>::identity(n, zero);
        for (std::uint32_t k = 0; k < shape_[i]; ++k) pw = pw * aut_matrices_[i];
        if (pw != Matrix<Scalar>::identity(n, zero))
            throw InternalError("generator order mismatch");
    }
    for (std::size_t i = 0; i < shape_.m(); ++i)
        for (std::size_t j = i + 1; j < shape_.m(); ++j)
            if (aut_matrices_[i] * aut_matrices_[j] != aut_matrices_[j] * aut_matrices_[i])
                throw InternalError("generators do not commute");

    // composite automorphisms in phi order
    gamma_.clear();
    gamma_.reserve(n);
    gamma_.push_back(Matrix<Scalar>::identity(n, zero));
    std::vector<std::size_t> weights(shape_.m());
    {
        std::size_t w = 1;
        for (std::size_t k = 0; k < shape_.m(); ++k) {
            weights[k] = w;
            w *= shape_[k];
        }
    }
    for (std::size_t idx = 1; idx < n; ++idx) {
        Exponents e = phi_inv(shape_, idx);
        std::size_t k = 0;
        while (e[k] == 0) ++k;
        gamma_.push_back(aut_matrices_[k] * gamma_[idx - weights[k]]);
    }

    // |G| = N: pairwise distinct composite automorphisms
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gamma_[i] == gamma_[j]) throw InternalError("composite automorphisms coincide");

    // trace functional: Tr(beta_j) is the first coordinate of (sum gamma) e_j,
    // all other coordinates must vanish since Tr maps into K and beta_1 = 1
    Matrix<Scalar> tr(n, n, zero);
    for (const auto& g : gamma_) tr = tr + g;
    trace_functional_.clear();
    trace_functional_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 1; k < n; ++k)
            if (!tr.at(k, j).is_zero())
                throw DegenerateTraceForm("trace image leaves the base field");
        trace_functional_.push_back(tr.at(0, j));
    }

    // Gram matrix of the trace form and its inverse (dual basis data)
    Matrix<Scalar> gram(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar g = zero;
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = mul_tables_[j].at(k, i);  // coords of beta_i beta_j
                if (!c.is_zero() && !trace_functional_[k].is_zero())
                    g = g + trace_functional_[k] * c;
            }
            gram.at(i, j) = g;
        }
    auto ginv = inverse(gram);
    if (!ginv) throw DegenerateTraceForm("trace form is singular");
    gram_inverse_ = std::move(*ginv);
}

Scalar Tower::trace(const AlgebraElement& x) const {
    if (x.tower() != this) throw TowerMismatch("trace of foreign element");
    Scalar s = base_.zero();
    for (std::size_t k = 0; k < degree(); ++k)
        if (!x.coord(k).is_zero() && !trace_functional_[k].is_zero())
            s = s + trace_functional_[k] * x.coord(k);
    return s;
}

std::vector<AlgebraElement> Tower::dual_basis() const {
    std::size_t n = degree();
    std::vector<AlgebraElement> duals;
    duals.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> coords;
        coords.reserve(n);
        for (std::size_t i = 0; i < n; ++i) coords.push_back(gram_inverse_->at(i, j));
        duals.emplace_back(this, std::move(coords));
    }
    return duals;
}

const Matrix<AlgebraElement>& Tower::interpolation_inverse() const {
    std::call_once(interp_once_, [this] {
        std::size_t n = degree();
        Matrix<AlgebraElement> eval(n, n, zero_element());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Scalar> coords;
                coords.reserve(n);
                for (std::size_t k = 0; k < n; ++k) coords.push_back(gamma_[i].at(k, j));
                eval.at(j, i) = AlgebraElement(this, std::move(coords));
            }
        auto inv = inverse(eval);
        if (!inv) throw InternalError("evaluation matrix is singular");
        interp_inv_ = std::make_unique<Matrix<AlgebraElement>>(std::move(*inv));
    });
    return *interp_inv_;
}

AlgebraElement Tower::zero_element() const {
    return AlgebraElement(this, std::vector<Scalar>(degree(), base_.zero()));
}

AlgebraElement Tower::one_element() const { return basis_element(0); }

AlgebraElement Tower::basis_element(std::size_t j) const {
    if (j >= degree()) throw OutOfRange("basis index");
    std::vector<Scalar> coords(degree(), base_.zero());
    coords[j] = base_.one();
    return AlgebraElement(this, std::move(coords));
}

AlgebraElement Tower::from_base(const Scalar& c) const {
    if (c.field() != base_) throw FieldMismatch("scalar from the wrong base field");
    std::vector<Scalar> coords(degree(), base_.zero());
    coords[0] = c;
    return AlgebraElement(this, std::move(coords));
}

AlgebraElement Tower::element(std::vector<Scalar> coords) const {
    for (const auto& c : coords)
        if (c.field() != base_) throw FieldMismatch("coordinate from the wrong base field");
    return AlgebraElement(this, std::move(coords));
}

AlgebraElement Tower::random_element(std::mt19937_64& rng) const {
    std::vector<Scalar> coords;
    coords.reserve(degree());
    for (std::size_t i = 0; i < degree(); ++i) coords.push_back(random_scalar(base_, rng));
    return AlgebraElement(this, std::move(coords));
}

std::uint64_t Tower::finite_p() const {
    if (family_ != TowerFamily::Finite) throw TowerMismatch("not a finite tower");
    return p_;
}

const std::vector<std::uint64_t>& Tower::finite_modulus() const {
    if (family_ != TowerFamily::Finite) throw TowerMismatch("not a finite tower");
    return modulus_;
}

std::uint64_t Tower::finite_seed() const {
    if (family_ != TowerFamily::Finite) throw TowerMismatch("not a finite tower");
    return seed_;
}

const std::vector<Scalar>& Tower::radicands() const {
    if (family_ == TowerFamily::Finite) throw TowerMismatch("finite towers have no radicands");
    return radicands_;
}

Matrix<Scalar> exp_basis(const std::vector<AlgebraElement>& v) {
    if (v.empty()) throw LengthMismatch("expansion of an empty vector");
    const Tower* tw = v[0].tower();
    std::size_t n = tw->degree();
    Matrix<Scalar> m(n, v.size(), tw->base_field().zero());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].tower() != tw) throw TowerMismatch("mixed towers in expansion");
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = v[j].coord(i);
    }
    return m;
}

std::size_t coordinate_rank(const std::vector<AlgebraElement>& v) {
    if (v.empty()) return 0;
    return rank(exp_basis(v));
}

}  // namespace rmrank
