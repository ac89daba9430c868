#include "rmrank/rmcode.hpp"

#include <string>
#include <utility>

#include "rmrank/errors.hpp"

namespace rmrank {

CodeParams code_params(const Shape& n, long r) {
    if (!n.non_increasing())
        throw InvalidShape("code shape must be non-increasing");
    long r_max = 0;
    for (std::size_t i = 0; i < n.m(); ++i) r_max += long(n[i]) - 1;
    if (r < 0 || r > r_max)
        throw OrderOutOfRange("order " + std::to_string(r) + " outside [0, " +
                              std::to_string(r_max) + "]");

    CodeParams p;
    p.N = n.order();
    for (std::size_t i = 0; i < p.N; ++i)
        if (degree(phi_inv(n, i)) <= r) ++p.k;

    // Peel full factors off the tail until the remainder fits inside one:
    // invariant acc = sum_{i>s} (n_i - 1), and r - acc >= 0 throughout.
    std::size_t s = n.m();
    long acc = 0;
    while (r - acc >= long(n[s - 1])) {
        acc += long(n[s - 1]) - 1;
        --s;
    }
    p.s = s;
    p.ell = std::uint32_t(r - acc);
    // ell = n_s - 1 also reads as (s-1, 0); prefer ell < n_s - 1, which the
    // decoder's window case analysis assumes
    if (s > 1 && p.ell == n[s - 1] - 1) {
        --p.s;
        p.ell = 0;
    }
    p.d = n[p.s - 1] - p.ell;
    for (std::size_t i = 0; i + 1 < p.s; ++i) p.d *= n[i];
    return p;
}

CodeSpec::CodeSpec(TowerPtr tower, long r)
    : tower_(std::move(tower)), r_(r), params_(code_params(tower_->shape(), r)) {
    const Shape& n = tower_->shape();
    for (std::size_t i = 0; i < params_.N; ++i)
        if (degree(phi_inv(n, i)) <= r) monomials_.push_back(i);
}

ThetaPoly CodeSpec::encode(const std::vector<AlgebraElement>& message) const {
    if (message.size() != params_.k)
        throw LengthMismatch("message length " + std::to_string(message.size()) +
                             ", expected " + std::to_string(params_.k));
    ThetaPoly c(tower_.get());
    for (std::size_t i = 0; i < monomials_.size(); ++i) c.set_coeff(monomials_[i], message[i]);
    return c;
}

std::vector<AlgebraElement> CodeSpec::extract_message(const ThetaPoly& c) const {
    if (c.tower() != tower_.get()) throw TowerMismatch("codeword from a different tower");
    std::vector<AlgebraElement> msg;
    msg.reserve(params_.k);
    for (std::size_t idx : monomials_) msg.push_back(c.coeff(idx));
    return msg;
}

Matrix<AlgebraElement> CodeSpec::generator_matrix() const {
    Matrix<AlgebraElement> g(params_.k, params_.N, tower_->zero_element());
    for (std::size_t j = 0; j < params_.N; ++j) {
        AlgebraElement beta = tower_->basis_element(j);
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            g.at(i, j) = beta.apply_aut(monomials_[i]);
    }
    return g;
}

const Matrix<AlgebraElement>& CodeSpec::dual_generator() const {
    std::call_once(dual_once_, [this] {
        dual_ = std::make_unique<Matrix<AlgebraElement>>(kernel_basis(generator_matrix()));
    });
    return *dual_;
}

bool CodeSpec::is_codeword(const std::vector<AlgebraElement>& y) const {
    if (y.size() != params_.N)
        throw LengthMismatch("vector length " + std::to_string(y.size()) + ", expected " +
                             std::to_string(params_.N));
    for (const AlgebraElement& v : y)
        if (v.tower() != tower_.get()) throw TowerMismatch("vector entry from a different tower");
    for (const AlgebraElement& check : dual_generator().multiply_vector(y))
        if (!check.is_zero()) return false;
    return true;
}

bool CodeSpec::is_codeword(const ThetaPoly& c) const {
    if (c.tower() != tower_.get()) throw TowerMismatch("polynomial from a different tower");
    auto deg = c.theta_degree();
    return !deg.has_value() || *deg <= r_;
}

std::vector<AlgebraElement> evaluate_at_basis(const ThetaPoly& c) {
    const Tower& tower = *c.tower();
    std::vector<AlgebraElement> values;
    values.reserve(tower.degree());
    for (std::size_t j = 0; j < tower.degree(); ++j)
        values.push_back(c.evaluate(tower.basis_element(j)));
    return values;
}

ThetaPoly interpolate_at_basis(const Tower& tower, const std::vector<AlgebraElement>& values) {
    if (values.size() != tower.degree())
        throw LengthMismatch("value count " + std::to_string(values.size()) + ", expected " +
                             std::to_string(tower.degree()));
    for (const AlgebraElement& v : values)
        if (v.tower() != &tower) throw TowerMismatch("value from a different tower");
    return ThetaPoly(&tower, tower.interpolation_inverse().multiply_vector(values));
}

namespace {

// Row blocks stacked in phi order: monomials without theta_m first, then the
// theta_m multiples. rec(r, 0) = (1) for every r >= 0; negative r is empty.
Matrix<AlgebraElement> binary_generator_rec(const Tower& tower, long r, std::size_t m) {
    std::size_t cols = std::size_t(1) << m;
    if (r < 0) return Matrix<AlgebraElement>(0, cols, tower.zero_element());
    if (m == 0) return Matrix<AlgebraElement>(1, 1, tower.one_element());

    Matrix<AlgebraElement> top = binary_generator_rec(tower, r, m - 1);
    Matrix<AlgebraElement> bot = binary_generator_rec(tower, r - 1, m - 1);
    AlgebraElement alpha = tower.basis_element(std::size_t(1) << (m - 1));
    // theta_m sends alpha_m to -alpha_m (square root) or alpha_m + 1 (root of
    // x^2 + x + a), which is all the bottom-right scale needs.
    AlgebraElement alpha_conj =
        tower.family() == TowerFamily::ArtinSchreier ? alpha + tower.one_element() : -alpha;

    Matrix<AlgebraElement> g(top.rows() + bot.rows(), cols, tower.zero_element());
    std::size_t half = cols / 2;
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < half; ++j) {
            g.at(i, j) = top.at(i, j);
            g.at(i, half + j) = alpha * top.at(i, j);
        }
    for (std::size_t i = 0; i < bot.rows(); ++i)
        for (std::size_t j = 0; j < half; ++j) {
            g.at(top.rows() + i, j) = bot.at(i, j);
            g.at(top.rows() + i, half + j) = alpha_conj * bot.at(i, j);
        }
    return g;
}

// The s = m call at level m-1 reuses the s = m-1 matrix (both span all of
// L_{m-1}), so a clamp rather than an extra base case.
Matrix<AlgebraElement> binary_dual_rec(const Tower& tower, long s, std::size_t m) {
    std::size_t cols = std::size_t(1) << m;
    if (s < 0) return Matrix<AlgebraElement>(0, cols, tower.zero_element());
    if (s > long(m)) s = long(m);
    if (m == 0) return Matrix<AlgebraElement>(1, 1, tower.one_element());

    Matrix<AlgebraElement> top = binary_dual_rec(tower, s, m - 1);
    Matrix<AlgebraElement> bot = binary_dual_rec(tower, s - 1, m - 1);
    AlgebraElement alpha = tower.basis_element(std::size_t(1) << (m - 1));

    Matrix<AlgebraElement> g(top.rows() + bot.rows(), cols, tower.zero_element());
    std::size_t half = cols / 2;
    bool as = tower.family() == TowerFamily::ArtinSchreier;
    AlgebraElement one = tower.one_element();
    AlgebraElement inv = as ? one : alpha.inv();
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < half; ++j) {
            g.at(i, j) = as ? alpha * top.at(i, j) : top.at(i, j);
            g.at(i, half + j) = as ? top.at(i, j) : -(inv * top.at(i, j));
        }
    for (std::size_t i = 0; i < bot.rows(); ++i)
        for (std::size_t j = 0; j < half; ++j) {
            g.at(top.rows() + i, j) = as ? (alpha + one) * bot.at(i, j) : bot.at(i, j);
            g.at(top.rows() + i, half + j) = as ? bot.at(i, j) : inv * bot.at(i, j);
        }
    return g;
}

void require_binary(const Tower& tower) {
    if (!tower.shape().is_binary())
        throw NotBinaryShape("recursive assembly needs a (2,...,2) shape");
}

}  // namespace

Matrix<AlgebraElement> binary_generator(const Tower& tower, long r) {
    require_binary(tower);
    long m = long(tower.shape().m());
    if (r < 0 || r > m)
        throw OrderOutOfRange("order " + std::to_string(r) + " outside [0, " + std::to_string(m) +
                              "]");
    return binary_generator_rec(tower, r, std::size_t(m));
}

Matrix<AlgebraElement> binary_dual_generator(const Tower& tower, long s) {
    require_binary(tower);
    long m = long(tower.shape().m());
    if (s < 0 || s > m)
        throw OrderOutOfRange("dual order " + std::to_string(s) + " outside [0, " +
                              std::to_string(m) + "]");
    return binary_dual_rec(tower, s, std::size_t(m));
}

}  // namespace rmrank
