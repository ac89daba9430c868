#include "rmrank/skew.hpp"

#include "rmrank/errors.hpp"

namespace rmrank {

ThetaPoly::ThetaPoly(const Tower* tower)
    : tower_(tower), coeffs_(tower->degree(), tower->zero_element()) {}

ThetaPoly::ThetaPoly(const Tower* tower, std::vector<AlgebraElement> coeffs)
    : tower_(tower), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tower_->degree()) throw LengthMismatch("coefficient vector length");
    for (const auto& c : coeffs_)
        if (c.tower() != tower_) throw TowerMismatch("coefficient from a different tower");
}

void ThetaPoly::set_coeff(std::size_t i, AlgebraElement v) {
    if (i >= coeffs_.size()) throw OutOfRange("coefficient index");
    if (v.tower() != tower_) throw TowerMismatch("coefficient from a different tower");
    coeffs_[i] = std::move(v);
}

bool ThetaPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<int> ThetaPoly::theta_degree() const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        int d = degree(phi_inv(tower_->shape(), i));
        if (!deg || d > *deg) deg = d;
    }
    return deg;
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
    if (tower_ != o.tower_) throw TowerMismatch("theta-polynomials from different towers");
    std::vector<AlgebraElement> r;
    r.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] + o.coeffs_[i]);
    return ThetaPoly(tower_, std::move(r));
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
    if (tower_ != o.tower_) throw TowerMismatch("theta-polynomials from different towers");
    std::vector<AlgebraElement> r;
    r.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] - o.coeffs_[i]);
    return ThetaPoly(tower_, std::move(r));
}

ThetaPoly ThetaPoly::scaled(const AlgebraElement& c) const {
    std::vector<AlgebraElement> r;
    r.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.push_back(c * a);
    return ThetaPoly(tower_, std::move(r));
}

ThetaPoly ThetaPoly::compose(const ThetaPoly& o) const {
    if (tower_ != o.tower_) throw TowerMismatch("theta-polynomials from different towers");
    const Shape& n = tower_->shape();
    ThetaPoly r(tower_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            std::size_t k = group_mul_index(n, i, j);
            r.coeffs_[k] = r.coeffs_[k] + coeffs_[i] * o.coeffs_[j].apply_aut(i);
        }
    }
    return r;
}

AlgebraElement ThetaPoly::evaluate(const AlgebraElement& x) const {
    if (x.tower() != tower_) throw TowerMismatch("argument from a different tower");
    AlgebraElement r = tower_->zero_element();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        r = r + coeffs_[i] * x.apply_aut(i);
    }
    return r;
}

Matrix<Scalar> ThetaPoly::endo_matrix() const {
    std::size_t n = tower_->degree();
    Matrix<Scalar> m(n, n, tower_->base_field().zero());
    for (std::size_t j = 0; j < n; ++j) {
        AlgebraElement img = evaluate(tower_->basis_element(j));
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = img.coord(i);
    }
    return m;
}

std::size_t ThetaPoly::rank() const { return rmrank::rank(endo_matrix()); }

Matrix<AlgebraElement> ThetaPoly::dickson() const {
    std::size_t n = tower_->degree();
    const Shape& shape = tower_->shape();
    Matrix<AlgebraElement> d(n, n, tower_->zero_element());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            d.at(i, j) = coeffs_[sigma_inverse(shape, j, i)].apply_aut(j);
    return d;
}

bool ThetaPoly::operator==(const ThetaPoly& o) const {
    return tower_ == o.tower_ && coeffs_ == o.coeffs_;
}

std::string ThetaPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "[" + coeffs_[i].to_string() + "]*g" + std::to_string(i);
    }
    return s;
}

ThetaPoly random_rank_error(const Tower& tower, std::size_t t, std::mt19937_64& rng) {
    std::size_t n = tower.degree();
    if (t < 1 || t > n) throw OutOfRange("error rank must lie in [1, N]");

    auto sample_independent = [&](std::size_t count) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<AlgebraElement> v;
            v.reserve(count);
            for (std::size_t i = 0; i < count; ++i) v.push_back(tower.random_element(rng));
            if (coordinate_rank(v) == count) return v;
        }
        throw InternalError("failed to sample independent tuples");
    };
    std::vector<AlgebraElement> alphas = sample_independent(t);
    std::vector<AlgebraElement> betas = sample_independent(t);

    // E = sum_k alpha_k T_{beta_k}, coefficient of gamma_i = sum_k alpha_k gamma_i(beta_k);
    // its image is span(alpha), so the rank is exactly t
    ThetaPoly e(&tower);
    for (std::size_t i = 0; i < n; ++i) {
        AlgebraElement c = tower.zero_element();
        for (std::size_t k = 0; k < t; ++k) c = c + alphas[k] * betas[k].apply_aut(i);
        e.set_coeff(i, std::move(c));
    }
    return e;
}

DetAlgo det_algo_for(const Field& base) {
    return base.kind() == FieldKind::Prime ? DetAlgo::Gauss : DetAlgo::Bareiss;
}

}  // namespace rmrank
