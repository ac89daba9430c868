#include "rmrank/group.hpp"

#include "rmrank/errors.hpp"

namespace rmrank {

Shape::Shape(std::vector<std::uint32_t> n) : n_(std::move(n)) {
    if (n_.empty()) throw InvalidShape("empty shape");
    order_ = 1;
    for (std::uint32_t f : n_) {
        if (f < 2) throw InvalidShape("shape factors must be >= 2");
        order_ *= f;
    }
}

bool Shape::non_increasing() const {
    for (std::size_t i = 1; i < n_.size(); ++i)
        if (n_[i] > n_[i - 1]) return false;
    return true;
}

bool Shape::is_binary() const {
    for (std::uint32_t f : n_)
        if (f != 2) return false;
    return true;
}

std::size_t phi(const Shape& n, const Exponents& a) {
    if (a.size() != n.m()) throw ShapeMismatch("exponent vector length");
    std::size_t x = 0;
    std::size_t weight = 1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] >= n[k]) throw OutOfRange("exponent out of range");
        x += a[k] * weight;
        weight *= n[k];
    }
    return x;
}

Exponents phi_inv(const Shape& n, std::size_t x) {
    if (x >= n.order()) throw OutOfRange("phi index out of range");
    Exponents a(n.m());
    for (std::size_t k = 0; k < n.m(); ++k) {
        a[k] = static_cast<std::uint32_t>(x % n[k]);
        x /= n[k];
    }
    return a;
}

int degree(const Exponents& a) {
    int d = 0;
    for (std::uint32_t v : a) d += static_cast<int>(v);
    return d;
}

int revlex_cmp(const Shape& n, const Exponents& a, const Exponents& b) {
    if (a.size() != n.m() || b.size() != n.m()) throw ShapeMismatch("exponent vector length");
    for (std::size_t k = n.m(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
}

AddResult group_add(const Shape& n, const Exponents& a, const Exponents& b) {
    if (a.size() != n.m() || b.size() != n.m()) throw ShapeMismatch("exponent vector length");
    AddResult r{Exponents(n.m()), true};
    for (std::size_t k = 0; k < n.m(); ++k) {
        std::uint32_t s = a[k] + b[k];
        if (s >= n[k]) {
            s -= n[k];
            r.carry_free = false;
        }
        r.sum[k] = s;
    }
    return r;
}

std::size_t group_mul_index(const Shape& n, std::size_t i, std::size_t j) {
    return phi(n, group_add(n, phi_inv(n, i), phi_inv(n, j)).sum);
}

std::size_t group_inverse_index(const Shape& n, std::size_t i) {
    Exponents a = phi_inv(n, i);
    for (std::size_t k = 0; k < n.m(); ++k)
        if (a[k]) a[k] = n[k] - a[k];
    return phi(n, a);
}

std::size_t sigma_inverse(const Shape& n, std::size_t j, std::size_t i) {
    Exponents bi = phi_inv(n, i);
    Exponents bj = phi_inv(n, j);
    Exponents k(n.m());
    for (std::size_t u = 0; u < n.m(); ++u)
        k[u] = bi[u] >= bj[u] ? bi[u] - bj[u] : bi[u] + n[u] - bj[u];
    return phi(n, k);
}

}  // namespace rmrank
