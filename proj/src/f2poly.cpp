#include "rmrank/f2poly.hpp"

#include <algorithm>

#include "rmrank/errors.hpp"

namespace rmrank {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

void F2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

F2Poly F2Poly::one() { return monomial(0); }

F2Poly F2Poly::t() { return monomial(1); }

F2Poly F2Poly::monomial(std::size_t exponent) {
    F2Poly p;
    p.set_coeff(exponent, true);
    return p;
}

int F2Poly::degree() const {
    if (w_.empty()) return -1;
    std::uint64_t top = w_.back();
    int bit = 63;
    while (!(top >> bit & 1)) --bit;
    return static_cast<int>((w_.size() - 1) * 64) + bit;
}

bool F2Poly::coeff(std::size_t i) const {
    std::size_t word = i / 64;
    if (word >= w_.size()) return false;
    return w_[word] >> (i % 64) & 1;
}

void F2Poly::set_coeff(std::size_t i, bool v) {
    std::size_t word = i / 64;
    if (word >= w_.size()) {
        if (!v) return;
        w_.resize(word + 1, 0);
    }
    if (v)
        w_[word] |= std::uint64_t{1} << (i % 64);
    else
        w_[word] &= ~(std::uint64_t{1} << (i % 64));
    trim();
}

F2Poly F2Poly::from_hex(const std::string& hex) {
    if (hex.empty()) throw ParseError("empty GF(2) polynomial literal");
    F2Poly p;
    for (char c : hex) {
        int d = hex_digit(c);
        if (d < 0) throw ParseError("bad hex digit in GF(2) polynomial: '" + std::string(1, c) + "'");
        // shift previous digits up by one nibble
        F2Poly shifted = p.shifted(4);
        p = std::move(shifted);
        if (d) {
            if (p.w_.empty()) p.w_.resize(1, 0);
            p.w_[0] |= static_cast<std::uint64_t>(d);
        }
    }
    p.trim();
    return p;
}

std::string F2Poly::to_hex() const {
    if (w_.empty()) return "0";
    int top_nibble = degree() / 4;
    std::string out;
    out.reserve(top_nibble + 1);
    for (int n = top_nibble; n >= 0; --n) {
        std::size_t word = static_cast<std::size_t>(n) / 16;
        int shift = (n % 16) * 4;
        int digit = word < w_.size() ? static_cast<int>(w_[word] >> shift & 0xF) : 0;
        out.push_back("0123456789abcdef"[digit]);
    }
    return out;
}

F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    F2Poly r;
    r.w_.resize(std::max(a.w_.size(), b.w_.size()), 0);
    for (std::size_t i = 0; i < r.w_.size(); ++i) {
        std::uint64_t w = 0;
        if (i < a.w_.size()) w ^= a.w_[i];
        if (i < b.w_.size()) w ^= b.w_[i];
        r.w_[i] = w;
    }
    r.trim();
    return r;
}

F2Poly F2Poly::shifted(std::size_t k) const {
    if (w_.empty() || k == 0) {
        F2Poly r = *this;
        return r;
    }
    std::size_t word_shift = k / 64;
    int bit_shift = static_cast<int>(k % 64);
    F2Poly r;
    r.w_.assign(w_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + word_shift] |= w_[i] << bit_shift;
        if (bit_shift) r.w_[i + word_shift + 1] |= w_[i] >> (64 - bit_shift);
    }
    r.trim();
    return r;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
    F2Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    int da = a.degree();
    for (int i = 0; i <= da; ++i)
        if (a.coeff(static_cast<std::size_t>(i))) r = r + b.shifted(static_cast<std::size_t>(i));
    return r;
}

std::pair<F2Poly, F2Poly> F2Poly::divmod(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) throw DivisionByZero("GF(2)[t] division by zero");
    F2Poly q, r = a;
    int db = b.degree();
    while (r.degree() >= db) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        q.set_coeff(shift, true);
        r = r + b.shifted(shift);
    }
    return {q, r};
}

F2Poly F2Poly::gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool F2Poly::is_square() const {
    constexpr std::uint64_t odd_bits = 0xAAAAAAAAAAAAAAAAull;
    for (std::uint64_t w : w_)
        if (w & odd_bits) return false;
    return true;
}

F2Poly F2Poly::sqrt() const {
    F2Poly r;
    int d = degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (coeff(static_cast<std::size_t>(2 * i))) r.set_coeff(static_cast<std::size_t>(i), true);
    return r;
}

F2Rat::F2Rat(F2Poly num, F2Poly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator in GF(2)(t)");
    if (num.is_zero()) {
        num_ = F2Poly();
        den_ = F2Poly::one();
        return;
    }
    F2Poly g = F2Poly::gcd(num, den);
    num_ = F2Poly::divmod(num, g).first;
    den_ = F2Poly::divmod(den, g).first;
}

F2Rat F2Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return F2Rat(F2Poly::from_hex(s));
    return F2Rat(F2Poly::from_hex(s.substr(0, slash)), F2Poly::from_hex(s.substr(slash + 1)));
}

std::string F2Rat::to_string() const { return num_.to_hex() + "/" + den_.to_hex(); }

F2Rat operator+(const F2Rat& a, const F2Rat& b) {
    return F2Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

F2Rat operator*(const F2Rat& a, const F2Rat& b) { return F2Rat(a.num_ * b.num_, a.den_ * b.den_); }

F2Rat F2Rat::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in GF(2)(t)");
    return F2Rat(den_, num_);
}

bool is_artin_schreier_split(const F2Rat& a) {
    if (a.is_zero()) return true;  // 0 = 0^2 + 0
    const F2Poly& u = a.num();
    const F2Poly& v = a.den();
    // If b = s/w in lowest terms then b^2 + b = s(s+w)/w^2 is already reduced,
    // so the denominator of a split value is a perfect square.
    if (!v.is_square()) return false;
    F2Poly w = v.sqrt();

    // Solve s^2 + w s = u over GF(2)[t]; the left side is GF(2)-linear in s.
    int du = u.degree();
    int dw = w.degree();
    int ds_max = std::max(du, dw);
    int n_cols = ds_max + 1;
    int n_rows = std::max(2 * ds_max, dw + ds_max) + 1;

    // images of the monomial basis: t^(2i) + w t^i
    std::vector<F2Poly> image(static_cast<std::size_t>(n_cols));
    for (int i = 0; i < n_cols; ++i)
        image[static_cast<std::size_t>(i)] =
            F2Poly::monomial(static_cast<std::size_t>(2 * i)) + w.shifted(static_cast<std::size_t>(i));

    // Row-reduce the augmented system (one row per coefficient position).
    std::size_t aug_words = static_cast<std::size_t>(n_cols) / 64 + 1;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n_rows),
                                                 std::vector<std::uint64_t>(aug_words, 0));
    for (int j = 0; j < n_rows; ++j) {
        auto& row = rows[static_cast<std::size_t>(j)];
        for (int i = 0; i < n_cols; ++i)
            if (image[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(j)))
                row[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64);
        if (u.coeff(static_cast<std::size_t>(j)))
            row[static_cast<std::size_t>(n_cols) / 64] ^= std::uint64_t{1} << (n_cols % 64);
    }

    std::size_t pivot_row = 0;
    for (int col = 0; col < n_cols && pivot_row < rows.size(); ++col) {
        std::size_t word = static_cast<std::size_t>(col) / 64;
        std::uint64_t mask = std::uint64_t{1} << (col % 64);
        std::size_t found = rows.size();
        for (std::size_t rr = pivot_row; rr < rows.size(); ++rr)
            if (rows[rr][word] & mask) {
                found = rr;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        for (std::size_t rr = 0; rr < rows.size(); ++rr)
            if (rr != pivot_row && (rows[rr][word] & mask))
                for (std::size_t ww = 0; ww < aug_words; ++ww) rows[rr][ww] ^= rows[pivot_row][ww];
        ++pivot_row;
    }

    // Consistent iff no row reduces to (0 ... 0 | 1).
    std::size_t aug_word = static_cast<std::size_t>(n_cols) / 64;
    std::uint64_t aug_mask = std::uint64_t{1} << (n_cols % 64);
    for (const auto& row : rows) {
        bool lhs_zero = true;
        for (std::size_t ww = 0; ww < aug_words; ++ww) {
            std::uint64_t w_val = row[ww];
            if (ww == aug_word) w_val &= ~aug_mask;
            if (w_val) {
                lhs_zero = false;
                break;
            }
        }
        if (lhs_zero && (row[aug_word] & aug_mask)) return false;
    }
    return true;
}

}  // namespace rmrank
