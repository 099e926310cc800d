#include "gaps/unramified.hpp"

#include <algorithm>
#include <sstream>

namespace gaps {

namespace {

i64 md(i64 a, i64 p) {
    a %= p;
    return a < 0 ? a + p : a;
}

// remainder of a mod monic b over F_p, low-to-high coefficients
std::vector<i64> poly_rem(std::vector<i64> a, const std::vector<i64>& b, i64 p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        i64 q = md(a[k], p);
        if (q == 0) continue;
        for (int i = 0; i <= db; ++i) a[k - db + i] = md(a[k - db + i] - q * b[i], p);
    }
    a.resize(std::max(db, 0));
    return a;
}

bool irreducible_mod_p(const std::vector<i64>& f, i64 p) {
    const int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= n / 2; ++d) {
        i64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (i64 k = 0; k < count; ++k) {
            std::vector<i64> g(d + 1, 0);
            g[d] = 1;
            i64 t = k;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            auto r = poly_rem(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](i64 c) { return c == 0; })) return false;
        }
    }
    return true;
}

int newton_rounds(int cap) {
    int r = 2;
    for (int k = 1; k < cap; k *= 2) ++r;
    return r;
}

}  // namespace

std::vector<i64> smallest_irreducible(i64 p, int degree) {
    if (degree < 1 || degree > 6) throw DomainError("extension degree must lie in [1, 6]");
    i64 count = 1;
    for (int i = 0; i < degree; ++i) count *= p;
    for (i64 k = 0; k < count; ++k) {
        std::vector<i64> f(degree + 1, 0);
        f[degree] = 1;
        i64 t = k;
        for (int i = 0; i < degree; ++i) {
            f[i] = t % p;
            t /= p;
        }
        if (irreducible_mod_p(f, p)) {
            f.pop_back();
            return f;
        }
    }
    throw DomainError("no irreducible polynomial found");
}

FieldPtr UnramifiedField::make(i64 p, int degree, int cap) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (cap < 1 || cap > max_precision(p)) throw PrecisionError("precision out of range for p");
    std::shared_ptr<UnramifiedField> K(new UnramifiedField);
    K->p_ = p;
    K->n_ = degree;
    K->cap_ = cap;
    K->f_ = smallest_irreducible(p, degree);
    const i64 m = ppow(p, cap);
    std::vector<i64> cur(degree);
    for (int i = 0; i < degree; ++i) cur[i] = md(-K->f_[i], m);
    for (int k = degree; k <= 2 * degree - 2; ++k) {
        K->red_.push_back(cur);
        std::vector<i64> nxt(degree, 0);
        i64 top = cur[degree - 1];
        for (int i = degree - 1; i >= 1; --i) nxt[i] = cur[i - 1];
        for (int i = 0; i < degree; ++i)
            nxt[i] = md(nxt[i] - static_cast<i64>(static_cast<i128>(top) * K->f_[i] % m), m);
        cur = nxt;
    }
    FieldPtr Kc = K;
    auto F = [&](const UnramifiedScalar& r) {
        UnramifiedScalar acc = r.pow(degree);
        for (int i = 0; i < degree; ++i) acc += r.pow(i) * PadicScalar::from_int(p, cap, K->f_[i]);
        return acc;
    };
    auto dF = [&](const UnramifiedScalar& r) {
        UnramifiedScalar acc = r.pow(degree - 1) * PadicScalar::from_int(p, cap, degree);
        for (int i = 1; i < degree; ++i) acc += r.pow(i - 1) * PadicScalar::from_int(p, cap, i * K->f_[i]);
        return acc;
    };
    UnramifiedScalar r = UnramifiedScalar::from_int(Kc, 1);
    if (degree > 1) {
        r = UnramifiedScalar::generator(Kc).pow(p);
        for (int it = 0; it < newton_rounds(cap); ++it) r = r - F(r) * dF(r).inv();
    }
    std::vector<std::vector<PadicScalar>> frob(degree);
    UnramifiedScalar rp = UnramifiedScalar::from_int(Kc, 1);
    for (int i = 0; i < degree; ++i) {
        frob[i] = rp.coords();
        rp = rp * r;
    }
    K->frob_ = std::move(frob);
    return Kc;
}

UnramifiedScalar UnramifiedScalar::zero(const FieldPtr& K) {
    UnramifiedScalar x;
    x.K_ = K;
    x.c_.assign(K->degree(), PadicScalar::zero(K->p(), K->cap()));
    return x;
}

UnramifiedScalar UnramifiedScalar::from_padic(const FieldPtr& K, const PadicScalar& s) {
    UnramifiedScalar x = zero(K);
    x.c_[0] = s;
    return x;
}

UnramifiedScalar UnramifiedScalar::from_int(const FieldPtr& K, i64 n) {
    return from_padic(K, PadicScalar::from_int(K->p(), K->cap(), n));
}

UnramifiedScalar UnramifiedScalar::from_coords(const FieldPtr& K, std::vector<PadicScalar> coords) {
    if (static_cast<int>(coords.size()) != K->degree()) throw DomainError("coordinate count differs from degree");
    UnramifiedScalar x;
    x.K_ = K;
    x.c_ = std::move(coords);
    return x;
}

UnramifiedScalar UnramifiedScalar::generator(const FieldPtr& K) {
    if (K->degree() == 1) throw DomainError("degree-1 field has no generator coordinate");
    UnramifiedScalar x = zero(K);
    x.c_[1] = PadicScalar::from_int(K->p(), K->cap(), 1);
    return x;
}

bool UnramifiedScalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const PadicScalar& s) { return s.is_zero(); });
}

i64 UnramifiedScalar::val() const {
    i64 v = kInfVal;
    for (const auto& s : c_) v = std::min(v, s.val());
    return v;
}

i64 UnramifiedScalar::abs_prec() const {
    i64 a = kInfVal;
    for (const auto& s : c_) a = std::min(a, s.abs_prec());
    return a;
}

bool UnramifiedScalar::in_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

UnramifiedScalar UnramifiedScalar::operator-() const {
    UnramifiedScalar r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

UnramifiedScalar UnramifiedScalar::operator+(const UnramifiedScalar& o) const {
    UnramifiedScalar r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

UnramifiedScalar UnramifiedScalar::operator-(const UnramifiedScalar& o) const {
    UnramifiedScalar r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

UnramifiedScalar UnramifiedScalar::operator*(const PadicScalar& s) const {
    UnramifiedScalar r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UnramifiedScalar UnramifiedScalar::operator*(const UnramifiedScalar& o) const {
    const int n = degree();
    const i64 p = K_->p();
    const int cap = K_->cap();
    std::vector<PadicScalar> prod(2 * n - 1, PadicScalar::zero(p, cap));
    for (int i = 0; i < n; ++i) {
        if (c_[i].is_exact_zero()) continue;
        for (int j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    UnramifiedScalar r = zero(K_);
    for (int i = 0; i < n; ++i) r.c_[i] = prod[i];
    for (int k = n; k <= 2 * n - 2; ++k) {
        if (prod[k].is_exact_zero()) continue;
        const auto& red = K_->reduction(k);
        for (int i = 0; i < n; ++i) r.c_[i] += prod[k] * PadicScalar::from_int(p, cap, red[i]);
    }
    return r;
}

UnramifiedScalar UnramifiedScalar::pow(i64 e) const {
    if (e < 0) return inv().pow(-e);
    UnramifiedScalar r = from_int(K_, 1);
    UnramifiedScalar b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UnramifiedScalar UnramifiedScalar::unit_inverse() const {
    const int n = degree();
    const i64 p = K_->p();
    const int cap = K_->cap();
    // multiplication-by-x matrix mod p, solved for x*y = 1
    std::vector<std::vector<i64>> a(n, std::vector<i64>(n + 1, 0));
    UnramifiedScalar col = *this;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) a[i][j] = col.c_[i].residue(1);
        if (j + 1 < n) col = col * generator(K_);
    }
    a[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] % p != 0) piv = r;
        if (piv < 0) throw PrecisionError("element is not a unit");
        std::swap(a[c], a[piv]);
        i64 iv = mod_inverse(a[c][c], p);
        for (auto& e : a[c]) e = md(e * iv, p);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            i64 f = a[r][c];
            for (int k = 0; k <= n; ++k) a[r][k] = md(a[r][k] - f * a[c][k], p);
        }
    }
    std::vector<PadicScalar> y0(n);
    for (int i = 0; i < n; ++i) y0[i] = PadicScalar::from_int(p, cap, a[i][n]);
    UnramifiedScalar y = from_coords(K_, y0);
    const UnramifiedScalar two = from_int(K_, 2);
    for (int it = 0; it < newton_rounds(cap); ++it) y = y * (two - *this * y);
    return y;
}

UnramifiedScalar UnramifiedScalar::inv() const {
    if (is_zero()) throw PrecisionError("inverse of zero");
    const i64 v = val();
    UnramifiedScalar u = *this;
    for (auto& s : u.c_) s = s.mul_ppow(-v);
    UnramifiedScalar r = u.unit_inverse();
    for (auto& s : r.c_) s = s.mul_ppow(-v);
    return r;
}

UnramifiedScalar UnramifiedScalar::frobenius(int k) const {
    const int n = degree();
    k %= n;
    if (k < 0) k += n;
    UnramifiedScalar x = *this;
    const auto& fm = K_->frobenius_matrix();
    for (int s = 0; s < k; ++s) {
        UnramifiedScalar r = zero(K_);
        for (int i = 0; i < n; ++i) {
            if (x.c_[i].is_exact_zero()) continue;
            for (int j = 0; j < n; ++j) r.c_[j] += x.c_[i] * fm[i][j];
        }
        x = r;
    }
    return x;
}

std::string UnramifiedScalar::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].str();
    os << "]";
    return os.str();
}

PadicScalar norm_L(const UnramifiedScalar& x) {
    UnramifiedScalar acc = x;
    for (int k = 1; k < x.degree(); ++k) acc = acc * x.frobenius(k);
    if (!x.is_zero() && acc.coord(0).is_zero()) throw PrecisionError("norm lost all digits");
    return acc.coord(0);
}

}  // namespace gaps
