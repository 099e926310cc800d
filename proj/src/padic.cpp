#include "gaps/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>
#include <vector>

namespace gaps {

namespace {

struct PowTable {
    i64 p = 0;
    std::vector<i64> pw;
};

thread_local PowTable g_pow;

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<i128>(a) * b % m); }

i64 norm_mod(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

}  // namespace

int max_precision(i64 p) {
    int k = 0;
    i128 acc = 1;
    while (acc * p < (static_cast<i128>(1) << 62)) {
        acc *= p;
        ++k;
    }
    return k;
}

i64 ppow(i64 p, int k) {
    if (g_pow.p != p) {
        g_pow.p = p;
        g_pow.pw.assign(1, 1);
        i128 acc = 1;
        while (acc * p < (static_cast<i128>(1) << 62)) {
            acc *= p;
            g_pow.pw.push_back(static_cast<i64>(acc));
        }
    }
    if (k < 0 || k >= static_cast<int>(g_pow.pw.size())) throw PrecisionError("p^k exceeds 62-bit range");
    return g_pow.pw[k];
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int vp_int(i64 p, i64 n) {
    if (n == 0) return static_cast<int>(kInfVal);
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

i64 mod_inverse(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = norm_mod(a, m);
    while (a1 != 0) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw DomainError("not invertible modulo p^k");
    return norm_mod(x, m);
}

PadicScalar PadicScalar::zero(i64 p, int cap) {
    PadicScalar r;
    r.p_ = p;
    r.cap_ = cap;
    r.kind_ = Kind::Exact0;
    return r;
}

PadicScalar PadicScalar::inexact_zero(i64 p, int cap, i64 abs_prec) {
    PadicScalar r = zero(p, cap);
    r.kind_ = Kind::Inexact0;
    r.v_ = abs_prec;
    return r;
}

PadicScalar PadicScalar::from_parts(i64 p, int cap, i64 v, i64 unit, int prec) {
    if (cap < 1 || cap > max_precision(p)) throw PrecisionError("precision cap out of range for p");
    prec = std::min(prec, cap);
    if (prec < 1) return inexact_zero(p, cap, v);
    if (unit % p == 0) throw DomainError("unit part divisible by p");
    PadicScalar r;
    r.p_ = p;
    r.cap_ = cap;
    r.kind_ = Kind::Unit;
    r.v_ = v;
    r.prec_ = prec;
    r.u_ = norm_mod(unit, ppow(p, prec));
    return r;
}

PadicScalar PadicScalar::from_int(i64 p, int cap, i64 n) {
    if (n == 0) return zero(p, cap);
    int v = vp_int(p, n);
    for (int i = 0; i < v; ++i) n /= p;
    return from_parts(p, cap, v, norm_mod(n, ppow(p, cap)), cap);
}

PadicScalar PadicScalar::from_rational(i64 p, int cap, i64 num, i64 den) {
    if (den == 0) throw DomainError("zero denominator");
    return from_int(p, cap, num) / from_int(p, cap, den);
}

i64 PadicScalar::abs_prec() const {
    switch (kind_) {
        case Kind::Exact0: return kInfVal;
        case Kind::Inexact0: return v_;
        default: return v_ + prec_;
    }
}

PadicScalar PadicScalar::operator-() const {
    if (kind_ != Kind::Unit) return *this;
    PadicScalar r = *this;
    i64 m = ppow(p_, prec_);
    r.u_ = (m - u_) % m;
    return r;
}

PadicScalar PadicScalar::with_abs_prec(i64 k) const {
    if (kind_ == Kind::Exact0) return inexact_zero(p_, cap_, k);
    if (k >= abs_prec()) return *this;
    if (kind_ == Kind::Inexact0 || k <= v_) return inexact_zero(p_, cap_, k);
    PadicScalar r = *this;
    r.prec_ = static_cast<int>(k - v_);
    r.u_ = u_ % ppow(p_, r.prec_);
    return r;
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    if (kind_ == Kind::Exact0) return o;
    if (o.kind_ == Kind::Exact0) return *this;
    const int cap = std::min(cap_, o.cap_);
    const i64 ap = std::min(abs_prec(), o.abs_prec());
    if (kind_ == Kind::Inexact0) return o.with_abs_prec(ap);
    if (o.kind_ == Kind::Inexact0) return with_abs_prec(ap);
    const i64 v = std::min(v_, o.v_);
    const int rp = static_cast<int>(std::min<i64>(ap - v, cap));
    const i64 m = ppow(p_, rp);
    auto shifted = [&](const PadicScalar& x) -> i64 {
        i64 d = x.v_ - v;
        if (d >= rp) return 0;
        return mulmod(x.u_ % m, ppow(p_, static_cast<int>(d)), m);
    };
    i64 s = shifted(*this) + shifted(o);
    if (s >= m) s -= m;
    if (s == 0) return inexact_zero(p_, cap, v + rp);
    int w = 0;
    while (s % p_ == 0) {
        s /= p_;
        ++w;
    }
    PadicScalar r;
    r.p_ = p_;
    r.cap_ = cap;
    r.kind_ = Kind::Unit;
    r.v_ = v + w;
    r.prec_ = rp - w;
    r.u_ = s;
    return r;
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    const int cap = std::min(cap_, o.cap_);
    if (kind_ == Kind::Exact0 || o.kind_ == Kind::Exact0) return zero(p_, cap);
    if (kind_ == Kind::Inexact0 || o.kind_ == Kind::Inexact0) {
        return inexact_zero(p_, cap, v_ + o.v_);
    }
    PadicScalar r;
    r.p_ = p_;
    r.cap_ = cap;
    r.kind_ = Kind::Unit;
    r.v_ = v_ + o.v_;
    r.prec_ = std::min({prec_, o.prec_, cap});
    i64 m = ppow(p_, r.prec_);
    r.u_ = mulmod(u_ % m, o.u_ % m, m);
    return r;
}

PadicScalar PadicScalar::inv() const {
    if (kind_ != Kind::Unit) throw PrecisionError("inverse of zero");
    PadicScalar r = *this;
    r.v_ = -v_;
    r.u_ = mod_inverse(u_, ppow(p_, prec_));
    return r;
}

PadicScalar PadicScalar::pow(i64 e) const {
    if (e < 0) return inv().pow(-e);
    PadicScalar r = from_int(p_, cap_, 1);
    PadicScalar b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

PadicScalar PadicScalar::mul_ppow(i64 k) const {
    if (kind_ == Kind::Exact0) return *this;
    PadicScalar r = *this;
    r.v_ += k;
    return r;
}

i64 PadicScalar::residue(int k) const {
    if (k <= 0 || kind_ != Kind::Unit) return 0;
    if (v_ < 0) throw DomainError("residue of a non-integral value");
    if (v_ >= k) return 0;
    i64 m = ppow(p_, k);
    return mulmod(u_ % m, ppow(p_, static_cast<int>(v_)), m);
}

std::string PadicScalar::str() const {
    std::ostringstream os;
    if (kind_ == Kind::Exact0) return "0";
    if (kind_ == Kind::Inexact0) {
        os << "O(" << p_ << "^" << v_ << ")";
        return os.str();
    }
    os << u_;
    if (v_ != 0) os << "*" << p_ << "^" << v_;
    os << " + O(" << p_ << "^" << abs_prec() << ")";
    return os.str();
}

bool rational_reconstruct(const PadicScalar& x, Rational& out) {
    if (x.is_zero()) {
        out = {0, 1};
        return true;
    }
    if (x.val() < 0) return false;
    const int k = static_cast<int>(std::min<i64>(x.abs_prec(), max_precision(x.p())));
    const i64 m = ppow(x.p(), k);
    const i64 bound = static_cast<i64>(std::sqrt(static_cast<long double>(m) / 2.0L));
    i64 r0 = m, r1 = x.residue(k);
    i64 t0 = 0, t1 = 1;
    while (r1 > bound) {
        i64 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, static_cast<i64>(static_cast<i128>(t0) - static_cast<i128>(q) * t1));
    }
    if (t1 == 0 || std::llabs(t1) > bound) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (std::gcd(t1, std::llabs(r1)) != 1 && r1 != 0) return false;
    out = {r1, t1};
    return true;
}

bool analytic_exponent(const PadicScalar& c, i64 e) {
    if (c.is_zero()) return true;
    return (c.val() + 1) * (c.p() - 1) > e;
}

Rational analytic_margin(const PadicScalar& c, i64 e) {
    if (c.is_zero()) return {kInfVal, 1};
    return {(c.val() + 1) * (c.p() - 1) - e, c.p() - 1};
}

PadicScalar padic_log(const PadicScalar& t) {
    const i64 p = t.p();
    const int cap = t.cap();
    PadicScalar one = PadicScalar::from_int(p, cap, 1);
    PadicScalar x = t - one;
    if (x.val() < 1) throw DomainError("log needs t = 1 mod p");
    if (x.is_zero()) return x;
    const i64 vx = x.val();
    const i64 target = std::min<i64>(vx + cap, x.abs_prec()) + 1;
    PadicScalar sum = PadicScalar::zero(p, cap);
    PadicScalar xk = x;
    for (i64 k = 1;; ++k) {
        i64 lg = 0;
        for (i64 q = p; q <= k; q *= p) ++lg;
        if (k * vx - lg >= target) break;
        PadicScalar term = xk / PadicScalar::from_int(p, cap, k);
        sum = (k % 2 == 1) ? sum + term : sum - term;
        xk *= x;
    }
    return sum.with_abs_prec(x.abs_prec());
}

PadicScalar padic_exp(const PadicScalar& z) {
    const i64 p = z.p();
    const int cap = z.cap();
    PadicScalar one = PadicScalar::from_int(p, cap, 1);
    if (z.is_exact_zero()) return one;
    if (!z.is_zero() && z.val() * (p - 1) <= 1) throw DivergenceError("exp diverges: v(z) <= 1/(p-1)");
    if (z.is_zero()) return one.with_abs_prec(z.abs_prec());
    const i64 vz = z.val();
    const i64 target = std::min<i64>(cap, z.abs_prec()) + 1;
    PadicScalar sum = one;
    PadicScalar term = one;
    for (i64 k = 1;; ++k) {
        if (k * vz - (k - 1) / (p - 1) >= target + 1) break;
        term = term * z / PadicScalar::from_int(p, cap, k);
        sum += term;
    }
    return sum.with_abs_prec(z.abs_prec());
}

PadicScalar power_char(const PadicScalar& t, const PadicScalar& c) {
    if (!analytic_exponent(c, 1)) throw DivergenceError("exponent violates v_p(c) > 1/(p-1) - 1");
    PadicScalar one = PadicScalar::from_int(t.p(), t.cap(), 1);
    if ((t - one).val() < 1) throw DomainError("t must be 1 mod p");
    if (c.is_exact_zero()) return one;
    return padic_exp(c * padic_log(t));
}

}  // namespace gaps
