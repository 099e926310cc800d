#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace gaps {

using i64 = long long;
using i128 = __int128;

constexpr i64 kInfVal = i64(1) << 40;

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

i64 ppow(i64 p, int k);
bool is_prime(i64 n);
int max_precision(i64 p);
i64 mod_inverse(i64 a, i64 m);
int vp_int(i64 p, i64 n);

/// Element of Q_p with capped relative precision.
///
/// A nonzero value is p^v * u where u is a unit known modulo p^prec,
/// prec <= cap.  Zero comes in two flavours: the exact zero marker and
/// O(p^k), a value known to vanish modulo p^k.
class PadicScalar {
public:
    enum class Kind : std::uint8_t { Exact0, Inexact0, Unit };

    PadicScalar() = default;

    static PadicScalar zero(i64 p, int cap);
    static PadicScalar inexact_zero(i64 p, int cap, i64 abs_prec);
    static PadicScalar from_int(i64 p, int cap, i64 n);
    static PadicScalar from_rational(i64 p, int cap, i64 num, i64 den);
    // p^v * unit with unit reduced mod p^prec; unit must be prime to p
    static PadicScalar from_parts(i64 p, int cap, i64 v, i64 unit, int prec);

    i64 p() const { return p_; }
    int cap() const { return cap_; }
    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ != Kind::Unit; }
    bool is_exact_zero() const { return kind_ == Kind::Exact0; }
    i64 val() const { return kind_ == Kind::Unit ? v_ : kInfVal; }
    i64 unit() const { return u_; }
    int rel_prec() const { return kind_ == Kind::Unit ? prec_ : 0; }
    i64 abs_prec() const;

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const { return *this + (-o); }
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const { return *this * o.inv(); }
    PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
    PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
    PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }

    PadicScalar inv() const;
    PadicScalar pow(i64 e) const;
    PadicScalar mul_ppow(i64 k) const;
    PadicScalar with_abs_prec(i64 k) const;

    // representative of x mod p^k in [0, p^k); requires val >= 0 and k <= abs_prec
    i64 residue(int k) const;
    // x == o to the joint precision of both
    bool same(const PadicScalar& o) const { return (*this - o).is_zero(); }

    std::string str() const;

private:
    i64 p_ = 0;
    i64 v_ = 0;
    i64 u_ = 0;
    int prec_ = 0;
    int cap_ = 0;
    Kind kind_ = Kind::Exact0;
};

struct Rational {
    i64 num = 0;
    i64 den = 1;
};

// a/b with |a|,|b| <= sqrt(p^k / 2) congruent to x mod p^k, if any
bool rational_reconstruct(const PadicScalar& x, Rational& out);

// strict bound v_p(c) > e/(p-1) - 1
bool analytic_exponent(const PadicScalar& c, i64 e);
// v_p(c) - (e/(p-1) - 1) as an exact fraction; den = p-1
Rational analytic_margin(const PadicScalar& c, i64 e);

PadicScalar padic_log(const PadicScalar& t);
PadicScalar padic_exp(const PadicScalar& z);
// t^c = exp(c log t) for t = 1 mod p
PadicScalar power_char(const PadicScalar& t, const PadicScalar& c);

}  // namespace gaps
