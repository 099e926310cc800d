#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gaps/padic.hpp"

namespace gaps {

/// Unramified extension L/Q_p of degree N, presented as Z_p[w]/(F) with
/// F the smallest monic irreducible polynomial mod p (coefficients read
/// as base-p digits, constant term least significant).
class UnramifiedField {
public:
    static std::shared_ptr<const UnramifiedField> make(i64 p, int degree, int cap);

    i64 p() const { return p_; }
    int degree() const { return n_; }
    int cap() const { return cap_; }
    // f_0..f_{N-1}; F = w^N + sum f_i w^i
    const std::vector<i64>& modulus() const { return f_; }
    // column i holds the coordinates of frob(w^i)
    const std::vector<std::vector<PadicScalar>>& frobenius_matrix() const { return frob_; }

    // coordinates of w^k for N <= k <= 2N-2
    const std::vector<i64>& reduction(int k) const { return red_[k - n_]; }

private:
    i64 p_ = 0;
    int n_ = 1;
    int cap_ = 0;
    std::vector<i64> f_;
    std::vector<std::vector<i64>> red_;
    std::vector<std::vector<PadicScalar>> frob_;
};

using FieldPtr = std::shared_ptr<const UnramifiedField>;

std::vector<i64> smallest_irreducible(i64 p, int degree);

class UnramifiedScalar {
public:
    UnramifiedScalar() = default;

    static UnramifiedScalar zero(const FieldPtr& K);
    static UnramifiedScalar from_int(const FieldPtr& K, i64 n);
    static UnramifiedScalar from_padic(const FieldPtr& K, const PadicScalar& x);
    static UnramifiedScalar from_coords(const FieldPtr& K, std::vector<PadicScalar> coords);
    static UnramifiedScalar generator(const FieldPtr& K);

    const FieldPtr& field() const { return K_; }
    const std::vector<PadicScalar>& coords() const { return c_; }
    const PadicScalar& coord(int i) const { return c_[i]; }
    int degree() const { return static_cast<int>(c_.size()); }

    bool is_zero() const;
    i64 val() const;
    i64 abs_prec() const;
    bool in_base() const;

    UnramifiedScalar operator-() const;
    UnramifiedScalar operator+(const UnramifiedScalar& o) const;
    UnramifiedScalar operator-(const UnramifiedScalar& o) const;
    UnramifiedScalar operator*(const UnramifiedScalar& o) const;
    UnramifiedScalar operator*(const PadicScalar& s) const;
    UnramifiedScalar operator/(const UnramifiedScalar& o) const { return *this * o.inv(); }
    UnramifiedScalar& operator+=(const UnramifiedScalar& o) { return *this = *this + o; }
    UnramifiedScalar& operator*=(const UnramifiedScalar& o) { return *this = *this * o; }

    UnramifiedScalar inv() const;
    UnramifiedScalar pow(i64 e) const;
    UnramifiedScalar frobenius(int k = 1) const;
    bool same(const UnramifiedScalar& o) const { return (*this - o).is_zero(); }

    std::string str() const;

private:
    UnramifiedScalar unit_inverse() const;

    FieldPtr K_;
    std::vector<PadicScalar> c_;
};

// product of the N Frobenius conjugates
PadicScalar norm_L(const UnramifiedScalar& x);

}  // namespace gaps
