#include "gaps/iwahori.hpp"

#include <algorithm>
#include <sstream>

namespace gaps {

namespace {

bool integral(const PadicScalar& x) { return x.is_zero() || x.val() >= 0; }
bool p_divisible(const PadicScalar& x) { return x.is_zero() || x.val() >= 1; }
bool one_mod_p(const PadicScalar& x) {
    return p_divisible(x - PadicScalar::from_int(x.p(), x.cap(), 1));
}
bool unit(const PadicScalar& x) { return !x.is_zero() && x.val() == 0; }

using Mat = std::vector<PadicScalar>;

Mat matmul(const Mat& a, const Mat& b, int n) {
    const auto z = PadicScalar::zero(a[0].p(), a[0].cap());
    Mat c(n * n, z);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i * n + k].is_exact_zero()) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    return c;
}

struct LDU {
    Mat L, U;
    std::vector<PadicScalar> D;
};

LDU ldu(const IwahoriMatrix& g) {
    const int n = g.n();
    const i64 p = g.p();
    const int cap = g.cap();
    const auto z = PadicScalar::zero(p, cap), one = PadicScalar::from_int(p, cap, 1);
    LDU r{Mat(n * n, z), Mat(n * n, z), std::vector<PadicScalar>(n, z)};
    for (int k = 0; k < n; ++k) {
        r.L[k * n + k] = one;
        r.U[k * n + k] = one;
    }
    auto G = [&](int i, int j) { return g.at(i + 1, j + 1); };
    for (int k = 0; k < n; ++k) {
        PadicScalar s = G(k, k);
        for (int m = 0; m < k; ++m) s -= r.L[k * n + m] * r.D[m] * r.U[m * n + k];
        if (s.is_zero()) throw PrecisionError("pivot vanished during elimination");
        r.D[k] = s;
        const PadicScalar inv = s.inv();
        for (int j = k + 1; j < n; ++j) {
            PadicScalar t = G(k, j);
            for (int m = 0; m < k; ++m) t -= r.L[k * n + m] * r.D[m] * r.U[m * n + j];
            r.U[k * n + j] = t * inv;
        }
        for (int i = k + 1; i < n; ++i) {
            PadicScalar t = G(i, k);
            for (int m = 0; m < k; ++m) t -= r.L[i * n + m] * r.D[m] * r.U[m * n + k];
            r.L[i * n + k] = t * inv;
        }
    }
    return r;
}

// left-multiplies R by (1 - y E_ij), i.e. row i -= y row j
void peel(Mat& R, int n, int i, int j, const PadicScalar& y) {
    for (int c = 0; c < n; ++c) R[i * n + c] -= y * R[j * n + c];
}

bool is_identity(const Mat& R, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& x = R[i * n + j];
            if (i == j ? !(x - PadicScalar::from_int(x.p(), x.cap(), 1)).is_zero() : !x.is_zero()) return false;
        }
    return true;
}

}  // namespace

std::string tag_name(Tag t) {
    switch (t) {
        case Tag::G: return "G";
        case Tag::B: return "B";
        case Tag::U: return "U";
        case Tag::Q0: return "Q0";
        case Tag::P0: return "P0";
        case Tag::PwPlus: return "Pw_plus";
    }
    return "G";
}

Tag tag_from_name(const std::string& s) {
    for (Tag t : {Tag::G, Tag::B, Tag::U, Tag::Q0, Tag::P0, Tag::PwPlus})
        if (tag_name(t) == s) return t;
    throw DomainError("unknown matrix tag: " + s);
}

void require_p_large(i64 p, int n) {
    if (!is_prime(p)) throw DomainError("p must be prime");
    if (p <= n + 1) throw DomainError("p > n+1 is required");
}

bool IwahoriMatrix::satisfies(int n, const std::vector<PadicScalar>& e, Tag tag, const std::vector<int>& w) {
    auto at = [&](int i, int j) -> const PadicScalar& { return e[i * n + j]; };
    for (const auto& x : e)
        if (!integral(x)) return false;
    auto in_B = [&] {
        for (int i = 0; i < n; ++i) {
            if (!unit(at(i, i))) return false;
            for (int j = i + 1; j < n; ++j)
                if (!p_divisible(at(i, j))) return false;
        }
        return true;
    };
    auto lower_zero = [&] {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (!at(i, j).is_zero()) return false;
        return true;
    };
    auto diag_one_mod_p = [&] {
        for (int i = 0; i < n; ++i)
            if (!one_mod_p(at(i, i))) return false;
        return true;
    };
    switch (tag) {
        case Tag::G: return in_B() && diag_one_mod_p();
        case Tag::B: return in_B();
        case Tag::U:
            for (int i = 0; i < n; ++i) {
                if (!(at(i, i) - PadicScalar::from_int(at(i, i).p(), at(i, i).cap(), 1)).is_zero()) return false;
                for (int j = i + 1; j < n; ++j)
                    if (!at(i, j).is_zero()) return false;
            }
            return true;
        case Tag::Q0: return in_B() && lower_zero() && diag_one_mod_p();
        case Tag::P0: return in_B() && lower_zero();
        case Tag::PwPlus: {
            if (static_cast<int>(w.size()) != n || !in_B()) return false;
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < r; ++s)
                    if (!at(w[r] - 1, w[s] - 1).is_zero()) return false;
            return true;
        }
    }
    return false;
}

IwahoriMatrix::IwahoriMatrix(int n, std::vector<PadicScalar> entries, Tag tag, std::vector<int> w)
    : n_(n), e_(std::move(entries)), tag_(tag), w_(std::move(w)) {
    if (n < 2 || static_cast<int>(e_.size()) != n * n) throw DomainError("matrix must be n x n with n >= 2");
    require_p_large(e_.front().p(), n);
    if (!satisfies(n_, e_, tag_, w_)) throw MembershipError("matrix fails validation for tag " + tag_name(tag_));
}

IwahoriMatrix IwahoriMatrix::identity(i64 p, int cap, int n, Tag tag) {
    std::vector<PadicScalar> e(n * n, PadicScalar::zero(p, cap));
    for (int i = 0; i < n; ++i) e[i * n + i] = PadicScalar::from_int(p, cap, 1);
    std::vector<int> w;
    if (tag == Tag::PwPlus)
        for (int i = 1; i <= n; ++i) w.push_back(i);
    return IwahoriMatrix(n, e, tag, w);
}

IwahoriMatrix IwahoriMatrix::operator*(const IwahoriMatrix& o) const {
    if (n_ != o.n_) throw DomainError("size mismatch");
    Tag t = tag_ == o.tag_ ? tag_ : Tag::B;
    if ((tag_ == Tag::U || tag_ == Tag::Q0) && (o.tag_ == Tag::U || o.tag_ == Tag::Q0) && tag_ != o.tag_) t = Tag::G;
    if ((tag_ == Tag::G && (o.tag_ == Tag::U || o.tag_ == Tag::Q0)) ||
        (o.tag_ == Tag::G && (tag_ == Tag::U || tag_ == Tag::Q0)))
        t = Tag::G;
    return IwahoriMatrix(n_, matmul(e_, o.e_, n_), t, t == Tag::PwPlus ? w_ : std::vector<int>{});
}

IwahoriMatrix IwahoriMatrix::inverse() const {
    const int n = n_;
    const auto z = PadicScalar::zero(p(), cap()), one = PadicScalar::from_int(p(), cap(), 1);
    Mat a = e_, inv(n * n, z);
    for (int i = 0; i < n; ++i) inv[i * n + i] = one;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a[r * n + c].is_zero() && (piv < 0 || a[r * n + c].val() < a[piv * n + c].val())) piv = r;
        if (piv < 0) throw PrecisionError("singular matrix");
        for (int k = 0; k < n; ++k) {
            std::swap(a[c * n + k], a[piv * n + k]);
            std::swap(inv[c * n + k], inv[piv * n + k]);
        }
        const PadicScalar s = a[c * n + c].inv();
        for (int k = 0; k < n; ++k) {
            a[c * n + k] *= s;
            inv[c * n + k] *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r * n + c].is_zero()) continue;
            const PadicScalar f = a[r * n + c];
            for (int k = 0; k < n; ++k) {
                a[r * n + k] -= f * a[c * n + k];
                inv[r * n + k] -= f * inv[c * n + k];
            }
        }
    }
    return IwahoriMatrix(n, inv, tag_, w_);
}

bool IwahoriMatrix::same(const IwahoriMatrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].same(o.e_[k])) return false;
    return true;
}

std::string FactorDesc::str() const {
    std::ostringstream os;
    switch (kind) {
        case FactorKind::Lower: os << "lower(" << i << "," << j << ")"; break;
        case FactorKind::Diag: os << "diag(" << i << ")"; break;
        case FactorKind::Upper: os << "upper(" << i << "," << j << ")"; break;
    }
    return os.str();
}

void OneParamFactor::check() const {
    switch (desc.kind) {
        case FactorKind::Lower:
            if (desc.i <= desc.j || !integral(param)) throw MembershipError("lower factor needs i > j and y in Z_p");
            break;
        case FactorKind::Diag:
            if (!integral(param) || !one_mod_p(param)) throw MembershipError("diagonal factor needs t in 1 + pZ_p");
            break;
        case FactorKind::Upper:
            if (desc.i >= desc.j || !p_divisible(param)) throw MembershipError("upper factor needs i < j and y in pZ_p");
            break;
    }
}

IwahoriMatrix OneParamFactor::to_matrix(int n) const {
    check();
    const i64 p = param.p();
    const int cap = param.cap();
    std::vector<PadicScalar> e(n * n, PadicScalar::zero(p, cap));
    for (int i = 0; i < n; ++i) e[i * n + i] = PadicScalar::from_int(p, cap, 1);
    if (desc.kind == FactorKind::Diag) e[(desc.i - 1) * n + (desc.i - 1)] = param;
    else e[(desc.i - 1) * n + (desc.j - 1)] = param;
    return IwahoriMatrix(n, e, Tag::G);
}

std::vector<FactorDesc> lazard_order(int n) {
    if (n < 2) throw DomainError("n >= 2 required");
    std::vector<FactorDesc> out;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.push_back({FactorKind::Lower, i, j});
    for (int k = 1; k <= n; ++k) out.push_back({FactorKind::Diag, k, k});
    for (int i = n - 1; i >= 1; --i)
        for (int j = n; j > i; --j) out.push_back({FactorKind::Upper, i, j});
    return out;
}

std::vector<OneParamFactor> factorize(const IwahoriMatrix& g) {
    const int n = g.n();
    if (!IwahoriMatrix::satisfies(n, g.entries(), Tag::G)) throw MembershipError("element is not in G");
    LDU f = ldu(g);
    std::vector<OneParamFactor> out;
    for (const auto& d : lazard_order(n)) {
        const int i = d.i - 1, j = d.j - 1;
        switch (d.kind) {
            case FactorKind::Lower: {
                PadicScalar y = f.L[i * n + j];
                peel(f.L, n, i, j, y);
                out.push_back({d, y});
                break;
            }
            case FactorKind::Diag: out.push_back({d, f.D[i]}); break;
            case FactorKind::Upper: {
                PadicScalar y = f.U[i * n + j];
                peel(f.U, n, i, j, y);
                out.push_back({d, y});
                break;
            }
        }
    }
    if (!is_identity(f.L, n) || !is_identity(f.U, n)) throw PrecisionError("factor peeling did not terminate at 1");
    for (const auto& x : out) x.check();
    return out;
}

IwahoriMatrix ordered_product(const std::vector<OneParamFactor>& fs, int n, i64 p, int cap) {
    IwahoriMatrix acc = IwahoriMatrix::identity(p, cap, n);
    for (const auto& f : fs) acc = acc * f.to_matrix(n);
    return acc;
}

std::pair<IwahoriMatrix, IwahoriMatrix> split_UQ0(const IwahoriMatrix& g) {
    const int n = g.n();
    if (!IwahoriMatrix::satisfies(n, g.entries(), Tag::G)) throw MembershipError("element is not in G");
    LDU f = ldu(g);
    Mat q(n * n, PadicScalar::zero(g.p(), g.cap()));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) q[i * n + j] = f.D[i] * f.U[i * n + j];
    return {IwahoriMatrix(n, f.L, Tag::U), IwahoriMatrix(n, q, Tag::Q0)};
}

}  // namespace gaps
