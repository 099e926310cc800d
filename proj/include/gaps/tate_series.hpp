#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gaps/padic.hpp"
#include "gaps/unramified.hpp"

namespace gaps {

struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsoundSubstitution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TruncationInsufficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr i64 kNegInf = -kInfVal;

enum class Role : std::uint8_t {
    Unipotent,      // a_(i,j), ranges over Z_p
    LowerParam,     // y of a lower factor, Z_p
    UpperParam,     // y of an upper factor, pZ_p
    RescaledParam,  // eta with y = p*eta, Z_p
    DiagParam,      // xi with t = 1 + p*xi, Z_p
    ResScalar,      // restriction-of-scalars coordinate, Z_p
    Slot,           // tensor-slot coordinate a[i,j]@s, Z_p
};

std::string role_name(Role r);
Role role_from_name(const std::string& s);

struct Variable {
    std::string name;
    Role role = Role::Unipotent;
    bool operator==(const Variable&) const = default;
};

/// Ordered, named variables.  At most 16 of them; a monomial packs one
/// 4-bit exponent per variable, the first variable in the top nibble so
/// that integer order on keys is lexicographic order on exponents.
class VariableSet {
public:
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxDegree = 15;

    VariableSet() = default;
    explicit VariableSet(std::vector<Variable> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const Variable& operator[](int i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }
    int index_of(const std::string& name) const;
    // 1 for variables whose domain is pZ_p
    int weight(int i) const { return vars_[i].role == Role::UpperParam ? 1 : 0; }
    std::uint64_t weight_mask() const { return mask_; }
    bool operator==(const VariableSet& o) const { return vars_ == o.vars_; }

private:
    std::vector<Variable> vars_;
    std::uint64_t mask_ = 0;
};

using VarsPtr = std::shared_ptr<const VariableSet>;
VarsPtr make_vars(std::vector<Variable> vars);

using Mono = std::uint64_t;

inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (4 * (15 - i))) & 0xF); }
inline Mono mono_unit(int i) { return Mono(1) << (4 * (15 - i)); }
inline Mono mono_set(Mono m, int i, int e) {
    const int sh = 4 * (15 - i);
    return (m & ~(Mono(0xF) << sh)) | (Mono(e) << sh);
}
inline int mono_degree(Mono m) {
    int d = 0;
    for (; m; m >>= 4) d += static_cast<int>(m & 0xF);
    return d;
}
Mono mono_from(const std::vector<int>& e);
std::vector<int> mono_to(Mono m, int nvars);

struct PadicRing {
    using Elem = PadicScalar;
    i64 p = 7;
    int M = 12;
    Elem zero() const { return PadicScalar::zero(p, M); }
    Elem one() const { return PadicScalar::from_int(p, M, 1); }
    Elem from_int(i64 n) const { return PadicScalar::from_int(p, M, n); }
    Elem embed(const PadicScalar& x) const { return x; }
    bool operator==(const PadicRing& o) const { return p == o.p && M == o.M; }
};

struct UnramifiedRing {
    using Elem = UnramifiedScalar;
    FieldPtr K;
    i64 p_() const { return K->p(); }
    Elem zero() const { return UnramifiedScalar::zero(K); }
    Elem one() const { return UnramifiedScalar::from_int(K, 1); }
    Elem from_int(i64 n) const { return UnramifiedScalar::from_int(K, n); }
    Elem embed(const PadicScalar& x) const { return UnramifiedScalar::from_padic(K, x); }
    bool operator==(const UnramifiedRing& o) const { return K == o.K; }
    i64 p() const { return K->p(); }
    int cap() const { return K->cap(); }
};

inline i64 ring_p(const PadicRing& r) { return r.p; }
inline int ring_cap(const PadicRing& r) { return r.M; }
inline i64 ring_p(const UnramifiedRing& r) { return r.K->p(); }
inline int ring_cap(const UnramifiedRing& r) { return r.K->cap(); }

inline PadicScalar scale_coeff(const PadicScalar& a, const PadicScalar& s) { return a * s; }
inline UnramifiedScalar scale_coeff(const UnramifiedScalar& a, const PadicScalar& s) { return a * s; }

/// Truncated power series in a fixed VariableSet, total degree <= D.
///
/// remainder() is a lower bound for the weighted valuation (coefficient
/// valuation plus one per exponent of a pZ_p variable) of every
/// coefficient of (exact series - stored series), so it bounds the error
/// of any evaluation on the domain polydisk.  kInfVal means exact.
/// Coefficients that vanish to precision or whose weighted valuation
/// reaches the precision cap are not stored.
template <class R>
class TateSeries {
public:
    using C = typename R::Elem;
    struct Term {
        Mono m;
        C c;
    };

    TateSeries() = default;
    TateSeries(R ring, VarsPtr vars, int D) : ring_(std::move(ring)), vars_(std::move(vars)), D_(D) {
        if (D_ < 0 || D_ > VariableSet::kMaxDegree) throw TruncationInsufficient("truncation degree out of range");
        if (!vars_ || vars_->size() > VariableSet::kMaxVars) throw VariableMismatch("too many variables");
    }

    static TateSeries constant(const R& ring, const VarsPtr& vars, int D, const C& c) {
        TateSeries f(ring, vars, D);
        f.push(0, c);
        return f;
    }
    static TateSeries one(const R& ring, const VarsPtr& vars, int D) { return constant(ring, vars, D, ring.one()); }
    static TateSeries variable(const R& ring, const VarsPtr& vars, int D, int i) {
        TateSeries f(ring, vars, D);
        if (D >= 1) f.push(mono_unit(i), ring.one());
        else f.note_truncation(vars->weight(i));
        return f;
    }
    static TateSeries monomial(const R& ring, const VarsPtr& vars, int D, Mono m, const C& c) {
        TateSeries f(ring, vars, D);
        if (mono_degree(m) <= D) f.push(m, c);
        else f.note_truncation(c.val() + f.weight_of(m));
        return f;
    }

    const R& ring() const { return ring_; }
    const VarsPtr& vars() const { return vars_; }
    int trunc() const { return D_; }
    int cap() const { return ring_cap(ring_); }
    i64 p() const { return ring_p(ring_); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool truncated() const { return truncated_; }
    i64 remainder() const { return rem_; }

    void set_remainder(i64 r) { rem_ = r; }
    void note_remainder(i64 r) { rem_ = std::min(rem_, r); }
    void note_truncation(i64 r) {
        truncated_ = true;
        rem_ = std::min(rem_, r);
    }
    void set_truncated(bool t) { truncated_ = t; }

    int weight_of(Mono m) const { return mono_degree(m & vars_->weight_mask()); }
    i64 eff_val(const Term& t) const { return t.c.val() + weight_of(t.m); }

    C coeff(Mono m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Mono k) { return t.m < k; });
        if (it != terms_.end() && it->m == m) return it->c;
        return ring_.zero();
    }
    C coeff(const std::vector<int>& e) const { return coeff(mono_from(e)); }

    // minimum coefficient valuation (kInfVal for the zero series)
    i64 min_val() const {
        i64 v = kInfVal;
        for (const auto& t : terms_) v = std::min(v, t.c.val());
        return v;
    }
    // minimum weighted valuation
    i64 eff_min() const {
        i64 v = kInfVal;
        for (const auto& t : terms_) v = std::min(v, eff_val(t));
        return v;
    }
    int max_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, mono_degree(t.m));
        return d;
    }

    void check_compatible(const TateSeries& o) const {
        if (!(*vars_ == *o.vars_)) throw VariableMismatch("series over different variable sets");
        if (D_ != o.D_) throw VariableMismatch("series with different truncation degrees");
        if (!(ring_ == o.ring_)) throw VariableMismatch("series over different coefficient rings");
    }

    TateSeries operator-() const {
        TateSeries r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    TateSeries operator+(const TateSeries& o) const {
        check_compatible(o);
        TateSeries r(ring_, vars_, D_);
        r.truncated_ = truncated_ || o.truncated_;
        r.rem_ = std::min(rem_, o.rem_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].m < o.terms_[j].m)) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].m < terms_[i].m) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                r.push_checked(terms_[i].m, terms_[i].c + o.terms_[j].c);
                ++i;
                ++j;
            }
        }
        return r;
    }
    TateSeries operator-(const TateSeries& o) const { return *this + (-o); }
    TateSeries& operator+=(const TateSeries& o) { return *this = *this + o; }
    TateSeries& operator-=(const TateSeries& o) { return *this = *this - o; }

    TateSeries scale(const C& s) const {
        TateSeries r(ring_, vars_, D_);
        r.truncated_ = truncated_;
        r.rem_ = add_v(rem_, s.is_zero() ? s.abs_prec() : s.val());
        for (const auto& t : terms_) r.push_checked(t.m, t.c * s);
        return r;
    }
    TateSeries scale_p(const PadicScalar& s) const { return scale(ring_.embed(s)); }

    TateSeries operator*(const TateSeries& o) const {
        check_compatible(o);
        TateSeries r(ring_, vars_, D_);
        r.truncated_ = truncated_ || o.truncated_;
        const i64 ef = eff_min(), eg = o.eff_min();
        i64 rem = std::min({add_v(rem_, eg), add_v(o.rem_, ef), add_v(rem_, o.rem_)});
        // g's terms bucketed by degree with suffix minima of weighted valuation
        std::vector<std::vector<const Term*>> byDeg(D_ + 1);
        for (const auto& t : o.terms_) byDeg[mono_degree(t.m)].push_back(&t);
        std::vector<i64> sufMin(D_ + 2, kInfVal);
        for (int d = D_; d >= 0; --d) {
            sufMin[d] = sufMin[d + 1];
            for (const Term* t : byDeg[d]) sufMin[d] = std::min(sufMin[d], o.eff_val(*t));
        }
        std::unordered_map<Mono, C> acc;
        acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
        for (const auto& a : terms_) {
            const int da = mono_degree(a.m);
            const int room = D_ - da;
            if (room + 1 <= D_ && sufMin[room + 1] < kInfVal) {
                r.truncated_ = true;
                rem = std::min(rem, eff_val(a) + sufMin[room + 1]);
            }
            for (int d = 0; d <= room; ++d) {
                for (const Term* b : byDeg[d]) {
                    const Mono m = a.m + b->m;
                    auto it = acc.find(m);
                    if (it == acc.end()) acc.emplace(m, a.c * b->c);
                    else it->second += a.c * b->c;
                }
            }
        }
        r.rem_ = rem;
        r.absorb(acc);
        return r;
    }
    TateSeries& operator*=(const TateSeries& o) { return *this = *this * o; }

    TateSeries pow(int e) const {
        TateSeries r = one(ring_, vars_, D_);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    TateSeries truncate_deg(int N) const {
        if (N < 0 || N > D_) throw TruncationInsufficient("truncation index outside [0, D]");
        TateSeries r = *this;
        r.terms_.clear();
        for (const auto& t : terms_)
            if (mono_degree(t.m) <= N) r.terms_.push_back(t);
        return r;
    }

    // terms whose exponent in variable i equals k, with that exponent cleared
    TateSeries coefficient_of(int i, int k) const {
        TateSeries r(ring_, vars_, D_);
        r.truncated_ = truncated_;
        r.rem_ = rem_ >= kInfVal ? kInfVal : rem_ - static_cast<i64>(vars_->weight(i)) * k;
        for (const auto& t : terms_)
            if (mono_exp(t.m, i) == k) r.terms_.push_back({mono_set(t.m, i, 0), t.c});
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.m < y.m; });
        return r;
    }

    TateSeries partial(int i) const {
        TateSeries r(ring_, vars_, D_);
        r.truncated_ = truncated_;
        r.rem_ = rem_ >= kInfVal ? kInfVal : rem_ - vars_->weight(i);
        for (const auto& t : terms_) {
            int e = mono_exp(t.m, i);
            if (e == 0) continue;
            r.push_checked(t.m - mono_unit(i), t.c * ring_.from_int(e));
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.m < y.m; });
        return r;
    }

    // re-express in another variable set; map[i] = target index of variable i, or -1 to require exponent 0
    TateSeries reindex(const VarsPtr& target, const std::vector<int>& map, int D = -1) const {
        TateSeries r(ring_, target, D < 0 ? D_ : D);
        r.truncated_ = truncated_;
        r.rem_ = rem_;
        std::unordered_map<Mono, C> acc;
        for (const auto& t : terms_) {
            Mono m = 0;
            for (int i = 0; i < vars_->size(); ++i) {
                int e = mono_exp(t.m, i);
                if (!e) continue;
                if (map[i] < 0) throw VariableMismatch("variable dropped with nonzero exponent");
                m += Mono(e) * mono_unit(map[i]);
            }
            if (mono_degree(m) > r.D_) {
                r.note_truncation(t.c.val() + r.weight_of(m));
                continue;
            }
            acc.emplace(m, t.c);
        }
        r.absorb(acc);
        return r;
    }

    template <class F>
    auto map_coeffs(const auto& ring2, F fn) const {
        using R2 = std::decay_t<decltype(ring2)>;
        TateSeries<R2> r(ring2, vars_, D_);
        r.set_truncated(truncated_);
        r.set_remainder(rem_);
        for (const auto& t : terms_) r.push_checked(t.m, fn(t.c));
        return r;
    }

    // appends a term; keys must arrive in increasing order
    void push(Mono m, const C& c) { push_checked(m, c); }
    void push_checked(Mono m, const C& c) {
        if (c.is_zero()) {
            if (c.abs_prec() < kInfVal) rem_ = std::min(rem_, c.abs_prec() + weight_of(m));
            return;
        }
        const i64 ev = c.val() + weight_of(m);
        if (ev >= cap()) {
            rem_ = std::min(rem_, ev);
            return;
        }
        terms_.push_back({m, c});
    }
    // inserts or accumulates out of order
    void add_term(Mono m, const C& c) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Mono k) { return t.m < k; });
        if (it != terms_.end() && it->m == m) {
            C s = it->c + c;
            terms_.erase(it);
            add_sorted(m, s);
        } else {
            add_sorted(m, c);
        }
    }

    void absorb(std::unordered_map<Mono, C>& acc) {
        std::vector<std::pair<Mono, C>> v(acc.begin(), acc.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [m, c] : v) push_checked(m, c);
    }

    static i64 add_v(i64 a, i64 b) {
        if (a >= kInfVal || b >= kInfVal) return kInfVal;
        if (a <= kNegInf || b <= kNegInf) return kNegInf;
        return a + b;
    }

private:
    void add_sorted(Mono m, const C& c) {
        TateSeries tmp(ring_, vars_, D_);
        tmp.push_checked(m, c);
        rem_ = std::min(rem_, tmp.rem_);
        if (tmp.terms_.empty()) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Mono k) { return t.m < k; });
        terms_.insert(it, tmp.terms_[0]);
    }

    R ring_;
    VarsPtr vars_;
    int D_ = 0;
    std::vector<Term> terms_;
    bool truncated_ = false;
    i64 rem_ = kInfVal;
};

using QSeries = TateSeries<PadicRing>;
using LSeries = TateSeries<UnramifiedRing>;

/// Truncated composition f(images).  images[i] replaces variable i of f;
/// all images share one target variable set.
template <class R>
TateSeries<R> substitute(const TateSeries<R>& f, const std::vector<TateSeries<R>>& images) {
    using S = TateSeries<R>;
    const int n = f.vars()->size();
    if (static_cast<int>(images.size()) != n) throw VariableMismatch("one image per variable required");
    if (n == 0) return f;
    const S& base = images[0];
    for (const auto& g : images) base.check_compatible(g);
    bool integral = true;
    for (int i = 0; i < n; ++i) {
        const auto& g = images[i];
        const int w = f.vars()->weight(i);
        auto c0 = g.coeff(Mono(0));
        if (!c0.is_zero() && c0.val() < w)
            throw UnsoundSubstitution("image constant term outside the domain of " + (*f.vars())[i].name);
        if (g.eff_min() < w && !g.is_zero()) integral = false;
    }
    S out(base.ring(), base.vars(), base.trunc());
    out.set_truncated(f.truncated());
    for (const auto& g : images)
        if (g.truncated()) out.set_truncated(true);
    if (f.remainder() < kInfVal) out.note_remainder(integral ? f.remainder() : kNegInf);
    // power caches, filled lazily
    std::vector<std::vector<S>> pw(n);
    auto power = [&](int i, int e) -> const S& {
        auto& v = pw[i];
        if (v.empty()) v.push_back(S::one(base.ring(), base.vars(), base.trunc()));
        while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[i]);
        return v[e];
    };
    const auto& terms = f.terms();
    std::unordered_map<Mono, typename S::C> acc;
    i64 rem = kInfVal;
    bool trunc = false;
    std::function<void(std::size_t, std::size_t, int, const S*)> rec = [&](std::size_t lo, std::size_t hi, int i,
                                                                          const S* prefix) {
        if (i == n) {
            for (std::size_t k = lo; k < hi; ++k) {
                const auto& c = terms[k].c;
                if (prefix == nullptr) {
                    auto it = acc.find(0);
                    if (it == acc.end()) acc.emplace(Mono(0), c);
                    else it->second += c;
                    continue;
                }
                rem = std::min(rem, S::add_v(prefix->remainder(), c.val()));
                trunc = trunc || prefix->truncated();
                for (const auto& t : prefix->terms()) {
                    auto it = acc.find(t.m);
                    if (it == acc.end()) acc.emplace(t.m, c * t.c);
                    else it->second += c * t.c;
                }
            }
            return;
        }
        std::size_t a = lo;
        while (a < hi) {
            const int e = mono_exp(terms[a].m, i);
            std::size_t b = a;
            while (b < hi && mono_exp(terms[b].m, i) == e) ++b;
            if (e == 0) {
                rec(a, b, i + 1, prefix);
            } else {
                S next = prefix ? (*prefix) * power(i, e) : power(i, e);
                rec(a, b, i + 1, &next);
            }
            a = b;
        }
    };
    rec(0, terms.size(), 0, nullptr);
    out.note_remainder(rem);
    if (trunc) out.set_truncated(true);
    out.absorb(acc);
    return out;
}

/// Sum of u^q for q >= 0, truncated.
template <class R>
TateSeries<R> invert_one_minus(const TateSeries<R>& u) {
    using S = TateSeries<R>;
    auto c0 = u.coeff(Mono(0));
    if (!c0.is_zero() && c0.val() < 1) throw NotInvertible("1 - u is not topologically invertible");
    S result = S::one(u.ring(), u.vars(), u.trunc());
    S P = result;
    const int limit = 4 * (u.trunc() + u.cap()) + 8;
    for (int q = 1;; ++q) {
        if (q > limit) throw PrecisionError("geometric series failed to terminate");
        P = P * u;
        if (P.is_zero()) {
            result.note_truncation(u.eff_min() >= 0 ? P.remainder() : kNegInf);
            break;
        }
        result += P;
    }
    return result;
}

/// (1 + u)^c by the generalized binomial series.
template <class R>
TateSeries<R> char_power(const TateSeries<R>& u, const PadicScalar& c) {
    using S = TateSeries<R>;
    if (!analytic_exponent(c, 1)) throw DivergenceError("exponent violates the analyticity bound");
    bool ok = u.eff_min() >= 1;
    if (!ok && u.coeff(Mono(0)).is_zero()) {
        ok = true;
        for (const auto& t : u.terms())
            if (mono_degree(t.m) == 1 && u.eff_val(t) < 1) ok = false;
    }
    if (!ok) throw DomainError("1 + u is not a unit series of the required form");
    S result = S::one(u.ring(), u.vars(), u.trunc());
    S P = result;
    const i64 p = c.p();
    PadicScalar binom = PadicScalar::from_int(p, c.cap(), 1);
    const int limit = 4 * (u.trunc() + u.cap()) + 8;
    for (int q = 1;; ++q) {
        if (q > limit) throw PrecisionError("binomial series failed to terminate");
        P = P * u;
        if (P.is_zero()) {
            result.note_truncation(u.eff_min() >= 0 ? P.remainder() : kNegInf);
            break;
        }
        binom = binom * (c - PadicScalar::from_int(p, c.cap(), q - 1)) / PadicScalar::from_int(p, c.cap(), q);
        if (binom.is_zero()) {
            result.note_remainder(S::add_v(binom.abs_prec(), P.eff_min()));
            if (binom.is_exact_zero()) break;
            continue;
        }
        result += P.scale_p(binom);
    }
    return result;
}

template <class R>
struct Evaluation {
    typename R::Elem value;
    i64 certified;   // digits guaranteed by stored coefficients and remainder
    i64 tail_floor;  // D * min input valuation when all inputs lie in pZ_p, else 0
};

template <class R>
Evaluation<R> evaluate(const TateSeries<R>& f, const std::vector<typename R::Elem>& point) {
    const auto& vars = *f.vars();
    if (static_cast<int>(point.size()) != vars.size()) throw VariableMismatch("point dimension differs");
    i64 minv = kInfVal;
    for (int i = 0; i < vars.size(); ++i) {
        const i64 v = point[i].val();
        if (!point[i].is_zero() && v < vars.weight(i)) throw DomainError("point outside the domain of " + vars[i].name);
        minv = std::min(minv, v);
    }
    std::vector<std::vector<typename R::Elem>> pw(vars.size());
    for (int i = 0; i < vars.size(); ++i) {
        pw[i].push_back(f.ring().one());
        for (int e = 1; e <= f.trunc(); ++e) pw[i].push_back(pw[i].back() * point[i]);
    }
    auto value = f.ring().zero();
    for (const auto& t : f.terms()) {
        auto term = t.c;
        for (int i = 0; i < vars.size(); ++i) {
            const int e = mono_exp(t.m, i);
            if (e) term = term * pw[i][e];
        }
        value = value + term;
    }
    Evaluation<R> ev{value, std::min(value.abs_prec(), f.remainder()), 0};
    if (minv >= 1 && minv < kInfVal) ev.tail_floor = f.trunc() * minv;
    return ev;
}

struct GaussNorm {
    i64 num = 0;  // |f| = num / den
    i64 den = 1;
    i64 val = kInfVal;
};

template <class R>
GaussNorm gauss_norm(const TateSeries<R>& f) {
    if (f.is_zero()) return {0, 1, kInfVal};
    const i64 m = f.min_val();
    if (m >= 0) return {1, ppow(f.p(), static_cast<int>(m)), m};
    return {ppow(f.p(), static_cast<int>(-m)), 1, m};
}

template <class R>
TateSeries<R> truncate_deg(const TateSeries<R>& f, int N) {
    return f.truncate_deg(N);
}

// true when a - b vanishes except possibly in weighted valuation >= bound
template <class R>
bool agree_beyond(const TateSeries<R>& a, const TateSeries<R>& b, i64 bound) {
    auto d = a - b;
    return d.eff_min() >= bound;
}

}  // namespace gaps
