#include "gaps/verma.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace gaps {

RootDatum RootDatum::gl(int n) {
    if (n < 1) throw DomainError("n must be positive");
    return {n, negative_roots(n)};
}

std::vector<i64> RootDatum::alpha(std::size_t idx) const {
    std::vector<i64> a(n, 0);
    a[roots[idx].first - 1] += 1;
    a[roots[idx].second - 1] -= 1;
    return a;
}

std::vector<i64> RootDatum::coroot(std::size_t idx) const { return alpha(idx); }

Weight mu_of(const Character& chi) {
    Weight mu;
    for (const auto& c : chi.c) mu.push_back(-c);
    return mu;
}

PadicScalar torus_eigenvalue(const std::vector<int>& r, int k, const Character& chi) {
    const auto roots = negative_roots(chi.n);
    if (r.size() != roots.size()) throw DomainError("multi-index has wrong length");
    if (k < 1 || k > chi.n) throw DomainError("torus index out of range");
    i64 s = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
        if (roots[a].second == k) s += r[a];
        if (roots[a].first == k) s -= r[a];
    }
    return chi.c[k - 1] + PadicScalar::from_int(chi.p(), chi.cap(), s);
}

std::vector<i64> monomial_shift(const std::vector<int>& r, int n) {
    const auto roots = negative_roots(n);
    std::vector<i64> d(n, 0);
    for (std::size_t a = 0; a < roots.size(); ++a) {
        d[roots[a].first - 1] += r[a];
        d[roots[a].second - 1] -= r[a];
    }
    return d;
}

i64 shift_height(const std::vector<i64>& d) {
    i64 h = 0, tail = 0;
    for (int k = static_cast<int>(d.size()) - 1; k >= 1; --k) {
        tail += d[k];
        if (tail < 0) return -1;
        h += tail;
    }
    if (tail + d[0] != 0) return -1;
    return h;
}

namespace {

QSeries var(const QSeries& like, int v) { return QSeries::variable(like.ring(), like.vars(), like.trunc(), v); }

}  // namespace

PSVector lie_lower(int i, int j, const PSVector& f) {
    if (!(1 <= j && j < i && i <= f.n())) throw DomainError("lower generator needs n >= i > j >= 1");
    auto fr = f.frame();
    QSeries r = -f.f.partial(fr.at(i, j));
    for (int v = 1; v < j; ++v) {
        auto d = f.f.partial(fr.at(i, v));
        if (!d.is_zero()) r -= var(f.f, fr.at(j, v)) * d;
    }
    return {r, f.chi};
}

PSVector lie_diag(int k, const PSVector& f) {
    if (k < 1 || k > f.n()) throw DomainError("torus index out of range");
    auto fr = f.frame();
    QSeries r = f.f.scale_p(f.chi.c[k - 1]);
    for (int i = k + 1; i <= f.n(); ++i) r += var(f.f, fr.at(i, k)) * f.f.partial(fr.at(i, k));
    for (int j = 1; j < k; ++j) r -= var(f.f, fr.at(k, j)) * f.f.partial(fr.at(k, j));
    return {r, f.chi};
}

namespace {

// derivative at y = 0 of the upper action: vector field X1 on the
// coordinates and the multiplier -sum c_r Z1_rr
struct UpperField {
    std::vector<std::pair<int, QSeries>> field;  // (variable, X1 entry)
    QSeries multiplier;
};

UpperField upper_field(const QSeries& like, const Frame& fr, int i, int j, const Character& chi) {
    const int n = fr.n;
    const QSeries zero(like.ring(), like.vars(), like.trunc());
    const QSeries one = QSeries::one(like.ring(), like.vars(), like.trunc());
    auto A = [&](int r, int s) -> QSeries {
        if (r == s) return one;
        if (r < s) return zero;
        return var(like, fr.at(r, s));
    };
    std::vector<QSeries> Ainv(n * n, zero);
    for (int s = 1; s <= n; ++s) {
        Ainv[(s - 1) * n + (s - 1)] = one;
        for (int r = s + 1; r <= n; ++r) {
            QSeries acc = zero;
            for (int k = s; k < r; ++k) acc -= A(r, k) * Ainv[(k - 1) * n + (s - 1)];
            Ainv[(r - 1) * n + (s - 1)] = acc;
        }
    }
    auto Mx = [&](int r, int s) { return -(Ainv[(r - 1) * n + (i - 1)] * A(j, s)); };
    UpperField uf{{}, zero};
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l) {
            QSeries x = zero;
            for (int m = l + 1; m <= k; ++m) x += A(k, m) * Mx(m, l);
            if (!x.is_zero()) uf.field.emplace_back(fr.at(k, l), x);
        }
    for (int r = 1; r <= n; ++r)
        if (!chi.c[r - 1].is_exact_zero()) uf.multiplier -= Mx(r, r).scale_p(chi.c[r - 1]);
    return uf;
}

QSeries apply_field(const UpperField& uf, const QSeries& f) {
    QSeries r = f * uf.multiplier;
    for (const auto& [v, x] : uf.field) {
        auto d = f.partial(v);
        if (!d.is_zero()) r += d * x;
    }
    return r;
}

}  // namespace

PSVector lie_upper(int i, int j, const PSVector& f) {
    if (!(1 <= i && i < j && j <= f.n())) throw DomainError("upper generator needs 1 <= i < j <= n");
    require_analytic(f.chi);
    auto fr = f.frame();
    return {apply_field(upper_field(f.f, fr, i, j, f.chi), f.f), f.chi};
}

namespace {

i64 kostant_rec(std::vector<i64>& d, int m, std::map<std::pair<int, std::vector<i64>>, i64>& memo) {
    if (m == 1) return d[0] == 0 ? 1 : 0;
    const i64 top = d[m - 1];
    if (top < 0) return 0;
    std::vector<i64> key(d.begin(), d.begin() + m - 1);
    auto it = memo.find({m, key});
    if (it != memo.end()) return it->second;
    i64 total = 0;
    // distribute top among r_{m,1..m-1}
    std::function<void(int, i64)> rec = [&](int j, i64 left) {
        if (j == m - 1) {
            d[j - 1] += left;
            total += kostant_rec(d, m - 1, memo);
            d[j - 1] -= left;
            return;
        }
        for (i64 x = 0; x <= left; ++x) {
            d[j - 1] += x;
            rec(j + 1, left - x);
            d[j - 1] -= x;
        }
    };
    rec(1, top);
    memo.emplace(std::make_pair(m, key), total);
    return total;
}

}  // namespace

i64 kostant_count(const std::vector<i64>& d) {
    if (d.empty()) return 0;
    if (shift_height(d) < 0) return 0;
    std::vector<i64> w = d;
    std::map<std::pair<int, std::vector<i64>>, i64> memo;
    return kostant_rec(w, static_cast<int>(d.size()), memo);
}

namespace {

bool integral_shift(const Weight& xi, const Character& chi, std::vector<i64>& d) {
    d.assign(chi.n, 0);
    for (int k = 0; k < chi.n; ++k) {
        auto diff = chi.c[k] - xi[k];
        if (diff.is_zero()) continue;
        Rational q;
        if (!rational_reconstruct(diff, q) || q.den != 1) return false;
        d[k] = q.num;
    }
    return true;
}

}  // namespace

i64 kostant_multiplicity(const Weight& xi, const Character& chi, int n) {
    if (static_cast<int>(xi.size()) != n || chi.n != n) throw DomainError("weight has wrong length");
    std::vector<i64> d;
    if (!integral_shift(xi, chi, d)) return 0;
    return kostant_count(d);
}

IrreducibilityVerdict is_irreducible(const Character& chi, int n) {
    if (chi.n != n) throw DomainError("character has wrong length");
    IrreducibilityVerdict out;
    for (auto [i, j] : negative_roots(n)) {
        auto value = chi.c[i - 1] - chi.c[j - 1] + PadicScalar::from_int(chi.p(), chi.cap(), i - j);
        if (value.is_zero()) continue;
        Rational q;
        if (rational_reconstruct(value, q) && q.den == 1 && q.num >= 1) {
            out.irreducible = false;
            out.violations.push_back({i, j, value, q.num, true});
        }
    }
    return out;
}

namespace {

struct Space {
    std::vector<Mono> monos;  // columns
    std::map<Mono, int> col;
    std::vector<std::vector<PadicScalar>> rows;
    std::vector<int> pivot;
    i64 certified;
};

// enumerate exponent vectors of total degree <= D in nv variables
void all_monomials(int nv, int D, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> e(nv, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nv) {
            fn(e);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
        e[i] = 0;
    };
    rec(0, D);
}

}  // namespace

PhiReport phi_weight_rank(const Character& chi, int n, int D) {
    if (chi.n != n) throw DomainError("character has wrong length");
    if (D < 0 || D > VariableSet::kMaxDegree) throw DomainError("truncation out of range");
    require_analytic(chi);
    const i64 p = chi.p();
    const int M = chi.cap();
    const PadicRing R{p, M};
    auto vars = unipotent_vars(n);
    const int nv = vars->size();
    const auto fr = Frame::standard(n);
    const auto roots = negative_roots(n);

    std::map<std::vector<i64>, Space> spaces;
    std::map<Mono, std::vector<i64>> shift_of;
    all_monomials(nv, D, [&](const std::vector<int>& e) {
        auto d = monomial_shift(e, n);
        auto& sp = spaces[d];
        const Mono m = mono_from(e);
        sp.col.emplace(m, static_cast<int>(sp.monos.size()));
        sp.monos.push_back(m);
        sp.certified = M;
        shift_of.emplace(m, d);
    });

    std::vector<UpperField> ups;
    std::vector<std::pair<int, int>> up_idx;
    const QSeries like(R, vars, D);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ups.push_back(upper_field(like, fr, i, j, chi));
            up_idx.emplace_back(i, j);
        }

    std::deque<QSeries> queue;
    auto insert = [&](const QSeries& v) {
        if (v.is_zero()) return;
        const auto& d = shift_of.at(v.terms().front().m);
        auto& sp = spaces.at(d);
        std::vector<PadicScalar> w(sp.monos.size(), PadicScalar::zero(p, M));
        for (const auto& t : v.terms()) {
            if (shift_of.at(t.m) != d) throw PrecisionError("generator output is not a weight vector");
            w[sp.col.at(t.m)] = t.c;
        }
        for (std::size_t k = 0; k < sp.rows.size(); ++k) {
            const auto c = w[sp.pivot[k]];
            if (c.is_zero()) continue;
            for (std::size_t s = 0; s < w.size(); ++s)
                if (!sp.rows[k][s].is_zero()) w[s] -= c * sp.rows[k][s];
            w[sp.pivot[k]] = PadicScalar::zero(p, M);
        }
        int piv = -1;
        i64 floor = kInfVal;
        for (std::size_t s = 0; s < w.size(); ++s) {
            if (w[s].is_zero()) {
                floor = std::min(floor, w[s].abs_prec());
                continue;
            }
            if (piv < 0 || w[s].val() < w[piv].val()) piv = static_cast<int>(s);
        }
        if (piv < 0) {
            sp.certified = std::min<i64>(sp.certified, floor);
            return;
        }
        sp.certified = std::min<i64>(sp.certified, w[piv].rel_prec());
        const auto inv = w[piv].inv();
        for (auto& x : w) x = x * inv;
        w[piv] = PadicScalar::from_int(p, M, 1);
        QSeries row(R, vars, D);
        for (std::size_t s = 0; s < w.size(); ++s)
            if (!w[s].is_zero()) row.add_term(sp.monos[s], w[s]);
        sp.rows.push_back(std::move(w));
        sp.pivot.push_back(piv);
        queue.push_back(std::move(row));
    };

    insert(QSeries::one(R, vars, D));
    while (!queue.empty()) {
        QSeries v = std::move(queue.front());
        queue.pop_front();
        PSVector pv{v, chi};
        const i64 h = shift_height(shift_of.at(v.terms().front().m));
        for (auto [i, j] : roots) insert(lie_lower(i, j, pv).f);
        for (int k = 1; k <= n; ++k) insert(lie_diag(k, pv).f);
        for (std::size_t u = 0; u < ups.size(); ++u) {
            if (h + (up_idx[u].second - up_idx[u].first) > D) continue;
            insert(apply_field(ups[u], v));
        }
    }

    PhiReport rep{n, D, {}, true};
    for (auto& [d, sp] : spaces) {
        WeightRank wr;
        wr.shift = d;
        for (int k = 0; k < n; ++k) wr.xi.push_back(chi.c[k] - PadicScalar::from_int(p, M, d[k]));
        wr.kostant = kostant_count(d);
        wr.monomials = static_cast<i64>(sp.monos.size());
        wr.rank = static_cast<i64>(sp.rows.size());
        wr.complete = shift_height(d) <= D;
        wr.certified_digits = sp.certified;
        if (wr.complete && wr.rank < wr.monomials) rep.irreducible = false;
        rep.weights.push_back(std::move(wr));
    }
    std::stable_sort(rep.weights.begin(), rep.weights.end(),
                     [](const WeightRank& a, const WeightRank& b) { return shift_height(a.shift) < shift_height(b.shift); });
    return rep;
}

WeightRank weight_rank(const Character& chi, int n, int D, const std::vector<i64>& shift) {
    if (static_cast<int>(shift.size()) != n) throw DomainError("shift has wrong length");
    const i64 h = shift_height(shift);
    if (h < 0) throw DomainError("shift is not a nonnegative combination of negative roots");
    if (h > D) throw TruncationInsufficient("weight space needs degree " + std::to_string(h));
    for (auto& w : phi_weight_rank(chi, n, D).weights)
        if (w.shift == shift) return w;
    throw TruncationInsufficient("weight space not reached");
}

PSVector congruence_filter(const PSVector& f, int k, int s) {
    if (k < 1 || k > f.n()) throw DomainError("torus index out of range");
    if (s < 1) throw DomainError("s must be positive");
    const i64 p = f.chi.p();
    i64 mod = 1;
    bool huge = false;
    for (int t = 0; t < s; ++t) {
        if (mod > (i64(1) << 40) / p) {
            huge = true;
            break;
        }
        mod *= p;
    }
    auto fr = f.frame();
    const int n = f.n();
    QSeries r(f.f.ring(), f.f.vars(), f.f.trunc());
    for (const auto& t : f.f.terms()) {
        i64 sum = 0;
        for (int i = k + 1; i <= n; ++i) sum += mono_exp(t.m, fr.at(i, k));
        for (int j = 1; j < k; ++j) sum -= mono_exp(t.m, fr.at(k, j));
        if (huge ? sum == 0 : sum % mod == 0) r.push(t.m, t.c);
    }
    r.note_remainder(f.f.remainder());
    r.set_truncated(f.f.truncated());
    return {r, f.chi};
}

}  // namespace gaps
