#include "gaps/principal_series.hpp"

#include <algorithm>

namespace gaps {

Character Character::trivial(i64 p, int cap, int n) {
    return Character{n, std::vector<PadicScalar>(n, PadicScalar::zero(p, cap)), 1};
}

Character Character::from_ints(i64 p, int cap, const std::vector<i64>& c) {
    Character chi{static_cast<int>(c.size()), {}, 1};
    for (i64 x : c) chi.c.push_back(PadicScalar::from_int(p, cap, x));
    return chi;
}

PadicScalar Character::eval(const std::vector<PadicScalar>& t) const {
    if (static_cast<int>(t.size()) != n) throw DomainError("torus element has wrong size");
    PadicScalar r = PadicScalar::from_int(p(), cap(), 1);
    for (int i = 0; i < n; ++i) r *= power_char(t[i], c[i]);
    return r;
}

AnalyticVerdict check_analytic(const Character& chi) {
    AnalyticVerdict v;
    for (const auto& ci : chi.c) {
        v.margin.push_back(analytic_margin(ci, chi.e));
        if (!analytic_exponent(ci, chi.e)) v.analytic = false;
    }
    return v;
}

void require_analytic(const Character& chi) {
    if (!check_analytic(chi).analytic) throw DivergenceError("character is not analytic");
}

std::vector<std::pair<int, int>> negative_roots(int n) {
    std::vector<std::pair<int, int>> r;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) r.emplace_back(i, j);
    return r;
}

int root_index(int n, int i, int j) {
    (void)n;
    return (i - 1) * (i - 2) / 2 + (j - 1);
}

std::string coord_name(int i, int j) { return "a[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

VarsPtr unipotent_vars(int n) {
    std::vector<Variable> v;
    for (auto [i, j] : negative_roots(n)) v.push_back({coord_name(i, j), Role::Unipotent});
    return make_vars(v);
}

Frame Frame::standard(int n) {
    Frame fr{n, {}};
    for (int k = 0; k < n * (n - 1) / 2; ++k) fr.var_of.push_back(k);
    return fr;
}

Frame Frame::by_name(int n, const VariableSet& vars, const std::string& suffix) {
    Frame fr{n, {}};
    for (auto [i, j] : negative_roots(n)) {
        int idx = vars.index_of(coord_name(i, j) + suffix);
        if (idx < 0) throw VariableMismatch("series lacks coordinate " + coord_name(i, j) + suffix);
        fr.var_of.push_back(idx);
    }
    return fr;
}

PSVector PSVector::constant_one(const Character& chi, int D) {
    PadicRing R{chi.p(), chi.cap()};
    return {QSeries::one(R, unipotent_vars(chi.n), D), chi};
}

PSVector PSVector::from_series(const Character& chi, const QSeries& f) {
    Frame::by_name(chi.n, *f.vars());
    return {f, chi};
}

std::pair<QSeries, int> adjoin(const QSeries& f, const Variable& v) {
    int idx = f.vars()->index_of(v.name);
    if (idx >= 0) {
        if ((*f.vars())[idx].role != v.role) throw VariableMismatch("parameter " + v.name + " reused with another role");
        return {f, idx};
    }
    auto vs = f.vars()->vars();
    vs.push_back(v);
    std::vector<int> map(f.vars()->size());
    for (int i = 0; i < f.vars()->size(); ++i) map[i] = i;
    return {f.reindex(make_vars(vs), map), static_cast<int>(vs.size()) - 1};
}

namespace {

std::vector<QSeries> identity_images(const QSeries& f) {
    std::vector<QSeries> im;
    for (int v = 0; v < f.vars()->size(); ++v) im.push_back(QSeries::variable(f.ring(), f.vars(), f.trunc(), v));
    return im;
}

QSeries var_of(const QSeries& like, int v) { return QSeries::variable(like.ring(), like.vars(), like.trunc(), v); }

}  // namespace

QSeries diag_kernel(const QSeries& f, const Frame& fr, int k, const QSeries& t, const PadicScalar& ck) {
    const QSeries one = QSeries::one(f.ring(), f.vars(), f.trunc());
    const QSeries tinv = invert_one_minus(one - t);
    auto im = identity_images(f);
    for (int j = 1; j < k; ++j) im[fr.at(k, j)] = tinv * im[fr.at(k, j)];
    for (int i = k + 1; i <= fr.n; ++i) im[fr.at(i, k)] = t * im[fr.at(i, k)];
    QSeries r = substitute(f, im);
    if (!ck.is_exact_zero()) r = r * char_power(t - one, ck);
    return r;
}

QSeries lower_kernel(const QSeries& f, const Frame& fr, int i, int j, const QSeries& y) {
    auto im = identity_images(f);
    for (int v = 1; v < j; ++v) im[fr.at(i, v)] = im[fr.at(i, v)] - y * var_of(f, fr.at(j, v));
    im[fr.at(i, j)] = im[fr.at(i, j)] - y;
    return substitute(f, im);
}

XZ xz_kernel(const QSeries& like, const Frame& fr, int i, int j, const QSeries& y) {
    const int n = fr.n;
    if (like.trunc() < 1) throw TruncationInsufficient("XZ decomposition needs D >= 1");
    const QSeries zero(like.ring(), like.vars(), like.trunc());
    const QSeries one = QSeries::one(like.ring(), like.vars(), like.trunc());
    auto A = [&](int r, int s) -> QSeries {
        if (r == s) return one;
        if (r < s) return zero;
        return var_of(like, fr.at(r + 1, s + 1));
    };
    std::vector<QSeries> Mx(n * n, zero);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) Mx[r * n + s] = A(r, s);
    for (int s = 0; s < n; ++s) {
        QSeries row_j = A(j - 1, s);
        if (!row_j.is_zero()) Mx[(i - 1) * n + s] = Mx[(i - 1) * n + s] - y * row_j;
    }
    return doolittle(Mx, n);
}

XZ doolittle(const std::vector<QSeries>& Mx, int n) {
    const QSeries zero(Mx[0].ring(), Mx[0].vars(), Mx[0].trunc());
    const QSeries one = QSeries::one(zero.ring(), zero.vars(), zero.trunc());
    XZ out{n, std::vector<QSeries>(n * n, zero), std::vector<QSeries>(n * n, zero), std::vector<QSeries>(n, zero)};
    for (int r = 0; r < n; ++r) {
        out.X[r * n + r] = one;
        for (int s = r; s < n; ++s) {
            QSeries acc = Mx[r * n + s];
            for (int k = 0; k < r; ++k) {
                const auto& a = out.X[r * n + k];
                const auto& b = out.Z[k * n + s];
                if (!a.is_zero() && !b.is_zero()) acc = acc - a * b;
            }
            out.Z[r * n + s] = acc;
        }
        out.Zinv[r] = invert_one_minus(one - out.Z[r * n + r]);
        for (int s = r + 1; s < n; ++s) {
            QSeries acc = Mx[s * n + r];
            for (int k = 0; k < r; ++k) {
                const auto& a = out.X[s * n + k];
                const auto& b = out.Z[k * n + r];
                if (!a.is_zero() && !b.is_zero()) acc = acc - a * b;
            }
            out.X[s * n + r] = acc.is_zero() ? acc : acc * out.Zinv[r];
        }
    }
    return out;
}

XZ xz_decompose(int i, int j, int n, int D, i64 p, int cap) {
    if (!(1 <= i && i < j && j <= n)) throw DomainError("xz_decompose needs 1 <= i < j <= n");
    require_p_large(p, n);
    auto vs = unipotent_vars(n)->vars();
    vs.push_back({"y", Role::UpperParam});
    auto vars = make_vars(vs);
    PadicRing R{p, cap};
    QSeries like(R, vars, D);
    return xz_kernel(like, Frame::by_name(n, *vars), i, j, QSeries::variable(R, vars, D, vars->size() - 1));
}

QSeries upper_kernel(const QSeries& f, const Frame& fr, int i, int j, const QSeries& y,
                     const std::vector<PadicScalar>& c) {
    XZ xz = xz_kernel(f, fr, i, j, y);
    auto im = identity_images(f);
    const int n = fr.n;
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l) im[fr.at(k, l)] = xz.X[(k - 1) * n + (l - 1)];
    QSeries r = substitute(f, im);
    const QSeries one = QSeries::one(f.ring(), f.vars(), f.trunc());
    for (int k = 0; k < n; ++k) {
        if (c[k].is_exact_zero()) continue;
        r = r * char_power(xz.Zinv[k] - one, c[k]);
    }
    return r;
}

namespace {

void check_indices(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) throw DomainError("index outside [1, n]");
}

}  // namespace

PSVector act_diag(int k, const GroupParameter& t, const PSVector& f) {
    check_indices(f.n(), k, k);
    require_analytic(f.chi);
    QSeries g = f.f;
    QSeries ts;
    if (t.kind == GroupParameter::Kind::Concrete) {
        const PadicScalar d = t.value - PadicScalar::from_int(t.value.p(), t.value.cap(), 1);
        if (!d.is_zero() && d.val() < 1) throw DomainError("diagonal parameter must lie in 1 + pZ_p");
        ts = QSeries::constant(g.ring(), g.vars(), g.trunc(), t.value);
    } else {
        auto [h, idx] = adjoin(g, {t.name, Role::DiagParam});
        g = h;
        ts = QSeries::one(g.ring(), g.vars(), g.trunc()) +
             QSeries::variable(g.ring(), g.vars(), g.trunc(), idx).scale_p(PadicScalar::from_int(g.p(), g.cap(), g.p()));
    }
    return {diag_kernel(g, Frame::by_name(f.n(), *g.vars()), k, ts, f.chi.c[k - 1]), f.chi};
}

PSVector act_lower(int i, int j, const GroupParameter& y, const PSVector& f) {
    check_indices(f.n(), i, j);
    if (i <= j) throw DomainError("lower factor needs i > j");
    QSeries g = f.f;
    QSeries ys;
    if (y.kind == GroupParameter::Kind::Concrete) {
        if (!y.value.is_zero() && y.value.val() < 0) throw DomainError("lower parameter must lie in Z_p");
        ys = QSeries::constant(g.ring(), g.vars(), g.trunc(), y.value);
    } else {
        auto [h, idx] = adjoin(g, {y.name, Role::LowerParam});
        g = h;
        ys = QSeries::variable(g.ring(), g.vars(), g.trunc(), idx);
    }
    return {lower_kernel(g, Frame::by_name(f.n(), *g.vars()), i, j, ys), f.chi};
}

PSVector act_upper(int i, int j, const GroupParameter& y, const PSVector& f) {
    check_indices(f.n(), i, j);
    if (i >= j) throw DomainError("upper factor needs i < j");
    require_analytic(f.chi);
    QSeries g = f.f;
    QSeries ys;
    switch (y.kind) {
        case GroupParameter::Kind::Concrete:
            if (!y.value.is_zero() && y.value.val() < 1) throw DomainError("upper parameter must lie in pZ_p");
            ys = QSeries::constant(g.ring(), g.vars(), g.trunc(), y.value);
            break;
        case GroupParameter::Kind::Symbolic: {
            auto [h, idx] = adjoin(g, {y.name, Role::UpperParam});
            g = h;
            ys = QSeries::variable(g.ring(), g.vars(), g.trunc(), idx);
            break;
        }
        case GroupParameter::Kind::Rescaled: {
            auto [h, idx] = adjoin(g, {y.name, Role::RescaledParam});
            g = h;
            ys = QSeries::variable(g.ring(), g.vars(), g.trunc(), idx)
                     .scale_p(PadicScalar::from_int(g.p(), g.cap(), g.p()));
            break;
        }
    }
    return {upper_kernel(g, Frame::by_name(f.n(), *g.vars()), i, j, ys, f.chi.c), f.chi};
}

PSVector act_factor(const OneParamFactor& fac, const PSVector& f) {
    fac.check();
    auto param = GroupParameter::concrete(fac.param);
    switch (fac.desc.kind) {
        case FactorKind::Lower: return act_lower(fac.desc.i, fac.desc.j, param, f);
        case FactorKind::Diag: return act_diag(fac.desc.i, param, f);
        case FactorKind::Upper: return act_upper(fac.desc.i, fac.desc.j, param, f);
    }
    return f;
}

PSVector act_group(const IwahoriMatrix& g, const PSVector& f) {
    require_analytic(f.chi);
    if (g.n() != f.n()) throw DomainError("group element and vector have different n");
    auto fs = factorize(g);
    PSVector r = f;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = act_factor(*it, r);
    return r;
}

DecayReport decay_report(const QSeries& f, int var) {
    if (var < 0 || var >= f.vars()->size()) throw VariableMismatch("grading variable not present");
    DecayReport rep;
    for (const auto& t : f.terms()) {
        const int m = mono_exp(t.m, var);
        auto it = rep.min_val.find(m);
        const i64 v = t.c.val();
        if (it == rep.min_val.end()) rep.min_val.emplace(m, v);
        else it->second = std::min(it->second, v);
        if (v < 0) rep.integral = false;
    }
    return rep;
}

}  // namespace gaps
