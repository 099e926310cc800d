#include "gaps/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace gaps {

WeylElement::WeylElement(std::vector<int> pi) : pi_(std::move(pi)) {
    std::vector<int> s = pi_;
    std::sort(s.begin(), s.end());
    for (std::size_t r = 0; r < s.size(); ++r)
        if (s[r] != static_cast<int>(r) + 1) throw DomainError("not a permutation of 1..n");
}

WeylElement WeylElement::identity(int n) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    return WeylElement(pi);
}

int WeylElement::preimage(int s) const {
    for (int r = 0; r < n(); ++r)
        if (pi_[r] == s) return r + 1;
    throw DomainError("index outside 1..n");
}

std::vector<int> WeylElement::matrix() const {
    const int m = n();
    std::vector<int> a(m * m, 0);
    for (int r = 1; r <= m; ++r) a[(pi_[r - 1] - 1) * m + (r - 1)] = 1;
    return a;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (o.n() != n()) throw DomainError("Weyl elements of different rank");
    std::vector<int> c(n());
    for (int s = 1; s <= n(); ++s) c[s - 1] = pi_[o(s) - 1];
    return WeylElement(c);
}

WeylElement WeylElement::inverse() const {
    std::vector<int> c(n());
    for (int r = 1; r <= n(); ++r) c[pi_[r - 1] - 1] = r;
    return WeylElement(c);
}

std::pair<int, int> conjugate_root(const WeylElement& w, int i, int j) {
    if (i == j) throw DomainError("conjugate_root needs i != j");
    return {w.preimage(i), w.preimage(j)};
}

Character chi_w(const Character& chi, const WeylElement& w) {
    if (chi.n != w.n()) throw DomainError("character and Weyl element have different rank");
    Character r = chi;
    for (int s = 1; s <= chi.n; ++s) r.c[s - 1] = chi.c[w(s) - 1];
    return r;
}

std::vector<Relabel> relabeling(const WeylElement& w) {
    std::vector<Relabel> out;
    for (auto [k, l] : negative_roots(w.n())) out.push_back({k, l, w(k), w(l), w(k) < w(l)});
    return out;
}

VarsPtr component_vars(const WeylElement& w) {
    std::vector<Variable> v;
    for (const auto& r : relabeling(w)) v.push_back({coord_name(r.k, r.l), r.rescaled ? Role::RescaledParam : Role::Unipotent});
    return make_vars(v);
}

QSeries act_weyl(const WeylElement& w, const OneParamFactor& h, const Character& chi, const QSeries& g) {
    const int n = w.n();
    if (chi.n != n) throw DomainError("character and Weyl element have different rank");
    h.check();
    const Character cw = chi_w(chi, w);
    require_analytic(cw);
    const auto fr = Frame::by_name(n, *g.vars());
    const auto rel = relabeling(w);
    const i64 p = g.p();
    const int cap = g.cap();
    const PadicScalar ps = PadicScalar::from_int(p, cap, p);

    const QSeries zero(g.ring(), g.vars(), g.trunc());
    const QSeries one = QSeries::one(g.ring(), g.vars(), g.trunc());
    auto var = [&](int v) { return QSeries::variable(g.ring(), g.vars(), g.trunc(), v); };
    std::vector<QSeries> Mx(n * n, zero);
    for (int r = 1; r <= n; ++r) Mx[(r - 1) * n + (r - 1)] = one;
    for (const auto& rl : rel) {
        QSeries a = var(fr.at(rl.k, rl.l));
        Mx[(rl.k - 1) * n + (rl.l - 1)] = rl.rescaled ? a.scale_p(ps) : a;
    }
    // w^{-1} h^{-1} w applied on the left
    if (h.desc.kind == FactorKind::Diag) {
        const int k = w.preimage(h.desc.i);
        const PadicScalar tinv = h.param.inv();
        for (int s = 1; s <= n; ++s) Mx[(k - 1) * n + (s - 1)] = Mx[(k - 1) * n + (s - 1)].scale_p(tinv);
    } else {
        auto [k, l] = conjugate_root(w, h.desc.i, h.desc.j);
        for (int s = 1; s <= n; ++s) {
            const auto& src = Mx[(l - 1) * n + (s - 1)];
            if (!src.is_zero()) Mx[(k - 1) * n + (s - 1)] -= src.scale_p(h.param);
        }
    }
    XZ xz = doolittle(Mx, n);

    std::vector<QSeries> im;
    for (int v = 0; v < g.vars()->size(); ++v) im.push_back(var(v));
    const PadicScalar pinv = ps.inv();
    for (const auto& rl : rel) {
        QSeries x = xz.x(rl.k, rl.l);
        if (rl.rescaled) {
            if (!x.is_zero() && x.min_val() < 1) throw MembershipError("transported coordinate left p Z_p");
            x = x.scale_p(pinv);
        }
        im[fr.at(rl.k, rl.l)] = x;
    }
    QSeries r = substitute(g, im);
    for (int s = 0; s < n; ++s) {
        if (cw.c[s].is_exact_zero()) continue;
        r = r * char_power(xz.Zinv[s] - one, cw.c[s]);
    }
    return r;
}

std::vector<QSeries> BruhatSum::act(const OneParamFactor& h, const std::vector<QSeries>& gs) const {
    if (gs.size() != components.size()) throw DomainError("one series per component required");
    std::vector<QSeries> out;
    for (std::size_t c = 0; c < components.size(); ++c) out.push_back(act_weyl(components[c].w, h, chi, gs[c]));
    return out;
}

BruhatSum bruhat_components(const Character& chi, int n) {
    if (n < 1 || n > 5) throw DomainError("bruhat_components supports 1 <= n <= 5");
    if (chi.n != n) throw DomainError("character has wrong length");
    BruhatSum sum{n, chi, {}};
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    do {
        WeylElement w(pi);
        sum.components.push_back({w, chi_w(chi, w), relabeling(w), component_vars(w)});
    } while (std::next_permutation(pi.begin(), pi.end()));
    return sum;
}

}  // namespace gaps
