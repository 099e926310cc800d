#include "gaps/base_change.hpp"

namespace gaps {

std::string restricted_name(const std::string& name, int i) { return name + "#" + std::to_string(i); }
std::string slot_name(const std::string& name, int s) { return name + "@" + std::to_string(s); }

ResScalarsContext ResScalarsContext::make(i64 p, int N, int cap, const VarsPtr& source) {
    if (N < 1) throw DomainError("extension degree must be positive");
    if (source->size() * N > VariableSet::kMaxVars)
        throw TruncationInsufficient("restriction of scalars needs more than 16 variables");
    ResScalarsContext ctx;
    ctx.p = p;
    ctx.N = N;
    ctx.K = UnramifiedField::make(p, N, cap);
    ctx.basis.push_back(UnramifiedScalar::from_int(ctx.K, 1));
    if (N > 1) {
        const auto w = UnramifiedScalar::generator(ctx.K);
        for (int i = 1; i < N; ++i) ctx.basis.push_back(ctx.basis.back() * w);
    }
    ctx.source = source;
    std::vector<Variable> t;
    for (const auto& v : source->vars())
        for (int i = 1; i <= N; ++i) t.push_back({restricted_name(v.name, i), v.role});
    ctx.target = make_vars(t);
    return ctx;
}

LSeries embed(const QSeries& f, const FieldPtr& K) {
    if (f.p() != K->p()) throw DomainError("series and field have different p");
    return f.map_coeffs(UnramifiedRing{K}, [&](const PadicScalar& c) { return UnramifiedScalar::from_padic(K, c); });
}

LSeries frobenius(const LSeries& f, int k) {
    return f.map_coeffs(f.ring(), [&](const UnramifiedScalar& c) { return c.frobenius(k); });
}

LSeries restrict_scalars(const LSeries& f, const ResScalarsContext& ctx) {
    if (!(*f.vars() == *ctx.source)) throw VariableMismatch("series is not over the context's source variables");
    const auto R = ctx.ring();
    const int D = f.trunc();
    std::vector<LSeries> im;
    for (int v = 0; v < ctx.source->size(); ++v) {
        LSeries x(R, ctx.target, D);
        for (int i = 1; i <= ctx.N; ++i)
            x += LSeries::variable(R, ctx.target, D, ctx.target_index(v, i)).scale(ctx.basis[i - 1]);
        im.push_back(x);
    }
    if (im.empty()) return f.reindex(ctx.target, {});
    return substitute(f, im);
}

LSeries holomorphic_bc(const QSeries& f, const ResScalarsContext& ctx) { return restrict_scalars(embed(f, ctx.K), ctx); }

LSeries full_bc(const QSeries& f, const ResScalarsContext& ctx) {
    const LSeries b1 = holomorphic_bc(f, ctx);
    LSeries r = b1;
    for (int k = 1; k < ctx.N; ++k) r = r * frobenius(b1, k);
    return r;
}

VarsPtr slot_vars(const VarsPtr& source, int N) {
    if (source->size() * N > VariableSet::kMaxVars) throw TruncationInsufficient("slot model needs more than 16 variables");
    std::vector<Variable> t;
    for (int s = 0; s < N; ++s)
        for (const auto& v : source->vars()) t.push_back({slot_name(v.name, s), v.role});
    return make_vars(t);
}

LSeries tensor_power(const QSeries& f, const ResScalarsContext& ctx) {
    if (!(*f.vars() == *ctx.source)) throw VariableMismatch("series is not over the context's source variables");
    auto sv = slot_vars(ctx.source, ctx.N);
    const int d = ctx.source->size();
    LSeries r = LSeries::one(ctx.ring(), sv, f.trunc());
    for (int s = 0; s < ctx.N; ++s) {
        std::vector<int> map(d);
        for (int v = 0; v < d; ++v) map[v] = s * d + v;
        r = r * embed(f.reindex(sv, map), ctx.K);
    }
    return r;
}

LSeries slots_to_restricted(const LSeries& F, const ResScalarsContext& ctx) {
    auto sv = slot_vars(ctx.source, ctx.N);
    if (!(*F.vars() == *sv)) throw VariableMismatch("series is not over the slot variables");
    const auto R = ctx.ring();
    const int D = F.trunc();
    const int d = ctx.source->size();
    std::vector<LSeries> im;
    for (int s = 0; s < ctx.N; ++s)
        for (int v = 0; v < d; ++v) {
            LSeries x(R, ctx.target, D);
            for (int i = 1; i <= ctx.N; ++i)
                x += LSeries::variable(R, ctx.target, D, ctx.target_index(v, i)).scale(ctx.basis[i - 1].frobenius(s));
            im.push_back(x);
        }
    return substitute(F, im);
}

QSeries TensorRep::one() const { return QSeries::one(PadicRing{chi.p(), chi.cap()}, vars, D); }

Frame TensorRep::slot_frame(int s) const { return Frame::by_name(n, *vars, "@" + std::to_string(s)); }

QSeries TensorRep::act(const OneParamFactor& h, const QSeries& F) const {
    h.check();
    require_analytic(chi);
    if (!(*F.vars() == *vars)) throw VariableMismatch("series is not over the slot variables");
    const auto y = QSeries::constant(F.ring(), F.vars(), F.trunc(), h.param);
    QSeries r = F;
    for (int s = 0; s < N; ++s) {
        const auto fr = slot_frame(s);
        switch (h.desc.kind) {
            case FactorKind::Lower: r = lower_kernel(r, fr, h.desc.i, h.desc.j, y); break;
            case FactorKind::Diag: r = diag_kernel(r, fr, h.desc.i, y, chi.c[h.desc.i - 1]); break;
            case FactorKind::Upper: r = upper_kernel(r, fr, h.desc.i, h.desc.j, y, chi.c); break;
        }
    }
    return r;
}

QSeries TensorRep::act_group(const IwahoriMatrix& g, const QSeries& F) const {
    if (g.n() != n) throw DomainError("group element has wrong size");
    auto fs = factorize(g);
    QSeries r = F;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = act(*it, r);
    return r;
}

PadicScalar TensorRep::constant_eigenvalue(const std::vector<PadicScalar>& t) const {
    if (static_cast<int>(t.size()) != n) throw DomainError("torus element has wrong size");
    QSeries F = one();
    for (int k = 1; k <= n; ++k) F = act({{FactorKind::Diag, k, k}, t[k - 1]}, F);
    for (const auto& term : F.terms())
        if (term.m != 0) throw PrecisionError("constant vector is not a torus eigenvector");
    return F.coeff(Mono(0));
}

TensorRep tensor_rep(const Character& chi, int n, int N, int D) {
    if (chi.n != n) throw DomainError("character has wrong length");
    require_analytic(chi);
    require_p_large(chi.p(), n);
    return {chi, n, N, D, slot_vars(unipotent_vars(n), N)};
}

}  // namespace gaps
