// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gaps/base_change.hpp"
#include "gaps/verma.hpp"
#include "gaps/weyl.hpp"
#include "test_support.hpp"

using namespace gaps;
using namespace testing_support;

namespace {

constexpr i64 P = 7;
constexpr int M = 12;
const PadicRing Q{P, M};

PadicScalar I(i64 n) { return PadicScalar::from_int(P, M, n); }

struct Outcome {
    bool ok = true;
    std::string detail;
    int failures = 0;
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail = what;
        ok = false;
        ++failures;
    }
};

QSeries random_poly(std::mt19937_64& rng, const VarsPtr& vars, int D, int deg, int nterms) {
    QSeries f(Q, vars, D);
    for (int k = 0; k < nterms; ++k) {
        std::vector<int> ex(vars->size(), 0);
        int budget = deg;
        for (int i = 0; i < vars->size() && budget > 0; ++i) {
            std::uniform_int_distribution<int> d(0, budget);
            ex[i] = d(rng);
            budget -= ex[i];
        }
        f += QSeries::monomial(Q, vars, D, mono_from(ex), rand_zp(rng, P, M));
    }
    return f;
}

Character random_char(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<i64> c(-20, 20);
    std::vector<i64> v;
    for (int i = 0; i < n; ++i) v.push_back(c(rng));
    return Character::from_ints(P, M, v);
}

void enumerate(int nv, int D, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> e(nv, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nv) return fn(e);
        for (int x = 0; x <= left; ++x) {
            e[i] = x;
            rec(i + 1, left - x);
        }
        e[i] = 0;
    };
    rec(0, D);
}

bool only_y_multiples(const QSeries& f, int yvar) {
    for (const auto& t : f.terms())
        if (mono_exp(t.m, yvar) == 0) return false;
    return true;
}

// ---------------------------------------------------------------- 1
Outcome xz_reconstruction() {
    Outcome o;
    const int D = 6;
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto xz = xz_decompose(i, j, n, D, P, M);
                auto vars = xz.X[0].vars();
                const int y = vars->size() - 1;
                auto fr = Frame::by_name(n, *vars);
                auto A = [&](int r, int s) {
                    if (r == s) return QSeries::one(Q, vars, D);
                    if (r < s) return QSeries(Q, vars, D);
                    return QSeries::variable(Q, vars, D, fr.at(r, s));
                };
                std::ostringstream tag;
                tag << "n=" << n << " (" << i << "," << j << ")";
                for (int r = 1; r <= n; ++r)
                    for (int s = 1; s <= n; ++s) {
                        QSeries lhs(Q, vars, D);
                        i64 rem = kInfVal;
                        for (int k = 1; k <= n; ++k) {
                            lhs += xz.x(r, k) * xz.z(k, s);
                            rem = std::min({rem, xz.x(r, k).remainder(), xz.z(k, s).remainder()});
                        }
                        QSeries rhs = A(r, s);
                        if (r == i) rhs -= QSeries::variable(Q, vars, D, y) * A(j, s);
                        o.expect((lhs - rhs).eff_min() >= rem, tag.str() + " product entry differs");
                        if (r < s) o.expect(xz.x(r, s).is_zero() && only_y_multiples(xz.z(r, s), y), tag.str() + " shape above diagonal");
                        if (r > s) o.expect(xz.z(r, s).is_zero(), tag.str() + " Z not upper triangular");
                        if (r == s)
                            o.expect(only_y_multiples(xz.z(r, r) - QSeries::one(Q, vars, D), y) &&
                                         (xz.x(r, r) - QSeries::one(Q, vars, D)).is_zero(),
                                     tag.str() + " diagonal not 1 mod y");
                        o.expect(xz.x(r, s).min_val() >= 0, tag.str() + " X not integral");
                    }
            }
    return o;
}

// ---------------------------------------------------------------- 2
Outcome gl2_closed_forms() {
    Outcome o;
    const int D = 6;
    auto xz = xz_decompose(1, 2, 2, D, P, M);
    auto vars = xz.X[0].vars();
    QSeries x21(Q, vars, D), z22(Q, vars, D);
    // a(1-ya)^{-1} = sum a^{k+1} y^k, (1-ya)^{-1} = sum a^k y^k
    for (int k = 0; k <= D; ++k) {
        if (2 * k <= D) z22 += QSeries::monomial(Q, vars, D, mono_from({k, k}), I(1));
        if (2 * k + 1 <= D) x21 += QSeries::monomial(Q, vars, D, mono_from({k + 1, k}), I(1));
    }
    QSeries z11 = QSeries::one(Q, vars, D) - QSeries::monomial(Q, vars, D, mono_from({1, 1}), I(1));
    QSeries z12 = -QSeries::variable(Q, vars, D, 1);
    o.expect((xz.x(2, 1) - x21).is_zero(), "x21");
    o.expect((xz.z(1, 1) - z11).is_zero(), "z11");
    o.expect((xz.z(1, 2) - z12).is_zero(), "z12");
    o.expect((xz.z(2, 2) - z22).is_zero(), "z22");
    o.expect(xz.z(2, 1).is_zero(), "z21");
    return o;
}

// ---------------------------------------------------------------- 3
Outcome integrality() {
    Outcome o;
    const int D = 6;
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 2;
        auto chi = random_char(rng, n);
        PSVector f{random_poly(rng, unipotent_vars(n), D, 4, 5), chi};
        std::uniform_int_distribution<int> pick(1, n);
        int i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        PSVector g;
        switch (trial % 3) {
            case 0: g = act_diag(i, GroupParameter::concrete(I(1) + rand_zp(rng, P, M, 1)), f); break;
            case 1: g = act_lower(std::max(i, j), std::min(i, j), GroupParameter::concrete(rand_zp(rng, P, M)), f); break;
            default: g = act_upper(std::min(i, j), std::max(i, j), GroupParameter::concrete(rand_zp(rng, P, M, 1)), f);
        }
        o.expect(g.f.min_val() >= 0 && g.f.remainder() >= 1, "case " + std::to_string(trial));
    }
    return o;
}

// ---------------------------------------------------------------- 4
Outcome homomorphism() {
    Outcome o;
    const int D = 6;
    std::mt19937_64 rng(1004);
    for (int trial = 0; trial < 50; ++trial) {
        auto chi = random_char(rng, 2);
        PSVector f{random_poly(rng, unipotent_vars(2), D, 4, 5), chi};
        auto g = random_G(rng, P, M, 2), h = random_G(rng, P, M, 2);
        auto lhs = act_group(g, act_group(h, f));
        auto rhs = act_group(g * h, f);
        const i64 tol = std::min(lhs.f.remainder(), rhs.f.remainder());
        o.expect(tol >= 1 && (lhs.f - rhs.f).eff_min() >= tol, "pair " + std::to_string(trial));
    }
    return o;
}

// ---------------------------------------------------------------- 5
// scalar Doolittle m = L U, L unit lower triangular
void lu(const std::vector<PadicScalar>& m, int n, std::vector<PadicScalar>& L, std::vector<PadicScalar>& U) {
    L.assign(n * n, I(0));
    U.assign(n * n, I(0));
    for (int r = 0; r < n; ++r) {
        L[r * n + r] = I(1);
        for (int s = r; s < n; ++s) {
            auto acc = m[r * n + s];
            for (int k = 0; k < r; ++k) acc -= L[r * n + k] * U[k * n + s];
            U[r * n + s] = acc;
        }
        for (int s = r + 1; s < n; ++s) {
            auto acc = m[s * n + r];
            for (int k = 0; k < r; ++k) acc -= L[s * n + k] * U[k * n + r];
            L[s * n + r] = acc / U[r * n + r];
        }
    }
}

// inverse by Gauss-Jordan, pivots on the diagonal (units for Iwahori elements)
std::vector<PadicScalar> inverse(std::vector<PadicScalar> a, int n) {
    std::vector<PadicScalar> b(n * n, I(0));
    for (int i = 0; i < n; ++i) b[i * n + i] = I(1);
    for (int c = 0; c < n; ++c) {
        const auto piv = a[c * n + c].inv();
        for (int k = 0; k < n; ++k) {
            a[c * n + k] *= piv;
            b[c * n + k] *= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const auto f = a[r * n + c];
            for (int k = 0; k < n; ++k) {
                a[r * n + k] -= f * a[c * n + k];
                b[r * n + k] -= f * b[c * n + k];
            }
        }
    }
    return b;
}

Outcome defining_relation() {
    Outcome o;
    const int D = 8;
    std::mt19937_64 rng(1005);
    int certified[4] = {0, 0, 0, 0}, total[4] = {0, 0, 0, 0};
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 2;
        auto chi = random_char(rng, n);
        auto fpoly = random_poly(rng, unipotent_vars(n), D, 4, 5);
        auto h = random_G(rng, P, M, n);
        std::vector<PadicScalar> u(n * n, I(0)), upt;
        for (int r = 0; r < n; ++r) u[r * n + r] = I(1);
        for (auto [i, j] : negative_roots(n)) {
            u[(i - 1) * n + (j - 1)] = rand_zp(rng, P, M);
            upt.push_back(u[(i - 1) * n + (j - 1)]);
        }
        std::vector<PadicScalar> L, U;
        lu(naive_product(inverse(h.entries(), n), u, n), n, L, U);
        std::vector<PadicScalar> u2;
        for (auto [i, j] : negative_roots(n)) u2.push_back(L[(i - 1) * n + (j - 1)]);
        // chi(q^{-1}) = prod (q_rr)^{-c_r}
        PadicScalar want = evaluate(fpoly, u2).value;
        for (int r = 0; r < n; ++r) want *= power_char(U[r * n + r].inv(), chi.c[r]);
        auto ev = evaluate(act_group(h, PSVector{fpoly, chi}).f, upt);
        auto diff = ev.value - want;
        const i64 agree = diff.is_zero() ? diff.abs_prec() : diff.val();
        // soundness: the value never disagrees inside its certified digits
        o.expect(agree >= std::min<i64>(ev.certified, M - D), "case " + std::to_string(trial) + " disagrees inside the certified digits");
        ++total[n];
        if (ev.certified >= M - D && agree >= M - D) ++certified[n];
    }
    o.expect(certified[2] == total[2] && certified[3] == total[3],
             "certified to " + std::to_string(M - D) + " digits: n=2 " + std::to_string(certified[2]) + "/" +
                 std::to_string(total[2]) + ", n=3 " + std::to_string(certified[3]) + "/" + std::to_string(total[3]));
    return o;
}

// ---------------------------------------------------------------- 6
Outcome kostant() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        std::map<std::vector<i64>, i64> brute;
        const auto roots = negative_roots(n);
        enumerate(static_cast<int>(roots.size()), 8, [&](const std::vector<int>& e) {
            std::vector<i64> d(n, 0);
            for (std::size_t a = 0; a < roots.size(); ++a) {
                d[roots[a].first - 1] += e[a];
                d[roots[a].second - 1] -= e[a];
            }
            ++brute[d];
        });
        for (const auto& [d, cnt] : brute) {
            // simple-root height: sum of the tail sums d_k + ... + d_n for k >= 2
            i64 h = 0, tail = 0;
            for (int k = n - 1; k >= 1; --k) h += (tail += d[k]);
            if (h > 8) continue;
            o.expect(kostant_count(d) == cnt, "n=" + std::to_string(n));
        }
    }
    // xi = -mu - (e3 - e1) = c + e1 - e3
    auto chi = Character::from_ints(P, M, {1, 4, -2});
    auto xi = chi.c;
    xi[0] += I(1);
    xi[2] -= I(1);
    o.expect(kostant_multiplicity(xi, chi, 3) == 2, "multiplicity 2 at e3 - e1");
    o.expect(kostant_multiplicity(chi.c, chi, 3) == 1, "highest weight");
    return o;
}

// ---------------------------------------------------------------- 7
Outcome irreducibility_panel() {
    Outcome o;
    const int D = 8;
    struct Row {
        Character chi;
        bool expect_irreducible;
        std::string label;
    };
    std::vector<Row> panel;
    // c2 - c1 + 1 = k in 1..6
    for (int k = 1; k <= 6; ++k) panel.push_back({Character::from_ints(P, M, {0, k - 1}), false, "k=" + std::to_string(k)});
    for (int k = 1; k <= 4; ++k) panel.push_back({Character::from_ints(P, M, {5, 5 + k - 1}), false, "c1=5 k=" + std::to_string(k)});
    // c2 - c1 + 1 not an integer
    const std::vector<std::pair<i64, i64>> generic{{1, 2}, {1, 3}, {-2, 5}, {7, 4}, {3, 2}, {5, 3}, {-1, 2}, {9, 2}, {11, 3}, {2, 9}};
    for (std::size_t g = 0; g < generic.size(); ++g) {
        const i64 c1 = static_cast<i64>(g % 3);
        auto c2 = I(c1 - 1) + PadicScalar::from_rational(P, M, generic[g].first, generic[g].second);
        panel.push_back({Character{2, {I(c1), c2}, 1}, true,
                         std::to_string(generic[g].first) + "/" + std::to_string(generic[g].second)});
    }
    for (const auto& row : panel) {
        const bool crit = is_irreducible(row.chi, 2).irreducible;
        const bool rank = phi_weight_rank(row.chi, 2, D).irreducible;
        o.expect(crit == rank, row.label + " criterion and rank disagree");
        o.expect(crit == row.expect_irreducible, row.label + " unexpected verdict");
    }
    return o;
}

// ---------------------------------------------------------------- 8
Outcome torus_eigenvalues() {
    Outcome o;
    auto chi = Character::from_ints(P, M, {4, 9, -2});
    const auto roots = negative_roots(3);
    int checked = 0;
    enumerate(3, 6, [&](const std::vector<int>& e) {
        PSVector f{QSeries::monomial(Q, unipotent_vars(3), 6, mono_from(e), I(1)), chi};
        for (int k = 1; k <= 3; ++k) {
            // c_k + sum over roots (i,k) minus sum over roots (k,j)
            PadicScalar want = chi.c[k - 1];
            for (std::size_t a = 0; a < roots.size(); ++a) {
                if (roots[a].second == k) want += I(e[a]);
                if (roots[a].first == k) want -= I(e[a]);
            }
            o.expect((lie_diag(k, f).f - f.f.scale_p(want)).is_zero(), "monomial " + std::to_string(checked));
        }
        ++checked;
    });
    o.expect(checked == 84, "monomial count");
    return o;
}

// ---------------------------------------------------------------- 9
std::vector<int> int_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
    std::vector<int> c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
}

Outcome weyl_conjugation() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 1);
        do {
            WeylElement w(pi);
            // matrix of w: w e_r = e_{pi(r)}
            std::vector<int> W(n * n, 0);
            for (int r = 1; r <= n; ++r) W[(pi[r - 1] - 1) * n + (r - 1)] = 1;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    auto [k, l] = conjugate_root(w, i, j);
                    std::vector<int> Eij(n * n, 0), Ekl(n * n, 0);
                    Eij[(i - 1) * n + (j - 1)] = 1;
                    Ekl[(k - 1) * n + (l - 1)] = 1;
                    // (1 - yE_ij) w = w (1 - yE_kl) iff E_ij w = w E_kl
                    o.expect(int_mul(Eij, W, n) == int_mul(W, Ekl, n), "root transport");
                }
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    std::mt19937_64 rng(1009);
    auto chi = Character::from_ints(P, M, {3, -1, 4, 10, 5});
    for (int k = 0; k < 100; ++k) {
        std::vector<int> a(5), b(5);
        std::iota(a.begin(), a.end(), 1);
        std::iota(b.begin(), b.end(), 1);
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        WeylElement wa(a), wb(b);
        auto lhs = chi_w(chi_w(chi, wa), wb), rhs = chi_w(chi, wa * wb);
        for (int s = 0; s < 5; ++s) o.expect(lhs.c[s].same(rhs.c[s]), "composition law");
    }
    return o;
}

// ---------------------------------------------------------------- 10
Outcome base_change() {
    Outcome o;
    std::mt19937_64 rng(1010);
    for (int n : {2, 3}) {
        auto src = unipotent_vars(n);
        auto ctx = ResScalarsContext::make(P, 2, M, src);
        for (int k = 0; k < 20; ++k) {
            auto f = random_poly(rng, src, 4, 4, 4);
            auto b = full_bc(f, ctx);
            auto t = slots_to_restricted(tensor_power(f, ctx), ctx);
            const i64 tol = std::min(b.remainder(), t.remainder());
            o.expect((b - t).eff_min() >= tol, "slot identification");
            for (const auto& term : b.terms()) o.expect(term.c.in_base(), "coefficients outside Q_p");
        }
        std::vector<i64> cs;
        for (int k = 0; k < n; ++k) cs.push_back(3 * k - 4);
        auto chi = Character::from_ints(P, M, cs);
        auto rep = tensor_rep(chi, n, 2, 4);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<PadicScalar> t;
            for (int k = 0; k < n; ++k) t.push_back(I(1) + rand_zp(rng, P, M, 1));
            auto want = chi.eval(t).pow(2);
            o.expect(rep.constant_eigenvalue(t).same(want), "constant eigenvalue");
        }
    }
    return o;
}

// ---------------------------------------------------------------- 11
Outcome analyticity() {
    Outcome o;
    struct Row {
        i64 e, p, v;
    };
    const std::vector<Row> table{{1, 7, 0},  {1, 7, -1}, {1, 2, 0},  {1, 2, 1},  {1, 3, 0},  {1, 3, -1},
                                 {2, 3, 0},  {2, 3, 1},  {6, 7, 0},  {6, 7, 1},  {12, 7, 1}, {12, 7, 2},
                                 {5, 5, 0},  {5, 5, 1},  {4, 5, 0},  {4, 5, -1}, {13, 7, 1}, {14, 3, 6},
                                 {14, 3, 7}, {1, 11, -1}};
    int flips = 0;
    for (const auto& r : table) {
        const int cap = std::min(12, max_precision(r.p));
        Character chi{1, {PadicScalar::from_parts(r.p, cap, r.v, 1, cap)}, r.e};
        // v > e/(p-1) - 1  <=>  (v + 1)(p - 1) > e
        const bool want = (r.v + 1) * (r.p - 1) > r.e;
        flips += want ? 1 : 0;
        std::ostringstream tag;
        tag << "(e=" << r.e << ", p=" << r.p << ", v=" << r.v << ")";
        o.expect(check_analytic(chi).analytic == want, tag.str());
    }
    o.expect(flips > 0 && flips < static_cast<int>(table.size()), "table does not straddle the bound");
    return o;
}

// ---------------------------------------------------------------- 12
Outcome congruence_filter_checks() {
    Outcome o;
    std::mt19937_64 rng(1012);
    const int n = 3, D = 6;
    const auto roots = negative_roots(n);
    auto chi = Character::from_ints(P, M, {1, 2, 3});
    auto alt = [&](const std::vector<int>& e, int k) {
        i64 s = 0;
        for (std::size_t a = 0; a < roots.size(); ++a) {
            if (roots[a].second == k) s += e[a];
            if (roots[a].first == k) s -= e[a];
        }
        return s;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, unipotent_vars(n), D, 6, 8), b = random_poly(rng, unipotent_vars(n), D, 6, 8);
        const int k = 1 + trial % 3;
        const int s = 1 + trial % 2;
        auto fa = congruence_filter(PSVector{a, chi}, k, s).f;
        o.expect((congruence_filter(PSVector{fa, chi}, k, s).f - fa).is_zero(), "idempotence");
        auto fb = congruence_filter(PSVector{b, chi}, k, s).f;
        auto lin = congruence_filter(PSVector{a + b.scale_p(I(3)), chi}, k, s).f;
        o.expect((lin - fa - fb.scale_p(I(3))).is_zero(), "linearity");
        for (const auto& t : a.terms()) {
            const auto e = mono_to(t.m, n);
            const bool keep = alt(e, k) % ppow(P, s) == 0;
            o.expect(fa.coeff(e).is_zero() != keep, "term selection");
        }
        // 7^3 exceeds any alternating sum at degree <= 6
        auto big = congruence_filter(PSVector{a, chi}, k, 3).f;
        for (const auto& t : a.terms()) {
            const auto e = mono_to(t.m, n);
            o.expect(big.coeff(e).is_zero() == (alt(e, k) != 0), "limit behaviour");
        }
        o.expect(big.coeff(Mono(0)).same(a.coeff(Mono(0))), "constant term");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "XZ reconstruction n=2..4 D=6", xz_reconstruction},
        {2, "GL(2) closed forms", gl2_closed_forms},
        {3, "integrality of actions, 200 cases", integrality},
        {4, "homomorphism, 50 pairs n=2 D=6", homomorphism},
        {5, "defining relation, 50 cases n=2,3", defining_relation},
        {6, "Kostant multiplicities n<=4 height<=8", kostant},
        {7, "irreducibility criterion vs rank, 20 characters D=8", irreducibility_panel},
        {8, "torus eigenvalues n=3 degree<=6", torus_eigenvalues},
        {9, "Weyl conjugation and character composition", weyl_conjugation},
        {10, "base change identities N=2 D=4", base_change},
        {11, "analyticity boundary table", analyticity},
        {12, "congruence filter n=3 D=6", congruence_filter_checks},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.ok) ++failed;
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.ok ? "" : " -- ", o.ok ? "" : o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
