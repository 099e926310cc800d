#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gaps/principal_series.hpp"
#include "test_support.hpp"

using namespace gaps;
using namespace testing_support;

namespace {

constexpr i64 P = 7;
constexpr int M = 12;
const PadicRing Q{P, M};

PadicScalar I(i64 n) { return PadicScalar::from_int(P, M, n); }

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

// generalized binomial coefficient binom(N, k) for integer N
PadicScalar binom(i64 N, int k) {
    PadicScalar r = I(1);
    for (int q = 0; q < k; ++q) r = r * I(N - q) / I(q + 1);
    return r;
}

std::vector<PadicScalar> coords(const IwahoriMatrix& u) {
    std::vector<PadicScalar> pt;
    for (auto [i, j] : negative_roots(u.n())) pt.push_back(u.at(i, j));
    return pt;
}

IwahoriMatrix random_U(std::mt19937_64& rng, int n) {
    auto e = IwahoriMatrix::identity(P, M, n).entries();
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) e[i * n + j] = rand_zp(rng, P, M);
    return IwahoriMatrix(n, e, Tag::U);
}

bool only_y_multiples(const QSeries& f, int yvar) {
    for (const auto& t : f.terms())
        if (mono_exp(t.m, yvar) == 0) return false;
    return true;
}

}  // namespace

TEST(Character, EvalAndAnalyticity) {
    auto chi = Character::from_ints(P, M, {3, -2});
    auto t1 = I(8), t2 = I(15);
    EXPECT_TRUE(chi.eval({t1, t2}).same(t1.pow(3) * t2.pow(-2)));
    EXPECT_TRUE(check_analytic(chi).analytic);
    Character bad{2, {PadicScalar::from_rational(P, M, 1, 7), I(0)}, 1};
    EXPECT_FALSE(check_analytic(bad).analytic);
    EXPECT_THROW(require_analytic(bad), DivergenceError);
}

TEST(Roots, Coordinates) {
    auto r = negative_roots(3);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0], std::make_pair(2, 1));
    EXPECT_EQ(r[2], std::make_pair(3, 2));
    for (int n = 2; n <= 5; ++n) {
        auto rs = negative_roots(n);
        for (std::size_t k = 0; k < rs.size(); ++k) EXPECT_EQ(root_index(n, rs[k].first, rs[k].second), (int)k);
    }
    EXPECT_EQ(coord_name(3, 1), "a[3,1]");
}

TEST(XZ, Gl2ClosedForms) {
    const int D = 6;
    auto xz = xz_decompose(1, 2, 2, D, P, M);
    auto vars = xz.X[0].vars();
    const int a = 0, y = 1;
    QSeries x21(Q, vars, D), z22(Q, vars, D);
    for (int k = 0; k <= D; ++k) {
        std::vector<int> e(2);
        e[a] = k;
        e[y] = k;
        if (2 * k <= D) z22 += QSeries::monomial(Q, vars, D, mono_from(e), I(1));
        e[a] = k + 1;
        if (2 * k + 1 <= D) x21 += QSeries::monomial(Q, vars, D, mono_from(e), I(1));
    }
    QSeries z11 = QSeries::one(Q, vars, D) - QSeries::monomial(Q, vars, D, mono_from({1, 1}), I(1));
    QSeries z12 = -QSeries::variable(Q, vars, D, y);
    EXPECT_TRUE((xz.x(2, 1) - x21).is_zero());
    EXPECT_TRUE((xz.z(1, 1) - z11).is_zero());
    EXPECT_TRUE((xz.z(1, 2) - z12).is_zero());
    EXPECT_TRUE((xz.z(2, 2) - z22).is_zero());
    EXPECT_TRUE(xz.z(2, 1).is_zero());
}

TEST(XZ, ReconstructionAndShape) {
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
                        EXPECT_GE((lhs - rhs).eff_min(), rem) << n << " " << i << j << " " << r << s;
                        if (r < s) EXPECT_TRUE(xz.x(r, s).is_zero());
                        if (r > s) EXPECT_TRUE(xz.z(r, s).is_zero());
                        if (r == s) {
                            EXPECT_TRUE(only_y_multiples(xz.z(r, r) - QSeries::one(Q, vars, D), y));
                            EXPECT_TRUE((xz.x(r, r) - QSeries::one(Q, vars, D)).is_zero());
                        }
                        if (r < s) EXPECT_TRUE(only_y_multiples(xz.z(r, s), y));
                        EXPECT_GE(xz.x(r, s).min_val(), 0);
                    }
            }
}

TEST(Action, Gl2ClosedForms) {
    const int D = 6;
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto chi = random_char(rng, 2);
        const i64 c1 = chi.c[0].residue(M), c2 = chi.c[1].residue(M);
        const i64 c1s = c1 > ppow(P, M) / 2 ? c1 - ppow(P, M) : c1;
        const i64 c2s = c2 > ppow(P, M) / 2 ? c2 - ppow(P, M) : c2;
        const int m = trial % 4;
        auto vars = unipotent_vars(2);
        PSVector f{QSeries::monomial(Q, vars, D, mono_from({m}), I(1)), chi};
        auto y = rand_zp(rng, P, M, 1);
        auto up = act_upper(1, 2, GroupParameter::concrete(y), f);
        for (int k = 0; k + m <= D; ++k) {
            auto want = binom(-m - c1s + c2s, k) * (-y).pow(k);
            auto got = up.f.coeff(std::vector<int>{m + k});
            EXPECT_TRUE((got - want).is_zero() || (got - want).val() >= up.f.remainder()) << trial << " " << k;
        }
        auto t = I(1) + rand_zp(rng, P, M, 1);
        auto d1 = act_diag(1, GroupParameter::concrete(t), f);
        auto want1 = power_char(t, chi.c[0]) * t.pow(m);
        EXPECT_TRUE((d1.f.coeff(std::vector<int>{m}) - want1).is_zero() || (d1.f.coeff(std::vector<int>{m}) - want1).val() >= M - 1);
        auto d2 = act_diag(2, GroupParameter::concrete(t), f);
        auto want2 = power_char(t, chi.c[1]) * t.pow(-m);
        EXPECT_TRUE((d2.f.coeff(std::vector<int>{m}) - want2).is_zero() || (d2.f.coeff(std::vector<int>{m}) - want2).val() >= M - 1);
        auto yl = rand_zp(rng, P, M);
        auto lo = act_lower(2, 1, GroupParameter::concrete(yl), f);
        for (int k = 0; k <= m; ++k) EXPECT_TRUE(lo.f.coeff(std::vector<int>{k}).same(binom(m, k) * (-yl).pow(m - k)));
    }
}

TEST(Action, Integrality) {
    const int D = 6;
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 2;
        auto chi = random_char(rng, n);
        PSVector f{random_poly(rng, unipotent_vars(n), D, 4, 5), chi};
        std::uniform_int_distribution<int> pick(1, n);
        int i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        PSVector g = i > j ? act_lower(i, j, GroupParameter::concrete(rand_zp(rng, P, M)), f)
                           : act_upper(i, j, GroupParameter::concrete(rand_zp(rng, P, M, 1)), f);
        g = act_diag(pick(rng), GroupParameter::concrete(I(1) + rand_zp(rng, P, M, 1)), g);
        EXPECT_GE(g.f.min_val(), 0);
        EXPECT_GE(g.f.remainder(), 1);
    }
}

TEST(Action, Homomorphism) {
    const int D = 6;
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        auto chi = random_char(rng, 2);
        PSVector f{random_poly(rng, unipotent_vars(2), D, 3, 4), chi};
        auto g = random_G(rng, P, M, 2), h = random_G(rng, P, M, 2);
        auto lhs = act_group(g, act_group(h, f));
        auto rhs = act_group(g * h, f);
        const i64 tol = std::min(lhs.f.remainder(), rhs.f.remainder());
        EXPECT_GE(tol, 1);
        EXPECT_GE((lhs.f - rhs.f).eff_min(), tol) << trial;
    }
}

TEST(Action, DefiningRelation) {
    const int D = 8;
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + trial % 2;
        auto chi = random_char(rng, n);
        auto fpoly = random_poly(rng, unipotent_vars(n), D, 4, 5);
        auto h = random_G(rng, P, M, n);
        auto u = random_U(rng, n);
        auto hu = h.inverse() * u.retag(Tag::G);
        auto [u2, q] = split_UQ0(hu);
        PadicScalar chi_qinv = I(1);
        for (int r = 1; r <= n; ++r) chi_qinv = chi_qinv * power_char(q.at(r, r), chi.c[r - 1]).inv();
        auto want = chi_qinv * evaluate(fpoly, coords(u2)).value;
        auto ev = evaluate(act_group(h, PSVector{fpoly, chi}).f, coords(u));
        auto diff = ev.value - want;
        const i64 agree = diff.is_zero() ? diff.abs_prec() : diff.val();
        // never wrong inside the certified digits; GL(2) always reaches M - D of them
        EXPECT_GE(agree, std::min<i64>(ev.certified, M - D)) << trial;
        if (n == 2) EXPECT_GE(std::min<i64>(ev.certified, agree), M - D) << trial;
    }
}

TEST(Action, SymbolicMatchesConcrete) {
    const int D = 6;
    std::mt19937_64 rng(45);
    auto chi = Character::from_ints(P, M, {4, -3, 1});
    PSVector f{random_poly(rng, unipotent_vars(3), D, 2, 4), chi};
    auto a = std::vector<PadicScalar>{rand_zp(rng, P, M, 1), rand_zp(rng, P, M, 1), rand_zp(rng, P, M, 1)};
    auto check = [&](const PSVector& sym, const PSVector& con, const PadicScalar& param) {
        auto pt = a;
        pt.push_back(param);
        auto es = evaluate(sym.f, pt), ec = evaluate(con.f, a);
        auto d = es.value - ec.value;
        const i64 bound = std::min({es.certified, ec.certified, es.tail_floor});
        EXPECT_TRUE(d.is_zero() || d.val() >= bound) << d.val() << " vs " << bound;
    };
    auto y = rand_zp(rng, P, M, 1);
    check(act_upper(1, 3, GroupParameter::symbolic("y"), f), act_upper(1, 3, GroupParameter::concrete(y), f), y);
    auto eta = rand_zp(rng, P, M, 1);
    check(act_upper(2, 3, GroupParameter::rescaled("eta"), f),
          act_upper(2, 3, GroupParameter::concrete(eta * I(P)), f), eta);
    auto yl = rand_zp(rng, P, M, 1);
    check(act_lower(3, 1, GroupParameter::symbolic("x"), f), act_lower(3, 1, GroupParameter::concrete(yl), f), yl);
    auto xi = rand_zp(rng, P, M, 1);
    check(act_diag(2, GroupParameter::symbolic("xi"), f),
          act_diag(2, GroupParameter::concrete(I(1) + I(P) * xi), f), xi);
}

TEST(Action, DecayUnderRescaling) {
    const int D = 8;
    auto chi = Character::from_ints(P, M, {2, 0});
    PSVector f{QSeries::monomial(Q, unipotent_vars(2), D, mono_from({2}), I(1)), chi};
    auto g = act_upper(1, 2, GroupParameter::rescaled("eta"), f);
    auto rep = decay_report(g.f, g.f.vars()->index_of("eta"));
    EXPECT_TRUE(rep.integral);
    ASSERT_GE(rep.min_val.size(), 3u);
    for (auto [k, v] : rep.min_val) EXPECT_GE(v, k);
}

TEST(Action, InputErrors) {
    auto chi = Character::from_ints(P, M, {1, 2});
    auto f = PSVector::constant_one(chi, 4);
    EXPECT_THROW(act_upper(1, 2, GroupParameter::concrete(I(3)), f), DomainError);
    EXPECT_THROW(act_lower(1, 2, GroupParameter::concrete(I(3)), f), DomainError);
    EXPECT_THROW(act_diag(1, GroupParameter::concrete(I(3)), f), DomainError);
    EXPECT_THROW(act_diag(3, GroupParameter::concrete(I(1)), f), DomainError);
    Character bad{2, {PadicScalar::from_rational(P, M, 1, 7), I(0)}, 1};
    EXPECT_THROW(act_upper(1, 2, GroupParameter::concrete(I(7)), PSVector::constant_one(bad, 4)), DivergenceError);
    EXPECT_THROW(act_lower(2, 1, GroupParameter::symbolic("a[2,1]"), f), VariableMismatch);
}
