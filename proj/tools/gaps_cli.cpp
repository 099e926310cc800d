// Command-line driver.  Exit status: 0 checks passed, 1 property violated, 2 bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <new>
#include <optional>
#include <random>
#include <string>

#include "gaps/json_io.hpp"

using namespace gaps;
using gaps::io::InputError;
using gaps::io::json;

namespace {

struct Options {
    i64 p = 7;
    int n = 2;
    int precision = 12;
    int truncation = 6;
    std::string chr;
    std::uint64_t seed = 0;
    std::string json_out;
    // command specific
    std::string input, matrix, perm;
    std::vector<int> root{1, 2};
    int N = 2;
    bool n_given = false;
};

struct Context {
    Options o;
    Character chi;
    std::mt19937_64 rng;
    PadicRing ring() const { return {o.p, o.precision}; }
};

struct Result {
    bool ok = true;
    json out;
};

void validate(Options& o) {
    if (o.p < 2 || !is_prime(o.p)) throw InputError("--p must be a prime");
    if (o.precision < 1 || o.precision > max_precision(o.p))
        throw InputError("--precision must lie in 1.." + std::to_string(max_precision(o.p)));
    if (o.truncation < 0 || o.truncation > VariableSet::kMaxDegree)
        throw InputError("--truncation must lie in 0.." + std::to_string(VariableSet::kMaxDegree));
    if (o.n < 1 || o.n > 6) throw InputError("--n must lie in 1..6");
    if (o.N < 1 || o.N > 4) throw InputError("--N must lie in 1..4");
}

Character resolve_character(const Options& o, int& n) {
    if (o.chr.empty()) return Character::trivial(o.p, o.precision, n);
    auto chi = io::parse_character(o.chr, o.p, o.precision);
    if (o.n_given && chi.n != n) throw InputError("--char has " + std::to_string(chi.n) + " parameters but --n is " + std::to_string(n));
    n = chi.n;
    return chi;
}

PadicScalar rand_zp(std::mt19937_64& rng, i64 p, int M, int vmin) {
    std::uniform_int_distribution<i64> u(1, ppow(p, M) - 1);
    std::uniform_int_distribution<int> v(vmin, vmin + 2);
    i64 x = u(rng);
    if (x % p == 0) x += 1;
    return PadicScalar::from_parts(p, M, v(rng), x, M);
}

IwahoriMatrix random_iwahori(Context& c, int n) {
    const i64 p = c.o.p;
    const int M = c.o.precision;
    std::vector<PadicScalar> e(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) e[i * n + j] = PadicScalar::from_int(p, M, 1) + rand_zp(c.rng, p, M, 1);
            else e[i * n + j] = rand_zp(c.rng, p, M, i > j ? 0 : 1);
        }
    return IwahoriMatrix(n, e, Tag::G);
}

QSeries random_poly(Context& c, const VarsPtr& vars, int D) {
    QSeries f(c.ring(), vars, D);
    const int deg = std::min(D, 3);
    for (int k = 0; k < 4; ++k) {
        std::vector<int> ex(vars->size(), 0);
        int budget = deg;
        for (int i = 0; i < vars->size() && budget > 0; ++i) {
            std::uniform_int_distribution<int> d(0, budget);
            ex[i] = d(c.rng);
            budget -= ex[i];
        }
        f += QSeries::monomial(c.ring(), vars, D, mono_from(ex), rand_zp(c.rng, c.o.p, c.o.precision, 0));
    }
    return f;
}

bool g_quiet = false;

void print_line(bool ok, const std::string& what) {
    if (!g_quiet) std::printf("%s %s\n", ok ? "PASS" : "FAIL", what.c_str());
}

// ---------------------------------------------------------------- commands

Result cmd_check_char(Context& c) {
    auto v = check_analytic(c.chi);
    Result r{v.analytic, io::to_json(v)};
    print_line(v.analytic, std::string("character is ") + (v.analytic ? "analytic" : "not analytic"));
    return r;
}

Result cmd_act(Context& c) {
    PSVector f;
    if (!c.o.input.empty()) {
        f = io::psvector_from_json(io::read_file(c.o.input));
        if (f.f.p() != c.o.p) throw InputError("input series has a different p");
    } else {
        f = PSVector{random_poly(c, unipotent_vars(c.o.n), c.o.truncation), c.chi};
    }
    require_p_large(f.f.p(), f.n());
    const IwahoriMatrix g = c.o.matrix.empty() ? random_iwahori(c, f.n())
                                                : io::matrix_from_json(io::read_file(c.o.matrix), f.f.p(), f.f.cap());
    if (g.n() != f.n()) throw InputError("matrix size differs from n");
    const auto out = act_group(g, f);
    bool ok = true;
    if (check_analytic(f.chi).analytic && f.f.min_val() >= 0) {
        ok = out.f.min_val() >= 0;
        print_line(ok, "integral input stays integral");
    }
    json j = io::to_json(out);
    print_line(true, "action computed, " + std::to_string(out.f.size()) + " terms, remainder " +
                         (out.f.remainder() >= kInfVal ? std::string("exact") : std::to_string(out.f.remainder())));
    return {ok, j};
}

Result cmd_decompose(Context& c) {
    if (c.o.root.size() != 2) throw InputError("--root expects i,j");
    const int i = c.o.root[0], j = c.o.root[1];
    const int n = c.o.n;
    if (i < 1 || j > n || i >= j) throw InputError("--root must satisfy 1 <= i < j <= n");
    const int D = c.o.truncation;
    auto xz = xz_decompose(i, j, n, D, c.o.p, c.o.precision);
    auto vars = xz.X[0].vars();
    const int y = vars->size() - 1;
    auto fr = Frame::by_name(n, *vars);
    const auto R = c.ring();
    auto A = [&](int r, int s) {
        if (r == s) return QSeries::one(R, vars, D);
        if (r < s) return QSeries(R, vars, D);
        return QSeries::variable(R, vars, D, fr.at(r, s));
    };
    bool ok = true;
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
            QSeries lhs(R, vars, D);
            i64 rem = kInfVal;
            for (int k = 1; k <= n; ++k) {
                lhs += xz.x(r, k) * xz.z(k, s);
                rem = std::min({rem, xz.x(r, k).remainder(), xz.z(k, s).remainder()});
            }
            QSeries rhs = A(r, s);
            if (r == i) rhs -= QSeries::variable(R, vars, D, y) * A(j, s);
            if ((lhs - rhs).eff_min() < rem) ok = false;
            if (xz.x(r, s).min_val() < 0) ok = false;
        }
    print_line(ok, "X Z reproduces (1 - y E_" + std::to_string(i) + std::to_string(j) + ") A with X integral");
    json jx = io::to_json(xz);
    jx["i"] = i;
    jx["j"] = j;
    return {ok, jx};
}

Result cmd_irreducible(Context& c) {
    require_p_large(c.o.p, c.o.n);
    const auto v = is_irreducible(c.chi, c.o.n);
    // a violation at root (i,j) with value m shows up at height m (i - j)
    bool visible = v.irreducible;
    for (const auto& x : v.violations) visible = visible || x.integer * (x.i - x.j) <= c.o.truncation;
    if (!visible) throw TruncationInsufficient("reducibility lies beyond --truncation; raise it to compare");
    const auto rep = phi_weight_rank(c.chi, c.o.n, c.o.truncation);
    for (const auto& x : v.violations)
        if (!g_quiet) std::printf("root (%d,%d): value %lld is a positive integer\n", x.i, x.j, static_cast<long long>(x.integer));
    const bool ok = v.irreducible == rep.irreducible;
    print_line(ok, std::string("criterion says ") + (v.irreducible ? "irreducible" : "reducible") + ", rank oracle says " +
                       (rep.irreducible ? "irreducible" : "reducible"));
    json j = io::to_json(rep, v.irreducible);
    j["violations"] = io::to_json(v)["violations"];
    return {ok, j};
}

Result cmd_multiplicity(Context& c) {
    require_p_large(c.o.p, c.o.n);
    const auto rep = phi_weight_rank(c.chi, c.o.n, c.o.truncation);
    const bool generic = is_irreducible(c.chi, c.o.n).irreducible;
    bool ok = true;
    int complete = 0;
    for (const auto& w : rep.weights) {
        if (!w.complete) continue;
        ++complete;
        if (w.monomials != w.kostant || w.rank > w.kostant) ok = false;
        if (generic && w.rank != w.kostant) ok = false;
    }
    print_line(ok, std::to_string(complete) + " complete weight spaces match Kostant counts");
    return {ok, io::to_json(rep, rep.irreducible)};
}

Result cmd_weyl(Context& c) {
    const int n = c.o.n;
    if (n > 5) throw InputError("weyl needs n <= 5");
    auto b = bruhat_components(c.chi, n);
    bool ok = true;
    json comps = json::array();
    std::optional<WeylElement> only;
    if (!c.o.perm.empty()) {
        only = io::parse_permutation(c.o.perm);
        if (only->n() != n) throw InputError("--w has the wrong length");
    }
    for (const auto& comp : b.components) {
        if (only && !(comp.w == *only)) continue;
        // E_ij w = w E_kl on permutation matrices
        const auto W = comp.w.matrix();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                auto [k, l] = conjugate_root(comp.w, i, j);
                if (W[(j - 1) * n + (l - 1)] != 1 || W[(i - 1) * n + (k - 1)] != 1) ok = false;
            }
        comps.push_back(io::to_json(comp));
    }
    print_line(ok, std::to_string(comps.size()) + " Bruhat components with consistent root transport");
    return {ok, {{"components", comps}}};
}

Result cmd_basechange(Context& c) {
    QSeries f;
    if (!c.o.input.empty()) {
        f = io::series_from_json(io::read_file(c.o.input));
        if (f.p() != c.o.p) throw InputError("input series has a different p");
    } else {
        f = random_poly(c, unipotent_vars(c.o.n), c.o.truncation);
    }
    auto ctx = ResScalarsContext::make(f.p(), c.o.N, f.cap(), f.vars());
    auto b = full_bc(f, ctx);
    auto t = slots_to_restricted(tensor_power(f, ctx), ctx);
    bool ok = (b - t).eff_min() >= std::min(b.remainder(), t.remainder());
    for (const auto& term : b.terms()) ok = ok && term.c.in_base();
    print_line(ok, "full base change equals the product of Frobenius twists and the slot model");
    return {ok, {{"context", io::to_json(ctx)}, {"series", io::to_json(b)}}};
}

Result cmd_suite(Context& c) {
    g_quiet = true;
    json checks = json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool ok) {
        g_quiet = false;
        print_line(ok, name);
        g_quiet = true;
        checks.push_back({{"name", name}, {"pass", ok}});
        all = all && ok;
    };
    const int D = c.o.truncation;
    const int n = c.o.n;
    require_p_large(c.o.p, n);
    {
        Context sub = c;
        sub.o.root = {1, n};
        record("xz reconstruction", n >= 2 ? cmd_decompose(sub).ok : true);
    }
    bool integral = true, hom = true;
    for (int k = 0; k < 10; ++k) {
        PSVector f{random_poly(c, unipotent_vars(n), D), c.chi};
        auto g = random_iwahori(c, n), h = random_iwahori(c, n);
        auto gh = act_group(g, act_group(h, f));
        auto direct = act_group(g * h, f);
        if (check_analytic(c.chi).analytic && gh.f.min_val() < 0) integral = false;
        if ((gh.f - direct.f).eff_min() < std::min(gh.f.remainder(), direct.f.remainder())) hom = false;
    }
    record("integrality", integral);
    record("homomorphism", hom);
    {
        bool ok = true;
        const int m = std::min(n, 3);
        auto chi = Character::from_ints(c.o.p, c.o.precision, std::vector<i64>(m, 0));
        for (const auto& w : phi_weight_rank(chi, m, std::min(D, 6)).weights)
            if (w.complete && w.monomials != w.kostant) ok = false;
        record("kostant counts", ok);
    }
    {
        Context sub = c;
        record("irreducibility criterion vs rank", cmd_irreducible(sub).ok);
    }
    if (n <= 5) {
        Context sub = c;
        record("weyl root transport", cmd_weyl(sub).ok);
    }
    if (n * (n - 1) / 2 * c.o.N <= VariableSet::kMaxVars) {
        Context sub = c;
        sub.o.input.clear();
        sub.o.truncation = std::min(D, 4);
        record("base change", cmd_basechange(sub).ok);
    }
    g_quiet = false;
    return {all, {{"checks", checks}}};
}

}  // namespace

int main(int argc, char** argv) {
    try {
        CLI::App app{"p-adic principal series toolkit"};
        app.require_subcommand(1);
        app.fallthrough();
        Options o;
        app.add_option("--p", o.p, "prime p")->capture_default_str();
        auto* nopt = app.add_option("--n", o.n, "rank n of GL(n)")->capture_default_str();
        app.add_option("--precision", o.precision, "p-adic digits M")->capture_default_str();
        app.add_option("--truncation", o.truncation, "total degree D")->capture_default_str();
        app.add_option("--char", o.chr, "character parameters c_1,...,c_n (integers or a/b)");
        app.add_option("--seed", o.seed, "random seed")->capture_default_str();
        app.add_option("--json-out", o.json_out, "write the JSON result here ('-' for stdout)");

        struct Cmd {
            const char* name;
            const char* help;
            Result (*run)(Context&);
        };
        const Cmd cmds[] = {
            {"check-char", "analyticity of the character", cmd_check_char},
            {"act", "apply an Iwahori element to a vector", cmd_act},
            {"decompose", "XZ decomposition of (1 - y E_ij) A", cmd_decompose},
            {"irreducible", "irreducibility criterion against the rank oracle", cmd_irreducible},
            {"multiplicity", "weight-space ranks and Kostant counts", cmd_multiplicity},
            {"weyl", "Bruhat components and twisted characters", cmd_weyl},
            {"basechange", "restriction of scalars and base change", cmd_basechange},
            {"suite", "run every property check at small scale", cmd_suite},
        };
        std::vector<std::pair<CLI::App*, const Cmd*>> subs;
        for (const auto& c : cmds) {
            auto* s = app.add_subcommand(c.name, c.help);
            subs.push_back({s, &c});
            if (std::string(c.name) == "act") {
                s->add_option("--input", o.input, "vector JSON file");
                s->add_option("--matrix", o.matrix, "matrix JSON file");
            }
            if (std::string(c.name) == "decompose") s->add_option("--root", o.root, "upper root i,j")->delimiter(',')->expected(2);
            if (std::string(c.name) == "weyl") s->add_option("--w", o.perm, "single permutation in one-line notation");
            if (std::string(c.name) == "basechange") {
                s->add_option("--input", o.input, "series JSON file");
                s->add_option("--N", o.N, "degree of the unramified extension")->capture_default_str();
            }
            if (std::string(c.name) == "suite") s->add_option("--N", o.N, "base change degree")->capture_default_str();
        }
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }
        o.n_given = nopt->count() > 0;
        validate(o);
        Context ctx{o, {}, std::mt19937_64(o.seed)};
        ctx.chi = resolve_character(o, ctx.o.n);
        validate(ctx.o);
        for (auto [s, c] : subs) {
            if (!s->parsed()) continue;
            Result r = c->run(ctx);
            if (o.json_out == "-") std::cout << r.out.dump(2) << "\n";
            else if (!o.json_out.empty()) io::write_file(o.json_out, r.out);
            return r.ok ? 0 : 1;
        }
        return 2;
    } catch (const std::bad_alloc&) {
        std::fprintf(stderr, "error: out of memory\n");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
    } catch (...) {
        std::fprintf(stderr, "error: unknown failure\n");
    }
    return 2;
}
