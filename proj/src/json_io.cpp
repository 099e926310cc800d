#include "gaps/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gaps::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

i64 as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<i64>();
}

i64 parse_i64(const std::string& s, const char* what) {
    i64 v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (b == e || ec != std::errc() || ptr != e) throw InputError(std::string("cannot parse ") + what + ": '" + s + "'");
    return v;
}

i64 check_p(const json& j) {
    const i64 p = as_int(j, "p");
    if (p < 2 || !is_prime(p)) throw InputError("p must be a prime");
    return p;
}

int check_cap(const json& j, i64 p) {
    const i64 m = as_int(j, "precision");
    if (m < 1 || m > max_precision(p)) throw InputError("precision must lie in 1.." + std::to_string(max_precision(p)));
    return static_cast<int>(m);
}

json coeff_json(const PadicScalar& x) {
    if (x.is_zero()) return {{"valuation", nullptr}, {"unit", "0"}};
    return {{"valuation", x.val()}, {"unit", std::to_string(x.unit())}};
}

PadicScalar coeff_from(const json& j, i64 p, int cap) {
    const json& v = field(j, "valuation");
    const json& u = field(j, "unit");
    if (v.is_null()) return PadicScalar::zero(p, cap);
    const i64 val = as_int(v, "valuation");
    if (val < -4 * cap - 64 || val > 4 * cap + 64) throw InputError("valuation out of range");
    i64 unit = 0;
    if (u.is_string()) unit = parse_i64(u.get<std::string>(), "unit");
    else unit = as_int(u, "unit");
    if (unit % p == 0) throw InputError("unit must be prime to p");
    return PadicScalar::from_parts(p, cap, val, unit, cap);
}

std::string rational_str(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

template <class R, class F>
json series_json(const TateSeries<R>& f, F coeff) {
    json vars = json::array();
    for (const auto& v : f.vars()->vars()) vars.push_back({{"name", v.name}, {"role", role_name(v.role)}});
    json terms = json::array();
    // keys order lexicographically on exponent vectors
    for (const auto& t : f.terms()) terms.push_back({{"exp", mono_to(t.m, f.vars()->size())}, {"coeff", coeff(t.c)}});
    return {{"p", f.p()}, {"precision", f.cap()}, {"truncation", f.trunc()}, {"variables", vars}, {"terms", terms}};
}

}  // namespace

json to_json(const PadicScalar& x) {
    json j{{"p", x.p()}};
    if (x.is_zero()) {
        j["valuation"] = nullptr;
        j["unit"] = "0";
        if (x.is_exact_zero()) j["precision"] = nullptr;
        else j["precision"] = x.abs_prec();
    } else {
        j["valuation"] = x.val();
        j["unit"] = std::to_string(x.unit());
        j["precision"] = x.rel_prec();
    }
    return j;
}

json to_json(const UnramifiedScalar& x) {
    json j{{"p", x.field()->p()}, {"degree", x.degree()}};
    if (x.is_zero()) {
        j["valuation"] = nullptr;
        j["precision"] = x.abs_prec() >= kInfVal ? json(nullptr) : json(x.abs_prec());
    } else {
        j["valuation"] = x.val();
        j["precision"] = x.abs_prec() >= kInfVal ? json(nullptr) : json(x.abs_prec() - x.val());
    }
    j["unit"] = x.in_base() ? to_json(x.coord(0))["unit"] : json(nullptr);
    json cs = json::array();
    for (const auto& c : x.coords()) cs.push_back(to_json(c));
    j["coords"] = cs;
    return j;
}

PadicScalar scalar_from_json(const json& j, i64 p, int cap) {
    if (j.is_number_integer()) return PadicScalar::from_int(p, cap, j.get<i64>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return PadicScalar::from_int(p, cap, parse_i64(s, "integer"));
        const i64 den = parse_i64(s.substr(slash + 1), "denominator");
        if (den == 0) throw InputError("zero denominator");
        return PadicScalar::from_rational(p, cap, parse_i64(s.substr(0, slash), "numerator"), den);
    }
    if (j.contains("p") && as_int(j["p"], "p") != p) throw InputError("scalar has a different p");
    const json& v = field(j, "valuation");
    const json& pr = field(j, "precision");
    if (v.is_null()) {
        if (pr.is_null()) return PadicScalar::zero(p, cap);
        return PadicScalar::inexact_zero(p, cap, as_int(pr, "precision"));
    }
    const PadicScalar x = coeff_from(j, p, cap);
    if (pr.is_null()) return x;
    const i64 rp = as_int(pr, "precision");
    if (rp < 1) throw InputError("relative precision must be positive");
    return PadicScalar::from_parts(p, cap, x.val(), x.unit(), static_cast<int>(std::min<i64>(rp, cap)));
}

json to_json(const QSeries& f) { return series_json(f, coeff_json); }

json to_json(const LSeries& f) {
    return series_json(f, [](const UnramifiedScalar& c) {
        json cs = json::array();
        for (const auto& x : c.coords()) cs.push_back(coeff_json(x));
        return json{{"degree", c.degree()}, {"coords", cs}};
    });
}

QSeries series_from_json(const json& j) {
    const i64 p = check_p(field(j, "p"));
    const int cap = check_cap(field(j, "precision"), p);
    const i64 D = as_int(field(j, "truncation"), "truncation");
    if (D < 0 || D > VariableSet::kMaxDegree)
        throw InputError("truncation must lie in 0.." + std::to_string(VariableSet::kMaxDegree));
    const json& jv = field(j, "variables");
    if (!jv.is_array()) throw InputError("variables must be an array");
    std::vector<Variable> vs;
    for (const auto& v : jv) {
        const json& name = field(v, "name");
        const json& role = field(v, "role");
        if (!name.is_string() || !role.is_string()) throw InputError("variable name and role must be strings");
        try {
            vs.push_back({name.get<std::string>(), role_from_name(role.get<std::string>())});
        } catch (const VariableMismatch& e) {
            throw InputError(e.what());
        }
    }
    VarsPtr vars;
    try {
        vars = make_vars(vs);
    } catch (const VariableMismatch& e) {
        throw InputError(e.what());
    }
    const PadicRing R{p, cap};
    QSeries f(R, vars, static_cast<int>(D));
    const json& jt = field(j, "terms");
    if (!jt.is_array()) throw InputError("terms must be an array");
    for (const auto& t : jt) {
        const json& je = field(t, "exp");
        if (!je.is_array() || static_cast<int>(je.size()) != vars->size())
            throw InputError("exponent vector length differs from the number of variables");
        std::vector<int> ex;
        int deg = 0;
        for (const auto& e : je) {
            const i64 x = as_int(e, "exponent");
            if (x < 0 || x > VariableSet::kMaxDegree) throw InputError("exponent out of range");
            ex.push_back(static_cast<int>(x));
            deg += static_cast<int>(x);
        }
        if (deg > D) throw InputError("term degree exceeds the truncation");
        const auto c = coeff_from(field(t, "coeff"), p, cap);
        if (!c.is_zero()) f += QSeries::monomial(R, vars, static_cast<int>(D), mono_from(ex), c);
    }
    return f;
}

json to_json(const IwahoriMatrix& g) {
    json es = json::array();
    for (const auto& x : g.entries()) es.push_back(to_json(x));
    json j{{"n", g.n()}, {"tag", tag_name(g.tag())}, {"entries", es}};
    if (g.tag() == Tag::PwPlus) j["w"] = g.w();
    return j;
}

IwahoriMatrix matrix_from_json(const json& j, i64 p, int cap) {
    const i64 n = as_int(field(j, "n"), "n");
    if (n < 1 || n > 8) throw InputError("matrix size must lie in 1..8");
    const json& jt = field(j, "tag");
    if (!jt.is_string()) throw InputError("tag must be a string");
    Tag tag;
    try {
        tag = tag_from_name(jt.get<std::string>());
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
    const json& je = field(j, "entries");
    if (!je.is_array() || static_cast<i64>(je.size()) != n * n) throw InputError("entries must hold n*n scalars");
    std::vector<PadicScalar> es;
    for (const auto& x : je) es.push_back(scalar_from_json(x, p, cap));
    std::vector<int> w;
    if (tag == Tag::PwPlus) {
        const json& jw = field(j, "w");
        if (!jw.is_array()) throw InputError("w must be an array");
        for (const auto& x : jw) w.push_back(static_cast<int>(as_int(x, "w entry")));
        try {
            WeylElement{w};
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    }
    return IwahoriMatrix(static_cast<int>(n), es, tag, w);
}

json to_json(const Character& chi) {
    json cs = json::array();
    for (const auto& c : chi.c) cs.push_back(to_json(c));
    return {{"c", cs}};
}

json to_json(const PSVector& f) {
    json j = to_json(f.f);
    j["character"] = to_json(f.chi);
    j["n"] = f.n();
    return j;
}

PSVector psvector_from_json(const json& j) {
    QSeries f = series_from_json(j);
    const i64 n = as_int(field(j, "n"), "n");
    if (n < 1 || n > 6) throw InputError("n must lie in 1..6");
    const json& jc = field(field(j, "character"), "c");
    if (!jc.is_array() || static_cast<i64>(jc.size()) != n) throw InputError("character must have n parameters");
    Character chi;
    chi.n = static_cast<int>(n);
    for (const auto& c : jc) chi.c.push_back(scalar_from_json(c, f.p(), f.cap()));
    try {
        return PSVector::from_series(chi, f);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json to_json(const XZ& xz) {
    json X = json::array(), Z = json::array();
    for (const auto& s : xz.X) X.push_back(to_json(s));
    for (const auto& s : xz.Z) Z.push_back(to_json(s));
    return {{"n", xz.n}, {"X", X}, {"Z", Z}};
}

json to_json(const DecayReport& r) {
    json m = json::array();
    for (const auto& [deg, v] : r.min_val) m.push_back({{"degree", deg}, {"min_valuation", v >= kInfVal ? json(nullptr) : json(v)}});
    return {{"by_degree", m}, {"integral", r.integral}};
}

json to_json(const PhiReport& r, bool verdict) {
    json ws = json::array();
    for (const auto& w : r.weights) {
        if (!w.complete) continue;
        json xi = json::array();
        for (const auto& x : w.xi) xi.push_back(to_json(x));
        ws.push_back({{"xi", xi},
                      {"kostant", w.kostant},
                      {"monomials", w.monomials},
                      {"rank", w.rank},
                      {"certified_digits", w.certified_digits}});
    }
    return {{"weights", ws}, {"verdict", verdict ? "irreducible" : "reducible"}};
}

json to_json(const IrreducibilityVerdict& v) {
    json vs = json::array();
    for (const auto& x : v.violations)
        vs.push_back({{"root", {x.i, x.j}},
                      {"value", to_json(x.value)},
                      {"integer", x.integer},
                      {"working_precision", x.working_precision}});
    return {{"irreducible", v.irreducible}, {"violations", vs}};
}

json to_json(const BruhatComponent& c) {
    json cs = json::array();
    for (const auto& x : c.chi_w.c) cs.push_back(to_json(x));
    json rl = json::array();
    for (const auto& r : c.relabel)
        rl.push_back({{"coord", coord_name(r.k, r.l)}, {"entry", {r.row, r.col}}, {"rescaled", r.rescaled}});
    return {{"w", c.w.one_line()}, {"chi_w", cs}, {"relabeling", rl}};
}

json to_json(const ResScalarsContext& ctx) {
    json poly = ctx.K->modulus();
    poly.push_back(1);
    json fm = json::array();
    const auto& F = ctx.K->frobenius_matrix();
    // row-major: entry (r, i) is coordinate r of frob(w^i)
    for (int r = 0; r < ctx.N; ++r) {
        json row = json::array();
        for (int i = 0; i < ctx.N; ++i) row.push_back(to_json(F[i][r]));
        fm.push_back(row);
    }
    return {{"p", ctx.p}, {"N", ctx.N}, {"basis_poly", poly}, {"frobenius_matrix", fm}};
}

json to_json(const AnalyticVerdict& v) {
    json m = json::array();
    for (const auto& r : v.margin) m.push_back(rational_str(r));
    return {{"analytic", v.analytic}, {"margin", m}};
}

Character parse_character(const std::string& text, i64 p, int cap) {
    Character chi;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty character parameter");
        chi.c.push_back(scalar_from_json(json(item), p, cap));
    }
    if (chi.c.empty()) throw InputError("character needs at least one parameter");
    chi.n = static_cast<int>(chi.c.size());
    return chi;
}

WeylElement parse_permutation(const std::string& text) {
    std::vector<int> pi;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const i64 x = parse_i64(item, "permutation entry");
        if (x < 1 || x > 16) throw InputError("permutation entry out of range");
        pi.push_back(static_cast<int>(x));
    }
    if (pi.empty()) throw InputError("empty permutation");
    try {
        return WeylElement(pi);
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace gaps::io
