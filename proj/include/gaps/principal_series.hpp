#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaps/iwahori.hpp"
#include "gaps/tate_series.hpp"

namespace gaps {

/// chi(t_1..t_n) = prod t_i^{c_i}; e is the ramification index of the
/// coefficient field used in the analyticity bound.
struct Character {
    int n = 0;
    std::vector<PadicScalar> c;
    i64 e = 1;

    static Character trivial(i64 p, int cap, int n);
    static Character from_ints(i64 p, int cap, const std::vector<i64>& c);
    i64 p() const { return c.front().p(); }
    int cap() const { return c.front().cap(); }
    // requires every t_i = 1 mod p
    PadicScalar eval(const std::vector<PadicScalar>& t) const;
};

struct AnalyticVerdict {
    bool analytic = true;
    std::vector<Rational> margin;  // v_p(c_i) - (e/(p-1) - 1)
};
AnalyticVerdict check_analytic(const Character& chi);
void require_analytic(const Character& chi);

// negative roots (i,j), i > j, in lexicographic order
std::vector<std::pair<int, int>> negative_roots(int n);
int root_index(int n, int i, int j);
std::string coord_name(int i, int j);
VarsPtr unipotent_vars(int n);

/// Variable index of each coordinate a_(i,j) inside a series; lets the
/// same kernels run on plain, parameter-extended and relabelled series.
struct Frame {
    int n = 0;
    std::vector<int> var_of;  // indexed by root_index
    int at(int i, int j) const { return var_of[root_index(n, i, j)]; }
    static Frame standard(int n);
    static Frame by_name(int n, const VariableSet& vars, const std::string& suffix = "");
};

struct PSVector {
    QSeries f;
    Character chi;
    int n() const { return chi.n; }
    Frame frame() const { return Frame::by_name(chi.n, *f.vars()); }
    static PSVector constant_one(const Character& chi, int D);
    static PSVector from_series(const Character& chi, const QSeries& f);
};

struct GroupParameter {
    enum class Kind { Concrete, Symbolic, Rescaled };
    Kind kind = Kind::Concrete;
    PadicScalar value;
    std::string name;
    static GroupParameter concrete(const PadicScalar& v) { return {Kind::Concrete, v, ""}; }
    static GroupParameter symbolic(const std::string& name) { return {Kind::Symbolic, PadicScalar(), name}; }
    // upper factors only: y = p * eta with eta in Z_p
    static GroupParameter rescaled(const std::string& name) { return {Kind::Rescaled, PadicScalar(), name}; }
};

// copy of f over vars + v (or f itself when v is present); returns v's index
std::pair<QSeries, int> adjoin(const QSeries& f, const Variable& v);

// kernels: f is any series, fr locates the coordinates, parameters are
// series over f's variable set
QSeries diag_kernel(const QSeries& f, const Frame& fr, int k, const QSeries& t, const PadicScalar& ck);
QSeries lower_kernel(const QSeries& f, const Frame& fr, int i, int j, const QSeries& y);
QSeries upper_kernel(const QSeries& f, const Frame& fr, int i, int j, const QSeries& y,
                     const std::vector<PadicScalar>& c);

struct XZ {
    int n = 0;
    std::vector<QSeries> X, Z, Zinv;  // row-major, 0-based
    const QSeries& x(int i, int j) const { return X[(i - 1) * n + (j - 1)]; }
    const QSeries& z(int i, int j) const { return Z[(i - 1) * n + (j - 1)]; }
};
XZ xz_kernel(const QSeries& like, const Frame& fr, int i, int j, const QSeries& y);
// M = XZ for M row-major with diagonal entries in 1 + (max ideal)
XZ doolittle(const std::vector<QSeries>& M, int n);
// symbolic decomposition over {a_(k,l)} and y in pZ_p
XZ xz_decompose(int i, int j, int n, int D, i64 p, int cap);

PSVector act_diag(int k, const GroupParameter& t, const PSVector& f);
PSVector act_lower(int i, int j, const GroupParameter& y, const PSVector& f);
PSVector act_upper(int i, int j, const GroupParameter& y, const PSVector& f);
PSVector act_factor(const OneParamFactor& fac, const PSVector& f);
PSVector act_group(const IwahoriMatrix& g, const PSVector& f);

struct DecayReport {
    std::map<int, i64> min_val;  // degree in the grading variable -> min valuation
    bool integral = true;
};
DecayReport decay_report(const QSeries& f, int var);

}  // namespace gaps
