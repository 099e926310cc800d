#pragma once

#include <string>
#include <vector>

#include "gaps/principal_series.hpp"
#include "gaps/unramified.hpp"

namespace gaps {

/// L = Q_p(w) with the power basis 1, w, ..., w^{N-1} of O_L.
struct ResScalarsContext {
    i64 p = 0;
    int N = 1;
    FieldPtr K;
    std::vector<UnramifiedScalar> basis;
    VarsPtr source;  // d variables over L
    VarsPtr target;  // x#1..x#N for each source variable x, over Q_p

    static ResScalarsContext make(i64 p, int N, int cap, const VarsPtr& source);
    int cap() const { return K->cap(); }
    UnramifiedRing ring() const { return UnramifiedRing{K}; }
    // index of x#i (i is 1-based) in target
    int target_index(int v, int i) const { return v * N + (i - 1); }
};

std::string restricted_name(const std::string& name, int i);
std::string slot_name(const std::string& name, int s);

LSeries embed(const QSeries& f, const FieldPtr& K);
// sigma^k on coefficients, variables fixed
LSeries frobenius(const LSeries& f, int k);

LSeries restrict_scalars(const LSeries& f, const ResScalarsContext& ctx);
LSeries holomorphic_bc(const QSeries& f, const ResScalarsContext& ctx);
LSeries full_bc(const QSeries& f, const ResScalarsContext& ctx);

// source variable x in slot s (0-based Frobenius power) is named x@s
VarsPtr slot_vars(const VarsPtr& source, int N);
// prod_s f(x@s) over the slot variables
LSeries tensor_power(const QSeries& f, const ResScalarsContext& ctx);
// x@s -> sum_i sigma^s(e_i) x#i
LSeries slots_to_restricted(const LSeries& F, const ResScalarsContext& ctx);

/// Slotwise model of the N-fold tensor product of principal series with
/// G(Q_p) acting diagonally.
struct TensorRep {
    Character chi;
    int n = 0, N = 1, D = 0;
    VarsPtr vars;  // a[i,j]@s

    QSeries one() const;
    Frame slot_frame(int s) const;
    QSeries act(const OneParamFactor& h, const QSeries& F) const;
    QSeries act_group(const IwahoriMatrix& g, const QSeries& F) const;
    // eigenvalue of Diag(t) on the constant vector
    PadicScalar constant_eigenvalue(const std::vector<PadicScalar>& t) const;
};
TensorRep tensor_rep(const Character& chi, int n, int N, int D);

}  // namespace gaps
