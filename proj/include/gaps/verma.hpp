#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gaps/principal_series.hpp"

namespace gaps {

struct RootDatum {
    int n = 0;
    std::vector<std::pair<int, int>> roots;  // negative roots (i,j), i > j

    static RootDatum gl(int n);
    std::size_t size() const { return roots.size(); }
    // e_i - e_j
    std::vector<i64> alpha(std::size_t idx) const;
    // coroot E_ii - E_jj as a diagonal vector
    std::vector<i64> coroot(std::size_t idx) const;
    i64 rho(std::size_t idx) const { return roots[idx].first - roots[idx].second; }
};

using Weight = std::vector<PadicScalar>;

Weight mu_of(const Character& chi);
// c_k + sum_{(i,k)} r - sum_{(k,j)} r; r indexed like negative_roots(n)
PadicScalar torus_eigenvalue(const std::vector<int>& r, int k, const Character& chi);

// integer shift sum r_a a of a monomial; weight of a^r is c - shift
std::vector<i64> monomial_shift(const std::vector<int>& r, int n);
// sum of simple-root coefficients; the largest total degree of a monomial of this shift
i64 shift_height(const std::vector<i64>& d);

PSVector lie_lower(int i, int j, const PSVector& f);
PSVector lie_diag(int k, const PSVector& f);
PSVector lie_upper(int i, int j, const PSVector& f);

// number of r in N^{n(n-1)/2} with sum r_a a = d
i64 kostant_count(const std::vector<i64>& d);
// 0 when c - xi is not an integral vector
i64 kostant_multiplicity(const Weight& xi, const Character& chi, int n);

struct Violation {
    int i = 0, j = 0;
    PadicScalar value;  // -mu(H_a) + i - j
    i64 integer = 0;
    // membership decided modulo p^M only
    bool working_precision = true;
};
struct IrreducibilityVerdict {
    bool irreducible = true;
    std::vector<Violation> violations;
};
IrreducibilityVerdict is_irreducible(const Character& chi, int n);

struct WeightRank {
    std::vector<i64> shift;
    Weight xi;
    i64 kostant = 0;
    i64 monomials = 0;  // monomials of degree <= D with this weight
    i64 rank = 0;       // dimension reached by U(g).1
    bool complete = false;
    i64 certified_digits = 0;
};
struct PhiReport {
    int n = 0, D = 0;
    std::vector<WeightRank> weights;  // ordered by height, then shift
    bool irreducible = true;          // no complete weight space is deficient
};
PhiReport phi_weight_rank(const Character& chi, int n, int D);
// single weight; throws TruncationInsufficient when the weight space does not fit in degree D
WeightRank weight_rank(const Character& chi, int n, int D, const std::vector<i64>& shift);

PSVector congruence_filter(const PSVector& f, int k, int s);

}  // namespace gaps
