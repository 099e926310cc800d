#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaps/padic.hpp"

namespace gaps {

struct MembershipError : DomainError {
    using DomainError::DomainError;
};

enum class Tag { G, B, U, Q0, P0, PwPlus };
std::string tag_name(Tag t);
Tag tag_from_name(const std::string& s);

/// n x n matrix over Z_p with a validated membership tag.  Indices in the
/// public accessors are 1-based, matching (i,j) labels of roots.
class IwahoriMatrix {
public:
    IwahoriMatrix() = default;
    // w is the one-line permutation for tag PwPlus, ignored otherwise
    IwahoriMatrix(int n, std::vector<PadicScalar> entries, Tag tag, std::vector<int> w = {});

    static IwahoriMatrix identity(i64 p, int cap, int n, Tag tag = Tag::G);

    int n() const { return n_; }
    i64 p() const { return e_.front().p(); }
    int cap() const { return e_.front().cap(); }
    Tag tag() const { return tag_; }
    const PadicScalar& at(int i, int j) const { return e_[(i - 1) * n_ + (j - 1)]; }
    const std::vector<PadicScalar>& entries() const { return e_; }
    const std::vector<int>& w() const { return w_; }

    IwahoriMatrix operator*(const IwahoriMatrix& o) const;
    IwahoriMatrix inverse() const;
    bool same(const IwahoriMatrix& o) const;
    IwahoriMatrix retag(Tag t) const { return IwahoriMatrix(n_, e_, t, w_); }

    static bool satisfies(int n, const std::vector<PadicScalar>& e, Tag tag, const std::vector<int>& w = {});

private:
    int n_ = 0;
    std::vector<PadicScalar> e_;
    Tag tag_ = Tag::G;
    std::vector<int> w_;
};

enum class FactorKind { Lower, Diag, Upper };

struct FactorDesc {
    FactorKind kind;
    int i;  // diag: i == j == k
    int j;
    bool operator==(const FactorDesc&) const = default;
    std::string str() const;
};

struct OneParamFactor {
    FactorDesc desc;
    PadicScalar param;
    // validates the congruence domain of param
    void check() const;
    IwahoriMatrix to_matrix(int n) const;
};

void require_p_large(i64 p, int n);

std::vector<FactorDesc> lazard_order(int n);
std::vector<OneParamFactor> factorize(const IwahoriMatrix& g);
IwahoriMatrix ordered_product(const std::vector<OneParamFactor>& fs, int n, i64 p, int cap);
// g = u q with u lower unipotent and q in Q0
std::pair<IwahoriMatrix, IwahoriMatrix> split_UQ0(const IwahoriMatrix& g);

}  // namespace gaps
