#pragma once

#include <utility>
#include <vector>

#include "gaps/principal_series.hpp"

namespace gaps {

/// Permutation pi with w^{-1} = sum_r E_{r, pi(r)}, so w e_r = e_{pi(r)}.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::vector<int> pi);  // one-line notation, 1-based
    static WeylElement identity(int n);

    int n() const { return static_cast<int>(pi_.size()); }
    int operator()(int r) const { return pi_[r - 1]; }
    int preimage(int s) const;
    const std::vector<int>& one_line() const { return pi_; }
    // matrix of w (not w^{-1}), row-major 0/1 entries
    std::vector<int> matrix() const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool operator==(const WeylElement&) const = default;

private:
    std::vector<int> pi_;
};

// (k,l) with pi(k) = i, pi(l) = j; then (1 - yE_ij) w = w (1 - yE_kl)
std::pair<int, int> conjugate_root(const WeylElement& w, int i, int j);
Character chi_w(const Character& chi, const WeylElement& w);

struct Relabel {
    int k = 0, l = 0;      // component coordinate a[k,l]
    int row = 0, col = 0;  // entry (pi(k), pi(l)) of w A w^{-1}
    bool rescaled = false; // lands above the diagonal: entry = p * a[k,l]
};
std::vector<Relabel> relabeling(const WeylElement& w);
// a[k,l] for every negative root; rescaled ones carry Role::RescaledParam
VarsPtr component_vars(const WeylElement& w);

// (h.g)(A) for the one-parameter factor h acting on the w-component
QSeries act_weyl(const WeylElement& w, const OneParamFactor& h, const Character& chi, const QSeries& g);

struct BruhatComponent {
    WeylElement w;
    Character chi_w;
    std::vector<Relabel> relabel;
    VarsPtr vars;
};

struct BruhatSum {
    int n = 0;
    Character chi;
    std::vector<BruhatComponent> components;  // identity first
    // componentwise action; one series per component
    std::vector<QSeries> act(const OneParamFactor& h, const std::vector<QSeries>& gs) const;
};

BruhatSum bruhat_components(const Character& chi, int n);

}  // namespace gaps
