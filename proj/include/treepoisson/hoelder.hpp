#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "treepoisson/boundary.hpp"

namespace treepoisson {

// d_{o,theta}(omega1, omega2) = theta^{depth of the branch point}; two
// identical depth-D leaves get distance 0 (a truncation artifact, the true
// distances inside one leaf cylinder are <= theta^D).
double boundary_distance(const Tree& tree, double theta, int leaf1, int leaf2);

// Exact Lipschitz seminorm of a cylinder function w.r.t. d_{o,theta}:
// max over pairs u != v at its level of |p(u)-p(v)| theta^{-depth(meet)}.
double lipschitz_seminorm(double theta, const CylinderFunction& p);

// |p|_{o,theta} + sup norm.
double hoelder_norm(double theta, const CylinderFunction& p);

/// |value at depth n| <= coeff * base^n over the whole truncation.
struct GrowthEnvelope {
    double coeff = 0.0;
    double base = 1.0;
};

// Per-depth maxima of |values| (indexed 0..D).
std::vector<double> level_abs_maxima(const Tree& tree, std::span<const Complex> by_vertex);

// Deterministic max-of-n-th-roots fit: coeff = max(a_0, 1) and
// base = max_n (a_n/coeff)^{1/n}, nudged upward until the envelope holds
// at every level. Normalizing by coeff keeps the base scale-invariant.
// All-zero data returns {0, 1}.
GrowthEnvelope fit_envelope(std::span<const double> level_maxima);

bool envelope_holds(std::span<const double> level_maxima, const GrowthEnvelope& env);

GrowthEnvelope measure_growth_envelope(const BoundaryMeasure& mu);
GrowthEnvelope function_growth_envelope(const VertexFunction& f);
bool envelope_holds_measure(const BoundaryMeasure& mu, const GrowthEnvelope& env);
bool envelope_holds_function(const VertexFunction& f, const GrowthEnvelope& env);

/// Section map W: each vertex is assigned a depth-D leaf below it,
/// standing for a boundary point of its cylinder.
class SectionMap {
public:
    SectionMap(const Tree& tree, std::vector<int> leaf_per_vertex);
    static SectionMap leftmost(const Tree& tree);
    static SectionMap random(const Tree& tree, std::uint64_t seed);

    int leaf_for(int v) const;
    const Tree& tree() const { return *tree_; }

private:
    const Tree* tree_;
    std::vector<int> leaf_;
};

struct MuWSequence {
    std::vector<Complex> values;  // mu_{W,n}(p) for n = 0..n_max
    // theta < 1/(K_hat q_max), the regime with a convergence guarantee
    bool within_convergent_regime = true;
};

// mu_{W,n}(p) = sum_{d(o,v)=n} mu(Omega_o(v)) p(W(v)). For a cylinder
// function of level l the sequence is stationary for n >= l with value
// pair(mu, p), independently of W.
MuWSequence mu_w_extension(const BoundaryMeasure& mu, double theta,
                           const SectionMap& w, const CylinderFunction& p,
                           int n_max);

struct GrowthCrossReport {
    GrowthEnvelope function_envelope;  // fitted (B, G) of f
    GrowthEnvelope boundary_envelope;  // fitted (C, K) of the boundary value
    GrowthEnvelope implied_boundary;   // from (B, G) through the edge relation
    GrowthEnvelope implied_function;   // from (C, K) through propagation
    double rate_diagnostic = 0.0;      // (|z|+1) G max(1, 1/|z|) / |z^2-1|
    double max_compat_violation = 0.0;
    double root_condition_gap = 0.0;
};

// Moderate-growth diagnostics for an eigenfunction f: fits envelopes on f
// and on its boundary value beta_z(f), and derives the bound each side
// implies for the other. The implied envelopes are verified by full scan.
// Throws DomainError when f fails the eigen characterization at eigen_tol.
GrowthCrossReport mod_growth_crosscheck(Complex z, const VertexFunction& f,
                                        double eigen_tol = 1e-8);

}  // namespace treepoisson
