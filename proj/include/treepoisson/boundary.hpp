#pragma once

#include <span>
#include <vector>

#include "treepoisson/poisson.hpp"

namespace treepoisson {

/// Candidate edge flow on the edges pointing away from o, indexed by the
/// child endpoint: vertex v != 0 stands for the edge parent(v) -> v.
/// Index 0 is unused and kept at zero.
class EdgeCoefficients {
public:
    EdgeCoefficients(const Tree& tree, std::vector<Complex> by_child);
    static EdgeCoefficients zero(const Tree& tree);
    // The flow induced by a measure, restricted to edges away from o.
    static EdgeCoefficients from_measure(const BoundaryMeasure& mu);

    Complex at_child(int v) const;
    std::span<const Complex> values() const { return coef_; }
    const Tree& tree() const { return *tree_; }

private:
    const Tree* tree_;
    std::vector<Complex> coef_;
};

// Throws NumericRegimeError unless z^2 is outside {0,1}.
void require_invertible_parameter(Complex z);

// Boundary value map: mu(e) = (z f(tau e) - f(iota e)) / ((z^2-1) z^{d(o,iota e)}).
EdgeCoefficients beta(Complex z, const VertexFunction& f);

struct EigenCharacterization {
    // max over interior non-root v of |mu(v) - sum of child edge flows|
    double max_compat_violation = 0.0;
    // |f(o) - sum of root edge flows|
    double root_condition_gap = 0.0;
};

// Both gaps vanish exactly when f solves (Delta - chi(z)) f = 0 on the
// truncation interior.
EigenCharacterization check_eigen_characterization(Complex z, const VertexFunction& f);

// max over edges away from o of |beta(z, P_z(mu))(e) - edge flow of mu|.
double roundtrip_measure(Complex z, const BoundaryMeasure& mu);

// The unique f with f(o) = value_at_root solving the beta relation
// forward, level by level.
VertexFunction reconstruct_function(Complex z, const EdgeCoefficients& flow,
                                    Complex value_at_root);

// |LHS - RHS| of the along-chain identity
//   f(x_k)/z^{m+k} = f(x_0)/z^{m+2k} + (z^2-1)/z^2 sum_j z^{2(j-k)} mu(x_j)
// with f = P_z(mu); the chain must point away from o. Needs z not in {-1,0,1}.
double chain_formula_residual(Complex z, const BoundaryMeasure& mu,
                              std::span<const int> chain);

// Estimates m_k = (z^2-q)/(z^2-1) z^{-(m+k)} sum_{y in S_k(x)} f(y) for
// k = 0..k_max; converges to mu(Omega_o(x)) at rate q/|z|^2 on a regular
// tree with q < |z|^2. Sums use the normalized values f(y)/z^{d(o,y)}.
std::vector<Complex> limit_recover_vertex(Complex z, const VertexFunction& f,
                                          int x, int k_max);

// Same limit for a clopen set: estimates over the depth-n slices of [o,U[,
// with the same constant (z^2-q)/(z^2-1).
std::vector<Complex> limit_recover_clopen(Complex z, const VertexFunction& f,
                                          const ClopenSet& u, int n_max);

}  // namespace treepoisson
