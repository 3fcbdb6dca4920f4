#pragma once

#include <span>
#include <vector>

#include "treepoisson/measure.hpp"

namespace treepoisson {

/// Complex-valued function on the truncated vertex set.
class VertexFunction {
public:
    VertexFunction(const Tree& tree, std::vector<Complex> values);
    static VertexFunction zero(const Tree& tree);

    Complex operator[](int v) const { return values_[v]; }
    Complex& operator[](int v) { return values_[v]; }
    std::span<const Complex> values() const { return values_; }
    const Tree& tree() const { return *tree_; }
    int size() const { return static_cast<int>(values_.size()); }
    double max_abs() const;

private:
    const Tree* tree_;
    std::vector<Complex> values_;
};

// chi(z)(x) = (z + q_x z^{-1})/(q_x + 1). At depth-D leaves the value uses
// the truncated degree and is not usable as a potential.
VertexFunction potential(const Tree& tree, Complex z);

// Neighbor average, defined where the whole neighborhood lies in the
// truncation (depth < D). Leaf slots are zero placeholders.
VertexFunction laplacian(const VertexFunction& f);

// P_z(mu)(x) = sum over leaf cylinders of z^{<x,omega>} mu(cylinder),
// exact for every vertex of the truncation.
VertexFunction poisson_transform(Complex z, const BoundaryMeasure& mu);

// (Delta - chi(z)) f at interior vertices; leaf slots are zero placeholders.
VertexFunction eigen_residual(const VertexFunction& f, Complex z);

// max over interior x of |(Delta - chi(z)) f(x)| / (1 + max |f| over the
// closed neighborhood of x): the scale-free form of the residual. The
// tolerance judged against it belongs to the caller.
double max_relative_eigen_residual(const VertexFunction& f, Complex z);

}  // namespace treepoisson
