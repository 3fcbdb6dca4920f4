#include "treepoisson/poisson.hpp"

#include <algorithm>
#include <cmath>

namespace treepoisson {

VertexFunction::VertexFunction(const Tree& tree, std::vector<Complex> values)
    : tree_(&tree), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != tree.vertex_count())
        throw DomainError("vertex function needs one value per vertex");
}

VertexFunction VertexFunction::zero(const Tree& tree) {
    return VertexFunction(tree, std::vector<Complex>(tree.vertex_count(), Complex{0.0, 0.0}));
}

double VertexFunction::max_abs() const {
    double m = 0.0;
    for (const Complex& v : values_) m = std::max(m, std::abs(v));
    return m;
}

VertexFunction potential(const Tree& tree, Complex z) {
    if (z == Complex{0.0, 0.0}) throw NumericRegimeError("potential needs z != 0");
    std::vector<Complex> vals(tree.vertex_count());
    const Complex zinv = Complex{1.0, 0.0} / z;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        // truncated q_v; at depth-D leaves the value is a placeholder
        const double q = static_cast<double>(std::max(0, tree.branching(v)));
        vals[v] = (z + q * zinv) / (q + 1.0);
    }
    return VertexFunction(tree, std::move(vals));
}

VertexFunction laplacian(const VertexFunction& f) {
    const Tree& tree = f.tree();
    std::vector<Complex> vals(tree.vertex_count(), Complex{0.0, 0.0});
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (!tree.is_interior(v)) continue;
        Complex s{0.0, 0.0};
        if (v != 0) s += f[tree.parent(v)];
        for (int c : tree.children(v)) s += f[c];
        vals[v] = s / static_cast<double>(tree.degree(v));
    }
    return VertexFunction(tree, std::move(vals));
}

VertexFunction poisson_transform(Complex z, const BoundaryMeasure& mu) {
    if (z == Complex{0.0, 0.0}) throw NumericRegimeError("poisson transform needs z != 0");
    const Tree& tree = mu.tree();
    const int d_cap = tree.depth_cap();

    std::vector<Complex> z2pow(d_cap + 1), zinv(d_cap + 1);
    for (int d = 0; d <= d_cap; ++d) {
        z2pow[d] = pow_int(z, 2ll * d);
        zinv[d] = pow_int(z, -static_cast<long long>(d));
    }

    // Grouping the kernel sum by the depth of meet(x, leaf) turns the
    // transform into one ancestor-chain recursion over cylinder masses:
    //   h(o) = mu(Omega),  h(c) = h(parent) + (z^{2 depth(c)} - z^{2 depth(parent)}) mu(c),
    //   f(x) = z^{-depth(x)} h(x).
    std::vector<Complex> h(tree.vertex_count());
    std::vector<Complex> vals(tree.vertex_count());
    h[0] = mu.total();
    vals[0] = h[0];
    for (int v = 1; v < tree.vertex_count(); ++v) {
        const int d = tree.depth(v);
        h[v] = h[tree.parent(v)] + (z2pow[d] - z2pow[d - 1]) * mu.cylinder(v);
        vals[v] = zinv[d] * h[v];
    }
    return VertexFunction(tree, std::move(vals));
}

VertexFunction eigen_residual(const VertexFunction& f, Complex z) {
    const Tree& tree = f.tree();
    VertexFunction lap = laplacian(f);
    VertexFunction chi = potential(tree, z);
    std::vector<Complex> vals(tree.vertex_count(), Complex{0.0, 0.0});
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (tree.is_interior(v)) vals[v] = lap[v] - chi[v] * f[v];
    return VertexFunction(tree, std::move(vals));
}

double max_relative_eigen_residual(const VertexFunction& f, Complex z) {
    const Tree& tree = f.tree();
    VertexFunction res = eigen_residual(f, z);
    double worst = 0.0;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        if (!tree.is_interior(v)) continue;
        double local = std::abs(f[v]);
        if (v != 0) local = std::max(local, std::abs(f[tree.parent(v)]));
        for (int c : tree.children(v)) local = std::max(local, std::abs(f[c]));
        worst = std::max(worst, std::abs(res[v]) / (1.0 + local));
    }
    return worst;
}

}  // namespace treepoisson
