#include "treepoisson/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace treepoisson {

EdgeCoefficients::EdgeCoefficients(const Tree& tree, std::vector<Complex> by_child)
    : tree_(&tree), coef_(std::move(by_child)) {
    if (static_cast<int>(coef_.size()) != tree.vertex_count())
        throw DomainError("edge coefficients need one value per non-root vertex");
    coef_[0] = Complex{0.0, 0.0};
}

EdgeCoefficients EdgeCoefficients::zero(const Tree& tree) {
    return EdgeCoefficients(tree, std::vector<Complex>(tree.vertex_count(), Complex{0.0, 0.0}));
}

EdgeCoefficients EdgeCoefficients::from_measure(const BoundaryMeasure& mu) {
    std::vector<Complex> coef(mu.cylinders().begin(), mu.cylinders().end());
    coef[0] = Complex{0.0, 0.0};
    return EdgeCoefficients(mu.tree(), std::move(coef));
}

Complex EdgeCoefficients::at_child(int v) const {
    if (v < 1 || v >= tree_->vertex_count())
        throw DomainError("no edge toward vertex " + std::to_string(v));
    return coef_[v];
}

void require_invertible_parameter(Complex z) {
    if (z == Complex{0.0, 0.0} || z * z == Complex{1.0, 0.0})
        throw NumericRegimeError("parameter z with z^2 in {0,1} is not invertible");
}

EdgeCoefficients beta(Complex z, const VertexFunction& f) {
    require_invertible_parameter(z);
    const Tree& tree = f.tree();
    const Complex factor = z * z - Complex{1.0, 0.0};
    std::vector<Complex> den(tree.depth_cap() + 1);
    for (int d = 0; d <= tree.depth_cap(); ++d) den[d] = factor * pow_int(z, d);
    std::vector<Complex> coef(tree.vertex_count(), Complex{0.0, 0.0});
    for (int v = 1; v < tree.vertex_count(); ++v) {
        const int p = tree.parent(v);
        coef[v] = (z * f[v] - f[p]) / den[tree.depth(p)];
    }
    return EdgeCoefficients(tree, std::move(coef));
}

EigenCharacterization check_eigen_characterization(Complex z, const VertexFunction& f) {
    const Tree& tree = f.tree();
    EdgeCoefficients mu = beta(z, f);
    EigenCharacterization rep;
    for (int v = 1; v < tree.vertex_count(); ++v) {
        if (!tree.is_interior(v)) continue;
        Complex child_sum{0.0, 0.0};
        for (int c : tree.children(v)) child_sum += mu.at_child(c);
        rep.max_compat_violation =
            std::max(rep.max_compat_violation, std::abs(mu.at_child(v) - child_sum));
    }
    Complex root_sum{0.0, 0.0};
    for (int c : tree.children(0)) root_sum += mu.at_child(c);
    rep.root_condition_gap = std::abs(f[0] - root_sum);
    return rep;
}

double roundtrip_measure(Complex z, const BoundaryMeasure& mu) {
    require_invertible_parameter(z);
    EdgeCoefficients back = beta(z, poisson_transform(z, mu));
    double worst = 0.0;
    for (int v = 1; v < mu.tree().vertex_count(); ++v)
        worst = std::max(worst, std::abs(back.at_child(v) - mu.cylinder(v)));
    return worst;
}

VertexFunction reconstruct_function(Complex z, const EdgeCoefficients& flow,
                                    Complex value_at_root) {
    require_invertible_parameter(z);
    const Tree& tree = flow.tree();
    const Complex factor = z * z - Complex{1.0, 0.0};
    std::vector<Complex> zpow(tree.depth_cap() + 1);
    for (int d = 0; d <= tree.depth_cap(); ++d) zpow[d] = pow_int(z, d);
    std::vector<Complex> vals(tree.vertex_count());
    vals[0] = value_at_root;
    for (int v = 1; v < tree.vertex_count(); ++v) {
        const int p = tree.parent(v);
        vals[v] = (vals[p] + factor * zpow[tree.depth(p)] * flow.at_child(v)) / z;
    }
    return VertexFunction(tree, std::move(vals));
}

double chain_formula_residual(Complex z, const BoundaryMeasure& mu,
                              std::span<const int> chain) {
    if (z == Complex{0.0, 0.0} || z == Complex{1.0, 0.0} || z == Complex{-1.0, 0.0})
        throw NumericRegimeError("chain formula needs z outside {-1,0,1}");
    if (chain.empty()) throw DomainError("empty chain");
    const Tree& tree = mu.tree();
    for (std::size_t j = 1; j < chain.size(); ++j)
        if (tree.parent(chain[j]) != chain[j - 1])
            throw DomainError("chain must follow child edges away from o");
    const int m = tree.depth(chain.front());
    const int k = static_cast<int>(chain.size()) - 1;

    VertexFunction f = poisson_transform(z, mu);
    const Complex lhs = f[chain.back()] * pow_int(z, -static_cast<long long>(m + k));
    std::vector<Complex> terms;
    terms.reserve(chain.size());
    for (int j = 1; j <= k; ++j)
        terms.push_back(pow_int(z, 2ll * (j - k)) * mu.cylinder(chain[j]));
    const Complex rhs = f[chain.front()] * pow_int(z, -static_cast<long long>(m + 2 * k)) +
                        (z * z - Complex{1.0, 0.0}) / (z * z) * pairwise_sum(terms);
    return std::abs(lhs - rhs);
}

namespace {

// (z^2-q)/(z^2-1) together with the regime checks shared by the limits.
Complex recovery_constant(Complex z, const Tree& tree) {
    if (!tree.is_regular())
        throw DomainError("limit recovery is proved for regular trees only");
    const double q = static_cast<double>(tree.regular_q());
    if (q >= std::norm(z))
        throw NumericRegimeError("limit recovery needs q < |z|^2");
    return (z * z - q) / (z * z - Complex{1.0, 0.0});
}

}  // namespace

std::vector<Complex> limit_recover_vertex(Complex z, const VertexFunction& f, int x,
                                          int k_max) {
    const Tree& tree = f.tree();
    const Complex c = recovery_constant(z, tree);
    if (x <= 0 || x >= tree.vertex_count())
        throw DomainError("limit recovery needs a vertex x != o");
    if (k_max < 0 || tree.depth(x) + k_max > tree.depth_cap())
        throw DomainError("k_max overflows the truncation");
    const int m = tree.depth(x);
    std::vector<Complex> estimates;
    estimates.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        const Complex scale = pow_int(z, -static_cast<long long>(m + k));
        std::vector<Complex> terms;
        for (int y : tree.sphere(x, k)) terms.push_back(f[y] * scale);
        estimates.push_back(c * pairwise_sum(terms));
    }
    return estimates;
}

std::vector<Complex> limit_recover_clopen(Complex z, const VertexFunction& f,
                                          const ClopenSet& u, int n_max) {
    const Tree& tree = f.tree();
    if (&u.tree() != &tree) throw DomainError("clopen set belongs to a different tree");
    const Complex c = recovery_constant(z, tree);
    if (n_max < 0 || n_max > tree.depth_cap())
        throw DomainError("n_max overflows the truncation");

    // [o,U[ = ancestors and descendants of the antichain members.
    std::vector<char> on_ray(tree.vertex_count(), 0);
    for (int a : u.antichain()) {
        for (int v = a; v != -1; v = tree.parent(v)) on_ray[v] = 1;
        std::vector<int> stack{a};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            on_ray[v] = 1;
            for (int ch : tree.children(v)) stack.push_back(ch);
        }
    }

    std::vector<Complex> estimates;
    estimates.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const Complex scale = pow_int(z, -static_cast<long long>(n));
        std::vector<Complex> terms;
        for (int v : tree.vertices_at_depth(n))
            if (on_ray[v]) terms.push_back(f[v] * scale);
        estimates.push_back(c * pairwise_sum(terms));
    }
    return estimates;
}

}  // namespace treepoisson
