#include "treepoisson/hoelder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "treepoisson/rng.hpp"

namespace treepoisson {

namespace {

void require_theta(double theta) {
    if (!(theta > 0.0) || !(theta < 1.0))
        throw DomainError("theta must lie in (0,1)");
}

}  // namespace

double boundary_distance(const Tree& tree, double theta, int leaf1, int leaf2) {
    require_theta(theta);
    if (!tree.is_leaf(leaf1) || !tree.is_leaf(leaf2))
        throw DomainError("boundary distance needs depth-D leaves");
    if (leaf1 == leaf2) return 0.0;  // same cylinder; true distances are <= theta^D
    return std::pow(theta, static_cast<double>(tree.depth(tree.meet(leaf1, leaf2))));
}

double lipschitz_seminorm(double theta, const CylinderFunction& p) {
    require_theta(theta);
    const Tree& tree = p.tree();
    const auto& level = tree.vertices_at_depth(p.level());
    const int count = static_cast<int>(level.size());
    if (count < 2) return 0.0;

    std::vector<double> weight(p.level());
    for (int c = 0; c < p.level(); ++c) weight[c] = std::pow(theta, -static_cast<double>(c));

    // Levels are in planar order, so the meet depth of u_i, u_j is the
    // minimum of the consecutive meet depths between them.
    std::vector<int> gap(count - 1);
    for (int i = 0; i + 1 < count; ++i) gap[i] = tree.depth(tree.meet(level[i], level[i + 1]));

    double best = 0.0;
    const auto vals = p.values();
    for (int i = 0; i < count; ++i) {
        int c_min = p.level();
        for (int j = i + 1; j < count; ++j) {
            c_min = std::min(c_min, gap[j - 1]);
            best = std::max(best, std::abs(vals[i] - vals[j]) * weight[c_min]);
        }
    }
    return best;
}

double hoelder_norm(double theta, const CylinderFunction& p) {
    double sup = 0.0;
    for (const Complex& v : p.values()) sup = std::max(sup, std::abs(v));
    return lipschitz_seminorm(theta, p) + sup;
}

std::vector<double> level_abs_maxima(const Tree& tree, std::span<const Complex> by_vertex) {
    if (static_cast<int>(by_vertex.size()) != tree.vertex_count())
        throw DomainError("need one value per vertex");
    std::vector<double> maxima(tree.depth_cap() + 1, 0.0);
    for (int v = 0; v < tree.vertex_count(); ++v)
        maxima[tree.depth(v)] = std::max(maxima[tree.depth(v)], std::abs(by_vertex[v]));
    return maxima;
}

bool envelope_holds(std::span<const double> level_maxima, const GrowthEnvelope& env) {
    for (std::size_t n = 0; n < level_maxima.size(); ++n)
        if (level_maxima[n] > env.coeff * std::pow(env.base, static_cast<double>(n)))
            return false;
    return true;
}

GrowthEnvelope fit_envelope(std::span<const double> level_maxima) {
    bool all_zero = true;
    for (double a : level_maxima)
        if (a != 0.0) all_zero = false;
    if (all_zero) return {0.0, 1.0};

    GrowthEnvelope env;
    env.coeff = std::max(level_maxima[0], 1.0);
    env.base = 0.0;
    for (std::size_t n = 1; n < level_maxima.size(); ++n)
        if (level_maxima[n] > 0.0)
            env.base = std::max(env.base,
                                std::pow(level_maxima[n] / env.coeff, 1.0 / static_cast<double>(n)));
    if (env.base == 0.0) env.base = 1.0;
    // The n-th roots can round below the data by an ulp; nudge until the
    // envelope verifiably holds.
    for (int guard = 0; guard < 64 && !envelope_holds(level_maxima, env); ++guard)
        env.base = std::nextafter(env.base * (1.0 + 1e-15), std::numeric_limits<double>::infinity());
    return env;
}

GrowthEnvelope measure_growth_envelope(const BoundaryMeasure& mu) {
    return fit_envelope(level_abs_maxima(mu.tree(), mu.cylinders()));
}

GrowthEnvelope function_growth_envelope(const VertexFunction& f) {
    return fit_envelope(level_abs_maxima(f.tree(), f.values()));
}

bool envelope_holds_measure(const BoundaryMeasure& mu, const GrowthEnvelope& env) {
    return envelope_holds(level_abs_maxima(mu.tree(), mu.cylinders()), env);
}

bool envelope_holds_function(const VertexFunction& f, const GrowthEnvelope& env) {
    return envelope_holds(level_abs_maxima(f.tree(), f.values()), env);
}

// ---------------------------------------------------------------- SectionMap

SectionMap::SectionMap(const Tree& tree, std::vector<int> leaf_per_vertex)
    : tree_(&tree), leaf_(std::move(leaf_per_vertex)) {
    if (static_cast<int>(leaf_.size()) != tree.vertex_count())
        throw DomainError("section map needs one leaf per vertex");
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (!tree.is_leaf(leaf_[v]) || !tree.is_ancestor_or_equal(v, leaf_[v]))
            throw DomainError("section of vertex " + std::to_string(v) +
                              " is not a leaf below it");
}

SectionMap SectionMap::leftmost(const Tree& tree) {
    std::vector<int> leaf(tree.vertex_count());
    for (int v = tree.vertex_count() - 1; v >= 0; --v)
        leaf[v] = tree.is_leaf(v) ? v : leaf[tree.children(v).front()];
    return SectionMap(tree, std::move(leaf));
}

SectionMap SectionMap::random(const Tree& tree, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> leaf(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v) {
        int cur = v;
        while (!tree.is_leaf(cur)) {
            const auto& cs = tree.children(cur);
            cur = cs[static_cast<std::size_t>(rng.next() % cs.size())];
        }
        leaf[v] = cur;
    }
    return SectionMap(tree, std::move(leaf));
}

int SectionMap::leaf_for(int v) const {
    if (v < 0 || v >= tree_->vertex_count()) throw DomainError("vertex id out of range");
    return leaf_[v];
}

MuWSequence mu_w_extension(const BoundaryMeasure& mu, double theta, const SectionMap& w,
                           const CylinderFunction& p, int n_max) {
    require_theta(theta);
    const Tree& tree = mu.tree();
    if (&w.tree() != &tree || &p.tree() != &tree)
        throw DomainError("section map and cylinder function must share the measure's tree");
    if (n_max < 0 || n_max > tree.depth_cap())
        throw DomainError("n_max overflows the truncation");

    MuWSequence out;
    const GrowthEnvelope env = measure_growth_envelope(mu);
    if (tree.q_max() >= 1)
        out.within_convergent_regime = theta < 1.0 / (env.base * tree.q_max());
    out.values.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Complex> terms;
        for (int v : tree.vertices_at_depth(n))
            terms.push_back(mu.cylinder(v) * p.value_at_leaf(w.leaf_for(v)));
        out.values.push_back(pairwise_sum(terms));
    }
    return out;
}

// ------------------------------------------------------ mod-growth crosscheck

namespace {

GrowthEnvelope nudge_until_holds(GrowthEnvelope env, std::span<const double> maxima) {
    for (int guard = 0; guard < 64 && !envelope_holds(maxima, env); ++guard)
        env.coeff = std::nextafter(env.coeff * (1.0 + 1e-15),
                                   std::numeric_limits<double>::infinity());
    return env;
}

}  // namespace

GrowthCrossReport mod_growth_crosscheck(Complex z, const VertexFunction& f, double eigen_tol) {
    require_invertible_parameter(z);
    const Tree& tree = f.tree();

    GrowthCrossReport rep;
    const EigenCharacterization eig = check_eigen_characterization(z, f);
    rep.max_compat_violation = eig.max_compat_violation;
    rep.root_condition_gap = eig.root_condition_gap;
    if (eig.max_compat_violation + eig.root_condition_gap > eigen_tol * (1.0 + f.max_abs()))
        throw DomainError("mod_growth_crosscheck: f is not in the eigen space at this tolerance");

    // Boundary value as per-vertex cylinder masses: mu(v) = beta coefficient,
    // mu(o) = sum of root flows (= f(o) up to the checked gap).
    EdgeCoefficients flow = beta(z, f);
    std::vector<Complex> cyl(flow.values().begin(), flow.values().end());
    Complex root_sum{0.0, 0.0};
    for (int c : tree.children(0)) root_sum += flow.at_child(c);
    cyl[0] = root_sum;

    const std::vector<double> a = level_abs_maxima(tree, cyl);
    const std::vector<double> b = level_abs_maxima(tree, f.values());
    rep.boundary_envelope = fit_envelope(a);
    rep.function_envelope = fit_envelope(b);

    const double mz = std::abs(z);
    const double factor = std::abs(z * z - Complex{1.0, 0.0});
    const double B = rep.function_envelope.coeff;
    const double G = rep.function_envelope.base;
    const double C = rep.boundary_envelope.coeff;
    const double K = rep.boundary_envelope.base;

    rep.rate_diagnostic = (mz + 1.0) * G * std::max(1.0, 1.0 / mz) / factor;

    // |mu(v)| at depth n is bounded through the edge relation by
    // B G^{n-1} (|z| G + 1) / (factor |z|^{n-1}).
    {
        GrowthEnvelope imp;
        imp.base = G / mz;
        const double c_raw = B * (mz * G + 1.0) / factor;
        imp.coeff = std::max(c_raw * std::max(1.0, 1.0 / imp.base), B);
        rep.implied_boundary = nudge_until_holds(imp, a);
    }
    // |f(x_n)| <= C |z|^{-n} + factor C |z|^{-n-1} sum_{j=1}^n (K |z|^2)^j
    // by forward propagation; divide by the growth base per level.
    {
        GrowthEnvelope imp;
        imp.base = std::max(1.0 / mz, K * mz);
        const double rho = K * mz * mz;
        double running = 0.0;  // sum of rho^j
        double rho_j = 1.0;
        double coeff = C;  // n = 0 term
        for (int n = 1; n <= tree.depth_cap(); ++n) {
            rho_j *= rho;
            running += rho_j;
            const double bound = C * std::pow(mz, -static_cast<double>(n)) +
                                 factor * C * std::pow(mz, -static_cast<double>(n + 1)) * running;
            coeff = std::max(coeff, bound / std::pow(imp.base, static_cast<double>(n)));
        }
        imp.coeff = coeff;
        rep.implied_function = nudge_until_holds(imp, b);
    }
    return rep;
}

}  // namespace treepoisson
