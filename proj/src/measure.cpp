#include "treepoisson/measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "treepoisson/rng.hpp"

namespace treepoisson {

// ---------------------------------------------------------------- ClopenSet

ClopenSet::ClopenSet(const Tree& tree, std::vector<int> vertices) : tree_(&tree) {
    const int n = tree.vertex_count();
    std::vector<char> mark(n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= n) throw DomainError("clopen set: vertex id out of range");
        mark[v] = 1;
    }
    // Absorb cylinders contained in a marked ancestor's cylinder.
    for (int v = 0; v < n; ++v) {
        if (!mark[v]) continue;
        for (int a = tree.parent(v); a != -1; a = tree.parent(a)) {
            if (mark[a]) {
                mark[v] = 0;
                break;
            }
        }
    }
    // Merge complete sibling sets bottom-up (maximal representation).
    for (int d = tree.depth_cap(); d >= 1; --d) {
        for (int w : tree.vertices_at_depth(d - 1)) {
            const auto& cs = tree.children(w);
            if (cs.empty()) continue;
            bool all = true;
            for (int c : cs)
                if (!mark[c]) {
                    all = false;
                    break;
                }
            if (all) {
                for (int c : cs) mark[c] = 0;
                mark[w] = 1;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (mark[v]) antichain_.push_back(v);
}

ClopenSet ClopenSet::whole(const Tree& tree) { return ClopenSet(tree, {0}); }

ClopenSet ClopenSet::empty_set(const Tree& tree) { return ClopenSet(tree, {}); }

// --------------------------------------------------------- CylinderFunction

CylinderFunction::CylinderFunction(const Tree& tree, int level, std::vector<Complex> values)
    : tree_(&tree), level_(level), values_(std::move(values)) {
    if (level < 0 || level > tree.depth_cap())
        throw DomainError("cylinder function level out of range");
    if (values_.size() != tree.vertices_at_depth(level).size())
        throw DomainError("cylinder function needs one value per depth-" +
                          std::to_string(level) + " vertex");
}

CylinderFunction CylinderFunction::constant(const Tree& tree, int level, Complex c) {
    if (level < 0 || level > tree.depth_cap())
        throw DomainError("cylinder function level out of range");
    return CylinderFunction(tree, level,
                            std::vector<Complex>(tree.vertices_at_depth(level).size(), c));
}

CylinderFunction CylinderFunction::indicator(const ClopenSet& u, int level) {
    const Tree& tree = u.tree();
    for (int a : u.antichain())
        if (tree.depth(a) > level)
            throw DomainError("indicator level is too shallow for the antichain");
    std::vector<Complex> vals(tree.vertices_at_depth(level).size(), Complex{0.0, 0.0});
    for (int a : u.antichain())
        for (int v : tree.sphere(a, level - tree.depth(a)))
            vals[tree.level_index(v)] = Complex{1.0, 0.0};
    return CylinderFunction(tree, level, std::move(vals));
}

Complex CylinderFunction::value_at_vertex(int v) const {
    if (tree_->depth(v) != level_)
        throw DomainError("vertex " + std::to_string(v) + " is not at the function's level");
    return values_[tree_->level_index(v)];
}

Complex CylinderFunction::value_at_leaf(int leaf) const {
    if (!tree_->is_leaf(leaf)) throw DomainError("not a depth-D leaf");
    return values_[tree_->level_index(tree_->ancestor_at_depth(leaf, level_))];
}

// ---------------------------------------------------------- BoundaryMeasure

BoundaryMeasure::BoundaryMeasure(const Tree& tree, std::vector<Complex> cylinder_values)
    : tree_(&tree), cyl_(std::move(cylinder_values)) {}

BoundaryMeasure BoundaryMeasure::from_leaf_values(const Tree& tree, std::vector<Complex> by_leaf) {
    const auto& leaves = tree.leaves();
    if (by_leaf.size() != leaves.size())
        throw DomainError("need one mass per depth-D leaf");
    std::vector<Complex> cyl(tree.vertex_count(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < leaves.size(); ++i) cyl[leaves[i]] = by_leaf[i];
    // Additivity cache, bottom-up: parent ids precede children.
    for (int v = tree.vertex_count() - 1; v >= 1; --v)
        if (!tree.is_leaf(v)) {
            Complex s{0.0, 0.0};
            for (int c : tree.children(v)) s += cyl[c];
            cyl[v] = s;
        }
    if (tree.depth_cap() > 0) {
        Complex s{0.0, 0.0};
        for (int c : tree.children(0)) s += cyl[c];
        cyl[0] = s;
    }
    return BoundaryMeasure(tree, std::move(cyl));
}

BoundaryMeasure BoundaryMeasure::from_leaf_masses(const Tree& tree,
                                                  const std::map<int, Complex>& masses) {
    for (const auto& [v, m] : masses) {
        (void)m;
        if (v < 0 || v >= tree.vertex_count() || !tree.is_leaf(v))
            throw DomainError("mass assigned to non-leaf id " + std::to_string(v));
    }
    std::vector<Complex> by_leaf;
    by_leaf.reserve(tree.leaves().size());
    for (int leaf : tree.leaves()) {
        auto it = masses.find(leaf);
        if (it == masses.end())
            throw DomainError("missing mass for leaf " + std::to_string(leaf));
        by_leaf.push_back(it->second);
    }
    return from_leaf_values(tree, std::move(by_leaf));
}

BoundaryMeasure BoundaryMeasure::dirac(const Tree& tree, int leaf) {
    if (leaf < 0 || leaf >= tree.vertex_count() || !tree.is_leaf(leaf))
        throw DomainError("dirac needs a depth-D leaf");
    std::vector<Complex> by_leaf(tree.leaves().size(), Complex{0.0, 0.0});
    by_leaf[tree.level_index(leaf)] = Complex{1.0, 0.0};
    return from_leaf_values(tree, std::move(by_leaf));
}

BoundaryMeasure BoundaryMeasure::rotation_invariant(const Tree& tree, int center) {
    if (!tree.is_regular()) throw DomainError("rotation invariant measure needs a regular tree");
    if (center < 0 || center >= tree.vertex_count()) throw DomainError("center out of range");
    const double q = static_cast<double>(tree.regular_q());
    std::vector<Complex> by_leaf;
    by_leaf.reserve(tree.leaves().size());
    for (int leaf : tree.leaves()) {
        // Mass of the leaf cylinder as seen from the center: the flow of the
        // edge parent(leaf) -> leaf. It points toward the center only when
        // the center is the leaf itself.
        double mass;
        if (leaf == center)
            mass = 1.0 - 1.0 / (q + 1.0);
        else
            mass = std::pow(q, -static_cast<double>(tree.distance(center, tree.parent(leaf)))) /
                   (q + 1.0);
        by_leaf.push_back(Complex{mass, 0.0});
    }
    return from_leaf_values(tree, std::move(by_leaf));
}

BoundaryMeasure BoundaryMeasure::random_uniform(const Tree& tree, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> order = tree.leaves();
    std::sort(order.begin(), order.end());
    std::vector<Complex> by_id(tree.vertex_count());
    for (int leaf : order) {
        const double re = rng.next_unit();
        const double im = rng.next_unit();
        by_id[leaf] = Complex{re, im};
    }
    std::vector<Complex> by_leaf;
    by_leaf.reserve(order.size());
    for (int leaf : tree.leaves()) by_leaf.push_back(by_id[leaf]);
    return from_leaf_values(tree, std::move(by_leaf));
}

Complex BoundaryMeasure::mass(int leaf) const {
    if (!tree_->is_leaf(leaf)) throw DomainError("not a depth-D leaf");
    return cyl_[leaf];
}

Complex BoundaryMeasure::cylinder(int v) const {
    if (v < 0 || v >= tree_->vertex_count()) throw DomainError("vertex id out of range");
    return cyl_[v];
}

Complex BoundaryMeasure::edge_flow(DirectedEdge e) const {
    const Tree& t = *tree_;
    if (e.from < 0 || e.from >= t.vertex_count() || e.to < 0 || e.to >= t.vertex_count())
        throw DomainError("edge endpoint out of range");
    if (t.parent(e.to) == e.from) return cyl_[e.to];
    if (t.parent(e.from) == e.to) return cyl_[0] - cyl_[e.from];  // comp2
    throw DomainError("not an edge of the tree");
}

Complex BoundaryMeasure::evaluate(const ClopenSet& u) const {
    if (&u.tree() != tree_) throw DomainError("clopen set belongs to a different tree");
    std::vector<Complex> terms;
    terms.reserve(u.antichain().size());
    for (int v : u.antichain()) terms.push_back(cyl_[v]);
    return pairwise_sum(terms);
}

Complex BoundaryMeasure::pair(const CylinderFunction& p) const {
    if (&p.tree() != tree_) throw DomainError("cylinder function belongs to a different tree");
    const auto& level = tree_->vertices_at_depth(p.level());
    std::vector<Complex> terms;
    terms.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i)
        terms.push_back(p.values()[i] * cyl_[level[i]]);
    return pairwise_sum(terms);
}

}  // namespace treepoisson
