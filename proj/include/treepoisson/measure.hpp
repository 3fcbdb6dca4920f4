#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "treepoisson/numeric.hpp"
#include "treepoisson/tree.hpp"

namespace treepoisson {

// Directed edge between adjacent vertices; from = iota(e), to = tau(e).
struct DirectedEdge {
    int from = 0;
    int to = 0;
    DirectedEdge opposite() const { return {to, from}; }
};

/// Finite union of cylinders Omega_o(v), stored as the canonical antichain:
/// no member is an ancestor of another and complete sibling sets are merged
/// into their parent, so the representation is maximal.
class ClopenSet {
public:
    // Canonicalizes the union of the cylinders of `vertices`.
    ClopenSet(const Tree& tree, std::vector<int> vertices);

    static ClopenSet whole(const Tree& tree);
    static ClopenSet empty_set(const Tree& tree);

    const std::vector<int>& antichain() const { return antichain_; }  // ascending ids
    bool is_empty() const { return antichain_.empty(); }
    const Tree& tree() const { return *tree_; }

private:
    const Tree* tree_;
    std::vector<int> antichain_;
};

/// Locally constant boundary function with one value per depth-`level`
/// vertex (constant on each cylinder at that level).
class CylinderFunction {
public:
    // `values` aligned with tree.vertices_at_depth(level).
    CylinderFunction(const Tree& tree, int level, std::vector<Complex> values);

    static CylinderFunction constant(const Tree& tree, int level, Complex c);
    // Needs level >= depth of every antichain member.
    static CylinderFunction indicator(const ClopenSet& u, int level);

    int level() const { return level_; }
    Complex value_at_vertex(int v) const;  // v at depth level()
    Complex value_at_leaf(int leaf) const; // value of the level-l ancestor
    std::span<const Complex> values() const { return values_; }
    const Tree& tree() const { return *tree_; }

private:
    const Tree* tree_;
    int level_;
    std::vector<Complex> values_;
};

/// Finitely additive boundary measure, determined by its masses on the
/// depth-D leaf cylinders. mu(Omega_o(v)) is cached for every vertex by
/// bottom-up summation, so additivity holds by construction and the
/// induced edge flow satisfies both compatibility conditions.
class BoundaryMeasure {
public:
    static BoundaryMeasure from_leaf_masses(const Tree& tree,
                                            const std::map<int, Complex>& masses);
    // `by_leaf` aligned with tree.leaves().
    static BoundaryMeasure from_leaf_values(const Tree& tree, std::vector<Complex> by_leaf);

    static BoundaryMeasure dirac(const Tree& tree, int leaf);
    // Rotation invariant measure around `center` on a regular tree:
    // flow q^{-d(center, iota(e))}/(q+1) on edges pointing away from center.
    static BoundaryMeasure rotation_invariant(const Tree& tree, int center);
    // Masses i.i.d. uniform on the complex unit square, drawn re-then-im
    // per leaf in ascending leaf id order from SplitMix64(seed).
    static BoundaryMeasure random_uniform(const Tree& tree, std::uint64_t seed);

    const Tree& tree() const { return *tree_; }
    Complex mass(int leaf) const;
    Complex cylinder(int v) const;  // mu(Omega_o(v))
    Complex total() const { return cyl_[0]; }
    std::span<const Complex> cylinders() const { return cyl_; }

    Complex edge_flow(DirectedEdge e) const;
    Complex evaluate(const ClopenSet& u) const;
    Complex pair(const CylinderFunction& p) const;

private:
    BoundaryMeasure(const Tree& tree, std::vector<Complex> cylinder_values);

    const Tree* tree_;
    std::vector<Complex> cyl_;  // indexed by vertex id
};

}  // namespace treepoisson
