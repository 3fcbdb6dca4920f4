#pragma once

#include <span>
#include <utility>
#include <vector>

#include "treepoisson/errors.hpp"

namespace treepoisson {

/// Rooted bounded-degree tree truncated at depth D.
///
/// Vertex 0 is the base point o and ids are topological (parent(v) < v).
/// Every vertex at depth < D has at least one child, so the truncation
/// determines the branching of any infinite extension up to depth D and
/// each depth-D leaf stands for a nonempty boundary cylinder. All queries
/// are pure; a Tree never changes after construction.
class Tree {
public:
    static constexpr int kDefaultVertexLimit = 1 << 22;

    // Regular tree of degree q+1: the root has q+1 children, every other
    // interior vertex has q. Throws DomainError when the vertex count
    // would exceed `vertex_limit`.
    static Tree regular(int q, int depth, int vertex_limit = kDefaultVertexLimit);

    // Build from (child, parent) pairs with ids 0..n-1. Rejects ids out of
    // range, duplicate children, parent >= child, and interior leaves
    // (childless vertices above the maximal depth).
    static Tree from_parents(std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int depth_cap() const { return depth_cap_; }  // D

    int parent(int v) const { return parent_[check(v)]; }  // -1 at the root
    const std::vector<int>& children(int v) const { return children_[check(v)]; }
    int depth(int v) const { return depth_[check(v)]; }

    // Neighbors inside the truncation. Exact for depth < D; a depth-D leaf
    // reports 1 although its true degree is unknowable from the truncation.
    int degree(int v) const;
    int branching(int v) const { return degree(v) - 1; }  // q_v
    int q_max() const { return q_max_; }                  // over interior vertices

    bool is_leaf(int v) const { return depth(v) == depth_cap_; }
    bool is_interior(int v) const { return depth(v) < depth_cap_; }

    // Levels in planar (left-to-right) order; leaves() is the depth-D level.
    const std::vector<int>& vertices_at_depth(int n) const;
    const std::vector<int>& leaves() const { return levels_.back(); }
    int level_index(int v) const { return level_index_[check(v)]; }

    bool is_regular() const { return regular_q_ > 0; }
    int regular_q() const;  // throws DomainError on irregular trees

    bool is_ancestor_or_equal(int a, int v) const;
    int ancestor_at_depth(int v, int n) const;
    int meet(int x, int y) const;  // deepest common ancestor
    int distance(int x, int y) const;

    // <x, omega> = d(o,y) - d(x,y) with y the branch point of the rays to
    // omega; constant over the cylinder of `leaf` since depth(leaf) = D.
    int horocycle_bracket(int x, int leaf) const;

    // S_k(x): vertices at distance k from x away from o.
    std::vector<int> sphere(int x, int k) const;

private:
    Tree() = default;
    void finish();  // derive depths, levels, q_max, regularity
    int check(int v) const;

    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<int> level_index_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> levels_;
    int depth_cap_ = 0;
    int q_max_ = 0;
    int regular_q_ = 0;  // 0 when not regular
};

}  // namespace treepoisson
