#include "treepoisson/tree.hpp"

#include <algorithm>
#include <string>

namespace treepoisson {

int Tree::check(int v) const {
    if (v < 0 || v >= vertex_count())
        throw DomainError("vertex id " + std::to_string(v) + " out of range");
    return v;
}

Tree Tree::regular(int q, int depth, int vertex_limit) {
    if (q < 1) throw DomainError("regular tree needs q >= 1");
    if (depth < 1) throw DomainError("regular tree needs depth >= 1");
    Tree t;
    t.parent_.push_back(-1);
    int level_begin = 0;
    int level_end = 1;
    for (int d = 1; d <= depth; ++d) {
        const int per_vertex = (d == 1) ? q + 1 : q;
        for (int v = level_begin; v < level_end; ++v) {
            for (int c = 0; c < per_vertex; ++c) {
                if (static_cast<int>(t.parent_.size()) >= vertex_limit)
                    throw DomainError("vertex capacity exceeded");
                t.parent_.push_back(v);
            }
        }
        level_begin = level_end;
        level_end = static_cast<int>(t.parent_.size());
    }
    t.finish();
    return t;
}

Tree Tree::from_parents(std::span<const std::pair<int, int>> edges) {
    const int n = static_cast<int>(edges.size()) + 1;
    Tree t;
    t.parent_.assign(n, -2);
    t.parent_[0] = -1;
    for (const auto& [child, parent] : edges) {
        if (child < 1 || child >= n)
            throw DomainError("malformed child id " + std::to_string(child));
        if (parent < 0 || parent >= n)
            throw DomainError("malformed parent id " + std::to_string(parent));
        if (parent >= child)
            throw DomainError("forward parent: parent(" + std::to_string(child) +
                              ") = " + std::to_string(parent));
        if (t.parent_[child] != -2)
            throw DomainError("duplicate child id " + std::to_string(child));
        t.parent_[child] = parent;
    }
    t.finish();
    return t;
}

void Tree::finish() {
    const int n = vertex_count();
    depth_.assign(n, 0);
    children_.assign(n, {});
    for (int v = 1; v < n; ++v) {
        depth_[v] = depth_[parent_[v]] + 1;
        children_[parent_[v]].push_back(v);
    }
    depth_cap_ = n == 1 ? 0 : *std::max_element(depth_.begin(), depth_.end());
    for (int v = 0; v < n; ++v)
        if (depth_[v] < depth_cap_ && children_[v].empty())
            throw DomainError("interior leaf: vertex " + std::to_string(v) + " at depth " +
                              std::to_string(depth_[v]) + " has no children");

    // Planar level order: DFS with children in list order.
    levels_.assign(depth_cap_ + 1, {});
    level_index_.assign(n, 0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        level_index_[v] = static_cast<int>(levels_[depth_[v]].size());
        levels_[depth_[v]].push_back(v);
        for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it)
            stack.push_back(*it);
    }

    q_max_ = 0;
    for (int v = 0; v < n; ++v)
        if (is_interior(v)) q_max_ = std::max(q_max_, branching(v));

    regular_q_ = 0;
    if (depth_cap_ >= 1) {
        const int q = static_cast<int>(children_[0].size()) - 1;
        bool regular = q >= 1;
        for (int v = 1; v < n && regular; ++v)
            if (is_interior(v) && static_cast<int>(children_[v].size()) != q) regular = false;
        if (regular) regular_q_ = q;
    }
}

int Tree::degree(int v) const {
    check(v);
    const int toward_root = v == 0 ? 0 : 1;
    return static_cast<int>(children_[v].size()) + toward_root;
}

const std::vector<int>& Tree::vertices_at_depth(int n) const {
    if (n < 0 || n > depth_cap_) throw DomainError("depth " + std::to_string(n) + " out of range");
    return levels_[n];
}

int Tree::regular_q() const {
    if (!is_regular()) throw DomainError("tree is not regular");
    return regular_q_;
}

bool Tree::is_ancestor_or_equal(int a, int v) const {
    check(a);
    check(v);
    while (depth_[v] > depth_[a]) v = parent_[v];
    return v == a;
}

int Tree::ancestor_at_depth(int v, int n) const {
    check(v);
    if (n < 0 || n > depth_[v])
        throw DomainError("no ancestor of " + std::to_string(v) + " at depth " + std::to_string(n));
    while (depth_[v] > n) v = parent_[v];
    return v;
}

int Tree::meet(int x, int y) const {
    check(x);
    check(y);
    while (depth_[x] > depth_[y]) x = parent_[x];
    while (depth_[y] > depth_[x]) y = parent_[y];
    while (x != y) {
        x = parent_[x];
        y = parent_[y];
    }
    return x;
}

int Tree::distance(int x, int y) const {
    return depth_[check(x)] + depth_[check(y)] - 2 * depth_[meet(x, y)];
}

int Tree::horocycle_bracket(int x, int leaf) const {
    check(x);
    if (!is_leaf(leaf)) throw DomainError("horocycle bracket needs a depth-D leaf");
    return 2 * depth_[meet(x, leaf)] - depth_[x];
}

std::vector<int> Tree::sphere(int x, int k) const {
    check(x);
    if (k < 0 || depth_[x] + k > depth_cap_)
        throw DomainError("sphere radius " + std::to_string(k) + " overflows the truncation");
    std::vector<int> frontier{x};
    for (int step = 0; step < k; ++step) {
        std::vector<int> next;
        for (int v : frontier)
            for (int c : children_[v]) next.push_back(c);
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace treepoisson
