#include "doctest.h"

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "treepoisson/hoelder.hpp"
#include "treepoisson/rng.hpp"

using treepoisson::BoundaryMeasure;
using treepoisson::ClopenSet;
using treepoisson::Complex;
using treepoisson::CylinderFunction;
using treepoisson::DomainError;
using treepoisson::GrowthEnvelope;
using treepoisson::SectionMap;
using treepoisson::Tree;
using treepoisson::VertexFunction;

namespace {

CylinderFunction random_cylinder(const Tree& t, int level, std::uint64_t seed) {
    treepoisson::SplitMix64 rng(seed);
    std::vector<Complex> vals(t.vertices_at_depth(level).size());
    for (auto& v : vals) v = Complex{rng.next_unit(), rng.next_unit()};
    return CylinderFunction(t, level, vals);
}

// Branch point of the rays from `base` toward two leaves: the deepest of
// the pairwise meets (the tree median).
int branch_from(const Tree& t, int base, int l1, int l2) {
    const int a = t.meet(base, l1);
    const int b = t.meet(base, l2);
    const int c = t.meet(l1, l2);
    int best = a;
    if (t.depth(b) > t.depth(best)) best = b;
    if (t.depth(c) > t.depth(best)) best = c;
    return best;
}

}  // namespace

TEST_CASE("boundary distance") {
    Tree t = Tree::regular(2, 4);
    const auto& leaves = t.leaves();

    // leaves branching at the root
    int other = -1;
    for (int leaf : leaves)
        if (t.meet(leaves[0], leaf) == 0) {
            other = leaf;
            break;
        }
    CHECK(boundary_distance(t, 0.5, leaves[0], other) == 1.0);

    // branch at depth 3: siblings under one depth-3 parent
    const int deep = t.vertices_at_depth(3)[0];
    CHECK(boundary_distance(t, 0.5, t.children(deep)[0], t.children(deep)[1]) == 0.125);

    CHECK(boundary_distance(t, 0.5, leaves[0], leaves[0]) == 0.0);
    CHECK_THROWS_AS(boundary_distance(t, 1.5, leaves[0], other), DomainError);
    CHECK_THROWS_AS(boundary_distance(t, 0.5, 0, other), DomainError);
}

TEST_CASE("base point comparability of the metric") {
    Tree t = Tree::regular(2, 4);
    const double theta = 0.6;
    // every neighbor of o, plus one base two steps away
    std::vector<int> bases = t.children(0);
    bases.push_back(t.children(t.children(0)[1])[0]);
    for (int base : bases) {
        const double shift = std::pow(theta, static_cast<double>(t.depth(base)));
        for (int l1 : t.leaves())
            for (int l2 : t.leaves()) {
                if (l1 >= l2) continue;
                const double d_o = boundary_distance(t, theta, l1, l2);
                const double d_b = std::pow(
                    theta, static_cast<double>(t.distance(base, branch_from(t, base, l1, l2))));
                CHECK(d_o >= shift * d_b - 1e-15);
                CHECK(d_o <= d_b / shift + 1e-15);
            }
    }
}

TEST_CASE("lipschitz seminorm and norm closed forms") {
    Tree t = Tree::regular(2, 5);

    CHECK(lipschitz_seminorm(0.5, CylinderFunction::constant(t, 3, {2, 5})) == 0.0);
    CHECK(hoelder_norm(0.5, CylinderFunction::constant(t, 0, {1, 0})) == 1.0);

    // indicator of a depth-d cylinder: seminorm theta^{1-d}, norm 1 + theta^{1-d}
    for (double theta : {0.3, 0.5, 0.7}) {
        int v = 0;
        for (int d = 1; d <= 5; ++d) {
            v = t.children(v)[0];
            CylinderFunction ind = CylinderFunction::indicator(ClopenSet(t, {v}), 5);
            const double expect = std::pow(theta, 1.0 - static_cast<double>(d));
            CHECK(lipschitz_seminorm(theta, ind) == expect);
            CHECK(hoelder_norm(theta, ind) == 1.0 + expect);
        }
    }

    // d = 2, theta = 1/2: norm 1 + (1/2)^{-1} = 3, exactly
    const int v2 = t.children(t.children(0)[0])[0];
    CHECK(hoelder_norm(0.5, CylinderFunction::indicator(ClopenSet(t, {v2}), 5)) == 3.0);
}

TEST_CASE("seminorm equals the brute-force pairwise maximum") {
    Tree t = Tree::regular(2, 4);
    Tree irregular = Tree::from_parents(std::vector<std::pair<int, int>>{
        {1, 0}, {2, 0}, {3, 2}, {4, 1}, {5, 2}, {6, 1}, {7, 4}, {8, 6}, {9, 3}, {10, 5},
        {11, 3}, {12, 5}});
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CylinderFunction p = random_cylinder(t, 3, seed);
        CHECK(lipschitz_seminorm(0.45, p) == oracles::brute_seminorm(0.45, p));
        CylinderFunction q = random_cylinder(irregular, 2, seed + 100);
        CHECK(lipschitz_seminorm(0.45, q) == oracles::brute_seminorm(0.45, q));
    }

    // one instance near the oracle's stated size ceiling (192 vertices)
    Tree deep = Tree::regular(2, 6);
    CylinderFunction big = random_cylinder(deep, 6, 4711);
    CHECK(lipschitz_seminorm(0.37, big) == oracles::brute_seminorm(0.37, big));
}

TEST_CASE("triangle inequality for the norm") {
    Tree t = Tree::regular(2, 4);
    for (std::uint64_t seed : {5ull, 6ull, 7ull}) {
        CylinderFunction p = random_cylinder(t, 3, seed);
        CylinderFunction q = random_cylinder(t, 3, seed + 50);
        std::vector<Complex> sum(p.values().size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = p.values()[i] + q.values()[i];
        const double lhs = hoelder_norm(0.4, CylinderFunction(t, 3, sum));
        CHECK(lhs <= hoelder_norm(0.4, p) + hoelder_norm(0.4, q) + 1e-13);
    }
}

TEST_CASE("growth envelopes") {
    Tree t = Tree::regular(2, 6);

    // dirac: a_n = 1 at every level
    GrowthEnvelope dirac_env = measure_growth_envelope(BoundaryMeasure::dirac(t, t.leaves()[0]));
    CHECK(dirac_env.coeff == 1.0);
    CHECK(dirac_env.base == doctest::Approx(1.0).epsilon(1e-14));

    // rotation invariant: level maxima q^{1-n}/(q+1), fitted base below 1
    BoundaryMeasure rot = BoundaryMeasure::rotation_invariant(t, 0);
    GrowthEnvelope rot_env = measure_growth_envelope(rot);
    CHECK(rot_env.base <= 1.0);
    double expect_base = 0.0;
    for (int n = 1; n <= 6; ++n)
        expect_base = std::max(expect_base,
                               std::pow(std::pow(2.0, 1.0 - n) / 3.0, 1.0 / n));
    CHECK(rot_env.base == doctest::Approx(expect_base).epsilon(1e-12));
    CHECK(envelope_holds_measure(rot, rot_env));

    // zero measure convention
    BoundaryMeasure zero =
        BoundaryMeasure::from_leaf_values(t, std::vector<Complex>(t.leaves().size(), {0, 0}));
    GrowthEnvelope zero_env = measure_growth_envelope(zero);
    CHECK(zero_env.coeff == 0.0);
    CHECK(zero_env.base == 1.0);

    // constructed masses with |mu(v)| = 4^{depth} exactly: fitted base = 4
    const double target = 4.0;
    std::vector<Complex> cyl(t.vertex_count());
    cyl[0] = Complex{1, 0};
    // split mu(v) into child values of equal modulus target^{depth+1}
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.is_leaf(v)) continue;
        const auto& cs = t.children(v);
        const Complex m = cyl[v];
        const double want = std::pow(target, t.depth(v) + 1);
        if (cs.size() == 2) {
            // split in m's own frame so both children keep modulus `want`
            const double mod = std::abs(m);
            const Complex phase = m / mod;
            const double tshift = std::sqrt(want * want - mod * mod / 4.0);
            cyl[cs[0]] = phase * Complex{mod / 2.0, tshift};
            cyl[cs[1]] = phase * Complex{mod / 2.0, -tshift};
        } else {
            REQUIRE(cs.size() == 3);  // root of the q=2 tree, |m| = 1
            const double cos_a = (1.0 + want) / (2.0 * want);
            const double sin_a = std::sqrt(1.0 - cos_a * cos_a);
            cyl[cs[0]] = want * Complex{cos_a, sin_a};
            cyl[cs[1]] = want * Complex{cos_a, -sin_a};
            cyl[cs[2]] = Complex{1.0 - 2.0 * want * cos_a, 0};
        }
    }
    std::vector<Complex> by_leaf;
    for (int leaf : t.leaves()) by_leaf.push_back(cyl[leaf]);
    BoundaryMeasure grown = BoundaryMeasure::from_leaf_values(t, by_leaf);
    for (int v = 0; v < t.vertex_count(); ++v)
        CHECK(std::abs(grown.cylinder(v) - cyl[v]) <= 1e-9 * std::abs(cyl[v]));
    GrowthEnvelope grown_env = measure_growth_envelope(grown);
    CHECK(grown_env.base == doctest::Approx(target).epsilon(1e-9));
    CHECK(envelope_holds_measure(grown, grown_env));
}

TEST_CASE("function growth envelopes") {
    Tree t = Tree::regular(2, 6);
    const Complex z{2, 0};
    VertexFunction f = poisson_transform(z, BoundaryMeasure::dirac(t, t.leaves()[0]));
    GrowthEnvelope env = function_growth_envelope(f);
    CHECK(env.base == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(envelope_holds_function(f, env));

    VertexFunction one(t, std::vector<Complex>(t.vertex_count(), {1, 0}));
    GrowthEnvelope one_env = function_growth_envelope(one);
    CHECK(one_env.coeff == 1.0);
    CHECK(one_env.base == 1.0);

    // scaling moves the coefficient only
    std::vector<Complex> scaled(f.values().begin(), f.values().end());
    for (auto& x : scaled) x *= 1e6;
    GrowthEnvelope scaled_env = function_growth_envelope(VertexFunction(t, scaled));
    CHECK(scaled_env.base == doctest::Approx(env.base).epsilon(1e-12));
    CHECK(scaled_env.coeff == doctest::Approx(env.coeff * 1e6).epsilon(1e-12));
}

TEST_CASE("section maps and the mu_W extension") {
    Tree t = Tree::regular(2, 5);
    BoundaryMeasure mu = BoundaryMeasure::random_uniform(t, 90);

    SectionMap left = SectionMap::leftmost(t);
    SectionMap rnd = SectionMap::random(t, 17);
    for (int v = 0; v < t.vertex_count(); ++v) {
        CHECK(t.is_ancestor_or_equal(v, left.leaf_for(v)));
        CHECK(t.is_ancestor_or_equal(v, rnd.leaf_for(v)));
    }
    CHECK_THROWS_AS(SectionMap(t, std::vector<int>(t.vertex_count(), t.leaves()[0])),
                    DomainError);

    const double k_hat = measure_growth_envelope(mu).base;
    const double theta = 0.5 / (k_hat * t.q_max());
    REQUIRE(theta < 1.0);

    // stationary at the exact pairing from the function's level onward,
    // for any section map
    const int v0 = t.children(t.children(0)[0])[1];
    CylinderFunction ind = CylinderFunction::indicator(ClopenSet(t, {v0}), 3);
    for (const SectionMap& w : {left, rnd}) {
        auto seq = mu_w_extension(mu, theta, w, ind, t.depth_cap());
        CHECK(seq.within_convergent_regime);
        for (int n = 3; n <= t.depth_cap(); ++n)
            CHECK(std::abs(seq.values[n] - mu.cylinder(v0)) <=
                  1e-12 * (1.0 + std::abs(mu.cylinder(v0))));
    }

    // p = 1 gives the total mass at every n
    auto total_seq =
        mu_w_extension(mu, theta, left, CylinderFunction::constant(t, 0, {1, 0}), 4);
    for (const Complex& v : total_seq.values)
        CHECK(std::abs(v - mu.total()) <= 1e-12 * (1.0 + std::abs(mu.total())));

    // the W-difference bound (q_max+1) q_max^{n-1} C K^n ||p|| theta^n,
    // checked term by term
    CylinderFunction p = CylinderFunction::indicator(ClopenSet(t, {v0}), 4);
    auto seq_a = mu_w_extension(mu, theta, left, p, t.depth_cap());
    auto seq_b = mu_w_extension(mu, theta, rnd, p, t.depth_cap());
    const GrowthEnvelope env = measure_growth_envelope(mu);
    const double norm_p = hoelder_norm(theta, p);
    for (int n = 1; n <= t.depth_cap(); ++n) {
        const double bound = (t.q_max() + 1.0) * std::pow(t.q_max(), n - 1.0) * env.coeff *
                             std::pow(env.base, n) * norm_p * std::pow(theta, n);
        CHECK(std::abs(seq_a.values[n] - seq_b.values[n]) <= bound + 1e-12);
    }

    // consecutive terms obey the Cauchy bound
    // (q_max+1) q_max^n C K^{n+1} ||p|| theta^n
    for (int n = 0; n + 1 <= t.depth_cap(); ++n) {
        const double bound = (t.q_max() + 1.0) * std::pow(t.q_max(), n) * env.coeff *
                             std::pow(env.base, n + 1.0) * norm_p * std::pow(theta, n);
        CHECK(std::abs(seq_a.values[n] - seq_a.values[n + 1]) <= bound + 1e-12);
    }

    // out-of-regime thetas still return the sequence, flagged
    auto flagged = mu_w_extension(mu, 0.99, left, ind, 3);
    CHECK(!flagged.within_convergent_regime);
}

TEST_CASE("moderate growth crosscheck") {
    Tree t = Tree::regular(2, 6);
    const Complex z{2, 0};

    VertexFunction fd = poisson_transform(z, BoundaryMeasure::dirac(t, t.leaves()[0]));
    auto rep = mod_growth_crosscheck(z, fd);
    CHECK(rep.function_envelope.base == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.boundary_envelope.base == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(envelope_holds_function(fd, rep.implied_function));

    VertexFunction fr = poisson_transform(z, BoundaryMeasure::rotation_invariant(t, 0));
    auto rep_r = mod_growth_crosscheck(z, fr);
    CHECK(rep_r.boundary_envelope.base <= 1.0);
    CHECK(rep_r.function_envelope.coeff < 1e3);
    CHECK(rep_r.rate_diagnostic > 0.0);

    // scaling is carried by the coefficients only
    std::vector<Complex> scaled(fd.values().begin(), fd.values().end());
    for (auto& x : scaled) x *= 1e6;
    auto rep_s = mod_growth_crosscheck(z, VertexFunction(t, scaled));
    CHECK(rep_s.function_envelope.base ==
          doctest::Approx(rep.function_envelope.base).epsilon(1e-12));
    CHECK(rep_s.boundary_envelope.base ==
          doctest::Approx(rep.boundary_envelope.base).epsilon(1e-12));

    // non-eigenfunctions are rejected
    treepoisson::SplitMix64 rng(3);
    std::vector<Complex> rv(t.vertex_count());
    for (auto& x : rv) x = Complex{rng.next_unit(), rng.next_unit()};
    CHECK_THROWS_AS(mod_growth_crosscheck(z, VertexFunction(t, rv)), DomainError);
}

TEST_CASE("implied envelopes hold by full scan") {
    Tree t = Tree::regular(2, 6);
    for (Complex z : {Complex{2, 0}, Complex{1.3, 0.2}, Complex{0.5, 0.5}}) {
        BoundaryMeasure mu = BoundaryMeasure::random_uniform(t, 1234);
        VertexFunction f = poisson_transform(z, mu);
        auto rep = mod_growth_crosscheck(z, f);
        CHECK(envelope_holds_function(f, rep.function_envelope));
        CHECK(envelope_holds_function(f, rep.implied_function));

        // boundary side, scanned on the same beta-derived values the report
        // fitted: beta flow per child vertex, root flows summed at o
        treepoisson::EdgeCoefficients flow = beta(z, f);
        std::vector<Complex> cyl(flow.values().begin(), flow.values().end());
        Complex root_sum{0, 0};
        for (int c : t.children(0)) root_sum += flow.at_child(c);
        cyl[0] = root_sum;
        auto maxima = level_abs_maxima(t, cyl);
        CHECK(envelope_holds(maxima, rep.boundary_envelope));
        CHECK(envelope_holds(maxima, rep.implied_boundary));
    }
}
