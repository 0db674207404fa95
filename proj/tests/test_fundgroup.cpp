#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "curvemono/fundgroup.hpp"
#include "testutil.hpp"

using namespace curvemono;

namespace {

struct WorkedSetup {
    BivariatePolynomial f = testutil::worked_curve();
    Configuration cfg = configure(discriminant_points(f).points, 1.0 / 2.1);
    SpanningTree pinned = testutil::pinned_worked_tree(cfg);
};

std::vector<Permutation> worked_generators(const WorkedSetup& w) {
    auto loops = build_initial_loops(w.cfg, w.pinned);
    auto table = monodromy(w.f, w.cfg, loops, 64);
    return table.columns;
}

}  // namespace

TEST_CASE("classification of the pinned reference tree") {
    WorkedSetup w;
    auto cls = classify_tree(w.cfg, w.pinned);
    CHECK(cls.endpoints == std::vector<int>{5, 6, 8});
    CHECK(cls.nodes == std::vector<Junction>{{2, 2}, {7, 1}});  // set {b7^(1), b2^(2)}
    CHECK(cls.vpoints == std::vector<Junction>{{4, 1}});
}

TEST_CASE("classification of a chain tree") {
    auto cfg = configure({cplx(0.0), cplx(1.0), cplx(2.0)}, 1.0 / 2.1);
    SpanningTree tree;
    tree.edges = {{1, 2}, {2, 3}};
    tree.selectors = edge_endpoints(cfg, tree);
    auto cls = classify_tree(cfg, tree);
    CHECK(cls.endpoints == std::vector<int>{3});
    CHECK(cls.nodes.empty());
    CHECK(cls.vpoints.empty());
}

TEST_CASE("tree string of the pinned reference tree") {
    WorkedSetup w;
    auto ts = tree_string(w.cfg, w.pinned);
    CHECK(ts.order == std::vector<int>{4, 6, 3, 5, 2, 1, 8, 9, 10, 7});
    // the far-side junction at point 2 splits into the long branch towards
    // 3 and the short branch to 5, in that order
    bool found = false;
    for (const auto& j : ts.junctions)
        if (j.at == Junction{2, 2}) {
            found = true;
            REQUIRE(j.branches.size() == 2);
            CHECK(j.branches[0] == std::vector<int>{4, 6, 3});
            CHECK(j.branches[1] == std::vector<int>{5});
        }
    CHECK(found);
}

TEST_CASE("tree string of a horizontal chain is right-to-left") {
    auto cfg = configure({cplx(0.0), cplx(1.0), cplx(2.0), cplx(3.0)}, 1.0 / 2.1);
    auto tree = minimal_spanning_tree(cfg);
    auto ts = tree_string(cfg, tree);
    CHECK(ts.order == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("rearrange leaves an already ascending string unchanged") {
    std::vector<Permutation> init = {Permutation({2, 1, 3}), Permutation({1, 3, 2}),
                                     Permutation({3, 2, 1})};
    auto gs = rearrange(init, {1, 2, 3});
    CHECK(gs.conjugations.empty());
    for (int k = 0; k < 3; ++k) CHECK(gs.generators[k] == init[k]);
    CHECK(gs.at_infinity ==
          init[0].compose(init[1]).compose(init[2]).inverse());
}

TEST_CASE("rearranged generators of the worked curve") {
    WorkedSetup w;
    auto init = worked_generators(w);
    auto ts = tree_string(w.cfg, w.pinned);
    auto gs = rearrange(init, ts.order);
    REQUIRE(gs.generators.size() == 10);

    // every generator keeps its cycle type: conjugation preserves it
    for (const auto& g : gs.generators) CHECK(g.cycle_type() == std::vector<int>{2, 1});

    // 7 is rightmost in the tree string, so bubbling 10 past it conjugates
    // 10 by 7 exactly once
    int count_10 = 0;
    bool by_7 = false;
    for (const auto& [m, k] : gs.conjugations)
        if (m == 10) {
            ++count_10;
            by_7 = by_7 || (k == 7);
        }
    CHECK(count_10 == 1);
    CHECK(by_7);

    // the ascending product of the rearranged generators equals the clockwise
    // monodromy at infinity inverted, which is trivial for this curve
    Permutation prod = Permutation::identity(3);
    for (const auto& g : gs.generators) prod = prod.compose(g);
    CHECK(prod.is_identity());
    CHECK(gs.at_infinity.is_identity());
}

TEST_CASE("worked-curve genus") {
    WorkedSetup w;
    auto init = worked_generators(w);
    auto ts = tree_string(w.cfg, w.pinned);
    auto gs = rearrange(init, ts.order);
    auto rep = genus(gs.generators, gs.at_infinity);
    CHECK(rep.sheets == 3);
    CHECK(rep.branch_points == 10);
    CHECK(rep.genus == 3);
    int beta_sum = 0;
    for (int b : rep.branching) beta_sum += b;
    CHECK(beta_sum == 10);
}

TEST_CASE("genus is invariant under global sheet relabeling") {
    WorkedSetup w;
    auto init = worked_generators(w);
    auto ts = tree_string(w.cfg, w.pinned);
    auto gs = rearrange(init, ts.order);
    const int base_genus = genus(gs.generators, gs.at_infinity).genus;

    std::mt19937 gen(17);
    std::vector<int> relab = {1, 2, 3};
    for (int trial = 0; trial < 8; ++trial) {
        std::shuffle(relab.begin(), relab.end(), gen);
        Permutation tau(relab);
        std::vector<Permutation> conj;
        for (const auto& g : gs.generators)
            conj.push_back(tau.compose(g).compose(tau.inverse()));
        Permutation inf = tau.compose(gs.at_infinity).compose(tau.inverse());
        CHECK(genus(conj, inf).genus == base_genus);
    }
}

TEST_CASE("genus of simple permutation data") {
    // two-sheeted cover with four simple branch points: a torus
    Permutation t({2, 1});
    CHECK(genus({t, t, t}, t).genus == 1);
    // two branch points: a sphere
    CHECK(genus({t}, t).genus == 0);
    // odd total branching is inconsistent
    CHECK_THROWS_AS(genus({t}, Permutation::identity(2)), numerical_error);
}
