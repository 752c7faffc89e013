#include "dirres/families.hpp"
#include "dirres/graph.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace dirres;

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(DiGraph(0), InvalidSize);
    CHECK_THROWS_AS(DiGraph(-3), InvalidSize);

    DiGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 1, 1.0), IndexOutOfRange);
    CHECK_THROWS_AS(g.add_edge(1, 4, 1.0), IndexOutOfRange);
    CHECK_THROWS_AS(g.add_edge(2, 2, 1.0), InvalidParam);
    CHECK_THROWS_AS(g.add_edge(1, 2, 0.0), NonpositiveWeight);
    CHECK_THROWS_AS(g.add_edge(1, 2, -0.5), NonpositiveWeight);
    CHECK_THROWS_AS(g.add_edge(1, 2, std::nan("")), NonpositiveWeight);
    g.add_edge(1, 2, 0.5);
    CHECK_THROWS_AS(g.add_edge(1, 2, 0.5), InvalidParam);
}

TEST_CASE("laplacian is out-degree diagonal minus adjacency") {
    const DiGraph g = make_path({1.0, 1.0});
    const Matrix l = laplacian(g);
    Matrix want(3, 3);
    want << 0, 0, 0, -1, 1, 0, 0, -1, 1;
    CHECK((l - want).cwiseAbs().maxCoeff() == 0.0);

    DiGraph h(3);
    h.add_edge(1, 2, 0.25);
    h.add_edge(1, 3, 4.0);
    h.add_edge(3, 1, 2.0);
    const Matrix lh = laplacian(h);
    CHECK(lh(0, 0) == 4.25);
    CHECK(lh(0, 1) == -0.25);
    CHECK(lh(0, 2) == -4.0);
    CHECK(lh(1, 1) == 0.0);
    CHECK(lh(2, 0) == -2.0);
    CHECK(lh(2, 2) == 2.0);
}

TEST_CASE("laplacian row sums cancel exactly against the adjacency fold") {
    // The diagonal accumulates a(i, 0), a(i, 1), ... in that order, so the
    // same fold over the adjacency reproduces it bit for bit even for
    // weights like 0.1 whose sums round.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const DiGraph g = random_connected_digraph(2 + trial % 7, rng);
        const Matrix a = adjacency(g);
        const Matrix l = laplacian(g);
        for (int i = 0; i < g.size(); ++i) {
            double d = 0.0;
            for (int j = 0; j < g.size(); ++j) d += a(i, j);
            CHECK(l(i, i) == d);
        }
    }
}

TEST_CASE("is_connected means a globally reachable node exists") {
    CHECK(is_connected(DiGraph(1)));
    CHECK_FALSE(is_connected(DiGraph(2)));

    DiGraph chain(2);
    chain.add_edge(1, 2, 1.0);
    CHECK(is_connected(chain)); // node 2 is reachable from everywhere

    CHECK(is_connected(make_path({1.0, 2.0, 3.0})));
    CHECK(is_connected(make_cycle({1.0, 1.0, 1.0})));

    DiGraph split(4);
    split.add_edge(1, 2, 1.0);
    split.add_edge(3, 4, 1.0);
    CHECK_FALSE(is_connected(split)); // two terminal components

    DiGraph two_cycles(4);
    two_cycles.add_edge(1, 2, 1.0);
    two_cycles.add_edge(2, 1, 1.0);
    two_cycles.add_edge(3, 4, 1.0);
    two_cycles.add_edge(4, 3, 1.0);
    CHECK_FALSE(is_connected(two_cycles));
    two_cycles.add_edge(1, 3, 1.0); // now the 3-4 loop absorbs everything
    CHECK(is_connected(two_cycles));
}

TEST_CASE("degree permutation of a path is the cyclic shift") {
    const DiGraph g = make_path({1.0, 1.0});
    const auto p = find_degree_permutation(g);
    REQUIRE(p.has_value());
    CHECK(p->sigma == std::vector<int>{2, 3, 1});

    const Matrix a = adjacency(g);
    const Matrix d = laplacian(g) + a;
    CHECK((d - a * p->matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("degree permutation exists exactly when heads are distinct and out-degrees at most one") {
    SUBCASE("cycle") {
        const DiGraph g = make_cycle({1.5, 2.5, 0.5, 1.0});
        const auto p = find_degree_permutation(g);
        REQUIRE(p.has_value());
        const Matrix a = adjacency(g);
        const Matrix d = laplacian(g) + a;
        CHECK((d - a * p->matrix()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("branching node") {
        DiGraph g(3);
        g.add_edge(1, 2, 1.0);
        g.add_edge(1, 3, 1.0);
        CHECK_FALSE(find_degree_permutation(g).has_value());
    }
    SUBCASE("shared head") {
        DiGraph g(3);
        g.add_edge(1, 3, 1.0);
        g.add_edge(2, 3, 1.0);
        CHECK_FALSE(find_degree_permutation(g).has_value());
    }
    SUBCASE("isolated nodes get the free columns in order") {
        DiGraph g(4);
        g.add_edge(2, 1, 5.0);
        const auto p = find_degree_permutation(g);
        REQUIRE(p.has_value());
        // Column 1 is forced to 2; nodes 2, 3, 4 take 1, 3, 4.
        CHECK(p->sigma == std::vector<int>{2, 1, 3, 4});
    }
}

TEST_CASE("permutation matrices commute with centering") {
    for (const auto& g : {make_path({1.0, 1.0, 1.0}), make_cycle({2.0, 1.0, 0.5, 4.0, 1.0})}) {
        const auto p = find_degree_permutation(g);
        REQUIRE(p.has_value());
        const Matrix pm = p->matrix();
        const int n = g.size();
        const Matrix id = Matrix::Identity(n, n);
        const Matrix pi = id - Matrix::Constant(n, n, 1.0 / n);
        CHECK((pm * pm.transpose() - id).cwiseAbs().maxCoeff() == 0.0);
        CHECK((pm * pi - pi * pm).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(((pm - id) * pi - (pm - id)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("laplacian factors as adjacency times shifted permutation") {
    // With out-degrees at most one, D = AP makes L = A(P - I) hold without
    // rounding: every product entry is a single weight.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const DiGraph g = trial % 2 == 0 ? random_path(3 + trial, rng)
                                         : random_cycle(3 + trial, rng);
        const auto p = find_degree_permutation(g);
        REQUIRE(p.has_value());
        const Matrix a = adjacency(g);
        const Matrix l = laplacian(g);
        const Matrix pm = p->matrix();
        CHECK((l - a * (pm - Matrix::Identity(g.size(), g.size()))).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("symmetrize averages opposing directions") {
    DiGraph g(3);
    g.add_edge(1, 2, 3.0);
    g.add_edge(2, 1, 1.0);
    g.add_edge(3, 1, 4.0);
    const DiGraph s = symmetrize(g);
    const Matrix as = adjacency(s);
    CHECK(as(0, 1) == 2.0);
    CHECK(as(1, 0) == 2.0);
    CHECK(as(0, 2) == 2.0);
    CHECK(as(2, 0) == 2.0);
    const Matrix a = adjacency(g);
    CHECK((as - 0.5 * (a + a.transpose())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("classification recognizes the directed chain between its ends") {
    const DiGraph g = make_path({1.0, 2.0, 0.5, 3.0}); // edges 2->1, 3->2, 4->3, 5->4
    const ConnectionClass c = classify_connection(g, 1, 5);
    CHECK(c.kind == ConnectionKind::Path);
    CHECK(c.sequence == std::vector<int>{5, 4, 3, 2, 1});

    // An interior pair leaves a dangling tail below the lower node, so the
    // participating subgraph is not a chain with ends {k, j}.
    CHECK(classify_connection(g, 2, 4).kind == ConnectionKind::Other);
}

TEST_CASE("classification recognizes cycles from any pair") {
    const DiGraph g = make_cycle({1.0, 2.0, 3.0, 4.0});
    for (int k = 1; k <= 4; ++k)
        for (int j = 1; j <= 4; ++j) {
            if (k == j) continue;
            const ConnectionClass c = classify_connection(g, k, j);
            CHECK(c.kind == ConnectionKind::Cycle);
            REQUIRE(c.sequence.size() == 4);
            CHECK(c.sequence.front() == k);
        }
}

TEST_CASE("classification measures tree branches to the first shared node") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m) {
            const TwoBranchTree t = make_two_branch_tree(n, m);
            const ConnectionClass c = classify_connection(t.graph, t.k, t.j);
            CHECK(c.kind == ConnectionKind::TwoBranchUnitTree);
            CHECK(c.n == n);
            CHECK(c.m == m);
            // Swapping the query order swaps the measured branch lengths.
            const ConnectionClass r = classify_connection(t.graph, t.j, t.k);
            CHECK(r.n == m);
            CHECK(r.m == n);
        }
}

TEST_CASE("classification ignores a tail hanging below the meeting node") {
    // Branches of lengths 2 and 3 meeting at node 1, which then feeds a
    // two-edge tail. The tail nodes carry current but cannot change where
    // the branches first meet.
    TwoBranchTree t = make_two_branch_tree(2, 3);
    const int n0 = t.graph.size();
    DiGraph g(n0 + 2);
    for (const auto& [edge, w] : t.graph.edges()) g.add_edge(edge.first, edge.second, w);
    g.add_edge(1, n0 + 1, 1.0);
    g.add_edge(n0 + 1, n0 + 2, 1.0);
    const ConnectionClass c = classify_connection(g, t.k, t.j);
    CHECK(c.kind == ConnectionKind::TwoBranchUnitTree);
    CHECK(c.n == 2);
    CHECK(c.m == 3);
}

TEST_CASE("classification falls back to Other off the canonical families") {
    SUBCASE("non-unit tree weights") {
        const DiGraph g = make_star3(2, 3); // weights 1/2 and 1/3
        CHECK(classify_connection(g, 2, 3).kind == ConnectionKind::Other);
    }
    SUBCASE("unit star is the (1, 1) tree") {
        const ConnectionClass c = classify_connection(make_star3(1, 1), 2, 3);
        CHECK(c.kind == ConnectionKind::TwoBranchUnitTree);
        CHECK(c.n == 1);
        CHECK(c.m == 1);
    }
    SUBCASE("extra chord breaks the chain") {
        DiGraph g = make_path({1.0, 1.0, 1.0});
        g.add_edge(4, 2, 1.0);
        CHECK(classify_connection(g, 1, 4).kind == ConnectionKind::Other);
    }
    SUBCASE("bad arguments") {
        const DiGraph g = make_path({1.0});
        CHECK_THROWS_AS(classify_connection(g, 1, 1), InvalidParam);
        CHECK_THROWS_AS(classify_connection(g, 0, 2), IndexOutOfRange);
        DiGraph split(3);
        split.add_edge(2, 1, 1.0);
        CHECK_THROWS_AS(classify_connection(split, 1, 2), NotConnected);
    }
}

TEST_CASE("edge lists parse with comments and an optional size header") {
    std::istringstream in("# demo\nnodes 4\n1 2 0.5\n\n3 1 2.0   # trailing comment is not allowed\n");
    CHECK_THROWS_AS(parse_edge_list(in), MalformedInput);

    std::istringstream ok("# demo\nnodes 4\n1 2 0.5\n3 1 2.0\n");
    const DiGraph g = parse_edge_list(ok);
    CHECK(g.size() == 4);
    CHECK(adjacency(g)(0, 1) == 0.5);
    CHECK(adjacency(g)(2, 0) == 2.0);

    std::istringstream no_header("5 2 1.0\n2 3 1.0\n");
    CHECK(parse_edge_list(no_header).size() == 5); // sized by the largest index
}

TEST_CASE("edge list rejections carry the offending line") {
    const auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_edge_list(in), MalformedInput);
    };
    fails("");
    fails("# only comments\n");
    fails("nodes\n");
    fails("nodes 2 3\n");
    fails("1 2 1.0\nnodes 5\n"); // header after content
    fails("one 2 1.0\n");
    fails("1 2\n");
    fails("1 2 1.0 extra\n");
    fails("1.5 2 1.0\n");

    std::istringstream bad_weight("1 2 -1.0\n");
    CHECK_THROWS_AS(parse_edge_list(bad_weight), NonpositiveWeight);
    std::istringstream self_loop("2 2 1.0\n");
    CHECK_THROWS_AS(parse_edge_list(self_loop), InvalidParam);
}
