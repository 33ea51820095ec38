#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "planepaint/catalog.hpp"
#include "planepaint/paint.hpp"

using namespace planepaint;

TEST_CASE("small paintability cases")
{
    auto k2 = complete_graph(2);
    CHECK(is_paintable(k2, {2, 2}));
    CHECK(!is_paintable(k2, {1, 1}));
    auto k3 = complete_graph(3);
    CHECK(!is_paintable(k3, {2, 2, 2}));
    CHECK(is_paintable(k3, {3, 3, 3}));
    CHECK(is_paintable(k3, {3, 2, 1}));
    CHECK(!is_paintable(k3, {3, 3, 0}));
    CHECK(!is_paintable(edgeless_graph(2), {0, 5}));
    CHECK(is_paintable(edgeless_graph(0), {}));
}

TEST_CASE("painting numbers")
{
    CHECK(paint_number(cycle_graph(4), 5) == 2);
    CHECK(paint_number(complete_graph(4), 5) == 4);
    CHECK(paint_number(edgeless_graph(3), 5) == 1);
    CHECK(paint_number(cycle_graph(5), 5) == 3);
    CHECK(paint_number(complete_graph(4), 3) == std::nullopt);
    CHECK_THROWS_AS(paint_number(complete_graph(11), 3), SizeLimitExceeded);
}

TEST_CASE("winning replies")
{
    auto k2 = complete_graph(2);
    auto r = winning_reply(k2, {2, 2}, 0b11);
    REQUIRE(r);
    CHECK(std::popcount(*r) == 1);
    CHECK(!winning_reply(complete_graph(3), {2, 2, 2}, 0b111));
    auto lone = winning_reply(cycle_graph(4), {2, 2, 2, 2}, 0b0100);
    REQUIRE(lone);
    CHECK(*lone == 0b0100);
}

TEST_CASE("solver agrees with the plain recursive oracle")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto h = oracle::random_subgraph(complete_graph(n), rng);
        PaintProfile p(n);
        for (auto& t : p)
            t = 1 + static_cast<int>(rng() % 3);
        oracle::Paint plain(h);
        CAPTURE(trial);
        CHECK(is_paintable(h, p) == plain.paintable((1u << n) - 1, p));
    }
}

TEST_CASE("monotonicity")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        auto h = oracle::random_subgraph(complete_graph(n), rng);
        PaintSolver solver(h);
        PaintProfile p(n);
        for (auto& t : p)
            t = 1 + static_cast<int>(rng() % 3);
        if (!solver.paintable(p))
            continue;
        for (int v = 0; v < n; ++v) {
            auto q = p;
            ++q[v];
            CHECK(solver.paintable(q));
            CHECK(solver.paintable(solver.all() & ~(1u << v), p));
        }
    }
}

TEST_CASE("canonical forms identify isomorphic coloured graphs")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        auto h = oracle::random_subgraph(complete_graph(n), rng);
        std::vector<std::uint32_t> adj(n, 0), moved(n, 0);
        std::vector<int> colour(n), moved_colour(n), perm(n);
        for (int v = 0; v < n; ++v) {
            colour[v] = static_cast<int>(rng() % 2);
            perm[v] = v;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto e : h.edges()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
            moved[perm[e.u]] |= 1u << perm[e.v];
            moved[perm[e.v]] |= 1u << perm[e.u];
        }
        for (int v = 0; v < n; ++v)
            moved_colour[perm[v]] = colour[v];
        CHECK(canonical_form(adj, colour).key == canonical_form(moved, moved_colour).key);
    }
    // C6 and two triangles share degrees but not structure
    std::vector<std::uint32_t> c6(6), tt(6);
    for (int v = 0; v < 6; ++v)
        c6[v] = (1u << ((v + 1) % 6)) | (1u << ((v + 5) % 6));
    tt = {0b000110, 0b000101, 0b000011, 0b110000, 0b101000, 0b011000};
    std::vector<int> plain(6, 0);
    CHECK(canonical_form(c6, plain).key != canonical_form(tt, plain).key);
}

TEST_CASE("Schauz check")
{
    CHECK(schauz_check(cycle_graph(4), DegreeVector({1, 1, 1, 1})));
    CHECK(schauz_check(complete_graph(3), DegreeVector({2, 1, 0})));
    CHECK_THROWS_AS(schauz_check(complete_graph(3), DegreeVector({1, 1, 1})), PreconditionFailed);
    const Graph& q3 = catalog_entry("Q3").graph.graph();
    auto o = min_max_indegree_orientation(q3);
    CHECK(schauz_check(q3, o.orientation.indegrees(q3)));
}

TEST_CASE("lemma check")
{
    auto k2 = complete_graph(2);
    auto w = lemma_check(k2, 0b11, DegreeVector({1, 0}));
    REQUIRE(w);
    // the vertex with exponent 0 cannot lose a token, so it is the one coloured
    CHECK(w->reply == 0b10);
    CHECK(lemma_check(edgeless_graph(1), 0b1, DegreeVector({0}))->reply == 0b1);

    auto c4 = cycle_graph(4);
    auto c = lemma_check(c4, 0b1111, DegreeVector({1, 1, 1, 1}));
    REQUIRE(c);
    CHECK((c->reply == 0b0101 || c->reply == 0b1010));

    // lowering the cap at vertex 0 leaves degree sum 2 below the three edges
    auto k3 = complete_graph(3);
    auto e = lemma_check(k3, 0b001, DegreeVector({2, 1, 0}));
    REQUIRE(e);
    CHECK(e->reply == 0b001);
    // path 0-1-2 with monomial (0,2,0): vertex 2 has nothing to spare
    Graph p3(3, {{0, 1}, {1, 2}});
    auto empty = lemma_check(p3, 0b100, DegreeVector({0, 2, 0}));
    REQUIRE(empty);
    CHECK(empty->reply == 0b100);
}

TEST_CASE("game tree printing")
{
    std::ostringstream out;
    print_game_tree(out, complete_graph(2), {2, 2});
    auto text = out.str();
    CHECK(text.find("Painter wins") != std::string::npos);
    CHECK(text.find("Lister {0,1} -> Painter colours") != std::string::npos);
    std::ostringstream lose;
    print_game_tree(lose, complete_graph(3), {2, 2, 2});
    CHECK(lose.str().find("Lister wins") != std::string::npos);
    std::ostringstream cut;
    print_game_tree(cut, complete_graph(4), {4, 4, 4, 4}, 10);
    CHECK(cut.str().find("truncated") != std::string::npos);
}
