#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planepaint/catalog.hpp"
#include "planepaint/chroma.hpp"

using namespace planepaint;

TEST_CASE("chromatic numbers")
{
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(catalog_entry("Q3").graph.graph()) == 2);
    CHECK(chromatic_number(edgeless_graph(3)) == 1);
    CHECK(chromatic_number(catalog_entry("icosahedron").graph.graph()) == 4);
    CHECK_THROWS_AS(chromatic_number(complete_graph(17)), SizeLimitExceeded);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = oracle::random_subgraph(complete_graph(7), rng);
        CHECK(chromatic_number(h) == oracle::chromatic_number(h));
    }
}

TEST_CASE("list colouring")
{
    auto k3 = complete_graph(3);
    CHECK(!list_colouring(k3, {{1, 2}, {1, 2}, {1, 2}}));
    auto c = list_colouring(k3, {{1, 2}, {1, 2}, {2, 3}});
    REQUIRE(c);
    CHECK((*c)[2] == 3);
}

TEST_CASE("choosability")
{
    CHECK(is_k_choosable(cycle_graph(4), 2));
    CHECK(!is_k_choosable(complete_graph(3), 2));
    CHECK(is_k_choosable(complete_graph(5), 5));
    CHECK(choice_number(complete_graph(3), 5) == 3);
    CHECK(choice_number(cycle_graph(4), 5) == 2);
    CHECK(choice_number(edgeless_graph(1), 5) == 1);
    CHECK(choice_number(cycle_graph(5), 5) == 3);
    CHECK(is_k_choosable(catalog_entry("K2,3").graph.graph(), 2));
    CHECK(!is_k_choosable(catalog_entry("K2,4").graph.graph(), 2));
    CHECK_THROWS_AS(is_k_choosable(complete_graph(7), 3), SizeLimitExceeded);
}

TEST_CASE("bad list assignments really are bad")
{
    for (const auto& h : {complete_graph(3), catalog_entry("K2,4").graph.graph(), complete_graph(4)}) {
        auto r = k_choosability(h, chromatic_number(h) == 2 ? 2 : chromatic_number(h) - 1);
        REQUIRE(!r.choosable);
        REQUIRE(r.bad_lists);
        CHECK(!list_colouring(h, *r.bad_lists));
    }
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(complete_graph(4)) == 3);
    CHECK(degeneracy(cycle_graph(6)) == 2);
    CHECK(degeneracy(catalog_entry("icosahedron").graph.graph()) == 5);
}
