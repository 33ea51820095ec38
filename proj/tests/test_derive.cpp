#include <doctest.h>

#include <set>

#include "planepaint/catalog.hpp"
#include "planepaint/derive.hpp"

using namespace planepaint;

namespace {
    using Pair = std::pair<int, int>;

    std::set<Pair> edge_set(const Graph& g)
    {
        std::set<Pair> s;
        for (auto e : g.edges())
            s.insert({e.u, e.v});
        return s;
    }

    // pairs of edges sharing an endpoint and a face, straight from the
    // incidence lists rather than the face-boundary walk
    std::set<Pair> medial_oracle(const PlaneGraph& g)
    {
        auto inc = incidences(g);
        std::set<Pair> s;
        const int m = g.edge_count();
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                const auto& ea = g.edges()[a];
                const auto& eb = g.edges()[b];
                bool vertex = ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
                bool face = false;
                for (auto [e1, f1] : inc.edge_face)
                    for (auto [e2, f2] : inc.edge_face)
                        face = face || (e1 == a && e2 == b && f1 == f2);
                if (vertex && face)
                    s.insert({a, b});
            }
        return s;
    }

    bool regular(const Graph& g, int d)
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != d)
                return false;
        return true;
    }

    // edge connectivity at least 2: removing any single edge keeps it connected
    bool bridgeless(const Graph& g)
    {
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<std::size_t> keep;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i)
                    keep.push_back(j);
            if (!g.edge_subgraph(keep).connected())
                return false;
        }
        return true;
    }
}

TEST_CASE("vertex graph is the abstract graph")
{
    auto k4 = vertex_graph(catalog_entry("K4").graph);
    CHECK(k4.graph == complete_graph(4));
    auto q3 = vertex_graph(catalog_entry("Q3").graph);
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    CHECK(q3.graph.is_bipartite());
    auto w5 = vertex_graph(catalog_entry("W5").graph);
    CHECK(w5.order() == 6);
    CHECK(w5.size() == 10);
}

TEST_CASE("face graphs")
{
    CHECK(face_graph(catalog_entry("K4").graph).graph == complete_graph(4));
    auto q3 = face_graph(catalog_entry("Q3").graph);
    CHECK(q3.order() == 6);
    CHECK(q3.size() == 12);
    CHECK(regular(q3.graph, 4));
    auto k3 = face_graph(catalog_entry("K3").graph);
    CHECK(k3.size() == 1);
    CHECK(!k3.warnings.empty());
    CHECK(q3.warnings.empty());
}

TEST_CASE("line graphs")
{
    CHECK(line_graph(catalog_entry("K3").graph).graph == complete_graph(3));
    auto k4 = line_graph(catalog_entry("K4").graph);
    CHECK(k4.order() == 6);
    CHECK(k4.size() == 12);
    CHECK(regular(k4.graph, 4));
}

TEST_CASE("medial graphs")
{
    auto k4 = medial_graph(catalog_entry("K4").graph);
    CHECK(k4.order() == 6);
    CHECK(k4.size() == 12);
    CHECK(regular(k4.graph, 4));
    // octahedron: complement of a perfect matching
    for (int v = 0; v < 6; ++v) {
        int non = 0;
        for (int w = 0; w < 6; ++w)
            non += (w != v && !k4.graph.adjacent(v, w));
        CHECK(non == 1);
    }
    auto q3 = medial_graph(catalog_entry("Q3").graph);
    CHECK(q3.order() == 12);
    CHECK(q3.size() == 24);
    CHECK(medial_graph(catalog_entry("K3").graph).graph == complete_graph(3));
}

TEST_CASE("medial graph matches the incidence oracle and is 4-regular")
{
    for (const auto& entry : catalog()) {
        CAPTURE(entry.name);
        auto m = medial_graph(entry.graph);
        CHECK(edge_set(m.graph) == medial_oracle(entry.graph));
        // a degree-2 vertex offers the same neighbouring edge through both faces
        if (entry.has("mindeg3"))
            CHECK(regular(m.graph, 4));
        else
            CHECK(m.graph.max_degree() <= 4);
    }
}

TEST_CASE("duals of triangulations are cubic and bridgeless")
{
    for (const auto& entry : catalog()) {
        // K3 is a triangulation too, but its two faces share three edges
        if (!entry.has("triangulation") || !entry.has("mindeg3"))
            continue;
        CAPTURE(entry.name);
        auto f = face_graph(entry.graph);
        CHECK(regular(f.graph, 3));
        CHECK(bridgeless(f.graph));
    }
}

TEST_CASE("incidence bipartite graphs")
{
    for (const auto& entry : catalog()) {
        CAPTURE(entry.name);
        const auto& g = entry.graph;
        auto ve = incidence_bipartite(g, Incidence::ve);
        CHECK(ve.size() == 2 * static_cast<std::size_t>(g.edge_count()));
        auto ef = incidence_bipartite(g, Incidence::ef);
        for (int e = 0; e < g.edge_count(); ++e) {
            CHECK(ve.graph.degree(ve.position({ElementKind::edge, e})) == 2);
            CHECK(ef.graph.degree(ef.position({ElementKind::edge, e})) == 2);
        }
        auto vf = incidence_bipartite(g, Incidence::vf);
        for (int f = 0; f < g.face_count(); ++f)
            CHECK(vf.graph.degree(vf.position({ElementKind::face, f})) == static_cast<int>(g.face(f).size()));
    }
    CHECK(incidence_bipartite(catalog_entry("K4").graph, Incidence::vf).size() == 12);
    CHECK(incidence_bipartite(catalog_entry("Q3").graph, Incidence::ef).size() == 24);
}

TEST_CASE("composite sizes")
{
    auto k4 = combine(catalog_entry("K4").graph, "Gbar_vef");
    CHECK(k4.order() == 14);
    CHECK(k4.size() == 60);
    auto k3 = combine(catalog_entry("K3").graph, "G_vf");
    CHECK(k3.order() == 5);
    CHECK(k3.size() == 10);
    auto q3 = combine(catalog_entry("Q3").graph, "Gbar_ve");
    CHECK(q3.order() == 20);
    CHECK(q3.size() == 60);
    CHECK(combine(catalog_entry("K4").graph, "G_vf").size() == 24);
    CHECK(combine(catalog_entry("K3").graph, "Gbar_ve").size() == 12);
    CHECK_THROWS_AS(combine(catalog_entry("K4").graph, "G_x"), UnknownSpec);
    CHECK_THROWS_AS(derive(catalog_entry("K4").graph, "nonsense"), UnknownSpec);
}

TEST_CASE("composite parts partition the edges and follow the vertex order")
{
    for (const auto& entry : catalog()) {
        if (entry.graph.edge_count() > 30)
            continue;
        for (const auto& name : derived_graph_names()) {
            CAPTURE(entry.name);
            CAPTURE(name);
            auto d = derive(entry.graph, name);
            std::vector<int> owner(d.size(), 0);
            for (const auto& [part, idx] : d.parts)
                for (auto i : idx)
                    ++owner[i];
            for (auto c : owner)
                CHECK(c == 1);
            CHECK(std::is_sorted(d.vertices.begin(), d.vertices.end()));
            CHECK(std::adjacent_find(d.vertices.begin(), d.vertices.end()) == d.vertices.end());
        }
    }
}

TEST_CASE("composites are unions of their standalone parts")
{
    const auto& g = catalog_entry("W5").graph;
    auto whole = combine(g, "Gbar_vef");
    auto check_part = [&](const std::string& part, const DerivedGraph& alone) {
        CAPTURE(part);
        std::set<std::pair<Element, Element>> expected, got;
        for (auto e : alone.graph.edges())
            expected.insert({alone.vertices[e.u], alone.vertices[e.v]});
        for (auto i : whole.parts.at(part)) {
            auto e = whole.graph.edges()[i];
            got.insert({whole.vertices[e.u], whole.vertices[e.v]});
        }
        CHECK(got == expected);
    };
    check_part("G_v", vertex_graph(g));
    check_part("G_f", face_graph(g));
    check_part("medial", medial_graph(g));
    check_part("B_ve", incidence_bipartite(g, Incidence::ve));
    check_part("B_vf", incidence_bipartite(g, Incidence::vf));
    check_part("B_ef", incidence_bipartite(g, Incidence::ef));
}

TEST_CASE("derived graph JSON")
{
    auto j = to_json(derive(catalog_entry("K3").graph, "G_vf"));
    CHECK(j.find("\"name\"") != std::string::npos);
    CHECK(j.find("\"f1\"") != std::string::npos);
    CHECK(j.find("\"B_vf\"") != std::string::npos);
}
