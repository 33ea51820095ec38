#include "planepaint/derive.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace planepaint {

namespace {
    struct LabeledEdge
    {
        Element a, b;
    };

    struct Part
    {
        std::string name;
        std::vector<LabeledEdge> edges;
    };

    std::vector<Element> elements(ElementKind kind, int count)
    {
        std::vector<Element> out;
        for (int i = 0; i < count; ++i)
            out.push_back({kind, i});
        return out;
    }

    Part vertex_part(const PlaneGraph& g)
    {
        Part p{"G_v", {}};
        for (const auto& e : g.edges())
            p.edges.push_back({{ElementKind::vertex, e.u}, {ElementKind::vertex, e.v}});
        return p;
    }

    Part face_part(const PlaneGraph& g, std::vector<std::string>& warnings)
    {
        Part p{"G_f", {}};
        std::set<std::pair<int, int>> pairs;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [f1, f2] = g.edge_faces(e);
            if (!pairs.emplace(std::min(f1, f2), std::max(f1, f2)).second)
                warnings.push_back("faces f" + std::to_string(std::min(f1, f2)) + " and f" +
                                   std::to_string(std::max(f1, f2)) +
                                   " share several edges; collapsed to one adjacency");
        }
        for (auto [a, b] : pairs)
            p.edges.push_back({{ElementKind::face, a}, {ElementKind::face, b}});
        return p;
    }

    Part line_part(const PlaneGraph& g)
    {
        Part p{"G_e", {}};
        const auto& es = g.edges();
        for (int a = 0; a < g.edge_count(); ++a)
            for (int b = a + 1; b < g.edge_count(); ++b)
                if (es[a].u == es[b].u || es[a].u == es[b].v || es[a].v == es[b].u || es[a].v == es[b].v)
                    p.edges.push_back({{ElementKind::edge, a}, {ElementKind::edge, b}});
        return p;
    }

    Part medial_part(const PlaneGraph& g)
    {
        // two edges share a vertex and a face exactly when they are
        // consecutive on that face's boundary cycle
        Part p{"medial", {}};
        std::set<std::pair<int, int>> pairs;
        for (int f = 0; f < g.face_count(); ++f) {
            const auto& fe = g.face_edges(f);
            for (std::size_t i = 0; i < fe.size(); ++i) {
                int a = fe[i], b = fe[(i + 1) % fe.size()];
                pairs.emplace(std::min(a, b), std::max(a, b));
            }
        }
        for (auto [a, b] : pairs)
            p.edges.push_back({{ElementKind::edge, a}, {ElementKind::edge, b}});
        return p;
    }

    Part incidence_part(const PlaneGraph& g, Incidence kind)
    {
        auto inc = incidences(g);
        Part p;
        switch (kind) {
        case Incidence::ve:
            p.name = "B_ve";
            for (auto [v, e] : inc.vertex_edge)
                p.edges.push_back({{ElementKind::vertex, v}, {ElementKind::edge, e}});
            break;
        case Incidence::vf:
            p.name = "B_vf";
            for (auto [v, f] : inc.vertex_face)
                p.edges.push_back({{ElementKind::vertex, v}, {ElementKind::face, f}});
            break;
        case Incidence::ef:
            p.name = "B_ef";
            for (auto [e, f] : inc.edge_face)
                p.edges.push_back({{ElementKind::edge, e}, {ElementKind::face, f}});
            break;
        }
        return p;
    }

    DerivedGraph assemble(std::string name, const PlaneGraph& g, bool with_v, bool with_e, bool with_f,
                          const std::vector<Part>& parts, std::vector<std::string> warnings = {})
    {
        DerivedGraph d;
        d.name = std::move(name);
        d.warnings = std::move(warnings);
        if (with_v)
            for (auto e : elements(ElementKind::vertex, g.vertex_count()))
                d.vertices.push_back(e);
        if (with_e)
            for (auto e : elements(ElementKind::edge, g.edge_count()))
                d.vertices.push_back(e);
        if (with_f)
            for (auto e : elements(ElementKind::face, g.face_count()))
                d.vertices.push_back(e);

        std::vector<Edge> all;
        std::vector<std::pair<Edge, std::string>> origin;
        for (const auto& part : parts)
            for (const auto& le : part.edges) {
                Edge e(d.position(le.a), d.position(le.b));
                all.push_back(e);
                origin.emplace_back(e, part.name);
            }
        d.graph = Graph(static_cast<int>(d.vertices.size()), std::move(all));
        for (const auto& part : parts)
            d.parts[part.name];
        for (const auto& [e, part_name] : origin)
            d.parts[part_name].push_back(static_cast<std::size_t>(d.graph.edge_index(e.u, e.v)));
        for (auto& [_, idx] : d.parts)
            std::sort(idx.begin(), idx.end());
        return d;
    }
}

int DerivedGraph::position(Element e) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
    if (it == vertices.end() || *it != e)
        return -1;
    return static_cast<int>(it - vertices.begin());
}

Graph DerivedGraph::part_graph(const std::vector<std::string>& part_names) const
{
    std::vector<std::size_t> idx;
    for (const auto& p : part_names) {
        auto it = parts.find(p);
        if (it == parts.end())
            throw UnknownSpec(p);
        idx.insert(idx.end(), it->second.begin(), it->second.end());
    }
    std::sort(idx.begin(), idx.end());
    return graph.edge_subgraph(idx);
}

DerivedGraph vertex_graph(const PlaneGraph& g)
{
    return assemble("G_v", g, true, false, false, {vertex_part(g)});
}

DerivedGraph face_graph(const PlaneGraph& g)
{
    std::vector<std::string> warnings;
    auto part = face_part(g, warnings);
    return assemble("G_f", g, false, false, true, {part}, std::move(warnings));
}

DerivedGraph line_graph(const PlaneGraph& g)
{
    return assemble("G_e", g, false, true, false, {line_part(g)});
}

DerivedGraph medial_graph(const PlaneGraph& g)
{
    return assemble("medial", g, false, true, false, {medial_part(g)});
}

DerivedGraph incidence_bipartite(const PlaneGraph& g, Incidence kind)
{
    auto part = incidence_part(g, kind);
    return assemble(part.name, g, kind != Incidence::ef, kind != Incidence::vf, kind != Incidence::ve, {part});
}

DerivedGraph combine(const PlaneGraph& g, const std::string& spec)
{
    std::vector<std::string> warnings;
    if (spec == "G_vf")
        return assemble(spec, g, true, false, true,
                        {vertex_part(g), face_part(g, warnings), incidence_part(g, Incidence::vf)}, warnings);
    if (spec == "G_ve" || spec == "Gbar_ve")
        return assemble(spec, g, true, true, false,
                        {vertex_part(g), spec == "G_ve" ? line_part(g) : medial_part(g),
                         incidence_part(g, Incidence::ve)});
    if (spec == "G_ef" || spec == "Gbar_ef")
        return assemble(spec, g, false, true, true,
                        {spec == "G_ef" ? line_part(g) : medial_part(g), face_part(g, warnings),
                         incidence_part(g, Incidence::ef)},
                        warnings);
    if (spec == "G_vef" || spec == "Gbar_vef")
        return assemble(spec, g, true, true, true,
                        {vertex_part(g), spec == "G_vef" ? line_part(g) : medial_part(g), face_part(g, warnings),
                         incidence_part(g, Incidence::ve), incidence_part(g, Incidence::vf),
                         incidence_part(g, Incidence::ef)},
                        warnings);
    throw UnknownSpec(spec);
}

DerivedGraph derive(const PlaneGraph& g, const std::string& name)
{
    if (name == "G_v" || name == "v")
        return vertex_graph(g);
    if (name == "G_f" || name == "f")
        return face_graph(g);
    if (name == "G_e" || name == "e")
        return line_graph(g);
    if (name == "medial" || name == "Gbar_e")
        return medial_graph(g);
    if (name == "B_ve")
        return incidence_bipartite(g, Incidence::ve);
    if (name == "B_vf")
        return incidence_bipartite(g, Incidence::vf);
    if (name == "B_ef")
        return incidence_bipartite(g, Incidence::ef);
    return combine(g, name);
}

std::vector<std::string> derived_graph_names()
{
    return {"G_v", "G_f", "G_e", "medial", "B_ve", "B_vf", "B_ef",
            "G_vf", "G_ve", "G_ef", "G_vef", "Gbar_ve", "Gbar_ef", "Gbar_vef"};
}

std::string to_json(const DerivedGraph& d)
{
    nlohmann::ordered_json doc;
    doc["name"] = d.name;
    std::vector<std::string> labels;
    for (auto e : d.vertices)
        labels.push_back(to_string(e));
    doc["vertices"] = labels;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : d.graph.edges())
        edges.push_back({e.u, e.v});
    doc["edges"] = edges;
    auto parts = nlohmann::ordered_json::object();
    for (const auto& [name, idx] : d.parts)
        parts[name] = idx;
    doc["parts"] = parts;
    if (!d.warnings.empty())
        doc["warnings"] = d.warnings;
    return doc.dump();
}

} // namespace planepaint
