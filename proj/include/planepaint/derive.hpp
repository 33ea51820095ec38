#pragma once

#include <map>
#include <string>
#include <vector>

#include "planepaint/embedding.hpp"
#include "planepaint/graph.hpp"

namespace planepaint {

class UnknownSpec : public Error
{
public:
    explicit UnknownSpec(const std::string& name) : Error("unknown derived graph \"" + name + "\"") {}
};

/// A simple graph whose vertices are Elements of a plane graph, with its edge
/// set partitioned by origin ("G_v", "G_e", "medial", "G_f", "B_ve", "B_vf",
/// "B_ef"). Vertex order is all vertex-Elements, then edge-Elements, then
/// face-Elements, each by index; this fixes DegreeVector positions.
struct DerivedGraph
{
    std::string name;
    std::vector<Element> vertices;
    Graph graph;
    std::map<std::string, std::vector<std::size_t>> parts;
    std::vector<std::string> warnings;

    int order() const { return graph.order(); }
    std::size_t size() const { return graph.size(); }

    /// Position of an element, or -1.
    int position(Element e) const;

    /// Subgraph on the full vertex set keeping the edges of the named parts.
    Graph part_graph(const std::vector<std::string>& part_names) const;
};

enum class Incidence { ve, vf, ef };

DerivedGraph vertex_graph(const PlaneGraph& g);

/// Faces adjacent when they share an edge. Faces sharing several edges get a
/// single edge and a warning.
DerivedGraph face_graph(const PlaneGraph& g);

DerivedGraph line_graph(const PlaneGraph& g);

/// Edges adjacent when they share a vertex and a face.
DerivedGraph medial_graph(const PlaneGraph& g);

DerivedGraph incidence_bipartite(const PlaneGraph& g, Incidence kind);

/// Composite graphs: "G_vf", "G_ve", "G_ef", "G_vef" and the facial variants
/// "Gbar_ve", "Gbar_ef", "Gbar_vef". Throws UnknownSpec otherwise.
DerivedGraph combine(const PlaneGraph& g, const std::string& spec);

/// Any derived graph by name: the composites above plus "G_v", "G_f", "G_e",
/// "medial", "B_ve", "B_vf", "B_ef" and the short aliases v, f, e.
DerivedGraph derive(const PlaneGraph& g, const std::string& name);

std::vector<std::string> derived_graph_names();

/// JSON: {"name", "vertices": ["v0",...], "edges": [[a,b],...], "parts": {...}}.
std::string to_json(const DerivedGraph& d);

} // namespace planepaint
