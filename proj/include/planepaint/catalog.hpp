#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "planepaint/embedding.hpp"

namespace planepaint {

struct CatalogEntry
{
    std::string name;
    std::map<std::string, int> parameters;
    PlaneGraph graph;
    /// Verified structural tags: bipartite, triangulation, quadrangulation,
    /// cubic, mindeg3.
    std::set<std::string> tags;

    bool has(const std::string& tag) const { return tags.contains(tag); }
};

/// Builds an entry and computes its tags from the graph.
CatalogEntry make_entry(std::string name, std::map<std::string, int> parameters, PlaneGraph graph);

/// Orients unoriented face cycles consistently (each edge traversed once in
/// each direction) and returns the plane graph they describe.
PlaneGraph from_face_list(int n, std::vector<std::vector<int>> faces);

PlaneGraph cycle_embedding(int n);
PlaneGraph wheel_embedding(int rim);
PlaneGraph prism_embedding(int n);
PlaneGraph complete_bipartite_2n_embedding(int n);
PlaneGraph icosahedron_embedding();
/// Apollonian network: a triangle refined `levels` times by inserting a vertex
/// into every inner face. Level 1 is the tetrahedron.
PlaneGraph apollonian_embedding(int levels);

/// Built-in catalog, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Catalog entry by name (prism4 is an alias of Q3, tetrahedron of K4).
/// Throws Error when unknown.
const CatalogEntry& catalog_entry(const std::string& name);

/// Resolves "catalog:<name>[+<name>...]", "catalog:all", a rotation-system JSON file or a
/// plantri planar_code file into catalog entries.
std::vector<CatalogEntry> load_entries(const std::string& source);

} // namespace planepaint
