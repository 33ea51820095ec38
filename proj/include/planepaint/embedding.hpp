#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "planepaint/errors.hpp"
#include "planepaint/graph.hpp"

namespace planepaint {

enum class ElementKind : std::uint8_t { vertex, edge, face };

/// A vertex, edge or face of a plane graph, named by its ordinal within its
/// kind. Derived graphs use Elements as vertex labels.
struct Element
{
    ElementKind kind = ElementKind::vertex;
    int index = 0;

    auto operator<=>(const Element&) const = default;
};

/// "v3", "e0", "f7".
std::string to_string(Element e);

class EmbeddingError : public Error
{
public:
    enum class Kind { not_simple, disconnected, euler_violation, face_not_simple_cycle, malformed };

    EmbeddingError(Kind kind, const std::string& what);

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

const char* to_string(EmbeddingError::Kind kind);

/// Connected simple plane graph given by its rotation system (clockwise
/// neighbour order at every vertex). Faces are traced from the rotation
/// system and validated: Euler's formula holds and every face is bounded by a
/// simple cycle.
///
/// Edge order is lexicographic on (min endpoint, max endpoint). Faces are
/// numbered by first appearance when tracing from directed edges taken in
/// (tail, head) order, and each face's vertex cycle starts at the tail of
/// that directed edge.
class PlaneGraph
{
public:
    static PlaneGraph from_rotation_system(int n, std::vector<std::vector<int>> rotation);

    int vertex_count() const { return graph_.order(); }
    int edge_count() const { return static_cast<int>(graph_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const Graph& graph() const { return graph_; }
    const std::vector<Edge>& edges() const { return graph_.edges(); }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }

    /// Vertex cycle of face f.
    const std::vector<int>& face(int f) const { return faces_[f]; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }

    /// Edge indices along face f, aligned with face(f): entry i joins
    /// face(f)[i] and face(f)[i+1].
    const std::vector<int>& face_edges(int f) const { return face_edges_[f]; }

    /// The two faces containing edge e: first is the face traversing u->v
    /// (u < v), second the face traversing v->u.
    std::pair<int, int> edge_faces(int e) const { return edge_faces_[e]; }

    /// Every face is a triangle.
    bool is_triangulation() const;

private:
    PlaneGraph() = default;

    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> face_edges_;
    std::vector<std::pair<int, int>> edge_faces_;
};

struct Incidences
{
    std::vector<std::pair<int, int>> vertex_face;
    std::vector<std::pair<int, int>> edge_face;
    std::vector<std::pair<int, int>> vertex_edge;
};

/// All (vertex,face), (edge,face) and (vertex,edge) incidences, each listed
/// once, in ascending order.
Incidences incidences(const PlaneGraph& g);

/// Rotation system whose traced faces are the given oriented face cycles.
/// Throws EmbeddingError(malformed) when the faces do not close up into a
/// single rotation around some vertex.
std::vector<std::vector<int>> rotation_from_faces(int n, const std::vector<std::vector<int>>& faces);

/// Plane dual. Throws EmbeddingError(not_simple) when two faces share more
/// than one edge, since the dual would then be a multigraph.
PlaneGraph dual(const PlaneGraph& g);

// Rotation-system JSON: {"n": <count>, "rotation": [[...], ...]} with
// 0-based clockwise neighbour lists.
PlaneGraph read_rotation_json(std::istream& in);
PlaneGraph parse_rotation_json(const std::string& text);
std::string to_rotation_json(const PlaneGraph& g);

/// Reads every graph of a plantri planar_code stream (1-byte variant). The
/// ">>planar_code<<" header is accepted but optional. Graphs that are not
/// valid embeddings are reported through the thrown EmbeddingError.
std::vector<PlaneGraph> read_planar_code(std::istream& in);

/// Encodes graphs in planar_code, header included.
std::string to_planar_code(const std::vector<PlaneGraph>& graphs);

} // namespace planepaint
