#include "planepaint/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planepaint {

std::string to_string(Element e)
{
    const char* prefix = e.kind == ElementKind::vertex ? "v" : e.kind == ElementKind::edge ? "e" : "f";
    return prefix + std::to_string(e.index);
}

EmbeddingError::EmbeddingError(Kind kind, const std::string& what) :
    Error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

const char* to_string(EmbeddingError::Kind kind)
{
    switch (kind) {
    case EmbeddingError::Kind::not_simple: return "NotSimple";
    case EmbeddingError::Kind::disconnected: return "Disconnected";
    case EmbeddingError::Kind::euler_violation: return "EulerViolation";
    case EmbeddingError::Kind::face_not_simple_cycle: return "FaceNotSimpleCycle";
    case EmbeddingError::Kind::malformed: return "Malformed";
    }
    return "?";
}

PlaneGraph PlaneGraph::from_rotation_system(int n, std::vector<std::vector<int>> rotation)
{
    using K = EmbeddingError::Kind;
    if (n < 1)
        throw EmbeddingError(K::malformed, "a plane graph needs at least one vertex");
    if (static_cast<int>(rotation.size()) != n)
        throw EmbeddingError(K::malformed, "rotation has " + std::to_string(rotation.size()) + " lists for " +
                                               std::to_string(n) + " vertices");

    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int w : rotation[v]) {
            if (w < 0 || w >= n)
                throw EmbeddingError(K::malformed, "neighbour " + std::to_string(w) + " out of range");
            if (w == v)
                throw EmbeddingError(K::not_simple, "loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                throw EmbeddingError(K::not_simple, "repeated neighbour " + std::to_string(w) + " at vertex " +
                                                        std::to_string(v));
            if (std::find(rotation[w].begin(), rotation[w].end(), v) == rotation[w].end())
                throw EmbeddingError(K::not_simple, "adjacency " + std::to_string(v) + "-" + std::to_string(w) +
                                                        " is not symmetric");
            if (v < w)
                edges.emplace_back(v, w);
        }
    }

    PlaneGraph g;
    g.graph_ = Graph(n, std::move(edges));
    if (!g.graph_.connected())
        throw EmbeddingError(K::disconnected, "graph is not connected");
    g.rotation_ = std::move(rotation);

    // position of w in rotation[v], for successor lookup
    std::vector<std::map<int, int>> where(n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(g.rotation_[v].size()); ++i)
            where[v][g.rotation_[v][i]] = i;

    std::map<std::pair<int, int>, int> dart_face;
    for (int u = 0; u < n; ++u) {
        std::vector<int> heads = g.rotation_[u];
        std::sort(heads.begin(), heads.end());
        for (int v : heads) {
            if (dart_face.contains({u, v}))
                continue;
            const int f = static_cast<int>(g.faces_.size());
            std::vector<int> cycle;
            int a = u, b = v;
            while (!dart_face.contains({a, b})) {
                dart_face[{a, b}] = f;
                cycle.push_back(a);
                const auto& rot = g.rotation_[b];
                int c = rot[(where[b][a] + 1) % rot.size()];
                a = b;
                b = c;
            }
            g.faces_.push_back(std::move(cycle));
        }
    }

    const int e_count = g.edge_count();
    if (n - e_count + g.face_count() != 2)
        throw EmbeddingError(K::euler_violation, "V - E + F = " + std::to_string(n - e_count + g.face_count()) +
                                                     ", rotation system is not a sphere embedding");

    for (int f = 0; f < g.face_count(); ++f) {
        const auto& cycle = g.faces_[f];
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size() || cycle.size() < 3)
            throw EmbeddingError(K::face_not_simple_cycle,
                                 "face " + std::to_string(f) + " repeats a vertex on its boundary");
        std::vector<int> fe;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            fe.push_back(g.graph_.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]));
        g.face_edges_.push_back(std::move(fe));
    }

    for (const auto& e : g.graph_.edges()) {
        int f1 = dart_face.at({e.u, e.v});
        int f2 = dart_face.at({e.v, e.u});
        if (f1 == f2)
            throw EmbeddingError(K::face_not_simple_cycle, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                               " lies on a single face (bridge)");
        g.edge_faces_.emplace_back(f1, f2);
    }
    return g;
}

bool PlaneGraph::is_triangulation() const
{
    return std::all_of(faces_.begin(), faces_.end(), [](const auto& f) { return f.size() == 3; });
}

Incidences incidences(const PlaneGraph& g)
{
    Incidences inc;
    for (int f = 0; f < g.face_count(); ++f) {
        for (int v : g.face(f))
            inc.vertex_face.emplace_back(v, f);
        for (int e : g.face_edges(f))
            inc.edge_face.emplace_back(e, f);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        inc.vertex_edge.emplace_back(g.edges()[e].u, e);
        inc.vertex_edge.emplace_back(g.edges()[e].v, e);
    }
    std::sort(inc.vertex_face.begin(), inc.vertex_face.end());
    std::sort(inc.edge_face.begin(), inc.edge_face.end());
    std::sort(inc.vertex_edge.begin(), inc.vertex_edge.end());
    return inc;
}

std::vector<std::vector<int>> rotation_from_faces(int n, const std::vector<std::vector<int>>& faces)
{
    using K = EmbeddingError::Kind;
    // next[v][u] = w  when some face passes u -> v -> w
    std::vector<std::map<int, int>> next(n);
    for (const auto& f : faces) {
        const std::size_t len = f.size();
        for (std::size_t i = 0; i < len; ++i) {
            int u = f[i], v = f[(i + 1) % len], w = f[(i + 2) % len];
            if (u < 0 || u >= n || v < 0 || v >= n || w < 0 || w >= n)
                throw EmbeddingError(K::malformed, "face vertex out of range");
            if (!next[v].emplace(u, w).second)
                throw EmbeddingError(K::malformed, "directed edge " + std::to_string(u) + "->" + std::to_string(v) +
                                                       " appears in two faces");
        }
    }
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v) {
        if (next[v].empty())
            continue;
        int start = next[v].begin()->first;
        int cur = start;
        do {
            rotation[v].push_back(cur);
            auto it = next[v].find(cur);
            if (it == next[v].end())
                throw EmbeddingError(K::malformed, "faces do not close up around vertex " + std::to_string(v));
            cur = it->second;
        } while (cur != start && rotation[v].size() <= next[v].size());
        if (rotation[v].size() != next[v].size())
            throw EmbeddingError(K::malformed, "faces around vertex " + std::to_string(v) + " form several fans");
    }
    return rotation;
}

PlaneGraph dual(const PlaneGraph& g)
{
    const int r = g.face_count();
    // Rotation at face f lists the faces across its boundary edges; traversing
    // the face boundary reversed keeps the dual's orientation consistent.
    std::vector<std::vector<int>> rotation(r);
    for (int f = 0; f < r; ++f) {
        const auto& fe = g.face_edges(f);
        for (auto it = fe.rbegin(); it != fe.rend(); ++it) {
            auto [a, b] = g.edge_faces(*it);
            int other = a == f ? b : a;
            if (std::find(rotation[f].begin(), rotation[f].end(), other) != rotation[f].end())
                throw EmbeddingError(EmbeddingError::Kind::not_simple,
                                     "faces " + std::to_string(f) + " and " + std::to_string(other) +
                                         " share more than one edge");
            rotation[f].push_back(other);
        }
    }
    return PlaneGraph::from_rotation_system(r, std::move(rotation));
}

} // namespace planepaint
