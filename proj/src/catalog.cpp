#include "planepaint/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <queue>

namespace planepaint {

namespace {
    std::set<std::string> compute_tags(const PlaneGraph& g)
    {
        std::set<std::string> tags;
        const Graph& h = g.graph();
        if (h.is_bipartite())
            tags.insert("bipartite");
        if (g.is_triangulation())
            tags.insert("triangulation");
        if (std::all_of(g.faces().begin(), g.faces().end(), [](const auto& f) { return f.size() == 4; }))
            tags.insert("quadrangulation");
        bool cubic = true, mindeg3 = true;
        for (int v = 0; v < h.order(); ++v) {
            cubic = cubic && h.degree(v) == 3;
            mindeg3 = mindeg3 && h.degree(v) >= 3;
        }
        if (cubic)
            tags.insert("cubic");
        if (mindeg3)
            tags.insert("mindeg3");
        return tags;
    }

    std::vector<CatalogEntry> build_catalog()
    {
        std::vector<CatalogEntry> c;
        c.push_back(make_entry("K3", {}, cycle_embedding(3)));
        c.push_back(make_entry("C4", {{"n", 4}}, cycle_embedding(4)));
        c.push_back(make_entry("C5", {{"n", 5}}, cycle_embedding(5)));
        c.push_back(make_entry("C6", {{"n", 6}}, cycle_embedding(6)));
        c.push_back(make_entry("K4", {}, apollonian_embedding(1)));
        c.push_back(make_entry("K2,3", {{"n", 3}}, complete_bipartite_2n_embedding(3)));
        c.push_back(make_entry("K2,4", {{"n", 4}}, complete_bipartite_2n_embedding(4)));
        c.push_back(make_entry("W4", {{"rim", 4}}, wheel_embedding(4)));
        c.push_back(make_entry("W5", {{"rim", 5}}, wheel_embedding(5)));
        c.push_back(make_entry("W6", {{"rim", 6}}, wheel_embedding(6)));
        c.push_back(make_entry("prism3", {{"n", 3}}, prism_embedding(3)));
        c.push_back(make_entry("Q3", {{"n", 4}}, prism_embedding(4)));
        c.push_back(make_entry("prism5", {{"n", 5}}, prism_embedding(5)));
        c.push_back(make_entry("prism6", {{"n", 6}}, prism_embedding(6)));
        c.push_back(make_entry("octahedron", {}, dual(prism_embedding(4))));
        c.push_back(make_entry("icosahedron", {}, icosahedron_embedding()));
        c.push_back(make_entry("dodecahedron", {}, dual(icosahedron_embedding())));
        c.push_back(make_entry("apollonian2", {{"levels", 2}}, apollonian_embedding(2)));
        c.push_back(make_entry("apollonian3", {{"levels", 3}}, apollonian_embedding(3)));
        return c;
    }
}

CatalogEntry make_entry(std::string name, std::map<std::string, int> parameters, PlaneGraph graph)
{
    auto tags = compute_tags(graph);
    return CatalogEntry{std::move(name), std::move(parameters), std::move(graph), std::move(tags)};
}

PlaneGraph from_face_list(int n, std::vector<std::vector<int>> faces)
{
    // faces containing each undirected edge
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_edge;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i) {
            int a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
            by_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    auto traverses = [&](std::size_t f, int a, int b) {
        const auto& face = faces[f];
        for (std::size_t i = 0; i < face.size(); ++i)
            if (face[i] == a && face[(i + 1) % face.size()] == b)
                return true;
        return false;
    };

    std::vector<char> fixed(faces.size(), 0);
    for (std::size_t root = 0; root < faces.size(); ++root) {
        if (fixed[root])
            continue;
        fixed[root] = 1;
        std::queue<std::size_t> todo;
        todo.push(root);
        while (!todo.empty()) {
            auto f = todo.front();
            todo.pop();
            const auto face = faces[f];
            for (std::size_t i = 0; i < face.size(); ++i) {
                int a = face[i], b = face[(i + 1) % face.size()];
                for (auto g : by_edge[{std::min(a, b), std::max(a, b)}]) {
                    if (g == f || fixed[g])
                        continue;
                    if (traverses(g, a, b))
                        std::reverse(faces[g].begin(), faces[g].end());
                    fixed[g] = 1;
                    todo.push(g);
                }
            }
        }
    }
    return PlaneGraph::from_rotation_system(n, rotation_from_faces(n, faces));
}

PlaneGraph cycle_embedding(int n)
{
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i)
        f[i] = i;
    std::vector<int> back(f.rbegin(), f.rend());
    return from_face_list(n, {f, back});
}

PlaneGraph wheel_embedding(int rim)
{
    std::vector<std::vector<int>> faces;
    std::vector<int> outer;
    for (int i = 0; i < rim; ++i) {
        faces.push_back({rim, i, (i + 1) % rim});
        outer.push_back(i);
    }
    faces.push_back(outer);
    return from_face_list(rim + 1, std::move(faces));
}

PlaneGraph prism_embedding(int n)
{
    std::vector<std::vector<int>> faces;
    std::vector<int> inner, outer;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        faces.push_back({i, j, n + j, n + i});
        inner.push_back(i);
        outer.push_back(n + i);
    }
    faces.push_back(inner);
    faces.push_back(outer);
    return from_face_list(2 * n, std::move(faces));
}

PlaneGraph complete_bipartite_2n_embedding(int n)
{
    // poles 0 and 1, middle vertices 2..n+1 around them
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i)
        faces.push_back({0, 2 + i, 1, 2 + (i + 1) % n});
    return from_face_list(n + 2, std::move(faces));
}

PlaneGraph icosahedron_embedding()
{
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, u2 = 1 + (i + 1) % 5;
        int l = 6 + i, l2 = 6 + (i + 1) % 5;
        faces.push_back({0, u, u2});
        faces.push_back({u, u2, l});
        faces.push_back({u2, l2, l});
        faces.push_back({11, l, l2});
    }
    return from_face_list(12, std::move(faces));
}

PlaneGraph apollonian_embedding(int levels)
{
    std::vector<std::vector<int>> inner{{0, 1, 2}};
    const std::vector<int> outer{0, 2, 1};
    int n = 3;
    for (int level = 0; level < levels; ++level) {
        std::vector<std::vector<int>> refined;
        for (const auto& f : inner) {
            int x = n++;
            refined.push_back({f[0], f[1], x});
            refined.push_back({f[1], f[2], x});
            refined.push_back({f[2], f[0], x});
        }
        inner = std::move(refined);
    }
    inner.push_back(outer);
    return from_face_list(n, std::move(inner));
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name)
{
    std::string key = name;
    if (key == "prism4" || key == "cube")
        key = "Q3";
    if (key == "tetrahedron" || key == "apollonian1")
        key = "K4";
    if (key == "C3")
        key = "K3";
    for (const auto& e : catalog())
        if (e.name == key)
            return e;
    throw Error("unknown catalog graph \"" + name + "\"");
}

std::vector<CatalogEntry> load_entries(const std::string& source)
{
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        std::string rest = source.substr(prefix.size());
        if (rest == "all")
            return catalog();
        std::vector<CatalogEntry> out;
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto plus = rest.find('+', start);
            auto name = rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            out.push_back(catalog_entry(name));
            if (plus == std::string::npos)
                break;
            start = plus + 1;
        }
        return out;
    }

    std::ifstream in(source, std::ios::binary);
    if (!in)
        throw Error("cannot open " + source);
    const auto stem = std::filesystem::path(source).stem().string();
    char first = 0;
    in.get(first);
    in.seekg(0);
    if (first == '{')
        return {make_entry(stem, {}, read_rotation_json(in))};
    auto graphs = read_planar_code(in);
    std::vector<CatalogEntry> out;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out.push_back(make_entry(stem + "#" + std::to_string(i), {{"index", static_cast<int>(i)}}, std::move(graphs[i])));
    return out;
}

} // namespace planepaint
