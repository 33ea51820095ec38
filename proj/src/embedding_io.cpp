#include "planepaint/embedding.hpp"

#include <istream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace planepaint {

namespace {
    using K = EmbeddingError::Kind;

    const std::string planar_code_header = ">>planar_code<<";
}

PlaneGraph parse_rotation_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception& e) {
        throw EmbeddingError(K::malformed, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rotation"))
        throw EmbeddingError(K::malformed, "expected an object with \"n\" and \"rotation\"");
    try {
        int n = doc.at("n").get<int>();
        auto rotation = doc.at("rotation").get<std::vector<std::vector<int>>>();
        return PlaneGraph::from_rotation_system(n, std::move(rotation));
    }
    catch (const nlohmann::json::exception& e) {
        throw EmbeddingError(K::malformed, std::string("bad rotation system: ") + e.what());
    }
}

PlaneGraph read_rotation_json(std::istream& in)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_rotation_json(text);
}

std::string to_rotation_json(const PlaneGraph& g)
{
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["rotation"] = g.rotation();
    return doc.dump();
}

std::vector<PlaneGraph> read_planar_code(std::istream& in)
{
    std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::size_t pos = 0;
    if (bytes.compare(0, planar_code_header.size(), planar_code_header) == 0)
        pos = planar_code_header.size();
    else if (bytes.compare(0, 2, ">>") == 0)
        throw EmbeddingError(K::malformed, "unsupported planar_code header (only the 1-byte variant is read)");

    std::vector<PlaneGraph> graphs;
    while (pos < bytes.size()) {
        const int n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0)
            throw EmbeddingError(K::malformed, "graph " + std::to_string(graphs.size()) +
                                                   " uses the 2-byte encoding: more than 255 vertices");
        std::vector<std::vector<int>> rotation(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size())
                    throw EmbeddingError(K::malformed, "truncated planar_code stream");
                const int w = static_cast<unsigned char>(bytes[pos++]);
                if (w == 0)
                    break;
                if (w > n)
                    throw EmbeddingError(K::malformed, "neighbour " + std::to_string(w) + " exceeds vertex count");
                rotation[v].push_back(w - 1);
            }
        }
        graphs.push_back(PlaneGraph::from_rotation_system(n, std::move(rotation)));
    }
    return graphs;
}

std::string to_planar_code(const std::vector<PlaneGraph>& graphs)
{
    std::string out = planar_code_header;
    for (const auto& g : graphs) {
        if (g.vertex_count() > 255)
            throw EmbeddingError(K::malformed, "planar_code output limited to 255 vertices");
        out.push_back(static_cast<char>(g.vertex_count()));
        for (const auto& rot : g.rotation()) {
            for (int w : rot)
                out.push_back(static_cast<char>(w + 1));
            out.push_back('\0');
        }
    }
    return out;
}

} // namespace planepaint
