#include "planepaint/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace planepaint {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.u == e.v)
            throw GraphError("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw GraphError("edge endpoint out of range");
        if (i > 0 && edges_[i - 1] == e)
            throw GraphError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& a : adjacency_)
        std::sort(a.begin(), a.end());
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adjacency_)
        d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::adjacent(int a, int b) const
{
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

int Graph::edge_index(int a, int b) const
{
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::edge_subgraph(std::span<const std::size_t> edge_indices) const
{
    std::vector<Edge> kept;
    kept.reserve(edge_indices.size());
    for (auto i : edge_indices)
        kept.push_back(edges_.at(i));
    return Graph(n_, std::move(kept));
}

Graph Graph::induced(std::span<const int> keep) const
{
    std::vector<int> position(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        position[keep[i]] = static_cast<int>(i);
    std::vector<Edge> kept;
    for (const auto& e : edges_)
        if (position[e.u] >= 0 && position[e.v] >= 0)
            kept.emplace_back(position[e.u], position[e.v]);
    return Graph(static_cast<int>(keep.size()), std::move(kept));
}

bool Graph::connected() const
{
    if (n_ == 0)
        return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                todo.push(w);
            }
    }
    return reached == n_;
}

bool Graph::bipartition(std::vector<int>& side) const
{
    side.assign(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<int> todo;
        todo.push(s);
        while (!todo.empty()) {
            int v = todo.front();
            todo.pop();
            for (int w : adjacency_[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    todo.push(w);
                }
                else if (side[w] == side[v]) {
                    side.clear();
                    return false;
                }
            }
        }
    }
    return true;
}

Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n)
{
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        e.emplace_back(a, (a + 1) % n);
    return Graph(n, std::move(e));
}

Graph edgeless_graph(int n)
{
    return Graph(n, {});
}

} // namespace planepaint
