#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "planepaint/errors.hpp"

namespace planepaint {

/// Unordered vertex pair stored with first < second.
struct Edge
{
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

class GraphError : public Error
{
public:
    using Error::Error;
};

/// Simple undirected graph on vertices 0..n-1 with edges kept in canonical
/// (lexicographic) order. Immutable after construction.
class Graph
{
public:
    Graph() = default;

    /// Throws GraphError on loops, out-of-range endpoints or parallel edges.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const int> neighbours(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;
    bool adjacent(int a, int b) const;

    /// Edge index of {a,b}, or -1.
    int edge_index(int a, int b) const;

    /// Graph on the same vertex set keeping only the listed edge indices.
    Graph edge_subgraph(std::span<const std::size_t> edge_indices) const;

    /// Induced subgraph on `keep` (ascending); vertex i of the result is keep[i].
    Graph induced(std::span<const int> keep) const;

    bool connected() const;

    /// Fills side[v] in {0,1} and returns true when the graph is bipartite.
    bool bipartition(std::vector<int>& side) const;
    bool is_bipartite() const
    {
        std::vector<int> side;
        return bipartition(side);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Complete graph K_n, cycle C_n and edgeless graph; mainly for tests and oracles.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph edgeless_graph(int n);

} // namespace planepaint
