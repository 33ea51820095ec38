#include "planepaint/polynomial.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace planepaint {

DegreeVector Orientation::indegrees(const Graph& h) const
{
    std::vector<int> d(h.order(), 0);
    for (int v : head)
        ++d[v];
    return DegreeVector(std::move(d));
}

int Orientation::sign(const Graph& h) const
{
    int s = 1;
    for (std::size_t i = 0; i < head.size(); ++i)
        if (head[i] == h.edges()[i].v)
            s = -s;
    return s;
}

bool Orientation::acyclic(const Graph& h) const
{
    const int n = h.order();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (std::size_t i = 0; i < head.size(); ++i) {
        const auto& e = h.edges()[i];
        int tail = head[i] == e.u ? e.v : e.u;
        out[tail].push_back(head[i]);
        ++indeg[head[i]];
    }
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0)
                ready.push(w);
    }
    return seen == n;
}

std::optional<Orientation> orient_within(const Graph& h, std::span<const int> caps, std::optional<unsigned> seed)
{
    const int n = h.order();
    const auto& es = h.edges();
    Orientation o;
    o.head.resize(es.size());
    std::vector<int> load(n, 0);
    std::vector<std::vector<std::size_t>> in_edges(n);

    std::vector<std::size_t> order(es.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::mt19937 rng(seed.value_or(0));
    if (seed)
        std::shuffle(order.begin(), order.end(), rng);

    for (auto i : order) {
        int a = es[i].u, b = es[i].v;
        if (seed && (rng() & 1))
            std::swap(a, b);
        int to = (caps[a] - load[a] >= caps[b] - load[b]) ? a : b;
        o.head[i] = to;
        ++load[to];
        in_edges[to].push_back(i);
    }

    // Move excess load along reversed edges until every vertex fits its cap:
    // reversing a path v <- w1 <- ... <- wk shifts one unit from v to wk.
    for (int v = 0; v < n; ++v) {
        while (load[v] > caps[v]) {
            std::vector<std::ptrdiff_t> via(n, -1);
            std::vector<char> seen(n, 0);
            std::queue<int> todo;
            todo.push(v);
            seen[v] = 1;
            int found = -1;
            while (!todo.empty() && found < 0) {
                int x = todo.front();
                todo.pop();
                for (auto i : in_edges[x]) {
                    int tail = es[i].u == x ? es[i].v : es[i].u;
                    if (seen[tail])
                        continue;
                    seen[tail] = 1;
                    via[tail] = static_cast<std::ptrdiff_t>(i);
                    if (load[tail] < caps[tail]) {
                        found = tail;
                        break;
                    }
                    todo.push(tail);
                }
            }
            if (found < 0)
                return std::nullopt;
            for (int y = found; y != v;) {
                auto i = static_cast<std::size_t>(via[y]);
                int x = o.head[i];
                auto& list = in_edges[x];
                list.erase(std::find(list.begin(), list.end(), i));
                o.head[i] = y;
                in_edges[y].push_back(i);
                ++load[y];
                --load[x];
                y = x;
            }
        }
    }
    return o;
}

MinMaxOrientation min_max_indegree_orientation(const Graph& h)
{
    const int n = h.order();
    const int m = static_cast<int>(h.size());
    if (m == 0)
        return {Orientation{}, 0};
    int lo = (m + n - 1) / n, hi = h.max_degree();
    std::optional<Orientation> best;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        std::vector<int> caps(n, mid);
        if (auto o = orient_within(h, caps)) {
            best = std::move(o);
            hi = mid;
        }
        else
            lo = mid + 1;
    }
    if (!best || best->indegrees(h).max() != lo) {
        std::vector<int> caps(n, lo);
        best = orient_within(h, caps);
    }
    return {std::move(*best), lo};
}

int bipartite_at(const Graph& h)
{
    if (!h.is_bipartite())
        throw NotBipartite();
    return min_max_indegree_orientation(h).max_indegree + 1;
}

DegeneracyOrientation degeneracy_orientation(const Graph& h)
{
    const int n = h.order();
    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        degree[v] = h.degree(v);

    DegeneracyOrientation r;
    r.orientation.head.assign(h.size(), -1);
    std::vector<int> indeg(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int w = 0; w < n; ++w)
            if (!removed[w] && (v < 0 || degree[w] < degree[v]))
                v = w;
        removed[v] = 1;
        indeg[v] = degree[v];
        r.degeneracy = std::max(r.degeneracy, degree[v]);
        for (int w : h.neighbours(v))
            if (!removed[w]) {
                r.orientation.head[static_cast<std::size_t>(h.edge_index(v, w))] = v;
                --degree[w];
            }
    }
    r.indegrees = DegreeVector(std::move(indeg));
    return r;
}

} // namespace planepaint
