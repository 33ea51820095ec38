#include "planepaint/paint.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace planepaint {

namespace {
    using Masks = std::vector<std::uint32_t>;

    /// Rank values so that equal values share a colour and colours follow
    /// the sorted order of the values.
    template <class T>
    std::vector<int> rank(const std::vector<T>& values)
    {
        std::vector<T> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> r(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
        return r;
    }

    int count_colours(const std::vector<int>& c)
    {
        return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    // colour refinement to the coarsest equitable partition finer than c
    std::vector<int> refine(const Masks& adj, std::vector<int> c)
    {
        const int n = static_cast<int>(adj.size());
        c = rank(c);
        int colours = count_colours(c);
        while (true) {
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                sig[v].push_back(c[v]);
                std::vector<int> around;
                for (std::uint32_t m = adj[v]; m; m &= m - 1)
                    around.push_back(c[std::countr_zero(m)]);
                std::sort(around.begin(), around.end());
                sig[v].insert(sig[v].end(), around.begin(), around.end());
            }
            auto next = rank(sig);
            int k = count_colours(next);
            c = std::move(next);
            if (k == colours)
                return c;
            colours = k;
        }
    }

    struct Search
    {
        const Masks& adj;
        const std::vector<int>& label;
        std::string best;
        std::vector<int> best_order;

        std::string encode(const std::vector<int>& order) const
        {
            const int n = static_cast<int>(order.size());
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i)
                pos[order[i]] = i;
            std::string key;
            key.push_back(static_cast<char>(n));
            for (int v : order)
                key.push_back(static_cast<char>(std::clamp(label[v], 0, 255)));
            unsigned char byte = 0;
            int bits = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    byte = static_cast<unsigned char>(byte << 1 | (adj[order[i]] >> order[j] & 1));
                    if (++bits == 8) {
                        key.push_back(static_cast<char>(byte));
                        byte = 0;
                        bits = 0;
                    }
                }
            if (bits)
                key.push_back(static_cast<char>(byte << (8 - bits)));
            return key;
        }

        void run(std::vector<int> c)
        {
            c = refine(adj, std::move(c));
            const int n = static_cast<int>(adj.size());
            if (count_colours(c) == n) {
                std::vector<int> order(n);
                for (int v = 0; v < n; ++v)
                    order[c[v]] = v;
                auto key = encode(order);
                if (best_order.empty() || key < best) {
                    best = std::move(key);
                    best_order = std::move(order);
                }
                return;
            }
            // first colour class with more than one vertex
            std::vector<int> size(n, 0);
            for (int v = 0; v < n; ++v)
                ++size[c[v]];
            int target = 0;
            while (size[target] < 2)
                ++target;
            std::vector<int> cell;
            for (int v = 0; v < n; ++v)
                if (c[v] == target)
                    cell.push_back(v);
            // twins (same neighbourhood apart from each other) are swapped by
            // an automorphism, so one of them stands for all
            std::vector<int> tried;
            for (int v : cell) {
                bool twin = false;
                for (int u : tried) {
                    std::uint32_t both = (1u << u) | (1u << v);
                    twin = twin || (adj[u] & ~both) == (adj[v] & ~both);
                }
                if (twin)
                    continue;
                tried.push_back(v);
                std::vector<int> split(n);
                for (int w = 0; w < n; ++w)
                    split[w] = 2 * c[w] + (w == v ? 0 : 1);
                run(std::move(split));
            }
        }
    };
}

CanonicalForm canonical_form(const std::vector<std::uint32_t>& adjacency, const std::vector<int>& colour)
{
    if (adjacency.size() > 32)
        throw SizeLimitExceeded("canonical form supports at most 32 vertices");
    if (adjacency.empty())
        return {std::string(1, '\0'), {}};
    Search s{adjacency, colour, {}, {}};
    s.run(colour);
    return {std::move(s.best), std::move(s.best_order)};
}

} // namespace planepaint
