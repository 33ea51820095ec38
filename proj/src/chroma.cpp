#include "planepaint/chroma.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

namespace planepaint {

namespace {
    using Mask = std::uint64_t;

    std::vector<std::uint32_t> masks(const Graph& h)
    {
        std::vector<std::uint32_t> adj(h.order(), 0);
        for (auto e : h.edges()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
        return adj;
    }

    // backtracking over the vertex with fewest remaining colours
    bool colour_from(const std::vector<std::uint32_t>& adj, std::vector<Mask>& avail, std::uint32_t left,
                     std::vector<int>& colour)
    {
        if (!left)
            return true;
        int best = -1;
        for (std::uint32_t m = left; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (best < 0 || std::popcount(avail[v]) < std::popcount(avail[best]))
                best = v;
        }
        if (!avail[best])
            return false;
        for (Mask c = avail[best]; c; c &= c - 1) {
            int col = std::countr_zero(c);
            Mask bit = Mask{1} << col;
            std::vector<int> touched;
            for (std::uint32_t m = adj[best] & left; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (avail[w] & bit) {
                    avail[w] &= ~bit;
                    touched.push_back(w);
                }
            }
            colour[best] = col;
            bool ok = colour_from(adj, avail, left & ~(1u << best), colour);
            for (int w : touched)
                avail[w] |= bit;
            if (ok)
                return true;
        }
        return false;
    }

    // k-core: repeatedly drop vertices of degree below k
    std::vector<int> core(const Graph& h, int k)
    {
        std::vector<char> alive(h.order(), 1);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < h.order(); ++v) {
                if (!alive[v])
                    continue;
                int d = 0;
                for (int w : h.neighbours(v))
                    d += alive[w];
                if (d < k) {
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        std::vector<int> keep;
        for (int v = 0; v < h.order(); ++v)
            if (alive[v])
                keep.push_back(v);
        return keep;
    }
}

int chromatic_number(const Graph& h)
{
    const int n = h.order();
    if (n > 16)
        throw SizeLimitExceeded("chromatic number limited to 16 vertices");
    if (n == 0)
        return 0;
    auto adj = masks(h);
    int best = n + 1;
    std::vector<int> colour(n, -1);

    std::function<void(int, int)> branch = [&](int coloured, int used) {
        if (used >= best)
            return;
        if (coloured == n) {
            best = used;
            return;
        }
        // DSATUR: most distinct neighbour colours, then highest degree
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            std::uint32_t seen = 0;
            for (std::uint32_t m = adj[v]; m; m &= m - 1) {
                int c = colour[std::countr_zero(m)];
                if (c >= 0)
                    seen |= 1u << c;
            }
            int sat = std::popcount(seen);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint32_t blocked = 0;
        for (std::uint32_t m = adj[pick]; m; m &= m - 1) {
            int c = colour[std::countr_zero(m)];
            if (c >= 0)
                blocked |= 1u << c;
        }
        for (int c = 0; c <= used && c < best - 1; ++c) {
            if (blocked >> c & 1)
                continue;
            colour[pick] = c;
            branch(coloured + 1, std::max(used, c + 1));
            colour[pick] = -1;
        }
    };
    branch(0, 0);
    return best;
}

std::optional<std::vector<int>> list_colouring(const Graph& h, const ListAssignment& lists)
{
    const int n = h.order();
    if (static_cast<int>(lists.size()) != n)
        throw PreconditionFailed("one list per vertex required");
    if (n > 32)
        throw SizeLimitExceeded("list colouring limited to 32 vertices");
    // rename colours to 0..63
    std::vector<int> names;
    for (const auto& l : lists)
        names.insert(names.end(), l.begin(), l.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.size() > 64)
        throw SizeLimitExceeded("list colouring limited to 64 distinct colours");
    std::vector<Mask> avail(n, 0);
    for (int v = 0; v < n; ++v)
        for (int c : lists[v])
            avail[v] |= Mask{1} << (std::lower_bound(names.begin(), names.end(), c) - names.begin());
    std::vector<int> colour(n, -1);
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    if (!colour_from(masks(h), avail, all, colour))
        return std::nullopt;
    for (auto& c : colour)
        c = names[c];
    return colour;
}

int degeneracy(const Graph& h)
{
    int d = 0;
    while (!core(h, d + 1).empty())
        ++d;
    return d;
}

ChoosabilityResult k_choosability(const Graph& h, int k, int size_limit)
{
    if (h.order() > size_limit)
        throw SizeLimitExceeded("choosability limited to " + std::to_string(size_limit) + " vertices");
    ChoosabilityResult result;
    if (h.order() == 0) {
        result.choosable = true;
        return result;
    }
    if (k <= 0) {
        result.bad_lists = ListAssignment(h.order());
        return result;
    }
    // vertices of degree below k can always be coloured last
    auto keep = core(h, k);
    if (keep.empty()) {
        result.choosable = true;
        return result;
    }
    const Graph g = h.induced(keep);
    const int n = g.order();

    auto widen = [&](const std::vector<Mask>& lists) {
        // lift a bad assignment on the core back to h: other vertices get
        // fresh colours of their own
        ListAssignment out(h.order());
        int fresh = k * h.order();
        std::vector<int> at(h.order(), -1);
        for (int i = 0; i < n; ++i)
            at[keep[i]] = i;
        for (int v = 0; v < h.order(); ++v) {
            if (at[v] >= 0) {
                for (Mask m = lists[at[v]]; m; m &= m - 1)
                    out[v].push_back(std::countr_zero(m));
            }
            else
                for (int i = 0; i < k; ++i)
                    out[v].push_back(fresh++);
        }
        return out;
    };

    if (k < chromatic_number(g)) {
        result.bad_lists = widen(std::vector<Mask>(n, (Mask{1} << k) - 1));
        return result;
    }
    if (k * n > 64)
        throw SizeLimitExceeded("colour universe exceeds 64");

    // breadth-first order so that neighbours receive lists early
    std::vector<int> order, pos(n, -1);
    for (int root = 0; root < n; ++root) {
        if (pos[root] >= 0)
            continue;
        pos[root] = static_cast<int>(order.size());
        order.push_back(root);
        for (std::size_t i = pos[root]; i < order.size(); ++i)
            for (int w : g.neighbours(order[i]))
                if (pos[w] < 0) {
                    pos[w] = static_cast<int>(order.size());
                    order.push_back(w);
                }
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (auto e : g.edges()) {
        adj[pos[e.u]] |= 1u << pos[e.v];
        adj[pos[e.v]] |= 1u << pos[e.u];
    }
    // last position among each vertex's neighbours
    std::vector<int> last(n, -1);
    for (int i = 0; i < n; ++i)
        last[i] = adj[i] ? 31 - std::countl_zero(adj[i]) : -1;

    std::vector<Mask> lists(n, 0);
    bool bad = false;

    // a colour no neighbour shares lets its vertex drop out, so a bad
    // assignment exists without such colours
    auto shared = [&](int i) {
        Mask around = 0;
        for (std::uint32_t m = adj[i]; m; m &= m - 1)
            around |= lists[std::countr_zero(m)];
        return (lists[i] & ~around) == 0;
    };

    std::function<void(int, int)> assign = [&](int i, int used) {
        if (bad)
            return;
        if (i == n) {
            ++result.assignments_checked;
            std::vector<Mask> avail = lists;
            std::vector<int> colour(n, -1);
            if (!colour_from(adj, avail, (n == 32 ? ~0u : (1u << n) - 1), colour))
                bad = true;
            return;
        }
        bool later = last[i] > i;
        for (int from_used = std::min(k, used); from_used >= 0 && !bad; --from_used) {
            int fresh = k - from_used;
            if (fresh > 0 && !later)
                continue;
            // combinations of from_used colours among 0..used-1
            std::vector<int> pick(from_used);
            for (int j = 0; j < from_used; ++j)
                pick[j] = j;
            while (!bad) {
                Mask l = 0;
                for (int c : pick)
                    l |= Mask{1} << c;
                for (int j = 0; j < fresh; ++j)
                    l |= Mask{1} << (used + j);
                lists[i] = l;
                bool ok = true;
                for (std::uint32_t m = adj[i] | (1u << i); m && ok; m &= m - 1) {
                    int j = std::countr_zero(m);
                    if (j <= i && last[j] <= i)
                        ok = shared(j);
                }
                if (ok)
                    assign(i + 1, used + fresh);
                // next combination
                int j = from_used - 1;
                while (j >= 0 && pick[j] == used - from_used + j)
                    --j;
                if (j < 0)
                    break;
                ++pick[j];
                for (int t = j + 1; t < from_used; ++t)
                    pick[t] = pick[t - 1] + 1;
            }
        }
        if (!bad)
            lists[i] = 0;
    };
    assign(0, 0);

    result.choosable = !bad;
    if (bad) {
        std::vector<Mask> back(n);
        for (int v = 0; v < n; ++v)
            back[v] = lists[pos[v]];
        result.bad_lists = widen(back);
    }
    return result;
}

bool is_k_choosable(const Graph& h, int k, int size_limit)
{
    return k_choosability(h, k, size_limit).choosable;
}

std::optional<int> choice_number(const Graph& h, int max_k, int size_limit)
{
    if (h.order() > size_limit)
        throw SizeLimitExceeded("choosability limited to " + std::to_string(size_limit) + " vertices");
    if (h.order() == 0)
        return 0;
    for (int k = std::max(1, chromatic_number(h)); k <= max_k; ++k)
        if (is_k_choosable(h, k, size_limit))
            return k;
    return std::nullopt;
}

} // namespace planepaint
