#include "packed_state.hpp"

#include <functional>
#include <limits>
#include <tuple>

namespace planepaint::detail {

namespace {
    std::vector<int> greedy_order(const Graph& h, int start)
    {
        const int n = h.order();
        std::vector<int> order;
        std::vector<char> placed(n, 0);
        std::vector<int> placed_neighbours(n, 0);
        auto place = [&](int v) {
            placed[v] = 1;
            order.push_back(v);
            for (int w : h.neighbours(v))
                ++placed_neighbours[w];
        };
        place(start);
        while (static_cast<int>(order.size()) < n) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best < 0 ||
                    std::tuple(placed_neighbours[v], -(h.degree(v) - placed_neighbours[v]), -v) >
                        std::tuple(placed_neighbours[best], -(h.degree(best) - placed_neighbours[best]), -best))
                    best = v;
            }
            place(best);
        }
        return order;
    }

    EdgeSchedule schedule_for(const Graph& h, std::vector<int> order)
    {
        const int n = h.order();
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;

        std::vector<std::size_t> edge_ids(h.size());
        for (std::size_t i = 0; i < edge_ids.size(); ++i)
            edge_ids[i] = i;
        const auto& es = h.edges();
        std::sort(edge_ids.begin(), edge_ids.end(), [&](std::size_t a, std::size_t b) {
            auto ka = std::pair(std::max(pos[es[a].u], pos[es[a].v]), std::min(pos[es[a].u], pos[es[a].v]));
            auto kb = std::pair(std::max(pos[es[b].u], pos[es[b].v]), std::min(pos[es[b].u], pos[es[b].v]));
            return ka < kb;
        });

        EdgeSchedule s;
        s.vertex_order = std::move(order);
        std::vector<int> remaining(n), slot(n, -1);
        for (int v = 0; v < n; ++v)
            remaining[v] = h.degree(v);
        std::vector<int> free_slots;
        auto acquire = [&](int v) {
            if (!free_slots.empty()) {
                slot[v] = free_slots.back();
                free_slots.pop_back();
            }
            else
                slot[v] = s.slots++;
        };
        for (auto id : edge_ids) {
            EdgeStep step;
            step.u = es[id].u;
            step.v = es[id].v;
            step.open_u = slot[step.u] < 0;
            if (step.open_u)
                acquire(step.u);
            step.open_v = slot[step.v] < 0;
            if (step.open_v)
                acquire(step.v);
            step.slot_u = slot[step.u];
            step.slot_v = slot[step.v];
            step.rem_u = --remaining[step.u];
            step.rem_v = --remaining[step.v];
            // slots are released only after both endpoints are read
            if (step.rem_u == 0)
                free_slots.push_back(slot[step.u]);
            if (step.rem_v == 0)
                free_slots.push_back(slot[step.v]);
            // keep free-list order deterministic and prefer low slots
            std::sort(free_slots.begin(), free_slots.end(), std::greater<>());
            s.steps.push_back(step);
        }
        return s;
    }
}

EdgeSchedule make_schedule(const Graph& h)
{
    if (h.order() == 0)
        return {};
    EdgeSchedule best;
    long best_cost = std::numeric_limits<long>::max();
    for (int start = 0; start < h.order(); ++start) {
        auto s = schedule_for(h, greedy_order(h, start));
        // open-slot count summed over steps, weighted by the peak
        long width = 0, total = 0;
        int open = 0;
        for (const auto& st : s.steps) {
            open += st.open_u + st.open_v;
            total += open;
            width = std::max<long>(width, open);
            open -= (st.rem_u == 0) + (st.rem_v == 0);
        }
        long cost = width * 1000000 + total;
        if (cost < best_cost) {
            best_cost = cost;
            best = std::move(s);
        }
    }
    return best;
}

} // namespace planepaint::detail
