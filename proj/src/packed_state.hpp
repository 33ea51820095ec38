#pragma once

// Internal: packed small-integer vectors and the edge schedule shared by the
// coefficient search and the truncated expansion.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "planepaint/graph.hpp"

namespace planepaint::detail {

/// Up to 256 bits of fixed-width unsigned fields. Field width is a power of
/// two so no field straddles a word.
class PackedKey
{
public:
    static constexpr int total_bits = 256;

    int get(int slot, int bits) const
    {
        const int off = slot * bits;
        return static_cast<int>((words_[off >> 6] >> (off & 63)) & ((std::uint64_t{1} << bits) - 1));
    }

    void set(int slot, int bits, int value)
    {
        const int off = slot * bits;
        const std::uint64_t mask = ((std::uint64_t{1} << bits) - 1) << (off & 63);
        auto& w = words_[off >> 6];
        w = (w & ~mask) | ((static_cast<std::uint64_t>(value) << (off & 63)) & mask);
    }

    auto operator<=>(const PackedKey&) const = default;

private:
    std::array<std::uint64_t, 4> words_{};
};

/// Smallest power-of-two field width holding max_value.
inline int field_bits(int max_value)
{
    int need = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(max_value, 1)))));
    return static_cast<int>(std::bit_ceil(static_cast<unsigned>(need)));
}

struct EdgeStep
{
    int u = 0, v = 0;                // canonical endpoints, u < v
    int slot_u = 0, slot_v = 0;      // frontier slots
    bool open_u = false, open_v = false;
    int rem_u = 0, rem_v = 0;        // undecided edges at u, v after this step
};

/// Edges in frontier order: vertices are placed greedily (most already-placed
/// neighbours first) and each edge is decided when its later endpoint is
/// placed. A vertex occupies a slot from its first edge to its last.
struct EdgeSchedule
{
    std::vector<int> vertex_order;
    std::vector<EdgeStep> steps;
    int slots = 0;
};

EdgeSchedule make_schedule(const Graph& h);

/// Sorts by key, sums equal keys and drops zero counts.
template <class Count>
void merge_states(std::vector<std::pair<PackedKey, Count>>& states)
{
    std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < states.size();) {
        std::size_t j = i;
        Count total = 0;
        while (j < states.size() && states[j].first == states[i].first)
            total += states[j++].second;
        if (total != 0)
            states[out++] = {states[i].first, std::move(total)};
        i = j;
    }
    states.resize(out);
}

} // namespace planepaint::detail
