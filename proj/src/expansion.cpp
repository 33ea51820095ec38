#include "planepaint/polynomial.hpp"

#include "packed_state.hpp"

namespace planepaint {

using detail::PackedKey;

Expansion capped_expansion(const Graph& h, std::span<const int> caps, const Budget& budget)
{
    const int n = h.order();
    if (static_cast<int>(caps.size()) != n)
        throw PreconditionFailed("cap vector length differs from vertex count");
    for (int c : caps)
        if (c < 0)
            return {};

    int max_cap = 0;
    for (int v = 0; v < n; ++v)
        max_cap = std::max(max_cap, std::min(caps[v], h.degree(v)));
    const int bits = detail::field_bits(max_cap);
    if (n * bits > PackedKey::total_bits)
        throw BudgetExceeded(std::to_string(n) + " variables do not fit the packed monomial store");

    // Exponents only grow as factors are multiplied in, so a monomial over a
    // cap can be discarded as soon as it appears.
    const auto schedule = detail::make_schedule(h);
    std::vector<std::pair<PackedKey, std::int64_t>> states{{PackedKey{}, 1}};
    std::vector<std::pair<PackedKey, SignedCount>> wide;
    const bool narrow = h.size() <= 62;
    if (!narrow)
        for (auto& [k, c] : states)
            wide.emplace_back(k, c);

    auto advance = [&](auto& current, const detail::EdgeStep& st) {
        std::remove_reference_t<decltype(current)> next;
        next.reserve(current.size() * 2);
        std::size_t visited = 0;
        for (auto& [key, count] : current) {
            if ((++visited & 0xffff) == 0)
                budget.check_time();
            const int eu = key.get(st.u, bits), ev = key.get(st.v, bits);
            if (eu < caps[st.u]) {
                PackedKey k = key;
                k.set(st.u, bits, eu + 1);
                next.emplace_back(k, count);
            }
            if (ev < caps[st.v]) {
                PackedKey k = key;
                k.set(st.v, bits, ev + 1);
                next.emplace_back(k, -count);
            }
        }
        detail::merge_states(next);
        if (next.size() > budget.max_live_monomials)
            throw BudgetExceeded("truncated expansion holds " + std::to_string(next.size()) + " monomials");
        current = std::move(next);
    };

    for (const auto& st : schedule.steps) {
        budget.check_time();
        if (narrow)
            advance(states, st);
        else
            advance(wide, st);
    }

    Expansion out;
    auto emit = [&](const auto& final_states) {
        for (const auto& [key, count] : final_states) {
            std::vector<int> e(n);
            for (int v = 0; v < n; ++v)
                e[v] = key.get(v, bits);
            out.emplace(DegreeVector(std::move(e)), SignedCount(count));
        }
    };
    if (narrow)
        emit(states);
    else
        emit(wide);
    return out;
}

Expansion truncated_expansion(const Graph& h, int cap, const Budget& budget)
{
    std::vector<int> caps(h.order(), cap);
    return capped_expansion(h, caps, budget);
}

AlonTarsiResult alon_tarsi_number(const Graph& h, int max_k, const Budget& budget)
{
    if (max_k < 1)
        throw PreconditionFailed("max_k must be at least 1");
    AlonTarsiResult result;
    const int n = h.order();
    const int m = static_cast<int>(h.size());
    // no orientation has maximum in-degree below the average
    const int start = n == 0 ? 1 : (m + n - 1) / n + 1;
    for (int k = start; k <= max_k; ++k) {
        auto expansion = truncated_expansion(h, k - 1, budget);
        if (!expansion.empty()) {
            result.found = true;
            result.k = k;
            result.witness = expansion.begin()->first;
            result.witness_coefficient = expansion.begin()->second;
            result.witnesses_at_cap = expansion.size();
            return result;
        }
    }
    result.k = max_k;
    return result;
}

} // namespace planepaint
