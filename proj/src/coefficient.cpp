#include "planepaint/polynomial.hpp"

#include <cstdlib>
#include <future>
#include <numeric>

#include "packed_state.hpp"

namespace planepaint {

using detail::EdgeSchedule;
using detail::EdgeStep;
using detail::PackedKey;

long DegreeVector::sum() const
{
    return std::accumulate(exponents_.begin(), exponents_.end(), 0L);
}

int DegreeVector::max() const
{
    return exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
}

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b)
{
    if (a.size() != b.size())
        throw PreconditionFailed("adding degree vectors of different lengths");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return DegreeVector(std::move(out));
}

std::string to_string(const DegreeVector& d)
{
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(d[i]);
    }
    return out + ")";
}

Budget Budget::from_environment()
{
    Budget b;
    if (const char* m = std::getenv("PLANEPAINT_BUDGET_MONOMIALS"))
        b.max_live_monomials = std::strtoull(m, nullptr, 10);
    if (const char* t = std::getenv("PLANEPAINT_TIME_BUDGET_S"))
        b.deadline = with_seconds(std::strtod(t, nullptr)).deadline;
    return b;
}

Budget Budget::with_seconds(double seconds)
{
    Budget b;
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    return b;
}

void Budget::check_time() const
{
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw BudgetExceeded("time budget exhausted");
}

namespace {
    template <class Count>
    using States = std::vector<std::pair<PackedKey, Count>>;

    template <class Count>
    struct Search
    {
        const EdgeSchedule& schedule;
        const DegreeVector& target;
        const Budget& budget;
        int bits;

        void step(States<Count>& states, const EdgeStep& st) const
        {
            States<Count> next;
            next.reserve(states.size() * 2);
            std::size_t visited = 0;
            for (auto& [key, count] : states) {
                if ((++visited & 0xffff) == 0)
                    budget.check_time();
                const int ru = st.open_u ? target[st.u] : key.get(st.slot_u, bits);
                const int rv = st.open_v ? target[st.v] : key.get(st.slot_v, bits);
                // pick x_u: edge directed toward the smaller endpoint, sign +
                if (ru >= 1 && ru - 1 <= st.rem_u && rv <= st.rem_v) {
                    PackedKey k = key;
                    k.set(st.slot_u, bits, ru - 1);
                    k.set(st.slot_v, bits, rv);
                    next.emplace_back(k, count);
                }
                // pick x_v: toward the larger endpoint, sign -
                if (rv >= 1 && ru <= st.rem_u && rv - 1 <= st.rem_v) {
                    PackedKey k = key;
                    k.set(st.slot_u, bits, ru);
                    k.set(st.slot_v, bits, rv - 1);
                    next.emplace_back(k, -count);
                }
            }
            detail::merge_states(next);
            if (next.size() > budget.max_live_monomials)
                throw BudgetExceeded("coefficient search holds " + std::to_string(next.size()) + " partial states");
            states = std::move(next);
        }

        Count run(States<Count> states, std::size_t from, std::size_t to) const
        {
            for (std::size_t i = from; i < to && !states.empty(); ++i) {
                budget.check_time();
                step(states, schedule.steps[i]);
            }
            Count total = 0;
            for (auto& [_, c] : states)
                total += c;
            return total;
        }
    };

    template <class Count>
    SignedCount search(const EdgeSchedule& schedule, const DegreeVector& target, const CoefficientOptions& options,
                       int bits)
    {
        Search<Count> s{schedule, target, options.budget, bits};
        States<Count> states{{PackedKey{}, Count{1}}};
        const std::size_t steps = schedule.steps.size();
        const std::size_t split = std::min<std::size_t>(options.split_depth, steps);
        if (options.threads <= 1 || split == steps)
            return SignedCount(s.run(std::move(states), 0, steps));

        for (std::size_t i = 0; i < split && !states.empty(); ++i)
            s.step(states, schedule.steps[i]);
        const std::size_t chunks = std::min<std::size_t>(options.threads, states.size());
        std::vector<std::future<Count>> parts;
        for (std::size_t c = 0; c < chunks; ++c) {
            States<Count> chunk;
            for (std::size_t i = c; i < states.size(); i += chunks)
                chunk.push_back(states[i]);
            parts.push_back(std::async(std::launch::async, [&s, chunk = std::move(chunk), split, steps]() mutable {
                return s.run(std::move(chunk), split, steps);
            }));
        }
        SignedCount total = 0;
        for (auto& f : parts)
            total += SignedCount(f.get());
        return total;
    }
}

SignedCount coefficient(const Graph& h, const DegreeVector& target, const CoefficientOptions& options)
{
    if (static_cast<int>(target.size()) != h.order())
        throw PreconditionFailed("degree vector has " + std::to_string(target.size()) + " entries for " +
                                 std::to_string(h.order()) + " vertices");
    if (target.sum() != static_cast<long>(h.size()))
        throw DegreeSumMismatch(target.sum(), h.size());
    for (int v = 0; v < h.order(); ++v) {
        if (target[v] < 0)
            throw PreconditionFailed("negative exponent");
        if (target[v] > h.degree(v))
            return 0;
    }
    if (h.size() == 0)
        return 1;

    const auto schedule = detail::make_schedule(h);
    const int bits = detail::field_bits(target.max());
    if (schedule.slots * bits > PackedKey::total_bits)
        throw BudgetExceeded("search frontier of " + std::to_string(schedule.slots) + " vertices is too wide");

    // partial counts are bounded by 2^(decided edges)
    if (h.size() <= 62)
        return search<std::int64_t>(schedule, target, options, bits);
    if (h.size() <= 125)
        return search<__int128>(schedule, target, options, bits);
    return search<SignedCount>(schedule, target, options, bits);
}

} // namespace planepaint
