#include "planepaint/paint.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace planepaint {

namespace {
    std::vector<std::uint32_t> masks(const Graph& h)
    {
        std::vector<std::uint32_t> adj(h.order(), 0);
        for (auto e : h.edges()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
        return adj;
    }

    void check_size(const Graph& h, int size_limit)
    {
        if (h.order() > size_limit || h.order() > 32)
            throw SizeLimitExceeded("paintability search limited to " + std::to_string(std::min(size_limit, 32)) +
                                    " vertices, graph has " + std::to_string(h.order()));
    }

    std::vector<int> members(VertexSet s)
    {
        std::vector<int> out;
        for (; s; s &= s - 1)
            out.push_back(std::countr_zero(s));
        return out;
    }
}

std::string format_set(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : members(s)) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::vector<VertexSet> maximal_independent_subsets(const std::vector<std::uint32_t>& adjacency, VertexSet x)
{
    std::vector<VertexSet> out;
    // grow independent sets over the members of x in order
    auto grow = [&](auto&& self, VertexSet chosen, VertexSet candidates) -> void {
        if (!candidates) {
            bool maximal = true;
            for (int v : members(x & ~chosen))
                maximal = maximal && (adjacency[v] & chosen);
            if (maximal)
                out.push_back(chosen);
            return;
        }
        int v = std::countr_zero(candidates);
        VertexSet rest = candidates & (candidates - 1);
        self(self, chosen | (1u << v), rest & ~adjacency[v]);
        self(self, chosen, rest);
    };
    grow(grow, 0, x);
    std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return std::popcount(a) > std::popcount(b); });
    return out;
}

PaintSolver::PaintSolver(const Graph& h, int size_limit) : graph_(h)
{
    check_size(h, size_limit);
    adjacency_ = masks(h);
    all_ = h.order() == 32 ? ~VertexSet{0} : (VertexSet{1} << h.order()) - 1;
}

PaintProfile PaintSolver::successor(const PaintProfile& p, VertexSet x, VertexSet reply)
{
    PaintProfile q = p;
    for (int v : members(x & ~reply))
        --q[v];
    for (int v : members(reply))
        q[v] = 0;
    return q;
}

bool PaintSolver::paintable(VertexSet live, const PaintProfile& p)
{
    if (static_cast<int>(p.size()) != graph_.order())
        throw PreconditionFailed("profile length differs from vertex count");
    State s;
    auto keep = members(live & all_);
    std::vector<int> at(graph_.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        at[keep[i]] = static_cast<int>(i);
    for (int v : keep) {
        std::uint32_t m = 0;
        for (int w : members(adjacency_[v] & live))
            m |= 1u << at[w];
        s.adjacency.push_back(m);
        s.tokens.push_back(p[v]);
    }
    return solve(std::move(s));
}

bool PaintSolver::solve(State s)
{
    for (int t : s.tokens)
        if (t <= 0)
            return false;

    // a vertex with more tokens than neighbours can always be coloured last
    while (true) {
        int n = static_cast<int>(s.tokens.size());
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (s.tokens[v] <= std::popcount(s.adjacency[v]))
                keep.push_back(v);
        if (static_cast<int>(keep.size()) == n)
            break;
        State t;
        for (int v : keep) {
            std::uint32_t m = 0;
            for (std::size_t i = 0; i < keep.size(); ++i)
                if (s.adjacency[v] >> keep[i] & 1)
                    m |= 1u << i;
            t.adjacency.push_back(m);
            t.tokens.push_back(s.tokens[v]);
        }
        s = std::move(t);
    }
    const int n = static_cast<int>(s.tokens.size());
    if (n == 0)
        return true;

    auto form = canonical_form(s.adjacency, s.tokens);
    if (auto it = memo_.find(form.key); it != memo_.end())
        return it->second;

    // relabel into canonical order so equal keys explore identical states
    State c;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[form.order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = form.order[i];
        std::uint32_t m = 0;
        for (int w : members(s.adjacency[v]))
            m |= 1u << pos[w];
        c.adjacency.push_back(m);
        c.tokens.push_back(s.tokens[v]);
    }

    const VertexSet full = (VertexSet{1} << n) - 1;
    bool result = true;
    for (VertexSet x = full; x && result; --x) {
        bool answered = false;
        for (VertexSet reply : maximal_independent_subsets(c.adjacency, x)) {
            State next;
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (!(reply >> v & 1))
                    keep.push_back(v);
            for (int v : keep) {
                std::uint32_t m = 0;
                for (std::size_t i = 0; i < keep.size(); ++i)
                    if (c.adjacency[v] >> keep[i] & 1)
                        m |= 1u << i;
                next.adjacency.push_back(m);
                next.tokens.push_back(c.tokens[v] - static_cast<int>(x >> v & 1));
            }
            if (solve(std::move(next))) {
                answered = true;
                break;
            }
        }
        result = answered;
    }
    memo_.emplace(std::move(form.key), result);
    return result;
}

std::optional<VertexSet> PaintSolver::winning_reply(VertexSet live, const PaintProfile& p, VertexSet x)
{
    if (!x || (x & ~live))
        throw PreconditionFailed("presented set must be a nonempty subset of the live vertices");
    for (VertexSet reply : maximal_independent_subsets(adjacency_, x))
        if (paintable(live & ~reply, successor(p, x, reply)))
            return reply;
    return std::nullopt;
}

bool is_paintable(const Graph& h, const PaintProfile& p, int size_limit)
{
    PaintSolver solver(h, size_limit);
    return solver.paintable(p);
}

std::optional<int> paint_number(const Graph& h, int max_k, int size_limit)
{
    PaintSolver solver(h, size_limit);
    for (int k = 1; k <= max_k; ++k)
        if (solver.paintable(PaintProfile(h.order(), k)))
            return k;
    return std::nullopt;
}

std::optional<VertexSet> winning_reply(const Graph& h, const PaintProfile& p, VertexSet x, int size_limit)
{
    PaintSolver solver(h, size_limit);
    return solver.winning_reply(solver.all(), p, x);
}

bool schauz_check(const Graph& h, const DegreeVector& monomial, int size_limit)
{
    if (coefficient(h, monomial) == 0)
        throw PreconditionFailed("monomial " + to_string(monomial) + " vanishes");
    PaintProfile p(monomial.begin(), monomial.end());
    for (auto& t : p)
        ++t;
    return is_paintable(h, p, size_limit);
}

std::optional<LemmaWitness> lemma_check(const Graph& h, VertexSet x, const DegreeVector& monomial)
{
    const int n = h.order();
    if (static_cast<int>(monomial.size()) != n)
        throw PreconditionFailed("monomial length differs from vertex count");
    if (n > 32)
        throw SizeLimitExceeded("vertex sets are limited to 32 vertices");
    const VertexSet all = n == 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    if (!x || (x & ~all))
        throw PreconditionFailed("X must be a nonempty vertex subset");
    if (coefficient(h, monomial) == 0)
        throw PreconditionFailed("monomial " + to_string(monomial) + " vanishes");

    auto adj = masks(h);
    // independent subsets of x, smallest first
    std::vector<VertexSet> replies;
    for (VertexSet y = x;; y = (y - 1) & x) {
        bool independent = true;
        for (int v : members(y))
            independent = independent && !(adj[v] & y);
        if (independent)
            replies.push_back(y);
        if (!y)
            break;
    }
    std::stable_sort(replies.begin(), replies.end(),
                     [](VertexSet a, VertexSet b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });

    std::optional<LemmaWitness> found;
    bool exact = false;
    for (VertexSet y : replies) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!(y >> v & 1))
                keep.push_back(v);
        Graph rest = h.induced(keep);
        std::vector<int> caps;
        for (int v : keep)
            caps.push_back(monomial[v] - static_cast<int>(x >> v & 1));
        auto expansion = capped_expansion(rest, caps);
        if (expansion.empty())
            continue;
        if (!found)
            found = LemmaWitness{y, expansion.begin()->first, false};
        for (const auto& [m, c] : expansion) {
            bool same = true;
            for (std::size_t i = 0; i < keep.size(); ++i)
                if (!(x >> keep[i] & 1))
                    same = same && m[i] == monomial[keep[i]];
            exact = exact || same;
        }
        if (exact)
            break;
    }
    if (found)
        found->exact_outside = exact;
    return found;
}

namespace {
    struct TreePrinter
    {
        std::ostream& out;
        PaintSolver& solver;
        std::size_t max_lines;
        std::size_t lines = 0;

        bool line(int depth, const std::string& text)
        {
            if (lines >= max_lines)
                return false;
            out << std::string(2 * depth, ' ') << text << '\n';
            if (++lines == max_lines)
                out << "... truncated after " << max_lines << " lines\n";
            return lines < max_lines;
        }

        std::string tokens(VertexSet live, const PaintProfile& p) const
        {
            std::string s;
            for (int v : members(live))
                s += (s.empty() ? "" : " ") + std::to_string(v) + ":" + std::to_string(p[v]);
            return s;
        }

        void node(VertexSet live, const PaintProfile& p, int depth)
        {
            if (!live) {
                line(depth, "all vertices coloured, Painter wins");
                return;
            }
            for (int v : members(live))
                if (p[v] <= 0) {
                    line(depth, "vertex " + std::to_string(v) + " has no tokens left, Lister wins");
                    return;
                }
            if (solver.paintable(live, p)) {
                for (VertexSet x = live;; x = (x - 1) & live) {
                    if (!x)
                        break;
                    auto reply = solver.winning_reply(live, p, x);
                    auto q = PaintSolver::successor(p, x, *reply);
                    if (!line(depth, "Lister " + format_set(x) + " -> Painter colours " + format_set(*reply) +
                                         " [" + tokens(live & ~*reply, q) + "]"))
                        return;
                    node(live & ~*reply, q, depth + 1);
                    if (lines >= max_lines)
                        return;
                }
                return;
            }
            for (VertexSet x = live;; x = (x - 1) & live) {
                if (!x)
                    break;
                if (solver.winning_reply(live, p, x))
                    continue;
                if (!line(depth, "Lister " + format_set(x) + " wins against every reply"))
                    return;
                std::vector<std::uint32_t> adj(solver.graph().order(), 0);
                for (auto e : solver.graph().edges()) {
                    adj[e.u] |= 1u << e.v;
                    adj[e.v] |= 1u << e.u;
                }
                for (VertexSet reply : maximal_independent_subsets(adj, x)) {
                    auto q = PaintSolver::successor(p, x, reply);
                    if (!line(depth + 1, "Painter colours " + format_set(reply) + " [" + tokens(live & ~reply, q) + "]"))
                        return;
                    node(live & ~reply, q, depth + 2);
                    if (lines >= max_lines)
                        return;
                }
                return;
            }
        }
    };
}

void print_game_tree(std::ostream& out, const Graph& h, const PaintProfile& p, std::size_t max_lines, int size_limit)
{
    PaintSolver solver(h, size_limit);
    TreePrinter printer{out, solver, max_lines};
    bool win = solver.paintable(p);
    printer.line(0, std::string(win ? "Painter" : "Lister") + " wins from [" + printer.tokens(solver.all(), p) + "]");
    printer.node(solver.all(), p, 1);
}

} // namespace planepaint
