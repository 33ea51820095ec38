#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "planepaint/errors.hpp"
#include "planepaint/graph.hpp"
#include "planepaint/polynomial.hpp"

namespace planepaint {

/// Token counts p(v), one per vertex.
using PaintProfile = std::vector<int>;

/// Vertex set as a bitmask over the original graph's vertices.
using VertexSet = std::uint32_t;

/// Canonical form of a vertex-coloured graph: the lexicographically least
/// encoding (colours then adjacency bits) over all labelings reachable by
/// colour refinement and individualization. `order[i]` is the vertex placed at
/// position i.
struct CanonicalForm
{
    std::string key;
    std::vector<int> order;
};

/// `adjacency[v]` is a bitmask of neighbours, `colour[v]` a vertex label that
/// the canonical form must respect. At most 32 vertices.
CanonicalForm canonical_form(const std::vector<std::uint32_t>& adjacency, const std::vector<int>& colour);

/// Memoized solver for one graph. Game states are memoized on the canonical
/// form of (residual graph, residual profile), so isomorphic states are solved
/// once.
class PaintSolver
{
public:
    explicit PaintSolver(const Graph& h, int size_limit = 10);

    const Graph& graph() const { return graph_; }
    VertexSet all() const { return all_; }

    /// Is the subgraph induced by `live` paintable with `p` (indexed by
    /// original vertex; entries outside `live` are ignored)?
    bool paintable(VertexSet live, const PaintProfile& p);
    bool paintable(const PaintProfile& p) { return paintable(all_, p); }

    /// Painter's reply to Lister presenting X in state (live, p): an
    /// independent X' whose successor is paintable, largest first.
    std::optional<VertexSet> winning_reply(VertexSet live, const PaintProfile& p, VertexSet x);

    /// Profile after Painter colours `reply` out of presented `x`.
    static PaintProfile successor(const PaintProfile& p, VertexSet x, VertexSet reply);

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct State
    {
        std::vector<std::uint32_t> adjacency;
        std::vector<int> tokens;
    };

    bool solve(State s);

    Graph graph_;
    std::vector<std::uint32_t> adjacency_;
    VertexSet all_ = 0;
    std::unordered_map<std::string, bool> memo_;
};

/// Every independent subset of `x` that is maximal inside `x`, largest first.
std::vector<VertexSet> maximal_independent_subsets(const std::vector<std::uint32_t>& adjacency, VertexSet x);

bool is_paintable(const Graph& h, const PaintProfile& p, int size_limit = 10);

/// Least k with the uniform profile k paintable, or nullopt when above max_k.
std::optional<int> paint_number(const Graph& h, int max_k, int size_limit = 10);

/// Painter's reply to X on the full graph, or nullopt when X wins for Lister.
std::optional<VertexSet> winning_reply(const Graph& h, const PaintProfile& p, VertexSet x, int size_limit = 10);

/// Paintability with p = monomial + 1. The monomial must be non-vanishing.
bool schauz_check(const Graph& h, const DegreeVector& monomial, int size_limit = 10);

struct LemmaWitness
{
    VertexSet reply = 0;
    /// A non-vanishing monomial of the residual polynomial, indexed by the
    /// residual's vertices in ascending original order.
    DegreeVector monomial;
    /// Some independent reply admits a residual monomial with exponents exactly
    /// the original ones outside X (the reading used inside the proof).
    bool exact_outside = false;
};

/// Searches independent X' within X such that P(H - X') has a non-vanishing
/// monomial bounded by monomial - 1 on X - X' and by monomial elsewhere.
/// Returns nullopt if none exists (which would contradict the lemma).
std::optional<LemmaWitness> lemma_check(const Graph& h, VertexSet x, const DegreeVector& monomial);

/// Writes a winning strategy as an indented game tree: for a paintable state
/// every Lister move with Painter's reply, otherwise one winning Lister move
/// per state with every Painter reply refuted. Stops after max_lines lines.
void print_game_tree(std::ostream& out, const Graph& h, const PaintProfile& p, std::size_t max_lines = 2000,
                     int size_limit = 10);

std::string format_set(VertexSet s);

} // namespace planepaint
