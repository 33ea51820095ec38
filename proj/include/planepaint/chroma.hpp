#pragma once

#include <optional>
#include <vector>

#include "planepaint/errors.hpp"
#include "planepaint/graph.hpp"

namespace planepaint {

/// One list of colours per vertex.
using ListAssignment = std::vector<std::vector<int>>;

/// Exact chromatic number by DSATUR branch and bound. At most 16 vertices.
int chromatic_number(const Graph& h);

/// Proper colouring from the lists, or nullopt.
std::optional<std::vector<int>> list_colouring(const Graph& h, const ListAssignment& lists);

struct ChoosabilityResult
{
    bool choosable = false;
    /// A list assignment admitting no colouring, when not choosable and one
    /// was constructed.
    std::optional<ListAssignment> bad_lists;
    std::size_t assignments_checked = 0;
};

/// Exhaustive k-choosability over list assignments drawn from {0..k*n-1},
/// enumerated up to renaming of colours. At most size_limit vertices.
ChoosabilityResult k_choosability(const Graph& h, int k, int size_limit = 6);

bool is_k_choosable(const Graph& h, int k, int size_limit = 6);

/// Least k with is_k_choosable, or nullopt when above max_k.
std::optional<int> choice_number(const Graph& h, int max_k, int size_limit = 6);

/// Largest minimum degree over subgraphs.
int degeneracy(const Graph& h);

} // namespace planepaint
