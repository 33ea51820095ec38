#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planepaint/derive.hpp"
#include "planepaint/errors.hpp"
#include "planepaint/graph.hpp"

namespace planepaint {

/// Exact coefficient of a monomial of a graph polynomial.
using SignedCount = boost::multiprecision::cpp_int;

/// Exponent vector of a monomial, one entry per graph vertex in vertex order.
/// Entries are in-degrees of the corresponding orientation.
class DegreeVector
{
public:
    DegreeVector() = default;
    explicit DegreeVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {}
    DegreeVector(std::initializer_list<int> exponents) : exponents_(exponents) {}

    std::size_t size() const { return exponents_.size(); }
    int operator[](std::size_t i) const { return exponents_[i]; }
    int& operator[](std::size_t i) { return exponents_[i]; }
    auto begin() const { return exponents_.begin(); }
    auto end() const { return exponents_.end(); }
    const std::vector<int>& values() const { return exponents_; }

    long sum() const;
    int max() const;

    auto operator<=>(const DegreeVector&) const = default;

private:
    std::vector<int> exponents_;
};

DegreeVector operator+(const DegreeVector& a, const DegreeVector& b);
std::string to_string(const DegreeVector& d);

class DegreeSumMismatch : public Error
{
public:
    DegreeSumMismatch(long got, std::size_t edges) :
        Error("degree vector sums to " + std::to_string(got) + " but the graph has " + std::to_string(edges) +
              " edges")
    {
    }
};

class NotBipartite : public Error
{
public:
    NotBipartite() : Error("graph is not bipartite") {}
};

/// Resource limits for the exponential searches.
struct Budget
{
    std::size_t max_live_monomials = std::size_t{1} << 23;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    /// Defaults overridden by PLANEPAINT_BUDGET_MONOMIALS and
    /// PLANEPAINT_TIME_BUDGET_S.
    static Budget from_environment();
    static Budget with_seconds(double seconds);

    void check_time() const;
};

struct CoefficientOptions
{
    Budget budget;
    unsigned threads = 1;
    /// Edge decisions taken sequentially before the search splits across threads.
    unsigned split_depth = 8;
};

/// Sign convention: the edge {u,v} with u < v contributes the factor
/// (x_u - x_v). An orientation's sign is (-1)^(edges directed toward their
/// larger endpoint).
///
/// Returns the signed count of orientations of h whose in-degree vector
/// equals target. Throws DegreeSumMismatch when target does not sum to the
/// edge count, BudgetExceeded when the search outgrows the budget.
SignedCount coefficient(const Graph& h, const DegreeVector& target, const CoefficientOptions& options = {});

using Expansion = std::map<DegreeVector, SignedCount>;

/// All non-vanishing monomials of P_h with every exponent at most cap.
Expansion truncated_expansion(const Graph& h, int cap, const Budget& budget = {});

/// Same with a cap per variable; a negative cap admits no monomial.
Expansion capped_expansion(const Graph& h, std::span<const int> caps, const Budget& budget = {});

struct AlonTarsiResult
{
    /// False when AT exceeds max_k; k then equals max_k.
    bool found = false;
    int k = 0;
    /// Lexicographically smallest non-vanishing monomial at cap k-1.
    DegreeVector witness;
    SignedCount witness_coefficient;
    /// Number of non-vanishing monomials at cap k-1.
    std::size_t witnesses_at_cap = 0;
};

/// Least k <= max_k with a non-vanishing monomial whose exponents are all at
/// most k-1, searched upward from ceil(|E|/|V|) + 1.
AlonTarsiResult alon_tarsi_number(const Graph& h, int max_k, const Budget& budget = {});

/// head[i] is the endpoint edge i points to.
struct Orientation
{
    std::vector<int> head;

    DegreeVector indegrees(const Graph& h) const;
    int sign(const Graph& h) const;
    bool acyclic(const Graph& h) const;
};

struct MinMaxOrientation
{
    Orientation orientation;
    int max_indegree = 0;
};

/// Orientation minimising the maximum in-degree (binary search on the bound
/// with an augmenting-path feasibility check).
MinMaxOrientation min_max_indegree_orientation(const Graph& h);

/// Orientation with indegree(v) <= caps[v] for every v, if one exists. With
/// a seed the starting orientation is randomised, giving varied solutions.
std::optional<Orientation> orient_within(const Graph& h, std::span<const int> caps,
                                         std::optional<unsigned> seed = std::nullopt);

/// Alon-Tarsi number of a bipartite graph: min max in-degree + 1.
int bipartite_at(const Graph& h);

struct DegeneracyOrientation
{
    Orientation orientation;
    DegreeVector indegrees;
    int degeneracy = 0;
};

/// Peels a minimum-degree vertex at a time, directing its remaining edges at
/// it. The result is acyclic and its in-degrees are bounded by the degeneracy.
DegeneracyOrientation degeneracy_orientation(const Graph& h);

struct ProductCertificate
{
    DegreeVector monomial;
    SignedCount coefficient;
    std::map<std::string, SignedCount> part_coefficients;
    /// |coefficient| equals the product of the parts' |coefficients|.
    bool factorization_unique = false;

    bool nonvanishing() const { return coefficient != 0; }
};

/// Certifies the product of per-part monomials. Keys of part_monomials name a
/// part of h or a '+'-joined group of parts; together they must cover every
/// part exactly once. Each part monomial must be non-vanishing in its part
/// (PreconditionFailed otherwise).
ProductCertificate product_certificate(const DerivedGraph& h, const std::map<std::string, DegreeVector>& part_monomials,
                                       const CoefficientOptions& options = {});

struct NonvanishingSearch
{
    unsigned attempts = 400;
    unsigned seed = 1;
};

struct Witness
{
    DegreeVector monomial;
    SignedCount coefficient;
    std::string method;
};

/// Looks for a non-vanishing monomial with exponents bounded by caps:
/// bipartite orientation, then the degeneracy monomial, then an exact capped
/// expansion when small enough, then coefficients of in-degree vectors of
/// randomised capped orientations. Empty when nothing is found within the
/// attempt budget; that is not a proof that none exists.
std::optional<Witness> find_nonvanishing(const Graph& h, std::span<const int> caps, const CoefficientOptions& options = {},
                                         const NonvanishingSearch& search = {});

} // namespace planepaint
