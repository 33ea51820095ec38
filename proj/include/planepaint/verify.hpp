#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planepaint/catalog.hpp"
#include "planepaint/derive.hpp"
#include "planepaint/polynomial.hpp"

namespace planepaint {

class HypothesisNotMet : public Error
{
public:
    HypothesisNotMet(const std::string& theorem, const std::string& graph)
        : Error(theorem + " does not apply to " + graph)
    {
    }
};

enum class Status { pass, fail, inconclusive, budget_exceeded };

std::string to_string(Status s);

struct PartWitness
{
    DegreeVector monomial;
    SignedCount coefficient;
};

struct Certificate
{
    /// "exact-expansion", "product", or "exhaustive" for the game suites.
    std::string method;
    /// Derived graph the monomial lives on.
    std::string derived;
    std::vector<std::string> labels;
    DegreeVector monomial;
    std::map<std::string, PartWitness> parts;
    std::optional<bool> factorization_unique;
    /// Exact expansion only: non-vanishing monomials at the winning cap.
    std::optional<std::size_t> witnesses_at_cap;
    /// Game suites: how many cases were checked and how many held.
    std::optional<std::size_t> checked;
    std::optional<std::size_t> held;
    /// Lemma suite: cases where the exact reading held as well.
    std::optional<std::size_t> exact_reading;
};

struct TheoremReport
{
    std::string theorem;
    std::string graph;
    int claimed = 0;
    std::optional<int> certified;
    Certificate certificate;
    SignedCount coefficient;
    double seconds = 0;
    Status status = Status::inconclusive;
    std::string detail;
};

struct VerifyOptions
{
    /// Monomial/state limit for every expansion and coefficient.
    std::size_t max_live_monomials = std::size_t{1} << 23;
    /// Wall-clock budget per (theorem, graph) pair.
    double seconds = 300;
    /// Composites with at most this many edges get an exact AT computation.
    std::size_t exact_edge_limit = 24;
    NonvanishingSearch search;
    /// Reads PLANEPAINT_BUDGET_MONOMIALS and PLANEPAINT_TIME_BUDGET_S.
    static VerifyOptions from_environment();
};

/// Theorem ids in suite order: T9 ... T17, then the game suites.
const std::vector<std::string>& theorem_ids();

/// Whether the entry satisfies the theorem's hypothesis.
bool applies(const std::string& id, const CatalogEntry& entry);

/// Throws HypothesisNotMet or UnknownSpec; budget overruns are reported in
/// the status, not thrown.
TheoremReport verify_theorem(const std::string& id, const CatalogEntry& entry, const VerifyOptions& options = {});

/// Expands "all", a single id, or a comma-separated list of ids.
std::vector<std::string> select_theorems(const std::string& filter);

/// Every applicable (theorem, entry) pair, fanned out over `threads` workers
/// and ordered by theorem then entry.
std::vector<TheoremReport> run_suite(const std::string& filter, const std::vector<CatalogEntry>& entries,
                                     const VerifyOptions& options = {}, unsigned threads = 1);

std::string reports_to_json(const std::vector<TheoremReport>& reports);
std::string reports_to_table(const std::vector<TheoremReport>& reports);

/// Non-vanishing monomial of the medial graph with every exponent at most cap.
std::optional<Witness> medial_witness(const PlaneGraph& g, int cap, const CoefficientOptions& options,
                                      const NonvanishingSearch& search = {});

/// Moves a monomial on `from` onto the vertex order of `to` by Element.
DegreeVector lift(const DerivedGraph& from, const DegreeVector& d, const DerivedGraph& to);

} // namespace planepaint
