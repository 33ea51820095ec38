#include "planepaint/polynomial.hpp"

#include <set>
#include <sstream>

namespace planepaint {

namespace {
    std::vector<std::string> split_group(const std::string& key)
    {
        std::vector<std::string> names;
        std::stringstream in(key);
        std::string part;
        while (std::getline(in, part, '+'))
            names.push_back(part);
        return names;
    }

    /// Product of (caps+1) over variables, saturating.
    double expansion_bound(const Graph& h, std::span<const int> caps)
    {
        double bound = 1;
        for (int v = 0; v < h.order(); ++v)
            bound *= std::min(caps[v], h.degree(v)) + 1;
        return bound;
    }

    bool within(const DegreeVector& d, std::span<const int> caps)
    {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] > caps[i])
                return false;
        return true;
    }
}

ProductCertificate product_certificate(const DerivedGraph& h, const std::map<std::string, DegreeVector>& part_monomials,
                                       const CoefficientOptions& options)
{
    std::set<std::string> covered;
    ProductCertificate cert;
    cert.monomial = DegreeVector(std::vector<int>(h.order(), 0));
    SignedCount product = 1;
    for (const auto& [group, monomial] : part_monomials) {
        auto names = split_group(group);
        for (const auto& name : names) {
            if (!h.parts.contains(name))
                throw UnknownSpec(name);
            if (!covered.insert(name).second)
                throw PreconditionFailed("part " + name + " named twice");
        }
        Graph part = h.part_graph(names);
        SignedCount c = coefficient(part, monomial, options);
        if (c == 0)
            throw PreconditionFailed("monomial " + to_string(monomial) + " vanishes in part " + group);
        cert.part_coefficients[group] = c;
        product *= abs(c);
        cert.monomial = cert.monomial + monomial;
    }
    for (const auto& [name, _] : h.parts)
        if (!covered.contains(name))
            throw PreconditionFailed("part " + name + " has no monomial");

    cert.coefficient = coefficient(h.graph, cert.monomial, options);
    cert.factorization_unique = abs(cert.coefficient) == product;
    return cert;
}

std::optional<Witness> find_nonvanishing(const Graph& h, std::span<const int> caps, const CoefficientOptions& options,
                                         const NonvanishingSearch& search)
{
    if (static_cast<int>(caps.size()) != h.order())
        throw PreconditionFailed("cap vector length differs from vertex count");

    // every orientation of a bipartite graph gives a non-vanishing monomial
    if (h.is_bipartite()) {
        auto o = orient_within(h, caps);
        if (!o)
            return std::nullopt;
        auto d = o->indegrees(h);
        return Witness{d, coefficient(h, d, options), "bipartite-orientation"};
    }

    auto degenerate = degeneracy_orientation(h);
    if (within(degenerate.indegrees, caps))
        return Witness{degenerate.indegrees, coefficient(h, degenerate.indegrees, options), "degeneracy"};

    if (expansion_bound(h, caps) <= static_cast<double>(options.budget.max_live_monomials)) {
        auto expansion = capped_expansion(h, caps, options.budget);
        if (expansion.empty())
            return std::nullopt;
        return Witness{expansion.begin()->first, expansion.begin()->second, "capped-expansion"};
    }

    std::set<DegreeVector> tried;
    for (unsigned attempt = 0; attempt < search.attempts; ++attempt) {
        options.budget.check_time();
        auto o = orient_within(h, caps, search.seed + attempt);
        if (!o)
            return std::nullopt;
        auto d = o->indegrees(h);
        if (!tried.insert(d).second)
            continue;
        auto c = coefficient(h, d, options);
        if (c != 0)
            return Witness{d, c, "orientation-search"};
    }
    return std::nullopt;
}

} // namespace planepaint
