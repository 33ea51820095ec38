#include "planepaint/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "planepaint/paint.hpp"

namespace planepaint {

namespace {
    using Clock = std::chrono::steady_clock;

    struct Plan
    {
        const char* id;
        const char* derived;
        // hypothesis: 0 any, 1 bipartite, 2 triangulation, 3 either
        int hypothesis;
    };

    const std::vector<Plan>& plans()
    {
        static const std::vector<Plan> p{
            {"T9", "medial", 0},     {"T10", "medial", 1},  {"T11", "medial", 2},
            {"T12", "Gbar_ve", 0},   {"T13", "Gbar_ve", 3}, {"T14", "Gbar_ef", 0},
            {"T15", "Gbar_vef", 0},  {"T16", "G_vf", 2},    {"T17", "Gbar_vef", 2},
            {"schauz", "G_v", 0},    {"lemma", "G_v", 0},
        };
        return p;
    }

    const Plan& plan(const std::string& id)
    {
        for (const auto& p : plans())
            if (id == p.id)
                return p;
        throw UnknownSpec(id);
    }

    bool special(const CatalogEntry& e) { return e.has("bipartite") || e.has("triangulation"); }

    int claimed_bound(const std::string& id, const CatalogEntry& e)
    {
        static const std::map<std::string, int> fixed{{"T9", 4},  {"T10", 3}, {"T11", 3}, {"T12", 6},
                                                      {"T13", 5}, {"T15", 8}, {"T16", 6}, {"T17", 7}};
        if (id == "T14")
            return special(e) ? 5 : 6;
        return fixed.at(id);
    }

    // the game suites run on tiny graphs only
    bool tiny(const CatalogEntry& e) { return e.graph.vertex_count() <= 6 && e.graph.edge_count() <= 9; }

    std::vector<std::string> labels(const DerivedGraph& d)
    {
        std::vector<std::string> out;
        for (auto el : d.vertices)
            out.push_back(to_string(el));
        return out;
    }

    struct Context
    {
        const CatalogEntry& entry;
        CoefficientOptions options;
        const VerifyOptions& verify;
    };

    /// Monomial on the vertex order of `d` built from per-kind constant values.
    DegreeVector constant_on(const DerivedGraph& d, ElementKind kind, int value)
    {
        std::vector<int> t(d.order(), 0);
        for (int i = 0; i < d.order(); ++i)
            if (d.vertices[i].kind == kind)
                t[i] = value;
        return DegreeVector(std::move(t));
    }

    Witness require(std::optional<Witness> w, const std::string& what)
    {
        if (!w)
            throw PreconditionFailed("no non-vanishing monomial found for " + what);
        return std::move(*w);
    }

    /// Exact Alon-Tarsi number of h up to the claimed bound.
    void exact(TheoremReport& r, const DerivedGraph& h, const Context& c)
    {
        auto at = alon_tarsi_number(h.graph, r.claimed, c.options.budget);
        r.certificate.method = "exact-expansion";
        if (!at.found) {
            r.status = Status::fail;
            r.detail = "no non-vanishing monomial with exponents below " + std::to_string(r.claimed);
            return;
        }
        r.certified = at.k;
        r.certificate.monomial = at.witness;
        r.certificate.witnesses_at_cap = at.witnesses_at_cap;
        r.coefficient = at.witness_coefficient;
        r.status = at.k <= r.claimed ? Status::pass : Status::fail;
    }

    /// Certificate by a single non-vanishing monomial within the claimed cap.
    void constructive(TheoremReport& r, const DerivedGraph& h, const Context& c)
    {
        r.certificate.method = "search";
        auto w = find_nonvanishing(h.graph, std::vector<int>(h.order(), r.claimed - 1), c.options, c.verify.search);
        if (!w) {
            r.status = Status::inconclusive;
            r.detail = "no non-vanishing monomial found within the search budget";
            return;
        }
        r.certificate.method += ":" + w->method;
        r.certificate.monomial = w->monomial;
        r.coefficient = w->coefficient;
        r.certified = w->monomial.max() + 1;
        r.status = Status::pass;
    }

    void from_product(TheoremReport& r, const DerivedGraph& h, const std::map<std::string, DegreeVector>& parts,
                      const Context& c)
    {
        auto cert = product_certificate(h, parts, c.options);
        r.certificate.method = "product";
        r.certificate.monomial = cert.monomial;
        for (const auto& [group, m] : parts)
            r.certificate.parts[group] = PartWitness{m, cert.part_coefficients.at(group)};
        r.certificate.factorization_unique = cert.factorization_unique;
        r.coefficient = cert.coefficient;
        if (!cert.nonvanishing()) {
            r.status = Status::inconclusive;
            r.detail = "the product monomial vanishes";
            return;
        }
        r.certified = cert.monomial.max() + 1;
        r.status = *r.certified <= r.claimed ? Status::pass : Status::inconclusive;
    }

    /// Medial monomial with exponents at most cap, lifted to h.
    DegreeVector medial_part(const PlaneGraph& g, const DerivedGraph& h, int cap, const Context& c)
    {
        auto w = require(medial_witness(g, cap, c.options, c.verify.search), "the medial graph");
        return lift(medial_graph(g), w.monomial, h);
    }

    /// Non-vanishing monomial of a part graph on h's vertex order, capped
    /// only on the vertices of the given kinds.
    DegreeVector part_monomial(const DerivedGraph& h, const std::vector<std::string>& names, int cap, const Context& c)
    {
        Graph part = h.part_graph(names);
        std::vector<int> caps(h.order());
        for (int i = 0; i < h.order(); ++i)
            caps[i] = part.degree(i) == 0 ? 0 : cap;
        std::string group;
        for (const auto& n : names)
            group += (group.empty() ? "" : "+") + n;
        return require(find_nonvanishing(part, caps, c.options, c.verify.search), group).monomial;
    }

    /// Proof construction for the triangulation bound on G_vf: M_v on G_v,
    /// M_f with exponents at most 2 on G_f, and 3 on every face for B_vf.
    std::map<std::string, DegreeVector> vf_parts(const DerivedGraph& h, const Context& c)
    {
        std::map<std::string, DegreeVector> parts;
        parts["G_v"] = part_monomial(h, {"G_v"}, 5, c);
        parts["G_f"] = part_monomial(h, {"G_f"}, 2, c);
        parts["B_vf"] = constant_on(h, ElementKind::face, 3);
        return parts;
    }

    /// Certified G_vf monomial for triangulations with exponents at most 5,
    /// plus the report fields describing how it was obtained.
    void triangulation_vf(TheoremReport& r, const DerivedGraph& h, const Context& c)
    {
        if (h.size() <= c.verify.exact_edge_limit) {
            // covers K4, where G_f is a clique and the proof applies Brooks directly
            exact(r, h, c);
            return;
        }
        from_product(r, h, vf_parts(h, c), c);
    }

    void run_game_suite(TheoremReport& r, const Context& c)
    {
        const Graph& h = c.entry.graph.graph();
        r.claimed = 0;
        r.certificate.method = "exhaustive";
        r.certificate.derived = "G_v";
        auto monomials = truncated_expansion(h, 2, c.options.budget);
        std::size_t checked = 0, held = 0, exact_reading = 0;
        const VertexSet all = (VertexSet{1} << h.order()) - 1;
        if (r.theorem == "schauz") {
            PaintSolver solver(h);
            for (const auto& [m, coef] : monomials) {
                c.options.budget.check_time();
                PaintProfile p(m.begin(), m.end());
                for (auto& t : p)
                    ++t;
                ++checked;
                held += solver.paintable(p);
            }
        }
        else {
            for (const auto& [m, coef] : monomials)
                for (VertexSet x = 1; x <= all; ++x) {
                    c.options.budget.check_time();
                    ++checked;
                    if (auto w = lemma_check(h, x, m)) {
                        ++held;
                        exact_reading += w->exact_outside;
                    }
                }
            r.certificate.exact_reading = exact_reading;
        }
        r.certificate.checked = checked;
        r.certificate.held = held;
        r.status = held == checked ? Status::pass : Status::fail;
        if (held != checked)
            r.detail = std::to_string(checked - held) + " cases failed";
    }

    void run_theorem(TheoremReport& r, const Context& c)
    {
        const PlaneGraph& g = c.entry.graph;
        const std::string& id = r.theorem;
        if (id == "schauz" || id == "lemma") {
            run_game_suite(r, c);
            return;
        }
        r.claimed = claimed_bound(id, c.entry);
        const auto& p = plan(id);
        DerivedGraph h = derive(g, p.derived);
        r.certificate.derived = h.name;
        r.certificate.labels = labels(h);

        if (id == "T9" || id == "T10" || id == "T11") {
            if (h.size() <= c.verify.exact_edge_limit)
                exact(r, h, c);
            else
                constructive(r, h, c);
            return;
        }
        if (id == "T16") {
            triangulation_vf(r, h, c);
            return;
        }
        if (h.size() <= c.verify.exact_edge_limit) {
            exact(r, h, c);
            return;
        }

        // bounds: M_v (or M_f) gets claimed-1, the medial gets what the
        // all-2 incidence monomials leave
        std::map<std::string, DegreeVector> parts;
        if (id == "T12" || id == "T13") {
            parts["G_v"] = part_monomial(h, {"G_v"}, r.claimed - 1, c);
            parts["medial"] = medial_part(g, h, r.claimed - 3, c);
            parts["B_ve"] = constant_on(h, ElementKind::edge, 2);
        }
        else if (id == "T14") {
            parts["G_f"] = part_monomial(h, {"G_f"}, r.claimed - 1, c);
            parts["medial"] = medial_part(g, h, r.claimed - 3, c);
            parts["B_ef"] = constant_on(h, ElementKind::edge, 2);
        }
        else if (id == "T15") {
            auto vf = derive(g, "G_vf");
            auto d = degeneracy_orientation(vf.graph);
            DegreeVector mvf = d.indegrees;
            if (mvf.max() > r.claimed - 1)
                mvf = require(find_nonvanishing(vf.graph, std::vector<int>(vf.order(), r.claimed - 1), c.options,
                                                c.verify.search),
                              "G_vf")
                          .monomial;
            parts["G_v+G_f+B_vf"] = lift(vf, mvf, h);
            parts["medial"] = medial_part(g, h, r.claimed - 5, c);
            parts["B_ve"] = constant_on(h, ElementKind::edge, 2);
            parts["B_ef"] = constant_on(h, ElementKind::edge, 2);
        }
        else if (id == "T17") {
            auto vf = derive(g, "G_vf");
            TheoremReport inner;
            inner.claimed = 6;
            triangulation_vf(inner, vf, c);
            if (inner.status != Status::pass) {
                r.status = Status::inconclusive;
                r.detail = "no certified G_vf monomial: " + inner.detail;
                return;
            }
            parts["G_v+G_f+B_vf"] = lift(vf, inner.certificate.monomial, h);
            parts["medial"] = medial_part(g, h, r.claimed - 5, c);
            parts["B_ve"] = constant_on(h, ElementKind::edge, 2);
            parts["B_ef"] = constant_on(h, ElementKind::edge, 2);
        }
        from_product(r, h, parts, c);
    }

    std::string count_string(const SignedCount& c)
    {
        std::ostringstream s;
        s << c;
        return s.str();
    }
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::inconclusive:
        return "inconclusive";
    case Status::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

VerifyOptions VerifyOptions::from_environment()
{
    VerifyOptions o;
    if (const char* m = std::getenv("PLANEPAINT_BUDGET_MONOMIALS"))
        o.max_live_monomials = std::strtoull(m, nullptr, 10);
    if (const char* t = std::getenv("PLANEPAINT_TIME_BUDGET_S"))
        o.seconds = std::strtod(t, nullptr);
    return o;
}

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& p : plans())
            v.push_back(p.id);
        return v;
    }();
    return ids;
}

bool applies(const std::string& id, const CatalogEntry& entry)
{
    const auto& p = plan(id);
    if (id == "schauz" || id == "lemma")
        return tiny(entry);
    switch (p.hypothesis) {
    case 1:
        return entry.has("bipartite");
    case 2:
        return entry.has("triangulation");
    case 3:
        return special(entry);
    default:
        return true;
    }
}

TheoremReport verify_theorem(const std::string& id, const CatalogEntry& entry, const VerifyOptions& options)
{
    if (!applies(id, entry))
        throw HypothesisNotMet(id, entry.name);
    TheoremReport r;
    r.theorem = id;
    r.graph = entry.name;
    Context c{entry, {}, options};
    c.options.budget = Budget::with_seconds(options.seconds);
    c.options.budget.max_live_monomials = options.max_live_monomials;
    auto start = Clock::now();
    try {
        run_theorem(r, c);
    }
    catch (const BudgetExceeded& e) {
        r.status = Status::budget_exceeded;
        r.detail = e.what();
    }
    catch (const SizeLimitExceeded& e) {
        r.status = Status::budget_exceeded;
        r.detail = e.what();
    }
    catch (const PreconditionFailed& e) {
        r.status = Status::inconclusive;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<std::string> select_theorems(const std::string& filter)
{
    if (filter == "all")
        return theorem_ids();
    std::vector<std::string> out;
    std::stringstream in(filter);
    std::string id;
    while (std::getline(in, id, ',')) {
        plan(id);
        out.push_back(id);
    }
    return out;
}

std::vector<TheoremReport> run_suite(const std::string& filter, const std::vector<CatalogEntry>& entries,
                                     const VerifyOptions& options, unsigned threads)
{
    std::vector<std::pair<std::string, const CatalogEntry*>> jobs;
    for (const auto& id : select_theorems(filter))
        for (const auto& e : entries)
            if (applies(id, e))
                jobs.emplace_back(id, &e);

    std::vector<TheoremReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();)
            reports[i] = verify_theorem(jobs[i].first, *jobs[i].second, options);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return reports;
}

std::string reports_to_json(const std::vector<TheoremReport>& reports)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["theorem"] = r.theorem;
        j["graph"] = r.graph;
        j["claimed"] = r.claimed;
        j["certified"] = r.certified ? nlohmann::ordered_json(*r.certified) : nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json cert;
        const auto& c = r.certificate;
        cert["method"] = c.method;
        cert["derived"] = c.derived;
        if (!c.labels.empty())
            cert["labels"] = c.labels;
        if (c.monomial.size())
            cert["monomial"] = c.monomial.values();
        if (!c.parts.empty()) {
            nlohmann::ordered_json parts;
            for (const auto& [name, p] : c.parts)
                parts[name] = {{"monomial", p.monomial.values()}, {"coefficient", count_string(p.coefficient)}};
            cert["parts"] = parts;
        }
        if (c.factorization_unique)
            cert["factorization_unique"] = *c.factorization_unique;
        if (c.witnesses_at_cap)
            cert["witnesses_at_cap"] = *c.witnesses_at_cap;
        if (c.checked)
            cert["checked"] = *c.checked;
        if (c.held)
            cert["held"] = *c.held;
        if (c.exact_reading)
            cert["exact_reading"] = *c.exact_reading;
        j["certificate"] = cert;
        j["coefficient"] = count_string(r.coefficient);
        j["seconds"] = r.seconds;
        j["status"] = to_string(r.status);
        if (!r.detail.empty())
            j["detail"] = r.detail;
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

std::string reports_to_table(const std::vector<TheoremReport>& reports)
{
    std::ostringstream s;
    s << std::left << std::setw(8) << "theorem" << std::setw(14) << "graph" << std::setw(8) << "claimed"
      << std::setw(10) << "certified" << std::setw(17) << "status" << std::setw(10) << "seconds"
      << "method\n";
    for (const auto& r : reports) {
        std::string certified = r.certified ? std::to_string(*r.certified) : "-";
        if (r.certificate.checked)
            certified = std::to_string(*r.certificate.held) + "/" + std::to_string(*r.certificate.checked);
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << r.seconds;
        s << std::setw(8) << r.theorem << std::setw(14) << r.graph << std::setw(8)
          << (r.claimed ? std::to_string(r.claimed) : "-") << std::setw(10) << certified << std::setw(17)
          << to_string(r.status) << std::setw(10) << secs.str() << r.certificate.method;
        if (!r.detail.empty())
            s << "  (" << r.detail << ")";
        s << "\n";
    }
    return s.str();
}

std::optional<Witness> medial_witness(const PlaneGraph& g, int cap, const CoefficientOptions& options,
                                      const NonvanishingSearch& search)
{
    auto m = medial_graph(g);
    return find_nonvanishing(m.graph, std::vector<int>(m.order(), cap), options, search);
}

DegreeVector lift(const DerivedGraph& from, const DegreeVector& d, const DerivedGraph& to)
{
    std::vector<int> t(to.order(), 0);
    for (int i = 0; i < from.order(); ++i) {
        int at = to.position(from.vertices[i]);
        if (at < 0)
            throw PreconditionFailed(to_string(from.vertices[i]) + " is not a vertex of " + to.name);
        t[at] = d[i];
    }
    return DegreeVector(std::move(t));
}

} // namespace planepaint
