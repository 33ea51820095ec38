// Command-line front end: one verb per library operation.
//
// Exit codes: 0 ok, 1 usage, 2 computation error, 3 a verified bound failed.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "planepaint/catalog.hpp"
#include "planepaint/chroma.hpp"
#include "planepaint/derive.hpp"
#include "planepaint/paint.hpp"
#include "planepaint/polynomial.hpp"
#include "planepaint/verify.hpp"

using namespace planepaint;

namespace {
    struct Common
    {
        std::string graph;
        std::string derived = "G_v";
        bool json = false;
    };

    std::vector<int> parse_ints(const std::string& text)
    {
        std::vector<int> out;
        std::string cleaned = text;
        std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '[' || c == ']' || c == '(' || c == ')'; }, ' ');
        std::istringstream in(cleaned);
        for (int x; in >> x;)
            out.push_back(x);
        if (!in.eof())
            throw CLI::ValidationError("expected a list of integers, got \"" + text + "\"");
        return out;
    }

    std::string count_string(const SignedCount& c)
    {
        std::ostringstream s;
        s << c;
        return s.str();
    }

    void add_graph_options(CLI::App* cmd, Common& c, bool derived = true)
    {
        cmd->add_option("graph,--graph", c.graph, "catalog:<name>[+<name>...], catalog:all, rotation JSON or planar_code file")
            ->required();
        if (derived)
            cmd->add_option("--derived", c.derived, "derived graph to work on (G_v, medial, G_vf, Gbar_vef, ...)");
        cmd->add_flag("--json", c.json, "JSON output");
    }

    // runs f on every entry, with a name header when there are several
    template <class F>
    void each(const Common& c, F&& f)
    {
        auto entries = load_entries(c.graph);
        for (const auto& e : entries) {
            if (entries.size() > 1 && !c.json)
                std::cout << "# " << e.name << "\n";
            f(e);
        }
    }

    std::string monomial_text(const DerivedGraph& d, const DegreeVector& m)
    {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                s += (s.empty() ? "" : " ") + to_string(d.vertices[i]) + "^" + std::to_string(m[i]);
        return s.empty() ? "1" : s;
    }
}

int main(int argc, char** argv)
{
    CLI::App app{"planepaint: derived graphs of plane embeddings, graph polynomials and paintability"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "worker threads for suites and coefficient splitting")->check(CLI::PositiveNumber);

    Common c;
    std::string monomial, profile;
    int cap = 2, max_k = 8, k = 0;
    bool trace = false, degeneracy_flag = false;
    std::size_t trace_lines = 2000;
    int limit = 10;
    std::string suite = "all", catalog_source = "catalog:all";

    auto* faces = app.add_subcommand("faces", "trace and print the faces of an embedding");
    add_graph_options(faces, c, false);
    auto* derive_cmd = app.add_subcommand("derive", "print a derived graph as JSON");
    add_graph_options(derive_cmd, c);
    auto* coeff = app.add_subcommand("coeff", "coefficient of one monomial");
    add_graph_options(coeff, c);
    coeff->add_option("--monomial", monomial, "exponents in vertex order, e.g. 2,1,0")->required();
    auto* expand = app.add_subcommand("expand", "all non-vanishing monomials with exponents at most cap");
    add_graph_options(expand, c);
    expand->add_option("--cap", cap, "exponent cap")->check(CLI::NonNegativeNumber);
    auto* at = app.add_subcommand("at", "exact Alon-Tarsi number");
    add_graph_options(at, c);
    at->add_option("--max", max_k, "largest k to try")->check(CLI::PositiveNumber);
    auto* orient = app.add_subcommand("orient", "min max in-degree orientation");
    add_graph_options(orient, c);
    orient->add_flag("--degeneracy", degeneracy_flag, "acyclic degeneracy orientation instead");
    auto* paint = app.add_subcommand("paint", "paintability game search");
    add_graph_options(paint, c);
    paint->add_option("--k", k, "uniform token count");
    paint->add_option("--profile", profile, "per-vertex token counts, e.g. 3,2,1");
    paint->add_option("--max", max_k, "largest k for the painting number");
    paint->add_option("--limit", limit, "largest graph searched");
    paint->add_flag("--interactive-trace", trace, "print the game tree of a winning strategy");
    paint->add_option("--trace-lines", trace_lines, "stop the trace after this many lines");
    auto* chi = app.add_subcommand("chi", "chromatic number");
    add_graph_options(chi, c);
    auto* choosable = app.add_subcommand("choosable", "k-choosability, or the choice number without --k");
    add_graph_options(choosable, c);
    choosable->add_option("--k", k, "list size");
    choosable->add_option("--max", max_k, "largest k for the choice number");
    choosable->add_option("--limit", limit, "largest graph searched")->default_val(6);
    auto* verify = app.add_subcommand("verify", "run theorem suites over a catalog");
    verify->add_option("--suite", suite, "all, T9..T17, schauz, lemma, or a comma-separated list");
    verify->add_option("--catalog", catalog_source, "graphs to verify on");
    verify->add_flag("--json", c.json, "JSON report");
    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in catalog");
    catalog_cmd->add_flag("--json", c.json, "JSON output");
    auto* probe = app.add_subcommand("probe", "search a derived graph for a non-vanishing monomial below a bound");
    add_graph_options(probe, c);
    probe->add_option("--bound", max_k, "look for exponents at most bound-1")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    CoefficientOptions options;
    options.budget = Budget::from_environment();
    options.threads = threads;

    try {
        if (*faces) {
            auto out = nlohmann::ordered_json::array();
            each(c, [&](const CatalogEntry& e) {
                const auto& g = e.graph;
                if (c.json) {
                    nlohmann::ordered_json j;
                    j["name"] = e.name;
                    j["vertices"] = g.vertex_count();
                    j["edges"] = g.edge_count();
                    j["faces"] = g.faces();
                    out.push_back(j);
                    return;
                }
                std::cout << "V=" << g.vertex_count() << " E=" << g.edge_count() << " F=" << g.face_count() << "\n";
                for (int f = 0; f < g.face_count(); ++f) {
                    std::cout << "f" << f << ":";
                    for (int v : g.face(f))
                        std::cout << " " << v;
                    std::cout << "\n";
                }
            });
            if (c.json)
                std::cout << out.dump(2) << "\n";
        }
        else if (*derive_cmd) {
            each(c, [&](const CatalogEntry& e) { std::cout << to_json(derive(e.graph, c.derived)) << "\n"; });
        }
        else if (*coeff) {
            auto t = parse_ints(monomial);
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                std::cout << count_string(coefficient(d.graph, DegreeVector(t), options)) << "\n";
            });
        }
        else if (*expand) {
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                auto x = truncated_expansion(d.graph, cap, options.budget);
                if (c.json) {
                    auto out = nlohmann::ordered_json::array();
                    for (const auto& [m, v] : x)
                        out.push_back({{"monomial", m.values()}, {"coefficient", count_string(v)}});
                    std::cout << out.dump(2) << "\n";
                    return;
                }
                for (const auto& [m, v] : x)
                    std::cout << to_string(m) << " " << v << "\n";
                std::cout << x.size() << " non-vanishing monomials\n";
            });
        }
        else if (*at) {
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                auto r = alon_tarsi_number(d.graph, max_k, options.budget);
                if (c.json) {
                    nlohmann::ordered_json j;
                    j["graph"] = e.name;
                    j["derived"] = d.name;
                    j["at"] = r.found ? nlohmann::ordered_json(r.k) : nlohmann::ordered_json(nullptr);
                    j["max"] = max_k;
                    if (r.found) {
                        j["witness"] = r.witness.values();
                        j["coefficient"] = count_string(r.witness_coefficient);
                        j["witnesses_at_cap"] = r.witnesses_at_cap;
                    }
                    std::cout << j.dump(2) << "\n";
                    return;
                }
                if (r.found)
                    std::cout << r.k << "\n";
                else
                    std::cout << "exceeds " << max_k << "\n";
            });
        }
        else if (*orient) {
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                Orientation o;
                int bound;
                if (degeneracy_flag) {
                    auto r = degeneracy_orientation(d.graph);
                    o = r.orientation;
                    bound = r.degeneracy;
                }
                else {
                    auto r = min_max_indegree_orientation(d.graph);
                    o = r.orientation;
                    bound = r.max_indegree;
                }
                auto in = o.indegrees(d.graph);
                if (c.json) {
                    nlohmann::ordered_json j;
                    j["graph"] = e.name;
                    j["derived"] = d.name;
                    j[degeneracy_flag ? "degeneracy" : "max_indegree"] = bound;
                    j["indegrees"] = in.values();
                    j["head"] = o.head;
                    std::cout << j.dump(2) << "\n";
                    return;
                }
                std::cout << (degeneracy_flag ? "degeneracy " : "max in-degree ") << bound << "\n";
                std::cout << "in-degrees " << to_string(in) << "\n";
                for (std::size_t i = 0; i < o.head.size(); ++i) {
                    auto edge = d.graph.edges()[i];
                    int tail = o.head[i] == edge.u ? edge.v : edge.u;
                    std::cout << to_string(d.vertices[tail]) << " -> " << to_string(d.vertices[o.head[i]]) << "\n";
                }
            });
        }
        else if (*paint) {
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                PaintProfile p;
                if (!profile.empty())
                    p = parse_ints(profile);
                else if (k > 0)
                    p.assign(d.order(), k);
                if (p.empty()) {
                    auto n = paint_number(d.graph, max_k, limit);
                    if (n)
                        std::cout << *n << "\n";
                    else
                        std::cout << "exceeds " << max_k << "\n";
                    return;
                }
                if (static_cast<int>(p.size()) != d.order())
                    throw PreconditionFailed("profile has " + std::to_string(p.size()) + " entries, graph has " +
                                             std::to_string(d.order()) + " vertices");
                if (trace)
                    print_game_tree(std::cout, d.graph, p, trace_lines, limit);
                else
                    std::cout << (is_paintable(d.graph, p, limit) ? "paintable" : "not paintable") << "\n";
            });
        }
        else if (*chi) {
            each(c, [&](const CatalogEntry& e) { std::cout << chromatic_number(derive(e.graph, c.derived).graph) << "\n"; });
        }
        else if (*choosable) {
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                if (k <= 0) {
                    auto ch = choice_number(d.graph, max_k, limit);
                    if (ch)
                        std::cout << *ch << "\n";
                    else
                        std::cout << "exceeds " << max_k << "\n";
                    return;
                }
                auto r = k_choosability(d.graph, k, limit);
                std::cout << (r.choosable ? "choosable" : "not choosable") << "\n";
                if (r.bad_lists)
                    for (int v = 0; v < d.order(); ++v) {
                        std::cout << to_string(d.vertices[v]) << ":";
                        for (int col : (*r.bad_lists)[v])
                            std::cout << " " << col;
                        std::cout << "\n";
                    }
            });
        }
        else if (*verify) {
            auto entries = load_entries(catalog_source);
            auto reports = run_suite(suite, entries, VerifyOptions::from_environment(), threads);
            std::cout << (c.json ? reports_to_json(reports) : reports_to_table(reports));
            bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::fail; });
            bool budget = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::budget_exceeded; });
            if (failed)
                return 3;
            if (budget)
                return 2;
        }
        else if (*catalog_cmd) {
            auto out = nlohmann::ordered_json::array();
            for (const auto& e : catalog()) {
                const auto& g = e.graph;
                std::vector<std::string> tags(e.tags.begin(), e.tags.end());
                if (c.json) {
                    out.push_back({{"name", e.name}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                                   {"faces", g.face_count()}, {"tags", tags}});
                    continue;
                }
                std::cout << std::left << std::setw(14) << e.name << " V=" << std::setw(3) << g.vertex_count()
                          << " E=" << std::setw(3) << g.edge_count() << " F=" << std::setw(3) << g.face_count();
                for (const auto& t : tags)
                    std::cout << " " << t;
                std::cout << "\n";
            }
            if (c.json)
                std::cout << out.dump(2) << "\n";
        }
        else if (*probe) {
            each(c, [&](const CatalogEntry& e) {
                auto d = derive(e.graph, c.derived);
                auto w = find_nonvanishing(d.graph, std::vector<int>(d.order(), max_k - 1), options);
                if (w)
                    std::cout << "AT(" << d.name << ") <= " << max_k << " via " << w->method << ": "
                              << monomial_text(d, w->monomial) << " coefficient " << w->coefficient << "\n";
                else
                    std::cout << "no monomial below " << max_k << " found for " << d.name << "\n";
            });
        }
    }
    catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
