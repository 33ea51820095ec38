// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria. Every tolerance and time limit is pinned below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "planepaint/catalog.hpp"
#include "planepaint/chroma.hpp"
#include "planepaint/derive.hpp"
#include "planepaint/paint.hpp"
#include "planepaint/polynomial.hpp"
#include "planepaint/verify.hpp"

using namespace planepaint;

namespace {
    constexpr double embedding_seconds = 1;
    constexpr double oracle_seconds = 30;
    constexpr int oracle_edge_limit = 8;
    constexpr int oracle_random_subgraphs = 50;
    constexpr double bipartite_seconds = 60;
    constexpr int bipartite_min_entries = 5;
    constexpr double degeneracy_seconds = 10;
    constexpr int degeneracy_random_subgraphs = 20;
    constexpr double medial_seconds = 5 * 60;
    constexpr std::size_t medial_edge_limit = 24;
    constexpr double product_seconds = 10 * 60;
    constexpr double vf_seconds = 10 * 60;
    constexpr int vf_cap = 5;
    constexpr int vf_face_exponent = 5;
    constexpr double vef_seconds = 30 * 60;
    constexpr int vef_cap = 6;
    constexpr double schauz_seconds = 10 * 60;
    constexpr double lemma_seconds = 15 * 60;
    constexpr int game_vertex_limit = 6;
    constexpr std::size_t game_edge_limit = 9;
    constexpr int game_monomial_cap = 2;
    constexpr double chain_seconds = 10 * 60;
    constexpr int chain_vertex_limit = 5;
    constexpr unsigned rng_seed = 20240601;

    using Clock = std::chrono::steady_clock;

    struct Outcome
    {
        bool ok = true;
        std::string note;
        void fail(const std::string& why)
        {
            if (ok)
                note = why;
            ok = false;
        }
    };

    int failures = 0;

    void criterion(const std::string& id, const std::string& title, double limit, const std::function<Outcome()>& body)
    {
        auto start = Clock::now();
        Outcome out;
        try {
            out = body();
        }
        catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (out.ok && limit > 0 && secs >= limit)
            out.fail("took longer than " + std::to_string(limit) + " s");
        if (!out.ok)
            ++failures;
        std::cout << (out.ok ? "PASS " : "FAIL ") << std::setw(3) << std::left << id << ' ' << title << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!out.note.empty())
            std::cout << ": " << out.note;
        std::cout << std::endl;
    }

    oracle::Monomial values(const DegreeVector& d) { return d.values(); }

    bool coefficient_matches(const Graph& h, Outcome& out, const std::string& name)
    {
        auto poly = oracle::symbolic_expansion(h);
        for (const auto& t : oracle::compositions(h.order(), static_cast<int>(h.size()))) {
            auto c = coefficient(h, DegreeVector(t));
            auto it = poly.find(t);
            long long want = it == poly.end() ? 0 : it->second;
            if (c != want) {
                out.fail(name + " at " + to_string(DegreeVector(t)));
                return false;
            }
        }
        return true;
    }

    std::vector<const CatalogEntry*> entries_where(const std::function<bool(const CatalogEntry&)>& keep)
    {
        std::vector<const CatalogEntry*> out;
        for (const auto& e : catalog())
            if (keep(e))
                out.push_back(&e);
        return out;
    }

    bool game_sized(const CatalogEntry& e)
    {
        return e.graph.vertex_count() <= game_vertex_limit && e.graph.graph().size() <= game_edge_limit;
    }

    std::string run_cli(const std::string& args)
    {
        std::string cmd = std::string(PLANEPAINT_CLI) + " " + args;
        std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
        if (!pipe)
            throw std::runtime_error("cannot run " + cmd);
        std::string text;
        std::array<char, 4096> buf;
        while (auto n = std::fread(buf.data(), 1, buf.size(), pipe.get()))
            text.append(buf.data(), n);
        return text;
    }
}

int main()
{
    std::mt19937 rng(rng_seed);

    criterion("1", "embedding soundness on every catalog entry", embedding_seconds, [] {
        Outcome out;
        for (const auto& e : catalog()) {
            const auto& g = e.graph;
            if (g.vertex_count() - g.edge_count() + g.face_count() != 2)
                out.fail(e.name + " breaks Euler");
            std::size_t lengths = 0;
            for (const auto& f : g.faces()) {
                lengths += f.size();
                std::vector<int> sorted = f;
                std::sort(sorted.begin(), sorted.end());
                if (f.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    out.fail(e.name + " has a non-simple face");
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (!g.graph().adjacent(f[i], f[(i + 1) % f.size()]))
                        out.fail(e.name + " face walks a non-edge");
            }
            if (lengths != 2 * g.graph().size())
                out.fail(e.name + " face lengths do not sum to 2E");
        }
        out.note = out.ok ? std::to_string(catalog().size()) + " entries" : out.note;
        return out;
    });

    criterion("2", "coefficients match symbolic expansion", oracle_seconds, [&] {
        Outcome out;
        auto small = entries_where([](const CatalogEntry& e) { return e.graph.edge_count() <= oracle_edge_limit; });
        std::size_t graphs = 0;
        for (auto* e : small) {
            coefficient_matches(e->graph.graph(), out, e->name);
            ++graphs;
        }
        for (int i = 0; i < oracle_random_subgraphs; ++i) {
            const auto* e = small[rng() % small.size()];
            coefficient_matches(oracle::random_subgraph(e->graph.graph(), rng), out, "subgraph of " + e->name);
            ++graphs;
        }
        if (out.ok)
            out.note = std::to_string(graphs) + " graphs, every degree vector";
        return out;
    });

    criterion("3", "bipartite: achievable in-degrees non-vanishing, AT = min max in-degree + 1", bipartite_seconds,
              [] {
                  Outcome out;
                  auto bip = entries_where([](const CatalogEntry& e) { return e.has("bipartite"); });
                  if (static_cast<int>(bip.size()) < bipartite_min_entries)
                      out.fail("only " + std::to_string(bip.size()) + " bipartite entries");
                  std::ostringstream seen;
                  for (auto* e : bip) {
                      const Graph& h = e->graph.graph();
                      for (const auto& d : oracle::achievable_indegrees(h))
                          if (coefficient(h, DegreeVector(d)) == 0)
                              out.fail(e->name + " vanishes at " + to_string(DegreeVector(d)));
                      auto at = alon_tarsi_number(h, h.order() + 1);
                      int mm = min_max_indegree_orientation(h).max_indegree;
                      if (!at.found || at.k != mm + 1)
                          out.fail(e->name + " AT " + std::to_string(at.k) + " vs " + std::to_string(mm + 1));
                      seen << e->name << "=" << at.k << " ";
                  }
                  if (alon_tarsi_number(catalog_entry("Q3").graph.graph(), 5).k != 3)
                      out.fail("Q3 AT is not 3");
                  if (alon_tarsi_number(catalog_entry("C4").graph.graph(), 5).k != 2)
                      out.fail("C4 AT is not 2");
                  if (out.ok)
                      out.note = seen.str();
                  return out;
              });

    criterion("4", "degeneracy orientation monomial has |coefficient| = 1", degeneracy_seconds, [&] {
        Outcome out;
        const auto& all = catalog();
        for (int i = 0; i < degeneracy_random_subgraphs; ++i) {
            const auto& e = all[rng() % all.size()];
            Graph h = oracle::random_subgraph(e.graph.graph(), rng);
            auto d = degeneracy_orientation(h);
            auto c = coefficient(h, d.indegrees);
            if (abs(c) != 1)
                out.fail("subgraph of " + e.name + " gives " + c.str());
            if (h.size() <= 20 && oracle::orientation_count(h, values(d.indegrees)) != c)
                out.fail("orientation count disagrees on subgraph of " + e.name);
        }
        return out;
    });

    criterion("5", "medial AT exact: 3 on K4, octahedron, Q3; at most 4 elsewhere", medial_seconds, [] {
        Outcome out;
        std::ostringstream seen;
        for (const auto& e : catalog()) {
            auto m = medial_graph(e.graph);
            if (m.size() > medial_edge_limit)
                continue;
            auto at = alon_tarsi_number(m.graph, 5);
            bool three = e.name == "K4" || e.name == "octahedron" || e.name == "Q3";
            if (!at.found || (three ? at.k != 3 : at.k > 4))
                out.fail(e.name + " medial AT " + std::to_string(at.k));
            seen << e.name << "=" << at.k << " ";
        }
        if (out.ok)
            out.note = seen.str();
        return out;
    });

    criterion("6", "Gbar_ve product certificates: max exponent 5 on K3, K4 and 4 on Q3, octahedron", product_seconds,
              [] {
                  Outcome out;
                  VerifyOptions o;
                  o.exact_edge_limit = 0;
                  o.seconds = product_seconds;
                  std::ostringstream seen;
                  for (auto [name, bound] : {std::pair{"K3", 5}, {"K4", 5}, {"Q3", 4}, {"octahedron", 4}}) {
                      const auto& e = catalog_entry(name);
                      auto r = verify_theorem("T13", e, o);
                      if (r.status != Status::pass || r.certificate.method != "product") {
                          out.fail(std::string(name) + " " + to_string(r.status) + " " + r.detail);
                          continue;
                      }
                      auto h = derive(e.graph, "Gbar_ve");
                      auto c = coefficient(h.graph, r.certificate.monomial);
                      if (c == 0 || c != r.coefficient || r.certificate.monomial.max() > bound)
                          out.fail(std::string(name) + " certificate does not hold");
                      seen << name << ":max=" << r.certificate.monomial.max() << ",coef=" << c << " ";
                  }
                  if (out.ok)
                      out.note = seen.str();
                  return out;
              });

    criterion("7a", "G_vf non-vanishing monomial with exponents at most 5 on K4, octahedron", vf_seconds, [] {
        Outcome out;
        VerifyOptions o;
        // default plan: exact on K4, where the face graph is a clique, product on the octahedron
        o.seconds = vf_seconds;
        std::ostringstream seen;
        for (const char* name : {"K4", "octahedron"}) {
            const auto& e = catalog_entry(name);
            auto r = verify_theorem("T16", e, o);
            auto h = derive(e.graph, "G_vf");
            if (r.status != Status::pass || coefficient(h.graph, r.certificate.monomial) == 0 ||
                r.certificate.monomial.max() > vf_cap)
                out.fail(std::string(name) + " " + to_string(r.status) + " " + r.detail);
            else
                seen << name << ":" << to_string(r.certificate.monomial) << " ";
        }
        if (out.ok)
            out.note = seen.str();
        return out;
    });

    criterion("7b", "G_vf of K4: face exponents exactly 5", vf_seconds, [] {
        // every face exponent counts edges oriented into that face; edges
        // touching a face are the only source
        Outcome out;
        const auto& e = catalog_entry("K4");
        auto h = derive(e.graph, "G_vf");
        long touching = 0, faces = 0;
        std::vector<char> face(h.order(), 0);
        for (int i = 0; i < h.order(); ++i)
            if (h.vertices[i].kind == ElementKind::face) {
                face[i] = 1;
                ++faces;
            }
        for (auto ed : h.graph.edges())
            touching += face[ed.u] || face[ed.v];
        long needed = vf_face_exponent * faces;
        if (touching < needed)
            out.fail("face in-degrees need " + std::to_string(needed) + " edges but only " + std::to_string(touching) +
                     " touch a face, so every such monomial vanishes");
        return out;
    });

    criterion("8", "Gbar_vef of K4: non-vanishing monomial with exponents at most 6", vef_seconds, [] {
        Outcome out;
        VerifyOptions o;
        // 60 edges, so the default plan takes the product construction
        o.seconds = vef_seconds;
        const auto& e = catalog_entry("K4");
        auto h = derive(e.graph, "Gbar_vef");
        if (h.order() != 14 || h.size() != 60)
            out.fail("Gbar_vef(K4) has the wrong size");
        auto r = verify_theorem("T17", e, o);
        if (r.status != Status::pass)
            out.fail(to_string(r.status) + " " + r.detail);
        else if (r.certificate.method != "product" || r.certificate.monomial.max() > vef_cap || coefficient(h.graph, r.certificate.monomial) == 0)
            out.fail("certificate does not hold");
        else
            out.note = to_string(r.certificate.monomial) + " coef " + r.coefficient.str();
        return out;
    });

    criterion("9", "paintable with exponents + 1 for every non-vanishing monomial", schauz_seconds, [] {
        Outcome out;
        std::size_t checked = 0;
        for (auto* e : entries_where(game_sized)) {
            const Graph& h = e->graph.graph();
            oracle::Paint slow(h);
            for (const auto& [m, c] : truncated_expansion(h, game_monomial_cap)) {
                PaintProfile p(m.begin(), m.end());
                for (auto& t : p)
                    ++t;
                ++checked;
                if (!is_paintable(h, p))
                    out.fail(e->name + " not paintable at " + to_string(m));
                if (!slow.paintable((1u << h.order()) - 1, p))
                    out.fail(e->name + " oracle disagrees at " + to_string(m));
            }
        }
        if (out.ok)
            out.note = std::to_string(checked) + " monomials";
        return out;
    });

    criterion("10", "independent witness X' for every X and monomial", lemma_seconds, [] {
        Outcome out;
        std::size_t checked = 0;
        for (auto* e : entries_where(game_sized)) {
            const Graph& h = e->graph.graph();
            const int n = h.order();
            auto monomials = truncated_expansion(h, game_monomial_cap);
            for (VertexSet x = 1; x < (VertexSet{1} << n); ++x)
                for (const auto& [m, c] : monomials) {
                    ++checked;
                    auto w = lemma_check(h, x, m);
                    if (!w) {
                        out.fail(e->name + " X=" + format_set(x) + " at " + to_string(m));
                        continue;
                    }
                    // re-derive the witness with the symbolic oracle
                    if ((w->reply & ~x) || !oracle::independent(h, w->reply)) {
                        out.fail(e->name + " reply outside X or dependent");
                        continue;
                    }
                    std::vector<int> keep, cap;
                    for (int v = 0; v < n; ++v)
                        if (!(w->reply >> v & 1)) {
                            keep.push_back(v);
                            cap.push_back(m[v] - (x >> v & 1));
                        }
                    auto poly = oracle::symbolic_expansion(h.induced(keep));
                    auto it = poly.find(w->monomial.values());
                    bool bounded = true;
                    for (std::size_t i = 0; i < cap.size(); ++i)
                        bounded = bounded && w->monomial[i] <= cap[i];
                    if (it == poly.end() || !bounded)
                        out.fail(e->name + " witness fails the oracle");
                }
        }
        if (out.ok)
            out.note = std::to_string(checked) + " cases";
        return out;
    });

    criterion("11", "chi <= ch <= paint <= AT on graphs with at most 5 vertices", chain_seconds, [] {
        Outcome out;
        std::ostringstream seen;
        for (const auto& e : catalog()) {
            const Graph& h = e.graph.graph();
            if (h.order() > chain_vertex_limit)
                continue;
            int chi = chromatic_number(h);
            if (chi != oracle::chromatic_number(h))
                out.fail(e.name + " chromatic number disagrees with oracle");
            auto ch = choice_number(h, h.order() + 1);
            auto pn = paint_number(h, h.order() + 1);
            auto at = alon_tarsi_number(h, h.order() + 1);
            if (!ch || !pn || !at.found) {
                out.fail(e.name + " parameter not found");
                continue;
            }
            if (!(chi <= *ch && *ch <= *pn && *pn <= at.k))
                out.fail(e.name + " chain broken");
            std::array<int, 4> got{chi, *ch, *pn, at.k};
            if (e.name == "K3" && got != std::array<int, 4>{3, 3, 3, 3})
                out.fail("K3 is not 3,3,3,3");
            if (e.name == "C4" && got != std::array<int, 4>{2, 2, 2, 2})
                out.fail("C4 is not 2,2,2,2");
            seen << e.name << "=" << chi << "," << *ch << "," << *pn << "," << at.k << " ";
        }
        if (out.ok)
            out.note = seen.str();
        return out;
    });

    criterion("12", "verify --suite all --json is deterministic apart from timing", 0, [] {
        Outcome out;
        std::regex seconds("\"seconds\": [0-9.eE+-]+");
        auto a = std::regex_replace(run_cli("verify --suite all --json"), seconds, "\"seconds\": _");
        auto b = std::regex_replace(run_cli("verify --suite all --json"), seconds, "\"seconds\": _");
        if (a.empty() || a.front() != '[')
            out.fail("no JSON report");
        else if (a != b)
            out.fail("reports differ");
        else
            out.note = std::to_string(a.size()) + " bytes identical";
        return out;
    });

    std::cout << failures << " criteria failed" << std::endl;
    return failures;
}
