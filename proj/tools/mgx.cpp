// mgx: command-line front end for the (m,n)-colored mixed graph toolkit.
//
// Exit codes: 0 decided/produced, 1 negative decision, 2 usage or parse
// error, 3 budget exceeded. Witnesses go to stdout, diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mgx/constructions.hpp"
#include "mgx/core.hpp"
#include "mgx/experiments.hpp"
#include "mgx/homsearch.hpp"
#include "mgx/rigidity.hpp"
#include "mgx/signedclique.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw mgx::graph_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw mgx::graph_error("cannot open '" + path + "' for writing");
    out << text;
}

void print_vertex_set(const mgx::CliqueResult& r) {
    std::cout << r.size << "\n";
    std::cout << "vertices";
    for (int v : r.vertices) std::cout << ' ' << v;
    std::cout << "\n";
}

// Coloring file: one `c <u> <v> <1|2>` line per edge.
mgx::EdgeColoring parse_coloring(const std::string& text, const mgx::SimpleGraph& g) {
    mgx::EdgeIndex idx(g);
    mgx::EdgeColoring colors(idx.count(), 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        int u, v, c;
        if (tag != "c" || !(ls >> u >> v >> c) || (c != 1 && c != 2))
            throw mgx::parse_error(lineno, "expected 'c <u> <v> <1|2>'");
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.adjacent(u, v))
            throw mgx::parse_error(lineno, "not an edge of the graph");
        colors[idx.id(u, v)] = std::int8_t(c);
    }
    return colors;
}

std::string format_coloring(const mgx::SimpleGraph& g, const mgx::EdgeColoring& colors) {
    mgx::EdgeIndex idx(g);
    std::ostringstream out;
    for (int e = 0; e < idx.count(); ++e) {
        auto [u, v] = idx.edges()[e];
        out << "c " << u << ' ' << v << ' ' << int(colors[e]) << '\n';
    }
    return out.str();
}

std::string with_roles(const std::string& body, const std::vector<std::string>& roles) {
    std::ostringstream out;
    out << body;
    for (std::size_t v = 0; v < roles.size(); ++v)
        if (!roles[v].empty()) out << "# role " << v << ' ' << roles[v] << '\n';
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for (m,n)-colored mixed graphs"};
    app.require_subcommand(1);

    std::string file, file2, out_path;
    int m = 0, n = 0, k = 0;
    std::uint64_t budget = 0, trials = 0, seed = 0;
    int jobs = 0;
    bool strict = false;

    auto add_graph_arg = [&](CLI::App* cmd, std::string& target, const char* name) {
        cmd->add_option(name, target, "input file ('-' for stdin)")->required();
    };

    auto* check = app.add_subcommand("check-clique", "is the mixed graph an (m,n)-clique?");
    add_graph_arg(check, file, "file");

    auto* relc = app.add_subcommand("relative-clique", "largest pairwise-rigid vertex set");
    add_graph_arg(relc, file, "file");

    auto* absc = app.add_subcommand("absolute-clique", "largest induced (m,n)-clique");
    add_graph_arg(absc, file, "file");

    auto* chrom = app.add_subcommand("chromatic", "exact (m,n)-chromatic number");
    add_graph_arg(chrom, file, "file");

    auto* hom = app.add_subcommand("hom", "homomorphism existence G -> H");
    add_graph_arg(hom, file, "fileG");
    add_graph_arg(hom, file2, "fileH");

    auto* maxc = app.add_subcommand("max-chromatic",
                                    "max chromatic number over all edge assignments");
    add_graph_arg(maxc, file, "file");
    maxc->add_option("--m", m, "arc colors")->required();
    maxc->add_option("--n", n, "edge colors")->required();
    maxc->add_option("--budget", budget, "max chromatic subcalls");
    maxc->add_option("--jobs", jobs, "parallel threads (0 = all)");

    auto* cons = app.add_subcommand("construct", "generate a named family member");
    cons->require_subcommand(1);
    auto* outp = cons->add_subcommand("outerplanar-clique", "order 3(2m+n)+1");
    outp->add_option("--m", m)->required();
    outp->add_option("--n", n)->required();
    auto* plan = cons->add_subcommand("planar-clique", "order 3(2m+n)^2+(2m+n)+1");
    plan->add_option("--m", m)->required();
    plan->add_option("--n", n)->required();
    auto* joinc = cons->add_subcommand("join", "disjoint A, B plus a universal vertex");
    add_graph_arg(joinc, file, "fileA");
    add_graph_arg(joinc, file2, "fileB");
    auto* iter = cons->add_subcommand("iterate", "iterated join H_k");
    add_graph_arg(iter, file, "fileH");
    iter->add_option("--k", k, "iterations")->required();
    auto* pathc = cons->add_subcommand("path", "path with N edges");
    pathc->add_option("edges", k, "edge count")->required();
    auto* cyc = cons->add_subcommand("cycle", "cycle with N vertices");
    cyc->add_option("length", k, "cycle length")->required();

    auto* reduce = app.add_subcommand("reduce-nae", "build G_F from a monotone NAE formula");
    add_graph_arg(reduce, file, "formula");
    reduce->add_option("--out", out_path, "output path (default stdout)");

    auto* naes = app.add_subcommand("nae-solve", "monotone NAE-3SAT by enumeration");
    add_graph_arg(naes, file, "formula");
    naes->add_option("--budget", budget, "max assignments");

    auto* scol = app.add_subcommand("signed-colorable",
                                    "2-edge-coloring into a signed clique, if any");
    add_graph_arg(scol, file, "file");
    scol->add_option("--budget", budget, "max edge count");
    scol->add_flag("--strict-all-pairs", strict, "require adjacent pairs too");

    auto* vsig = app.add_subcommand("verify-signed", "check a signed-clique coloring");
    add_graph_arg(vsig, file, "file");
    add_graph_arg(vsig, file2, "coloring");
    vsig->add_flag("--strict-all-pairs", strict, "require adjacent pairs too");

    auto* exp = app.add_subcommand("experiment", "random-model experiments");
    exp->require_subcommand(1);
    auto* rnd = exp->add_subcommand("random", "Monte-Carlo clique fraction");
    rnd->add_option("--m", m)->required();
    rnd->add_option("--n", n)->required();
    rnd->add_option("--k", k)->required();
    rnd->add_option("--trials", trials)->required();
    rnd->add_option("--seed", seed)->required();
    rnd->add_option("--jobs", jobs, "parallel threads (0 = all)");
    auto* enu = exp->add_subcommand("enumerate", "exact count over all labeled graphs");
    enu->add_option("--m", m)->required();
    enu->add_option("--n", n)->required();
    enu->add_option("--k", k)->required();
    enu->add_option("--budget", budget, "max graphs");
    enu->add_option("--jobs", jobs, "parallel threads (0 = all)");
    auto* ub = exp->add_subcommand("union-bound", "exact non-cliques vs the union bound");
    ub->add_option("--m", m)->required();
    ub->add_option("--n", n)->required();
    ub->add_option("--k", k)->required();
    ub->add_option("--budget", budget, "max graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            auto g = mgx::parse_mixed(read_input(file));
            auto w = mgx::is_clique(g);
            if (w.clique) {
                std::cout << "clique\n";
                return 0;
            }
            std::cout << "failing-pair " << w.u << ' ' << w.v << "\n";
            return 1;
        }
        if (*relc) {
            print_vertex_set(mgx::relative_clique_number(mgx::parse_mixed(read_input(file))));
            return 0;
        }
        if (*absc) {
            print_vertex_set(mgx::absolute_clique_number(mgx::parse_mixed(read_input(file))));
            return 0;
        }
        if (*chrom) {
            auto r = mgx::chromatic_number(mgx::parse_mixed(read_input(file)));
            std::cout << r.value << "\n";
            std::cout << "partition";
            for (int p : r.witness.part_of) std::cout << ' ' << p;
            std::cout << "\n";
            return 0;
        }
        if (*hom) {
            auto g = mgx::parse_mixed(read_input(file));
            auto h = mgx::parse_mixed(read_input(file2));
            auto f = mgx::find_homomorphism(g, h);
            if (!f) {
                std::cout << "none\n";
                return 1;
            }
            std::cout << "hom";
            for (int x : *f) std::cout << ' ' << x;
            std::cout << "\n";
            return 0;
        }
        if (*maxc) {
            auto g = mgx::parse_simple(read_input(file));
            auto r = mgx::max_chromatic(g, mgx::Signature(m, n),
                                        budget ? budget : mgx::kDefaultChromaticBudget, jobs);
            std::cout << r.value << "\n" << mgx::serialize(r.argmax);
            return 0;
        }
        if (*outp || *plan) {
            auto lm = *outp ? mgx::outerplanar_clique(mgx::Signature(m, n))
                            : mgx::planar_clique(mgx::Signature(m, n));
            std::cout << with_roles(mgx::serialize(lm.graph), lm.roles);
            return 0;
        }
        if (*joinc) {
            auto a = mgx::parse_simple(read_input(file));
            auto b = mgx::parse_simple(read_input(file2));
            auto lm = mgx::join(a, b);
            std::cout << with_roles(mgx::serialize(lm.graph), lm.roles);
            return 0;
        }
        if (*iter) {
            auto h = mgx::parse_simple(read_input(file));
            std::cout << mgx::serialize(mgx::iterated_join(h, k));
            return 0;
        }
        if (*pathc) {
            std::cout << mgx::serialize(mgx::path(k));
            return 0;
        }
        if (*cyc) {
            std::cout << mgx::serialize(mgx::cycle(k));
            return 0;
        }
        if (*reduce) {
            auto f = mgx::parse_nae(read_input(file));
            auto art = mgx::build_gf(f);
            std::ostringstream body;
            body << mgx::serialize(art.gf);
            for (std::size_t v = 0; v < art.gf_roles.size(); ++v)
                body << "# role " << v << ' ' << art.gf_roles[v] << '\n';
            for (auto [u, v] : art.representative_pairs)
                body << "# rep " << u << ' ' << v << '\n';
            write_output(out_path, body.str());
            if (!out_path.empty() && out_path != "-")
                std::cout << "gf-order " << art.gf.order() << " hf-order " << art.hf.order()
                          << " representative-pairs " << art.representative_pairs.size()
                          << "\n";
            return 0;
        }
        if (*naes) {
            auto f = mgx::parse_nae(read_input(file));
            auto a = mgx::nae_solve(f, budget ? budget : (std::uint64_t(1) << 24));
            if (!a) {
                std::cout << "unsat\n";
                return 1;
            }
            std::cout << "sat";
            for (bool b : *a) std::cout << ' ' << (b ? 1 : 0);
            std::cout << "\n";
            return 0;
        }
        if (*scol) {
            auto g = mgx::parse_simple(read_input(file));
            auto c = mgx::signed_clique_colorable(g, budget ? int(budget) : 24, strict);
            if (!c) {
                std::cout << "none\n";
                return 1;
            }
            std::cout << format_coloring(g, *c);
            return 0;
        }
        if (*vsig) {
            auto g = mgx::parse_simple(read_input(file));
            auto colors = parse_coloring(read_input(file2), g);
            auto r = mgx::is_signed_clique(g, colors, strict);
            if (r.ok) {
                std::cout << "signed-clique\n";
                return 0;
            }
            std::cout << "failing-pair " << r.u << ' ' << r.v << "\n";
            return 1;
        }
        if (*rnd) {
            auto r = mgx::clique_fraction(mgx::Signature(m, n), k, trials, seed, jobs);
            std::cout << "experiment random " << mgx::format_report(r) << "\n";
            return 0;
        }
        if (*enu) {
            auto r = mgx::enumerate_exact(mgx::Signature(m, n), k,
                                          budget ? budget : mgx::kDefaultEnumBudget, jobs);
            std::cout << "experiment enumerate m=" << m << " n=" << n << " k=" << k
                      << " total=" << r.total << " cliques=" << r.cliques << "\n";
            return 0;
        }
        if (*ub) {
            auto r = mgx::union_bound_check(mgx::Signature(m, n), k,
                                            budget ? budget : mgx::kDefaultEnumBudget);
            bool ok = r.exact_noncliques <= r.bound;
            std::cout << "experiment union-bound m=" << m << " n=" << n << " k=" << k
                      << " noncliques=" << r.exact_noncliques << " bound=" << r.bound
                      << " holds=" << (ok ? 1 : 0) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const mgx::budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const mgx::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
