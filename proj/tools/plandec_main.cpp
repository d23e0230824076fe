// plandec: planar decompositions of minor-closed graph classes and drawings
// with certified crossing bounds.
//
// Subcommands
//   decompose       graph -> decomposition JSON + metrics table
//   draw            graph -> drawing JSON / SVG + crossing report
//   verify          artifact JSON -> exit 0 iff its invariants hold
//   k5-decomp       graph -> clique-sum tree JSON (planar / V8 pieces)
//   k5-draw         alias of draw --class k5
//   k33-draw        alias of draw --class k33
//   tree-partition  graph -> forest-pattern partition JSON
//   convex-draw     graph -> convex drawing of a tree-partition
//
// Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 bound or
// invariant violation.  Outputs are byte-deterministic for a fixed (input,
// seed).  Setting PLANDEC_INJECT_FAULT corrupts each artifact after it is
// computed, for exercising the built-in verification paths.

#include "plandec/decomp_tools.hpp"
#include "plandec/decomposition.hpp"
#include "plandec/drawing.hpp"
#include "plandec/drawing_to_decomp.hpp"
#include "plandec/errors.hpp"
#include "plandec/graph.hpp"
#include "plandec/json_io.hpp"
#include "plandec/k33.hpp"
#include "plandec/k5.hpp"
#include "plandec/minors.hpp"
#include "plandec/partition.hpp"
#include "plandec/planarity.hpp"
#include "plandec/render.hpp"
#include "plandec/sum_tree.hpp"
#include "plandec/svg.hpp"
#include "plandec/treewidth.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace plandec;

struct RunConfig {
    std::string in;
    std::string out;     ///< output directory; artifacts written only if set
    std::uint64_t seed = 0;
    std::string cls = "generic";  ///< k5 | k33 | treewidth | generic
    bool strong = false;
    int p = 0;
    bool svg = false;
    std::string verify_level = "fast";  ///< fast | full
    bool quadratic = false;
};

bool fault_injection() {
    const char* env = std::getenv("PLANDEC_INJECT_FAULT");
    return env != nullptr && *env != '\0';
}

Graph load_graph(const std::string& path) {
    check_precondition(!path.empty(), "--in is required");
    return read_edge_list_file(path);
}

void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
    if (cfg.out.empty()) return;
    std::filesystem::create_directories(cfg.out);
    std::ofstream out(cfg.out + "/" + name, std::ios::binary);
    if (!out) throw precondition_error("cannot write to " + cfg.out + "/" + name);
    out << content;
}

void print_input_line(const Graph& g) {
    std::cout << "input: n=" << g.n << " m=" << g.m() << " maxdeg=" << g.max_degree() << "\n";
}

// Prints one certified-bound row; returns pass.
bool bound_row(const std::string& label, long long value, long long cap, bool strict_less) {
    bool ok = strict_less ? value < cap : value <= cap;
    std::cout << "bound[" << label << "]: " << value << (strict_less ? " < " : " <= ") << cap
              << (ok ? " pass" : " FAIL") << "\n";
    return ok;
}

// ---- decompose --------------------------------------------------------------

int cmd_decompose(const RunConfig& cfg) {
    Graph g = load_graph(cfg.in);
    print_input_line(g);

    Decomposition d;
    std::string pipeline;
    if (cfg.quadratic) {
        pipeline = "quadratic";
        d = quadratic_decomposition(g);
    } else if (cfg.cls == "k5") {
        if (cfg.strong) {
            pipeline = cfg.p == 4 ? "k5-strong-omega" : "k5-strong-3";
            d = cfg.p == 4 ? strong_omega_decomp_k5(g) : strong_3_decomp_k5(g);
        } else if (g == v8_graph()) {
            // The canonical width-2 depiction of the Moebius ladder.
            pipeline = "k5-omega";
            d = v8_omega_decomposition();
        } else {
            pipeline = "k5-omega";
            d = planar_omega_decomp_k5(g);
        }
    } else if (cfg.cls == "k33") {
        pipeline = "k33-partition";
        d = partition_decomposition(k33_planar_partition(g));
    } else if (cfg.cls == "treewidth") {
        pipeline = "tree-partition";
        TreeDecomp td;
        treewidth_exact_small(g, &td);
        d = partition_decomposition(tree_partition(g, td).partition);
    } else {
        check_precondition(cfg.cls == "generic", "unknown --class " + cfg.cls);
        pipeline = is_planar(g) ? "identity" : "quadratic";
        d = is_planar(g) ? identity_decomposition(g) : quadratic_decomposition(g);
    }

    if (fault_injection() && !d.bags.empty()) d.bags.back().clear();

    std::cout << "pipeline: " << pipeline << "\n";
    auto errs = validate_decomposition(g, d, /*require_planar=*/true);
    for (const auto& e : errs) std::cout << "violation: " << e << "\n";
    if (!errs.empty()) return 4;

    std::cout << "order: " << d.order() << "\nwidth: " << d.width()
              << "\nmax-spread: " << d.spread() << "\nstrong: " << (d.strong ? "yes" : "no")
              << "\np: " << d.p << "\n";

    bool ok = true;
    if (pipeline == "k5-omega" && g.n >= 3)
        ok &= bound_row("order <= 4n/3-2", d.order(), 4LL * g.n / 3 - 2, false);
    if (pipeline == "k5-strong-3" && g.n >= 4)
        ok &= bound_row("order <= 3n-8", d.order(), 3LL * g.n - 8, false);
    if (pipeline == "k5-strong-omega" && g.n >= 3) {
        ok &= bound_row("3*order <= 4n-12", 3LL * d.order(), 4LL * g.n - 12, false);
        ok &= bound_row("width <= 4", d.width(), 4, false);
    }
    if (pipeline == "k33-partition") {
        long long pairs = 0;
        for (const auto& b : d.bags) pairs += b.size() == 2 ? 1 : 0;
        ok &= bound_row("3*pairs <= n-2", 3 * pairs, std::max(g.n - 2, 0), false);
    }

    write_file(cfg, "decomposition.json", decomposition_to_json(g, d));
    return ok ? 0 : 4;
}

// ---- draw ---------------------------------------------------------------------

int cmd_draw(const RunConfig& cfg) {
    Graph g = load_graph(cfg.in);
    print_input_line(g);
    const long long delta = g.max_degree();

    Drawing dr;
    std::string pipeline;
    // Bound rows specific to each pipeline, checked against the recount below.
    std::vector<std::tuple<std::string, long long, bool>> caps;  // label, cap, strict
    bool per_edge_2delta = false;

    if (cfg.cls == "k5") {
        pipeline = "k5-draw";
        RenderResult rr = crossings_k5(g, cfg.seed);
        dr = std::move(rr.drawing);
        if (g.m() > 0)
            caps.push_back({"3*cr < 20*maxdeg^2*n", 20 * delta * delta * g.n, true});
    } else if (cfg.cls == "k33") {
        pipeline = "k33-draw";
        PartitionDrawing pd = k33_rectilinear_drawing(g, cfg.seed);
        dr = std::move(pd.drawing);
        per_edge_2delta = true;
        caps.push_back({"cr <= maxdeg*(3n-5)", delta * std::max(3LL * g.n - 5, 0LL), false});
    } else if (cfg.cls == "treewidth") {
        pipeline = "convex-draw";
        ConvexPipelineResult res = convex_treewidth_pipeline(g, nullptr, cfg.seed);
        dr = std::move(res.draw.drawing);
        std::cout << "treewidth: " << res.treewidth
                  << "\npartition-width: " << res.tp.partition.width()
                  << "\nwidth-target-met: " << (res.tp.width_bound_met ? "yes" : "no") << "\n";
        if (res.tp.width_bound_met)
            caps.push_back({"per-edge certified < 5*maxdeg*(tw+1)*(7*maxdeg-1)",
                            res.per_edge_bound_met ? 1 : 0, false});
    } else {
        check_precondition(cfg.cls == "generic", "unknown --class " + cfg.cls);
        if (is_planar(g)) {
            pipeline = "planar-grid";
            GridLayout gl = straight_line_layout(g);
            std::vector<Pt> pts;
            for (auto [x, y] : gl.xy) pts.push_back(Pt{rat(x), rat(y)});
            dr = Drawing::straight_line(g, std::move(pts));
            caps.push_back({"cr <= 0", 0, false});
        } else {
            pipeline = "quadratic-render";
            RenderResult rr = render_decomposition(g, quadratic_decomposition(g), cfg.seed);
            dr = std::move(rr.drawing);
            caps.push_back({"cr <= charge bound", rr.charge_bound, false});
        }
    }

    if (fault_injection() && dr.g.n >= 2) dr.points[0] = dr.points[1];

    std::cout << "pipeline: " << pipeline << "\n";
    CrossingReport rep = count_crossings(dr);
    for (const auto& dgn : rep.degeneracies) std::cout << "violation: " << dgn << "\n";
    if (!rep.proper()) return 4;
    std::cout << "crossings: " << rep.total << "\n";

    bool ok = true;
    if (per_edge_2delta) {
        long long worst = 0;
        for (long long c : rep.per_edge) worst = std::max(worst, c);
        ok &= bound_row("per-edge <= 2*maxdeg", worst, 2 * delta, false);
    }
    for (const auto& [label, cap, strict] : caps) {
        if (label.rfind("per-edge certified", 0) == 0) {
            std::cout << "bound[" << label << "]: " << (cap ? "pass" : "FAIL") << "\n";
            ok &= cap != 0;
        } else if (label.rfind("3*cr", 0) == 0) {
            ok &= bound_row(label, 3 * rep.total, cap, strict);
        } else {
            ok &= bound_row(label, rep.total, cap, strict);
        }
    }

    write_file(cfg, "drawing.json", drawing_to_json(dr));
    write_file(cfg, "report.json", crossing_report_to_json(rep));
    if (cfg.svg) write_file(cfg, "drawing.svg", drawing_to_svg(dr, /*mark_crossings=*/true));
    return ok ? 0 : 4;
}

// ---- verify -------------------------------------------------------------------

int verify_decomposition_artifact(const RunConfig& cfg, const std::string& text) {
    DecompositionArtifact art = decomposition_from_json(text);
    std::cout << "artifact: decomposition (n=" << art.g.n << ", order=" << art.d.order()
              << ", width=" << art.d.width() << ")\n";
    bool full = cfg.verify_level == "full";
    auto errs = validate_decomposition(art.g, art.d, /*require_planar=*/full);
    for (const auto& e : errs) std::cout << "violation: " << e << "\n";
    if (!errs.empty()) return 4;
    std::cout << "check[structure]: ok\n";
    if (full) std::cout << "check[planar-host]: ok\n";
    return 0;
}

int verify_drawing_artifact(const RunConfig& cfg, const std::string& text) {
    Drawing dr = drawing_from_json(text);
    std::cout << "artifact: drawing (n=" << dr.g.n << ", m=" << dr.g.m() << ")\n";
    CrossingReport rep = count_crossings(dr);
    for (const auto& d : rep.degeneracies) std::cout << "violation: " << d << "\n";
    if (!rep.proper()) return 4;
    std::cout << "check[proper]: ok\ncrossings: " << rep.total << "\n";
    if (cfg.verify_level == "full") {
        ExtractionResult ex = drawing_to_decomposition(dr, /*strong=*/false);
        auto errs = validate_decomposition(dr.g, ex.decomp, /*require_planar=*/true);
        for (const auto& e : errs) std::cout << "violation: " << e << "\n";
        if (!errs.empty()) return 4;
        std::cout << "check[extracted-decomposition]: ok\n";
    }
    return 0;
}

int verify_partition_artifact(const RunConfig&, const std::string& text) {
    Partition p = partition_from_json(text);
    std::cout << "artifact: partition (n=" << p.host.n << ", bags=" << p.bags.size()
              << ", width=" << p.width() << ")\n";
    auto errs = validate_partition(p);
    for (const auto& e : errs) std::cout << "violation: " << e << "\n";
    if (!errs.empty()) return 4;
    std::cout << "check[structure]: ok\n";
    return 0;
}

int verify_sum_tree_artifact(const RunConfig& cfg, const std::string& text) {
    SumTree t = sum_tree_from_json(text);
    std::cout << "artifact: sum-tree (n=" << t.n << ", pieces=" << t.pieces.size()
              << ", joins=" << t.joins.size() << ")\n";
    int bad = 0;
    for (std::size_t i = 0; i < t.pieces.size(); ++i) {
        const SumPiece& p = t.pieces[i];
        bool ok = true;
        switch (p.kind) {
            case PieceKind::planar: ok = is_planar(p.graph); break;
            case PieceKind::v8: ok = is_v8(p.graph); break;
            case PieceKind::k5: ok = p.graph.n == 5 && p.graph.m() == 10; break;
            case PieceKind::failure: ok = false; break;
        }
        for (int v : p.to_g) ok = ok && v >= 0 && v < t.n;
        if (!ok) {
            std::cout << "violation: piece " << i << " does not match its declared kind ("
                      << piece_kind_name(p.kind) << ")\n";
            ++bad;
        }
    }
    for (std::size_t j = 0; j < t.joins.size(); ++j) {
        const SumJoin& jn = t.joins[j];
        if (jn.a < 0 || jn.b < 0 || jn.a >= static_cast<int>(t.pieces.size()) ||
            jn.b >= static_cast<int>(t.pieces.size()) || jn.set.size() > 3) {
            std::cout << "violation: join " << j << " is malformed\n";
            ++bad;
        }
    }
    if (bad > 0) return 4;
    std::cout << "check[pieces]: ok\n";
    if (cfg.verify_level == "full") {
        Graph composed = t.compose();
        std::cout << "check[recompose]: n=" << composed.n << " m=" << composed.m() << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    check_precondition(!cfg.in.empty(), "--in is required");
    std::ifstream in(cfg.in, std::ios::binary);
    if (!in) throw parse_error("cannot read " + cfg.in);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw parse_error(std::string("invalid JSON: ") + ex.what());
    }
    if (j.contains("routes")) return verify_drawing_artifact(cfg, text);
    if (j.contains("dedges")) return verify_decomposition_artifact(cfg, text);
    if (j.contains("pieces")) return verify_sum_tree_artifact(cfg, text);
    if (j.contains("bags")) return verify_partition_artifact(cfg, text);
    throw parse_error("unrecognized artifact (expected drawing, decomposition, partition "
                      "or sum-tree JSON)");
}

// ---- remaining subcommands ------------------------------------------------------

int cmd_k5_decomp(const RunConfig& cfg) {
    Graph g = load_graph(cfg.in);
    print_input_line(g);
    SumTree t = wagner_k5_decompose(g);
    if (t.has_failure()) {
        const SumPiece& w = t.pieces[t.failure_piece()];
        std::cout << "witness piece: n=" << w.graph.n << " m=" << w.graph.m() << "\n";
        throw precondition_error("input graph has a K5 minor");
    }
    int planar = 0, v8 = 0;
    for (const SumPiece& p : t.pieces) (p.kind == PieceKind::v8 ? v8 : planar)++;
    std::cout << "pieces: " << t.pieces.size() << " (planar=" << planar << " v8=" << v8
              << ")\njoins: " << t.joins.size() << "\n";
    check_invariant(t.compose() == g, "recomposition must reproduce the input");
    std::cout << "recomposition: exact\n";
    write_file(cfg, "sumtree.json", sum_tree_to_json(t));
    return 0;
}

int cmd_tree_partition(const RunConfig& cfg) {
    Graph g = load_graph(cfg.in);
    print_input_line(g);
    TreeDecomp td;
    int tw = treewidth_exact_small(g, &td);
    TreePartitionResult tp = tree_partition(g, td);
    if (fault_injection() && !tp.partition.bags.empty()) tp.partition.bags.back().clear();
    auto errs = validate_partition(tp.partition);
    for (const auto& e : errs) std::cout << "violation: " << e << "\n";
    if (!errs.empty()) return 4;
    std::cout << "treewidth: " << tw << "\npartition-width: " << tp.partition.width()
              << "\npattern: forest with " << tp.partition.pattern.m() << " edges\n"
              << "width-target-met: " << (tp.width_bound_met ? "yes" : "no") << "\n";
    write_file(cfg, "partition.json", partition_to_json(tp.partition));
    return tp.width_bound_met ? 0 : 4;
}

int cmd_convex_draw(const RunConfig& cfg) {
    RunConfig sub = cfg;
    sub.cls = "treewidth";
    return cmd_draw(sub);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar decompositions and certified-crossing drawings"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub, bool with_class) {
        sub->add_option("--in", cfg.in, "input graph (edge-list text) or artifact JSON");
        sub->add_option("--out", cfg.out, "output directory for artifacts");
        sub->add_option("--seed", cfg.seed, "random seed (default 0)");
        if (with_class)
            sub->add_option("--class", cfg.cls, "k5 | k33 | treewidth | generic")
                ->check(CLI::IsMember({"k5", "k33", "treewidth", "generic"}));
    };

    CLI::App* dec = app.add_subcommand("decompose", "construct a planar decomposition");
    add_common(dec, true);
    dec->add_flag("--strong", cfg.strong, "strong variant (k5 class)");
    dec->add_option("--p", cfg.p, "clique parameter for --strong (4 selects width 4)");
    dec->add_flag("--quadratic", cfg.quadratic, "universal width-2 decomposition");

    CLI::App* drw = app.add_subcommand("draw", "produce a drawing with certified bounds");
    add_common(drw, true);
    drw->add_flag("--svg", cfg.svg, "also write an SVG rendering");

    CLI::App* ver = app.add_subcommand("verify", "check a JSON artifact");
    add_common(ver, false);
    ver->add_option("--verify", cfg.verify_level, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));

    CLI::App* k5d = app.add_subcommand("k5-decomp", "clique-sum tree of a K5-minor-free graph");
    add_common(k5d, false);
    CLI::App* k5w = app.add_subcommand("k5-draw", "draw via the K5-minor-free pipeline");
    add_common(k5w, false);
    k5w->add_flag("--svg", cfg.svg, "also write an SVG rendering");
    CLI::App* k33w = app.add_subcommand("k33-draw", "draw via the K3,3-minor-free pipeline");
    add_common(k33w, false);
    k33w->add_flag("--svg", cfg.svg, "also write an SVG rendering");
    CLI::App* tpp = app.add_subcommand("tree-partition", "forest-pattern partition");
    add_common(tpp, false);
    CLI::App* cvx = app.add_subcommand("convex-draw", "convex drawing of a tree-partition");
    add_common(cvx, false);
    cvx->add_flag("--svg", cfg.svg, "also write an SVG rendering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return cmd_decompose(cfg);
        if (drw->parsed()) return cmd_draw(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (k5d->parsed()) return cmd_k5_decomp(cfg);
        if (k5w->parsed()) {
            cfg.cls = "k5";
            return cmd_draw(cfg);
        }
        if (k33w->parsed()) {
            cfg.cls = "k33";
            return cmd_draw(cfg);
        }
        if (tpp->parsed()) return cmd_tree_partition(cfg);
        if (cvx->parsed()) return cmd_convex_draw(cfg);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
