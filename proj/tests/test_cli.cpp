// End-to-end checks of the plandec command line: spec'd outputs, exit codes,
// artifact round trips through `verify`, fault injection and byte
// determinism.  argv[1] is the path of the plandec binary.

#include "plandec/drawing.hpp"
#include "plandec/graph.hpp"
#include "plandec/json_io.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;
using namespace plandec;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("%s: %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

struct RunResult {
    int code = -1;
    std::string out;  // stdout + stderr
};

RunResult run(const std::string& cmd) {
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (p == nullptr) return {};
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

// octahedron = K_{2,2,2} with antipodal pairs (0,3), (1,4), (2,5)
Graph octahedron() {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v - u != 3) e.push_back({u, v});
    return Graph::from_edges(6, e);
}

// two octahedra sharing the face triangle {0,1,2}
Graph double_octahedron() {
    Graph o = octahedron();
    std::vector<int> map = {0, 1, 2, 6, 7, 8};
    std::vector<std::pair<int, int>> e = o.edges;
    for (auto [u, v] : o.edges) e.push_back({map[u], map[v]});
    return Graph::from_edges(9, e, /*allow_duplicates=*/true);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <plandec binary>\n", argv[0]);
        return 1;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";

    std::string dir_template = (fs::temp_directory_path() / "plandec_cli_XXXXXX").string();
    std::vector<char> dir_buf(dir_template.begin(), dir_template.end());
    dir_buf.push_back('\0');
    if (mkdtemp(dir_buf.data()) == nullptr) {
        std::fprintf(stderr, "cannot create temp dir\n");
        return 1;
    }
    const fs::path tmp(dir_buf.data());

    write_text(tmp / "v8.txt", write_edge_list(v8_graph()));
    write_text(tmp / "k5.txt", write_edge_list(complete_graph(5)));
    write_text(tmp / "k6.txt", write_edge_list(complete_graph(6)));
    write_text(tmp / "empty.txt", write_edge_list(Graph(0)));
    write_text(tmp / "octa.txt", write_edge_list(octahedron()));
    write_text(tmp / "docta.txt", write_edge_list(double_octahedron()));
    {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (j + 1 < 3) e.push_back({i * 3 + j, i * 3 + j + 1});
                if (i + 1 < 3) e.push_back({i * 3 + j, (i + 1) * 3 + j});
            }
        write_text(tmp / "grid.txt", write_edge_list(Graph::from_edges(9, e)));
    }
    {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < 8; ++i) e.push_back({i, i + 1});
        write_text(tmp / "path.txt", write_edge_list(Graph::from_edges(8, e)));
    }

    auto at = [&](const std::string& name) { return (tmp / name).string(); };

    // ---- decompose -----------------------------------------------------------
    {
        RunResult r = run(bin + " decompose --class k5 --in " + at("v8.txt"));
        check(r.code == 0, "decompose k5 on the Moebius ladder exits 0");
        check(contains(r.out, "order: 7"), "  order 7");
        check(contains(r.out, "width: 2"), "  width 2");
        check(contains(r.out, "pipeline: k5-omega"), "  k5-omega pipeline");
        check(contains(r.out, " pass"), "  bound row passes");
    }
    {
        RunResult r = run(bin + " decompose --quadratic --in " + at("k6.txt"));
        check(r.code == 0, "decompose --quadratic on K6 exits 0");
        check(contains(r.out, "order: 21"), "  order 21");
        check(contains(r.out, "width: 2"), "  width 2");
        check(contains(r.out, "strong: yes"), "  strong");
    }
    {
        RunResult r = run(bin + " decompose --in " + at("empty.txt"));
        check(r.code == 0, "decompose on the empty graph exits 0");
        check(contains(r.out, "order: 0"), "  order 0");
    }
    {
        RunResult r = run(bin + " decompose --class k5 --strong --in " + at("octa.txt"));
        check(r.code == 0, "strong decompose on the octahedron exits 0");
        check(contains(r.out, "pipeline: k5-strong-3"), "  strong-3 pipeline");
        check(contains(r.out, "order: 8"), "  order 8");
        check(contains(r.out, " pass"), "  order bound row passes");
    }
    {
        RunResult r = run(bin + " decompose --class k5 --strong --p 4 --in " + at("octa.txt"));
        check(r.code == 0, "strong width-4 decompose on the octahedron exits 0");
        check(contains(r.out, "pipeline: k5-strong-omega"), "  strong-omega pipeline");
        check(contains(r.out, "width <= 4"), "  width bound row present");
        check(!contains(r.out, "FAIL"), "  no failing bound row");
    }
    {
        RunResult r = run(bin + " decompose --class k33 --in " + at("k5.txt"));
        check(r.code == 0, "decompose k33 on K5 exits 0");
        check(contains(r.out, "pipeline: k33-partition"), "  k33 partition pipeline");
    }
    {
        RunResult r = run(bin + " decompose --class k33 --in " + at("k6.txt"));
        check(r.code == 3, "decompose k33 on K6 exits 3 (K3,3 minor)");
        check(contains(r.out, "precondition violated"), "  names the precondition");
    }
    {
        RunResult r = run(bin + " decompose --class treewidth --in " + at("grid.txt") +
                          " --out " + at("tw_dec"));
        check(r.code == 0, "decompose treewidth on the 3x3 grid exits 0");
        check(fs::exists(tmp / "tw_dec" / "decomposition.json"), "  artifact written");
    }

    // ---- draw ------------------------------------------------------------------
    {
        RunResult r = run(bin + " draw --in " + at("grid.txt") + " --out " + at("grid_draw"));
        check(r.code == 0, "draw on a planar graph exits 0");
        check(contains(r.out, "pipeline: planar-grid"), "  planar-grid pipeline");
        check(contains(r.out, "crossings: 0"), "  zero crossings");
    }
    {
        RunResult r = run(bin + " draw --in " + at("k6.txt"));
        check(r.code == 0, "draw on K6 exits 0");
        check(contains(r.out, "pipeline: quadratic-render"), "  quadratic-render pipeline");
        check(contains(r.out, "cr <= charge bound"), "  charge bound row");
        check(!contains(r.out, "FAIL"), "  bound holds");
    }
    {
        RunResult r = run(bin + " k5-draw --seed 7 --in " + at("docta.txt") + " --svg --out " +
                          at("k5_draw"));
        check(r.code == 0, "k5-draw on glued octahedra exits 0");
        check(contains(r.out, "3*cr < 20*maxdeg^2*n"), "  crossing bound row");
        check(!contains(r.out, "FAIL"), "  bound holds");
        check(fs::exists(tmp / "k5_draw" / "drawing.json"), "  drawing artifact written");
        check(fs::exists(tmp / "k5_draw" / "report.json"), "  report artifact written");
        check(contains(slurp(tmp / "k5_draw" / "drawing.svg"), "<svg"), "  svg written");
    }
    {
        RunResult r = run(bin + " k33-draw --in " + at("k5.txt"));
        check(r.code == 0, "k33-draw on K5 exits 0");
        check(contains(r.out, "per-edge <= 2*maxdeg"), "  per-edge bound row");
        check(!contains(r.out, "FAIL"), "  bounds hold");
    }
    {
        RunResult r = run(bin + " k33-draw --in " + at("k6.txt"));
        check(r.code == 3, "k33-draw on K6 exits 3");
    }
    {
        RunResult r = run(bin + " convex-draw --in " + at("path.txt"));
        check(r.code == 0, "convex-draw on a path exits 0");
        check(contains(r.out, "treewidth: 1"), "  treewidth reported");
        check(contains(r.out, "width-target-met: yes"), "  width target met");
    }

    // ---- tree-partition and k5-decomp -------------------------------------------
    {
        RunResult r = run(bin + " tree-partition --in " + at("grid.txt") + " --out " + at("tp"));
        check(r.code == 0, "tree-partition on the grid exits 0");
        check(contains(r.out, "pattern: forest"), "  forest pattern");
        check(contains(r.out, "width-target-met: yes"), "  width target met");
        check(fs::exists(tmp / "tp" / "partition.json"), "  partition artifact written");
    }
    {
        RunResult r = run(bin + " k5-decomp --in " + at("v8.txt") + " --out " + at("st_v8"));
        check(r.code == 0, "k5-decomp on the Moebius ladder exits 0");
        check(contains(r.out, "pieces: 1 (planar=0 v8=1)"), "  single v8 piece");
        check(contains(r.out, "recomposition: exact"), "  recomposition exact");
    }
    {
        RunResult r = run(bin + " k5-decomp --in " + at("docta.txt") + " --out " + at("st_do"));
        check(r.code == 0, "k5-decomp on glued octahedra exits 0");
        check(contains(r.out, "recomposition: exact"), "  recomposition exact");
        check(contains(r.out, "joins: "), "  join count reported");
    }
    {
        RunResult r = run(bin + " k5-decomp --in " + at("k5.txt"));
        check(r.code == 3, "k5-decomp on K5 exits 3");
        check(contains(r.out, "witness piece"), "  witness piece reported");
        check(contains(r.out, "K5 minor"), "  reason names the minor");
    }

    // ---- verify ------------------------------------------------------------------
    {
        run(bin + " decompose --class k5 --in " + at("v8.txt") + " --out " + at("v8_dec"));
        RunResult fast = run(bin + " verify --in " + at("v8_dec/decomposition.json"));
        check(fast.code == 0, "verify accepts the emitted decomposition");
        check(contains(fast.out, "artifact: decomposition"), "  artifact recognized");
        check(contains(fast.out, "check[structure]: ok"), "  structure check");
        RunResult full =
            run(bin + " verify --verify full --in " + at("v8_dec/decomposition.json"));
        check(full.code == 0, "full verify accepts it too");
        check(contains(full.out, "check[planar-host]: ok"), "  host planarity check");
    }
    {
        RunResult r = run(bin + " verify --verify full --in " + at("grid_draw/drawing.json"));
        check(r.code == 0, "full verify accepts the planar drawing");
        check(contains(r.out, "check[extracted-decomposition]: ok"), "  extraction check");
    }
    {
        RunResult r = run(bin + " verify --in " + at("k5_draw/drawing.json"));
        check(r.code == 0, "verify accepts the k5 drawing");
        check(contains(r.out, "check[proper]: ok"), "  properness check");
    }
    {
        RunResult r = run(bin + " verify --verify full --in " + at("st_do/sumtree.json"));
        check(r.code == 0, "full verify accepts the clique-sum tree");
        check(contains(r.out, "check[pieces]: ok"), "  piece kinds check");
        check(contains(r.out, "check[recompose]"), "  recomposition check");
    }
    {
        RunResult r = run(bin + " verify --in " + at("tp/partition.json"));
        check(r.code == 0, "verify accepts the partition");
        check(contains(r.out, "artifact: partition"), "  artifact recognized");
    }
    {
        // empty one bag of a valid decomposition artifact: the file still
        // parses, the structural validator must catch it
        nlohmann::json j = nlohmann::json::parse(slurp(tmp / "v8_dec" / "decomposition.json"));
        j["bags"][0] = nlohmann::json::array();
        write_text(tmp / "corrupt.json", j.dump());
        RunResult r = run(bin + " verify --in " + at("corrupt.json"));
        check(r.code == 4, "verify rejects a decomposition with an emptied bag");
        check(contains(r.out, "violation:"), "  violation reported");
        check(contains(r.out, "is empty"), "  names the defect");
        // dropping a bag outright breaks the file shape itself
        j["bags"].erase(j["bags"].size() - 1);
        write_text(tmp / "corrupt2.json", j.dump());
        check(run(bin + " verify --in " + at("corrupt2.json")).code == 2,
              "verify rejects a decomposition with a missing bag as unparseable");
    }
    {
        // three segments through one point is a degenerate drawing
        Graph g = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
        std::vector<Pt> pts = {Pt{rat(-2), rat(0)},  Pt{rat(2), rat(0)}, Pt{rat(0), rat(-2)},
                               Pt{rat(0), rat(2)},   Pt{rat(-2), rat(-2)}, Pt{rat(2), rat(2)}};
        write_text(tmp / "triple.json", drawing_to_json(Drawing::straight_line(g, pts)));
        RunResult r = run(bin + " verify --in " + at("triple.json"));
        check(r.code == 4, "verify rejects a triple-point drawing");
        check(contains(r.out, "three edges cross at"), "  names the degeneracy");
    }
    {
        RunResult r = run(bin + " verify --in " + at("nosuch.json"));
        check(r.code == 2, "verify on a missing file exits 2");
        write_text(tmp / "bad.json", "not json");
        check(run(bin + " verify --in " + at("bad.json")).code == 2,
              "verify on malformed JSON exits 2");
        write_text(tmp / "odd.json", "{}");
        RunResult o = run(bin + " verify --in " + at("odd.json"));
        check(o.code == 2, "verify on unrecognized JSON exits 2");
        check(contains(o.out, "unrecognized artifact"), "  names the problem");
    }

    // ---- fault injection ------------------------------------------------------------
    {
        RunResult r =
            run("PLANDEC_INJECT_FAULT=1 " + bin + " decompose --in " + at("grid.txt"));
        check(r.code == 4, "injected decomposition fault is caught (exit 4)");
        check(contains(r.out, "violation:"), "  violation reported");
        check(contains(r.out, "empty"), "  names the emptied bag");
    }
    {
        RunResult r = run("PLANDEC_INJECT_FAULT=1 " + bin + " draw --in " + at("grid.txt"));
        check(r.code == 4, "injected drawing fault is caught (exit 4)");
        check(contains(r.out, "share point"), "  names the coincident points");
    }
    {
        RunResult r =
            run("PLANDEC_INJECT_FAULT=1 " + bin + " tree-partition --in " + at("grid.txt"));
        check(r.code == 4, "injected partition fault is caught (exit 4)");
        check(contains(r.out, "violation:"), "  violation reported");
    }

    // ---- determinism -----------------------------------------------------------------
    {
        run(bin + " k5-draw --seed 7 --in " + at("docta.txt") + " --out " + at("det_a"));
        run(bin + " k5-draw --seed 7 --in " + at("docta.txt") + " --out " + at("det_b"));
        check(slurp(tmp / "det_a" / "drawing.json") == slurp(tmp / "det_b" / "drawing.json") &&
                  !slurp(tmp / "det_a" / "drawing.json").empty(),
              "k5-draw output is byte-identical across runs");
        check(slurp(tmp / "det_a" / "report.json") == slurp(tmp / "det_b" / "report.json"),
              "  crossing report too");
        run(bin + " decompose --class k5 --in " + at("v8.txt") + " --out " + at("det_c"));
        check(slurp(tmp / "v8_dec" / "decomposition.json") ==
                  slurp(tmp / "det_c" / "decomposition.json"),
              "decompose output is byte-identical across runs");
    }

    // ---- usage errors ------------------------------------------------------------------
    {
        check(run(bin).code == 2, "no subcommand exits 2");
        check(run(bin + " frobnicate").code == 2, "unknown subcommand exits 2");
        check(run(bin + " decompose --class nosuch --in " + at("v8.txt")).code == 2,
              "unknown class exits 2");
        check(run(bin + " decompose").code == 3, "missing --in exits 3");
        check(run(bin + " decompose --in " + at("nosuch.txt")).code == 2,
              "unreadable graph file exits 2");
        write_text(tmp / "halfline.txt", "2\n");
        check(run(bin + " decompose --in " + at("halfline.txt")).code == 2,
              "truncated graph file exits 2");
        RunResult help = run(bin + " --help");
        check(help.code == 0, "--help exits 0");
        check(contains(help.out, "decompose"), "  help lists subcommands");
    }

    fs::remove_all(tmp);
    if (failures == 0) std::printf("all cli checks passed\n");
    else std::printf("%d cli check(s) failed\n", failures);
    return failures;
}
