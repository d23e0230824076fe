#include "plandec/json_io.hpp"

#include "plandec/errors.hpp"

#include "json.hpp"

#include <sstream>
#include <utility>

namespace plandec {

namespace {

using nlohmann::json;

json quad(const Pt& p) {
    return json::array({numerator(p.x).str(), denominator(p.x).str(), numerator(p.y).str(),
                        denominator(p.y).str()});
}

rat rat_of(const json& num, const json& den) {
    if (!num.is_string() || !den.is_string())
        throw parse_error("rational entries must be decimal strings");
    bigint n, d;
    try {
        n = bigint(num.get<std::string>());
        d = bigint(den.get<std::string>());
    } catch (const std::exception&) {
        throw parse_error("rational entry is not a decimal integer");
    }
    if (d == 0) throw parse_error("rational with zero denominator");
    return rat(n, d);
}

Pt pt_of(const json& q) {
    if (!q.is_array() || q.size() != 4)
        throw parse_error("point must be a [xnum, xden, ynum, yden] quad");
    return Pt{rat_of(q[0], q[1]), rat_of(q[2], q[3])};
}

Graph graph_of(const json& j, const char* what) {
    if (!j.is_string()) throw parse_error(std::string(what) + " must be edge-list text");
    std::istringstream in(j.get<std::string>());
    return read_edge_list(in);
}

std::vector<std::vector<int>> int_lists(const json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw parse_error(std::string(what) + " rows must be arrays");
        out.push_back(row.get<std::vector<int>>());
    }
    return out;
}

std::vector<std::pair<int, int>> int_pairs(const json& j, const char* what) {
    std::vector<std::pair<int, int>> out;
    for (const auto& row : int_lists(j, what)) {
        if (row.size() != 2) throw parse_error(std::string(what) + " rows must be pairs");
        out.push_back({row[0], row[1]});
    }
    return out;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (auto [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

// Every reader shares this shape: parse, then translate any JSON-library
// complaint (missing key, wrong type) into the project's parse_error.
template <typename F>
auto reading(const std::string& text, F body) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& ex) {
        throw parse_error(std::string("invalid JSON: ") + ex.what());
    }
    try {
        return body(j);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& ex) {
        throw parse_error(std::string("malformed artifact: ") + ex.what());
    }
}

PieceKind piece_kind_of(const std::string& name) {
    for (PieceKind k : {PieceKind::planar, PieceKind::v8, PieceKind::k5, PieceKind::failure})
        if (piece_kind_name(k) == name) return k;
    throw parse_error("unknown piece kind: " + name);
}

}  // namespace

std::string embedding_to_json(const PlanarEmbedding& emb) {
    json j;
    j["rotation"] = emb.rotation;
    j["outer"] = emb.outer_face;
    return j.dump();
}

PlanarEmbedding embedding_from_json(const std::string& text) {
    return reading(text, [](const json& j) {
        PlanarEmbedding emb;
        emb.rotation = int_lists(j.at("rotation"), "rotation");
        emb.outer_face = j.at("outer").get<int>();
        return emb;
    });
}

std::string decomposition_to_json(const Graph& g, const Decomposition& d) {
    json j;
    j["host"] = write_edge_list(g);
    j["bags"] = d.bags;
    j["dedges"] = pairs_json(d.host.edges);
    j["strong"] = d.strong;
    j["p"] = d.p;
    return j.dump();
}

DecompositionArtifact decomposition_from_json(const std::string& text) {
    return reading(text, [](const json& j) {
        DecompositionArtifact out;
        out.g = graph_of(j.at("host"), "host");
        auto bags = int_lists(j.at("bags"), "bags");
        Graph dg = Graph::from_edges(static_cast<int>(bags.size()),
                                     int_pairs(j.at("dedges"), "dedges"));
        out.d = Decomposition::make(std::move(dg), std::move(bags), j.at("strong").get<bool>(),
                                    j.at("p").get<int>());
        return out;
    });
}

std::string drawing_to_json(const Drawing& d) {
    json j;
    j["host"] = write_edge_list(d.g);
    json points = json::array();
    for (const Pt& p : d.points) points.push_back(quad(p));
    j["points"] = points;
    json routes = json::array();
    for (const auto& route : d.bends) {
        json r = json::array();
        for (const Pt& p : route) r.push_back(quad(p));
        routes.push_back(r);
    }
    j["routes"] = routes;
    return j.dump();
}

Drawing drawing_from_json(const std::string& text) {
    return reading(text, [](const json& j) {
        Graph g = graph_of(j.at("host"), "host");
        const json& pts = j.at("points");
        if (!pts.is_array() || static_cast<int>(pts.size()) != g.n)
            throw parse_error("points count differs from the vertex count");
        std::vector<Pt> points;
        for (const auto& q : pts) points.push_back(pt_of(q));
        Drawing d = Drawing::straight_line(std::move(g), std::move(points));
        const json& routes = j.at("routes");
        if (!routes.is_array() || static_cast<int>(routes.size()) != d.g.m())
            throw parse_error("routes count differs from the edge count");
        for (int e = 0; e < d.g.m(); ++e)
            for (const auto& q : routes[e]) d.bends[e].push_back(pt_of(q));
        return d;
    });
}

std::string sum_tree_to_json(const SumTree& t) {
    json j;
    j["n"] = t.n;
    json pieces = json::array();
    for (const SumPiece& p : t.pieces) {
        json pj;
        pj["graph"] = write_edge_list(p.graph);
        pj["to_g"] = p.to_g;
        pj["kind"] = piece_kind_name(p.kind);
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    json joins = json::array();
    for (const SumJoin& jn : t.joins) {
        json jj;
        jj["a"] = jn.a;
        jj["b"] = jn.b;
        jj["set"] = jn.set;
        jj["deleted"] = pairs_json(jn.deleted);
        joins.push_back(jj);
    }
    j["joins"] = joins;
    return j.dump();
}

SumTree sum_tree_from_json(const std::string& text) {
    return reading(text, [](const json& j) {
        SumTree t;
        t.n = j.at("n").get<int>();
        for (const auto& pj : j.at("pieces")) {
            SumPiece p;
            p.graph = graph_of(pj.at("graph"), "piece graph");
            p.to_g = pj.at("to_g").get<std::vector<int>>();
            p.kind = piece_kind_of(pj.at("kind").get<std::string>());
            if (static_cast<int>(p.to_g.size()) != p.graph.n)
                throw parse_error("piece vertex map size differs from its graph");
            t.pieces.push_back(std::move(p));
        }
        for (const auto& jj : j.at("joins")) {
            SumJoin jn;
            jn.a = jj.at("a").get<int>();
            jn.b = jj.at("b").get<int>();
            jn.set = jj.at("set").get<std::vector<int>>();
            jn.deleted = int_pairs(jj.at("deleted"), "deleted");
            t.joins.push_back(std::move(jn));
        }
        return t;
    });
}

std::string partition_to_json(const Partition& p) {
    json j;
    j["host"] = write_edge_list(p.host);
    j["bags"] = p.bags;
    return j.dump();
}

Partition partition_from_json(const std::string& text) {
    return reading(text, [](const json& j) {
        Graph host = graph_of(j.at("host"), "host");
        return make_partition(std::move(host), int_lists(j.at("bags"), "bags"));
    });
}

std::string crossing_report_to_json(const CrossingReport& r) {
    json j;
    j["total"] = r.total;
    j["per_edge"] = r.per_edge;
    j["degeneracies"] = r.degeneracies;
    j["proper"] = r.proper();
    return j.dump();
}

}  // namespace plandec
