#include "tiling/json_io.hpp"

#include <json.hpp>

namespace tiling {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json diagram_json(const Diagram& d) {
    ordered_json j;
    j["n"] = d.n();
    j["f"] = d.f();
    ordered_json pairs = ordered_json::array();
    for (const auto& p : d.pairs()) {
        ordered_json pj;
        pj["a"] = {p.a.label, p.a.tile};
        pj["b"] = {p.b.label, p.b.tile};
        pj["sign"] = p.sign;
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Diagram diagram_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("f") || !j.contains("pairs"))
        throw parse_error("diagram: expected an object with keys n, f, pairs");
    int n = j.at("n").get<int>();
    int f = j.at("f").get<int>();
    std::vector<EdgePair> pairs;
    int index = 0;
    for (const auto& pj : j.at("pairs")) {
        auto bad = [&](const std::string& why) {
            return parse_error("diagram: pair #" + std::to_string(index) + ": " + why);
        };
        if (!pj.is_object() || !pj.contains("a") || !pj.contains("b") || !pj.contains("sign"))
            throw bad("expected keys a, b, sign");
        auto ref = [&](const ordered_json& e) {
            if (!e.is_array() || e.size() != 2) throw bad("edge must be [label,tile]");
            return EdgeRef{e[0].get<int>(), e[1].get<int>()};
        };
        pairs.emplace_back(ref(pj.at("a")), ref(pj.at("b")), pj.at("sign").get<int>());
        ++index;
    }
    return Diagram::make(n, f, std::move(pairs));
}

ordered_json vertexset_json(const VertexSet& v) {
    ordered_json j;
    j["n"] = v.n();
    j["f"] = v.f();
    ordered_json verts = ordered_json::array();
    for (const auto& vert : v.vertices()) {
        ordered_json cyc = ordered_json::array();
        for (const auto& c : vert.cycle()) cyc.push_back({c.label, c.tile, c.sign});
        verts.push_back(std::move(cyc));
    }
    j["vertices"] = std::move(verts);
    return j;
}

VertexSet vertexset_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("f") || !j.contains("vertices"))
        throw parse_error("vertex set: expected an object with keys n, f, vertices");
    int n = j.at("n").get<int>();
    int f = j.at("f").get<int>();
    std::vector<Vertex> verts;
    for (const auto& cj : j.at("vertices")) {
        std::vector<SignedCorner> cyc;
        for (const auto& e : cj) {
            if (!e.is_array() || e.size() != 3)
                throw parse_error("vertex set: corner must be [label,tile,sign]");
            int sign = e[2].get<int>();
            if (sign != 1 && sign != -1) throw parse_error("vertex set: sign must be +1 or -1");
            cyc.push_back(SignedCorner{e[0].get<int>(), e[1].get<int>(), sign});
        }
        verts.emplace_back(std::move(cyc));
    }
    return VertexSet::make(n, f, std::move(verts));
}

ordered_json parse_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

}  // namespace

Diagram parse_diagram(const std::string& text) { return diagram_from_json(parse_text(text)); }

std::string serialize_diagram(const Diagram& d) { return diagram_json(d).dump(); }

VertexSet parse_vertexset(const std::string& text) {
    return vertexset_from_json(parse_text(text));
}

std::string serialize_vertexset(const VertexSet& v) { return vertexset_json(v).dump(); }

bool parse_diagram_or_vertexset(const std::string& text, Diagram& d, VertexSet& v) {
    ordered_json j = parse_text(text);
    if (j.is_object() && j.contains("pairs")) {
        d = diagram_from_json(j);
        return true;
    }
    if (j.is_object() && j.contains("vertices")) {
        v = vertexset_from_json(j);
        return false;
    }
    throw parse_error("expected a diagram (pairs) or a vertex set (vertices)");
}

std::string serialize_record(const TilingRecord& r) {
    ordered_json j;
    j["diagram"] = diagram_json(r.diagram);
    j["vertices"] = vertexset_json(r.vertices).at("vertices");
    j["surface"] = r.surface.name();
    j["chi"] = r.surface.chi;
    j["orientable"] = r.surface.orientable;
    j["edge_classes"] = r.edge_class_count;
    j["angle_feasible"] = r.angle_feasible;
    if (r.angle_feasible) {
        ordered_json w = ordered_json::array();
        for (const auto& x : r.witness) w.push_back(rational_to_string(x));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["mode"] = r.mode == Mode::general ? "general" : "orientable";
    if (r.mode == Mode::orientable)
        j["split"] = r.split;
    else
        j["split"] = nullptr;
    return j.dump();
}

}  // namespace tiling
