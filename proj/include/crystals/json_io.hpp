#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <crystals/crystal.hpp>

namespace crystals {

// crystal-v1 wire format. Key order is fixed so that repeated runs produce
// byte-identical files.
inline nlohmann::ordered_json to_crystal_json(const Crystal& k) {
    nlohmann::ordered_json j;
    j["format"] = "crystal-v1";
    j["family"] = k.meta() ? family_name(k.meta()->family) : "raw";
    j["n"] = k.colors();
    j["c"] = k.meta() ? k.meta()->c : std::vector<int>{};
    j["vertices"] = k.vertex_count();
    j["source"] = k.meta() ? k.meta()->source : 0;
    j["sink"] = k.meta() ? k.meta()->sink : k.vertex_count() - 1;
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : k.edges())
        edges.push_back(nlohmann::ordered_json::array({e.from, e.to, e.color}));
    j["edges"] = std::move(edges);
    return j;
}

inline std::string to_crystal_json_string(const Crystal& k) {
    return to_crystal_json(k).dump() + "\n";
}

inline Crystal crystal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("format", "") != "crystal-v1")
        throw input_error("not a crystal-v1 document");
    const int n = j.at("n").get<int>();
    const VertexId vcount = j.at("vertices").get<VertexId>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw input_error("bad edge entry");
        edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>(), e[2].get<Color>()});
    }
    Crystal raw = make_crystal(n, vcount, std::move(edges));
    const std::string fam = j.value("family", "raw");
    if (fam == "raw") return raw;
    Family family;
    if (fam == "A") family = Family::A;
    else if (fam == "B") family = Family::B;
    else if (fam == "C") family = Family::C;
    else throw input_error("unknown family '" + fam + "'");
    return with_meta(std::move(raw), family, j.at("c").get<std::vector<int>>());
}

inline Crystal read_crystal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse '" + path + "': " + e.what());
    }
    return crystal_from_json(j);
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << contents;
}

// DOT export: one digraph, each edge carries its color index and a drawing
// color from a fixed 8-color palette (cycling for i > 8).
inline std::string to_dot(const Crystal& k, const std::string& name = "crystal") {
    static const char* palette[8] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                     "#66a61e", "#e6ab02", "#a6761d", "#666666"};
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n  node [shape=circle fontsize=10];\n";
    for (const Edge& e : k.edges())
        out << "  " << e.from << " -> " << e.to << " [label=\"" << e.color << "\" color=\""
            << palette[(e.color - 1) % 8] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace crystals
