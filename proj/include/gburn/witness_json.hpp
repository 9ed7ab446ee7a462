#pragma once

// Witness file formats. Field order is part of the contract, so everything
// goes through ordered_json.

#include <fstream>

#include <json.hpp>

#include "gburn/burning.hpp"
#include "gburn/domination.hpp"
#include "gburn/reduction.hpp"

namespace gburn {

using OrderedJson = nlohmann::ordered_json;

inline std::string schedule_json(int n, const BurningSchedule& s, bool valid) {
    OrderedJson j;
    j["n"] = n;
    j["length"] = s.length();
    j["centers"] = s.centers;
    j["valid"] = valid;
    return j.dump();
}

inline std::string domset_json(int n, const HopDomWitness& w, bool valid) {
    OrderedJson j;
    j["n"] = n;
    j["hops"] = w.hops;
    j["vertices"] = w.vertices;
    j["valid"] = valid;
    return j.dump();
}

inline OrderedJson trace_steps_json(const ReductionTrace& trace) {
    OrderedJson steps = OrderedJson::array();
    for (const ReductionStep& s : trace.steps) {
        OrderedJson rec;
        rec["op"] = s.kind == ReductionStep::Kind::Leaf ? "leaf" : "smooth";
        rec["v"] = s.v;
        rec["neighbors"] = s.kind == ReductionStep::Kind::Leaf
                               ? std::vector<Vertex>{s.x}
                               : std::vector<Vertex>{s.x, s.y};
        steps.push_back(rec);
    }
    return steps;
}

inline std::string reduction_json(const MultiGraph& original, const ReductionResult& result) {
    OrderedJson j;
    j["n"] = original.vertex_count();
    j["core_n"] = result.core.vertex_count();
    j["core_labels"] = result.trace.core_labels;
    OrderedJson core_edges = OrderedJson::array();
    for (const auto& [u, v, mult] : result.core.edge_multiset())
        for (int i = 0; i < mult; ++i) core_edges.push_back(std::vector<Vertex>{u, v});
    j["core_edges"] = core_edges;
    j["trace"] = trace_steps_json(result.trace);
    return j.dump();
}

inline std::string bounds_json(const BoundsReport& b) {
    OrderedJson j;
    j["n"] = b.n;
    j["k_min"] = b.k_min;
    j["sqrt_ceil"] = b.sqrt_ceil;
    j["twohop_bound"] = b.twohop_bound;
    j["mindeg_ref"] = b.mindeg_ref;
    j["general_upper"] = b.general_upper;
    return j.dump();
}

// Parsers for the verify tool. A malformed document throws; a well-formed
// witness that fails verification is the caller's business.

inline BurningSchedule parse_schedule_json(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text);  // throws nlohmann parse_error
    if (!j.is_object() || !j.contains("centers") || !j["centers"].is_array())
        throw std::invalid_argument("schedule witness: missing centers array");
    BurningSchedule s;
    for (const auto& c : j["centers"]) {
        if (!c.is_number_integer()) throw std::invalid_argument("schedule witness: non-integer center");
        s.centers.push_back(c.get<Vertex>());
    }
    if (j.contains("length") && j["length"].is_number_integer() &&
        j["length"].get<int>() != s.length())
        throw std::invalid_argument("schedule witness: length does not match centers");
    return s;
}

inline HopDomWitness parse_domset_json(const std::string& text) {
    OrderedJson j = OrderedJson::parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
        !j.contains("hops") || !j["hops"].is_number_integer())
        throw std::invalid_argument("domination witness: need hops and vertices");
    HopDomWitness w;
    w.hops = j["hops"].get<int>();
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer())
            throw std::invalid_argument("domination witness: non-integer vertex");
        w.vertices.push_back(v.get<Vertex>());
    }
    return w;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

}  // namespace gburn
