#include "tiso/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace tiso {

namespace {

using nlohmann::json;

json partition_json(const Partition& p) { return json(p.parts()); }

json root_json(const Root& r) {
    return json{{"i", r.i}, {"j", r.j}, {"sign", r.sign == Sign::plus ? "+" : "-"}};
}

json labeled_json(const LabeledDiagram& s) {
    return json{{"k", s.k}, {"lambda", s.lambda.parts()}};
}

json sv_json(const SuperVector& v) { return json{{"a", v.a}, {"b", v.b}}; }

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string partition_key(const Partition& p) { return partition_json(p).dump(); }
std::string root_key(const Root& r) { return root_json(r).dump(); }
std::string word_key(const Word& w) { return json(w.letters()).dump(); }
std::string class_key(const EquivClass& c) { return labeled_json(c.canonical()).dump(); }
std::string labeled_key(const LabeledDiagram& s) { return labeled_json(s).dump(); }
std::string sv_key(const SuperVector& v) { return sv_json(v).dump(); }

std::string chain_key(const std::vector<Root>& chain) {
    json out = json::array();
    for (const Root& r : chain) out.push_back(root_json(r));
    return out.dump();
}

Partition parse_partition(const RectConfig& rect, const std::string& json_text) {
    return {rect, json::parse(json_text).get<std::vector<int>>()};
}

Root parse_root(const std::string& json_text) {
    json j = json::parse(json_text);
    std::string sign = j.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") throw std::invalid_argument("root sign must be + or -");
    return {j.at("i").get<int>(), j.at("j").get<int>(),
            sign == "+" ? Sign::plus : Sign::minus};
}

LabeledDiagram parse_labeled(const RectConfig& rect, const std::string& json_text) {
    json j = json::parse(json_text);
    return {Partition(rect, j.at("lambda").get<std::vector<int>>()), j.at("k").get<Int>()};
}

SuperVector parse_sv(const std::string& json_text) {
    json j = json::parse(json_text);
    return {j.at("a").get<std::vector<Int>>(), j.at("b").get<std::vector<Int>>()};
}

std::string to_dot(const CayleyGraph& g) {
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (std::size_t t = 0; t < g.vertices.size(); ++t)
        out << "  v" << t << " [label=\"" << dot_escape(g.vertices[t]) << "\"];\n";
    for (const GraphEdge& e : g.edges)
        out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label.label() << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

json report_body(const OrbitReport& report) {
    json out{{"status", status_name(report.status)},
             {"vertex_count", report.vertex_count},
             {"max_coordinate", report.max_coordinate}};
    if (report.witnesses) {
        const ConjectureReport& scan = *report.witnesses;
        json c{{"scanned", scan.scanned}, {"near_misses", json::array()}};
        if (scan.witness)
            c["witness"] = json{{"vertex", sv_json(scan.witness->first)},
                                {"shift", scan.witness->second}};
        for (const auto& [v, shift] : scan.permutation_near_misses)
            c["near_misses"].push_back(json{{"vertex", sv_json(v)}, {"shift", shift}});
        out["witnesses"] = c;
    }
    return out;
}

}  // namespace

std::string graph_json(const CayleyGraph& g, const OrbitReport* report) {
    json out;
    out["vertices"] = json::array();
    for (const std::string& key : g.vertices) out["vertices"].push_back(json::parse(key));
    out["edges"] = json::array();
    for (const GraphEdge& e : g.edges)
        out["edges"].push_back(json{{"src", e.src}, {"dst", e.dst}, {"label", e.label.label()}});
    if (report) out["report"] = report_body(*report);
    return out.dump();
}

std::string report_json(const OrbitReport& report) { return report_body(report).dump(); }

std::string iso_report_json(const IsoReport& report) {
    return json{{"pass", report.pass},
                {"vertices_checked", report.vertices_checked},
                {"edges_checked", report.edges_checked},
                {"first_mismatch", report.first_mismatch}}
        .dump();
}

}  // namespace tiso
