#include "qdeg/io.hpp"

#include <fstream>
#include <sstream>

namespace qdeg {

FieldSpec parse_field_spec(const json& j) {
    FieldSpec fs;
    if (j.is_string() && j.get<std::string>() == "Q") {
        fs.kind = FieldSpec::Rationals;
        return fs;
    }
    if (j.is_object() && j.contains("GF")) {
        fs.kind = FieldSpec::Prime;
        fs.p = j["GF"].get<std::uint64_t>();
        return fs;
    }
    throw std::invalid_argument("field must be \"Q\" or {\"GF\": p}");
}

json field_spec_to_json(const FieldSpec& fs) {
    if (fs.kind == FieldSpec::Rationals) return json("Q");
    return json{{"GF", fs.p}};
}

QuiverSpec parse_quiver_spec(const json& j) {
    QuiverSpec qs;
    if (!j.is_object()) throw std::invalid_argument("quiver spec must be an object");
    if (!j.contains("vertices") || !j.contains("arrows") || !j.contains("dim"))
        throw std::invalid_argument("quiver spec needs vertices, arrows, and dim");
    for (const auto& v : j["vertices"]) qs.quiver.add_vertex(v.get<std::string>());
    for (const auto& a : j["arrows"])
        qs.quiver.add_arrow(a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                            a.at("head").get<std::string>());
    qs.dim.assign(qs.quiver.vertices.size(), -1);
    for (const auto& [name, dj] : j["dim"].items()) {
        int vi = qs.quiver.vertex_index(name);
        if (vi < 0) throw std::invalid_argument("dim references unknown vertex: " + name);
        int d = dj.get<int>();
        if (d < 0) throw std::invalid_argument("dimensions must be nonnegative");
        qs.dim[static_cast<std::size_t>(vi)] = d;
    }
    for (std::size_t z = 0; z < qs.dim.size(); ++z)
        if (qs.dim[z] < 0)
            throw std::invalid_argument("dim missing for vertex: " + qs.quiver.vertices[z]);
    qs.field = j.contains("field") ? parse_field_spec(j["field"]) : FieldSpec{};
    return qs;
}

json quiver_spec_to_json(const QuiverSpec& qs) {
    json j;
    j["vertices"] = qs.quiver.vertices;
    json arrows = json::array();
    for (const auto& a : qs.quiver.arrows)
        arrows.push_back({{"id", a.name},
                          {"tail", qs.quiver.vertices[static_cast<std::size_t>(a.tail)]},
                          {"head", qs.quiver.vertices[static_cast<std::size_t>(a.head)]}});
    j["arrows"] = arrows;
    json dim = json::object();
    for (std::size_t z = 0; z < qs.dim.size(); ++z) dim[qs.quiver.vertices[z]] = qs.dim[z];
    j["dim"] = dim;
    j["field"] = field_spec_to_json(qs.field);
    return j;
}

QuiverSpec parse_rep_quiver(const json& j,
                            const std::function<json(const std::string&)>& resolve) {
    if (!j.is_object() || !j.contains("quiver"))
        throw std::invalid_argument("representation file needs a quiver");
    const json& qj = j["quiver"];
    if (qj.is_string()) return parse_quiver_spec(resolve(qj.get<std::string>()));
    return parse_quiver_spec(qj);
}

json signature_to_json(int n, const RankSignature& sig) {
    json j;
    j["n"] = n;
    j["enumeration_version"] = kEnumerationVersion;
    j["values"] = sig;
    return j;
}

json poset_to_json(const DegenerationPoset& p, const std::vector<Root>& roots,
                   const QuiverSpec& qs, int star_n) {
    json j;
    j["quiver"] = quiver_spec_to_json(qs);
    j["n"] = star_n;
    j["enumeration_version"] = kEnumerationVersion;
    json nodes = json::array();
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        json node;
        json parts = json::array();
        for (const auto& [ri, mult] : p.labels[i].parts)
            parts.push_back({{"root", roots[ri]}, {"multiplicity", mult}});
        node["label"] = parts;
        node["name"] = label_to_string(p.labels[i], roots);
        if (i < p.signatures.size()) node["signature"] = p.signatures[i];
        nodes.push_back(node);
    }
    j["nodes"] = nodes;
    json edges = json::array();
    for (const auto& [u, v] : p.edges) edges.push_back({u, v});
    j["edges"] = edges;
    j["generic"] = p.generic;
    return j;
}

std::string poset_to_dot(const DegenerationPoset& p, const std::vector<Root>& roots) {
    std::ostringstream out;
    out << "digraph degeneration {\n";
    out << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < p.labels.size(); ++i)
        out << "  n" << i << " [label=\"" << label_to_string(p.labels[i], roots) << "\"];\n";
    for (const auto& [u, v] : p.edges) out << "  n" << u << " -> n" << v << ";\n";
    out << "}\n";
    return out.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

} // namespace qdeg
