#include "fockcrystal/json_io.hpp"

#include <sstream>

namespace fock {

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Multipartition& mp) { j = mp.components(); }

void from_json(const nlohmann::json& j, Multipartition& mp) {
    mp = Multipartition(j.get<std::vector<Partition>>());
}

void to_json(nlohmann::json& j, const Multicharge& s) { j = s.charges(); }

void from_json(const nlohmann::json& j, Multicharge& s) {
    s = Multicharge(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Node& n) { j = {n.row, n.col, n.comp}; }

void from_json(const nlohmann::json& j, Node& n) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("node must be [row, col, comp]");
    n = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

void to_json(nlohmann::json& j, const FiniteColumn& c) { j = c.letters(); }

void from_json(const nlohmann::json& j, FiniteColumn& c) {
    c = FiniteColumn(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const InfiniteColumn& c) {
    j = nlohmann::json{{"charge", c.charge()}, {"shape", c.shape()}};
}

void from_json(const nlohmann::json& j, InfiniteColumn& c) {
    c = InfiniteColumn(j.at("charge").get<int>(), j.at("shape").get<Partition>());
}

nlohmann::json crystal_to_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const CrystalEdge& e : g.edges)
        edges.push_back({e.src, e.residue, e.content, e.dst});
    return j;
}

std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        nlohmann::json label = g.vertices[k];
        out << "  v" << k << " [label=\"" << label.dump() << "\"];\n";
    }
    for (const CrystalEdge& e : g.edges)
        out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.residue << " ("
            << e.content << ")\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace fock
