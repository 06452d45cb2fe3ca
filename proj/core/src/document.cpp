#include "lightsout/document.hpp"

#include <fstream>
#include <sstream>

#include "json_codec.hpp"

namespace lightsout {

namespace detail {

json graph_to_json(const Graph& g) {
    json out;
    out["n_vertices"] = g.n_vertices;
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    out["edges"] = std::move(edges);
    out["self_loops"] = g.self_loops;
    if (!g.labels.empty()) {
        json labels = json::array();
        for (const auto& l : g.labels) labels.push_back({{"name", l.name}, {"coords", l.coords}});
        out["labels"] = std::move(labels);
    }
    return out;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw DocumentError("graph must be an object");
    Graph g;
    try {
        g.n_vertices = j.at("n_vertices").get<std::size_t>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw DocumentError("each edge must be a pair [i, j]");
            g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        g.self_loops = j.at("self_loops").get<std::vector<std::size_t>>();
        if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
            for (const auto& l : *it) {
                VertexLabel label;
                if (l.is_string()) {
                    label.name = l.get<std::string>();
                } else {
                    label.name = l.value("name", std::string{});
                    if (auto c = l.find("coords"); c != l.end()) label.coords = c->get<std::vector<double>>();
                }
                g.labels.push_back(std::move(label));
            }
        }
    } catch (const json::exception& e) {
        throw DocumentError(std::string("graph: ") + e.what());
    }
    if (auto problems = validate(g); !problems.empty()) throw DocumentError("graph: " + problems.front());
    return g;
}

}  // namespace detail

std::string to_text(const PuzzleDocument& doc) {
    detail::json out;
    out["version"] = doc.version;
    out["graph"] = detail::graph_to_json(doc.puzzle.graph);
    out["state"] = doc.puzzle.state.to_string();
    return out.dump(2) + "\n";
}

PuzzleDocument parse_document(std::string_view text) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const detail::json::exception& e) {
        throw DocumentError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DocumentError("document must be a JSON object");

    PuzzleDocument doc;
    try {
        doc.version = j.at("version").get<int>();
    } catch (const detail::json::exception&) {
        throw DocumentError("missing or non-integer \"version\"");
    }
    if (doc.version != document_version)
        throw DocumentError("unsupported document version " + std::to_string(doc.version));
    if (!j.contains("graph")) throw DocumentError("missing \"graph\"");
    doc.puzzle.graph = detail::graph_from_json(j["graph"]);

    const auto n = doc.puzzle.graph.n_vertices;
    if (auto it = j.find("state"); it != j.end()) {
        if (!it->is_string()) throw DocumentError("\"state\" must be a 0/1 string");
        try {
            doc.puzzle.state = BitVec::from_string(it->get<std::string>());
        } catch (const ValidationError& e) {
            throw DocumentError(std::string("state: ") + e.what());
        }
        if (doc.puzzle.state.size() != n)
            throw DocumentError("state has length " + std::to_string(doc.puzzle.state.size()) + ", expected " +
                                std::to_string(n));
    } else {
        throw DocumentError("missing \"state\"");
    }
    return doc;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

PuzzleDocument read_document(const std::filesystem::path& path) { return parse_document(slurp(path)); }

void write_document(const std::filesystem::path& path, const PuzzleDocument& doc) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_text(doc);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

BitVec parse_click_script(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return BitVec{};
    const auto last = text.find_last_not_of(" \t\r\n");
    try {
        return BitVec::from_string(text.substr(first, last - first + 1));
    } catch (const ValidationError& e) {
        throw DocumentError(std::string("click script: ") + e.what());
    }
}

BitVec read_click_script(const std::filesystem::path& path) { return parse_click_script(slurp(path)); }

}  // namespace lightsout
