#include "beikit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace beikit {

OrderedGraph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "n") {
            if (n >= 0)
                throw input_error("line " + std::to_string(lineno) + ": repeated n line");
            if (!(ls >> n) || n < 0)
                throw input_error("line " + std::to_string(lineno) + ": bad vertex count");
        } else if (tag == "e") {
            if (n < 0)
                throw input_error("line " + std::to_string(lineno) +
                                  ": edge before the n line");
            int x, y;
            if (!(ls >> x >> y))
                throw input_error("line " + std::to_string(lineno) + ": bad edge line");
            edges.emplace_back(x, y);
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            throw input_error("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0)
        throw input_error("missing n line");
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("bad JSON graph: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("JSON graph needs keys \"n\" and \"edges\"");
    if (!j["n"].is_number_integer())
        throw input_error("JSON graph: \"n\" must be an integer");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (!j["edges"].is_array())
        throw input_error("JSON graph: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw input_error("JSON graph: each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open graph file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw input_error("empty graph file: " + path.string());
    if (text[first] == '{')
        return parse_graph_json(text);
    return parse_graph_text(text);
}

} // namespace beikit
