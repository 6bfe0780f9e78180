#ifndef BEIKIT_GRAPH_IO_HPP
#define BEIKIT_GRAPH_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "beikit/graph.hpp"

namespace beikit {

/// Plain-text graph format: first line `n <count>`, then `e <x> <y>` lines;
/// `#` starts a comment line.
OrderedGraph parse_graph_text(std::string_view text);

/// JSON graph format: {"n": int, "edges": [[x,y],...]}.
OrderedGraph parse_graph_json(const std::string& text);

/// Reads either format, dispatching on the first non-space character.
OrderedGraph read_graph_file(const std::filesystem::path& path);

} // namespace beikit

#endif
