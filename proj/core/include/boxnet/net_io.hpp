#pragma once

#include "boxnet/net.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace boxnet {

/// Line format, `#` starts a comment:
///   place a^in b^in | c^out ; marked
/// Tags left of `|` are inputs, right of it outputs; the `^in`/`^out`
/// suffix is optional but must match its side when present.
std::vector<PlaceDecl> parse_net_text(std::string_view text);

/// {"places":[{"in":[...],"out":[...],"marked":bool}]}
std::vector<PlaceDecl> parse_net_json(std::string_view text);

/// JSON when the first non-blank character is '{', text otherwise.
MarkedNet read_net(std::string_view content);

std::string write_net_text(const MarkedNet& net);
std::string write_net_json(const MarkedNet& net);
std::string write_net_dot(const MarkedNet& net, std::string_view name = "net");


std::string write_reach_graph_dot(const MarkedNet& net, const ReachGraph& rg);

using PlaceGroup = std::vector<TaggedPlace>;

/// DOT with each group of places drawn as a cluster.
std::string write_net_dot(const MarkedNet& net, const std::vector<PlaceGroup>& groups, std::string_view name = "net");

/// One group per non-empty line, display names separated by blanks.
std::vector<PlaceGroup> parse_cover(std::string_view text);
std::string write_cover(const std::vector<PlaceGroup>& cover);
/// {"cover":[[display names]]}
std::string write_cover_json(const std::vector<PlaceGroup>& cover);

/// Display names separated by any whitespace.
PlaceGroup parse_place_list(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace boxnet
