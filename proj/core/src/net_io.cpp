#include "boxnet/net_io.hpp"

#include "boxnet/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace boxnet {

namespace {

using nlohmann::json;

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_words(std::string_view line, std::size_t base) {
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    auto start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) words.push_back({line.substr(start, i - start), base + start});
  }
  return words;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string tag_name(const Token& tok, std::string_view expected) {
  auto text = tok.text;
  auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    if (text.substr(caret + 1) != expected)
      throw ParseError(tok.offset, "tag '" + std::string(text) + "' on the " + std::string(expected) + " side");
    text = text.substr(0, caret);
  }
  if (!valid_name(text)) throw ParseError(tok.offset, "bad transition name '" + std::string(text) + "'");
  return std::string(text);
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(strip_comment(text.substr(start, end - start)), start);
    start = end + 1;
  }
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<PlaceDecl> parse_net_text(std::string_view text) {
  std::vector<PlaceDecl> decls;
  for_each_line(text, [&](std::string_view line, std::size_t base) {
    auto words = split_words(line, base);
    if (words.empty()) return;
    if (words[0].text != "place") throw ParseError(words[0].offset, "expected 'place'");
    std::vector<std::string> in, out;
    bool after_bar = false, seen_bar = false, marked = false;
    for (std::size_t i = 1; i < words.size(); ++i) {
      const auto& w = words[i];
      if (w.text == "|") {
        if (seen_bar) throw ParseError(w.offset, "second '|'");
        seen_bar = after_bar = true;
      } else if (w.text == ";") {
        if (i + 2 != words.size() || words[i + 1].text != "marked")
          throw ParseError(w.offset, "expected '; marked' at end of line");
        marked = true;
        break;
      } else if (w.text == ";marked") {
        if (i + 1 != words.size()) throw ParseError(w.offset, "trailing text after marker");
        marked = true;
      } else if (after_bar) {
        out.push_back(tag_name(w, "out"));
      } else {
        in.push_back(tag_name(w, "in"));
      }
    }
    if (!seen_bar) throw ParseError(words[0].offset, "place line without '|'");
    if (in.empty() && out.empty()) throw ParseError(words[0].offset, "place without tags");
    decls.push_back({TaggedPlace(std::move(in), std::move(out)), marked});
  });
  return decls;
}

std::vector<PlaceDecl> parse_net_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  if (!doc.is_object() || !doc.contains("places") || !doc["places"].is_array())
    throw ParseError(0, "expected an object with a 'places' array");
  std::vector<PlaceDecl> decls;
  for (const auto& p : doc["places"]) {
    try {
      auto in = p.value("in", std::vector<std::string>{});
      auto out = p.value("out", std::vector<std::string>{});
      for (const auto* side : {&in, &out})
        for (const auto& name : *side)
          if (!valid_name(name)) throw ParseError(0, "bad transition name '" + name + "'");
      decls.push_back({TaggedPlace(std::move(in), std::move(out)), p.value("marked", false)});
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("malformed place entry: ") + e.what());
    }
  }
  return decls;
}

MarkedNet read_net(std::string_view content) {
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') return MarkedNet(parse_net_json(content));
  return MarkedNet(parse_net_text(content));
}

std::string write_net_text(const MarkedNet& net) {
  std::string s;
  for (std::size_t p = 0; p < net.place_count(); ++p) {
    const auto& place = net.place(p);
    s += "place";
    for (const auto& t : place.inputs()) s += " " + t + "^in";
    s += " |";
    for (const auto& t : place.outputs()) s += " " + t + "^out";
    if (net.initial().test(p)) s += " ; marked";
    s += '\n';
  }
  return s;
}

std::string write_net_json(const MarkedNet& net) {
  json places = json::array();
  for (std::size_t p = 0; p < net.place_count(); ++p)
    places.push_back({{"in", net.place(p).inputs()},
                      {"out", net.place(p).outputs()},
                      {"marked", static_cast<bool>(net.initial().test(p))}});
  return json{{"places", places}}.dump(2) + "\n";
}

std::string write_net_dot(const MarkedNet& net, std::string_view name) { return write_net_dot(net, {}, name); }

std::string write_net_dot(const MarkedNet& net, const std::vector<PlaceGroup>& groups, std::string_view name) {
  std::ostringstream s;
  s << "digraph " << quote(name) << " {\n  rankdir=TB;\n";
  auto place_line = [&](std::size_t p, const char* indent) {
    s << indent << "p" << p << " [shape=circle, label=" << quote(net.place(p).display_name());
    if (net.initial().test(p)) s << ", style=filled, fillcolor=gray80";
    s << "];\n";
  };
  IndexSet drawn = net.no_places();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    s << "  subgraph cluster_" << g << " {\n    style=dashed;\n";
    for (const auto& place : groups[g]) {
      auto p = net.place_index(place);
      if (drawn.test(p)) continue;
      drawn.set(p);
      place_line(p, "    ");
    }
    s << "  }\n";
  }
  for (std::size_t p = 0; p < net.place_count(); ++p)
    if (!drawn.test(p)) place_line(p, "  ");
  for (std::size_t t = 0; t < net.transition_count(); ++t)
    s << "  t" << t << " [shape=box, label=" << quote(net.transition(t)) << "];\n";
  for (std::size_t p = 0; p < net.place_count(); ++p) {
    for (auto t : members(net.outputs(p))) s << "  p" << p << " -> t" << t << ";\n";
    for (auto t : members(net.inputs(p))) s << "  t" << t << " -> p" << p << ";\n";
  }
  s << "}\n";
  return s.str();
}

std::string write_reach_graph_dot(const MarkedNet& net, const ReachGraph& rg) {
  std::ostringstream s;
  s << "digraph rg {\n";
  for (std::size_t n = 0; n < rg.nodes.size(); ++n) {
    s << "  m" << n << " [label=" << quote(net.format_places(rg.nodes[n]));
    if (n == rg.initial) s << ", peripheries=2";
    s << "];\n";
  }
  for (const auto& arc : rg.arcs)
    s << "  m" << arc.from << " -> m" << arc.to << " [label=" << quote(net.transition(arc.transition)) << "];\n";
  s << "}\n";
  return s.str();
}

std::vector<PlaceGroup> parse_cover(std::string_view text) {
  std::vector<PlaceGroup> cover;
  for_each_line(text, [&](std::string_view line, std::size_t base) {
    auto words = split_words(line, base);
    if (words.empty()) return;
    PlaceGroup group;
    for (const auto& w : words) {
      try {
        group.push_back(TaggedPlace::parse(w.text));
      } catch (const Error& e) {
        throw ParseError(w.offset, e.what());
      }
    }
    cover.push_back(std::move(group));
  });
  return cover;
}

std::string write_cover(const std::vector<PlaceGroup>& cover) {
  std::string s;
  for (const auto& group : cover) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) s += ' ';
      s += group[i].display_name();
    }
    s += '\n';
  }
  return s;
}

std::string write_cover_json(const std::vector<PlaceGroup>& cover) {
  json groups = json::array();
  for (const auto& group : cover) {
    json names = json::array();
    for (const auto& p : group) names.push_back(p.display_name());
    groups.push_back(names);
  }
  return json{{"cover", groups}}.dump(2) + "\n";
}

PlaceGroup parse_place_list(std::string_view text) {
  PlaceGroup out;
  for (auto& group : parse_cover(text))
    for (auto& p : group) out.push_back(std::move(p));
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace boxnet
