#include "mft/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mft/errors.hpp"

namespace mft::io {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

long parse_integer(std::string_view token, int line, const char* what) {
  long value = 0;
  const char* first = token.data();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || first == token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  bool have_header = false;
  bool directed = false;
  long n = 0;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "graph") {
        throw ParseError(line_no, "expected 'graph <directed|undirected> <n>'");
      }
      if (tokens[1] == "directed") {
        directed = true;
      } else if (tokens[1] != "undirected") {
        throw ParseError(line_no, "unknown graph kind '" + std::string(tokens[1]) + "'");
      }
      n = parse_integer(tokens[2], line_no, "vertex count");
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) throw ParseError(line_no, "expected '<u> <v> <weight>'");
    const long u = parse_integer(tokens[0], line_no, "vertex");
    const long v = parse_integer(tokens[1], line_no, "vertex");
    Rational w;
    try {
      w = Rational::parse(tokens[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    if (directed) {
      arcs.push_back(Arc{static_cast<int>(u - 1), static_cast<int>(v - 1), std::move(w)});
    } else {
      edges.push_back(Edge{static_cast<int>(u - 1), static_cast<int>(v - 1), std::move(w)});
    }
  }
  if (!have_header) throw ParseError(std::max(line_no, 1), "missing 'graph' header");
  if (directed) return Multidigraph(static_cast<int>(n), std::move(arcs));
  return Multigraph(static_cast<int>(n), std::move(edges));
}

AnyGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const AnyGraph& g) {
  std::ostringstream out;
  if (const auto* u = std::get_if<Multigraph>(&g)) {
    out << "graph undirected " << u->order() << '\n';
    for (const Edge& e : u->edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  } else {
    const auto& d = std::get<Multidigraph>(g);
    out << "graph directed " << d.order() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
  }
  return out.str();
}

}  // namespace mft::io
