#include "sntrank/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sntrank/errors.hpp"

namespace sntrank {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t number(std::string_view tok, int line, const char* what) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  enum class Stage { kHeader, kCount, kEdges } stage = Stage::kHeader;
  bool multi = false;
  SimpleGraph sg;
  WeightedMultigraph mg;
  std::size_t n = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = split(line);
    if (tok.empty() || tok[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    switch (stage) {
      case Stage::kHeader:
        if (tok.size() != 2 || tok[0] != "graph" || (tok[1] != "simple" && tok[1] != "multi")) {
          throw ParseError(line_no, "expected 'graph simple' or 'graph multi'");
        }
        multi = tok[1] == "multi";
        stage = Stage::kCount;
        break;
      case Stage::kCount:
        if (tok.size() != 2 || tok[0] != "v") throw ParseError(line_no, "expected 'v <n>'");
        n = number(tok[1], line_no, "vertex count");
        if (multi) {
          mg = WeightedMultigraph(n);
        } else {
          sg = SimpleGraph(n);
        }
        stage = Stage::kEdges;
        break;
      case Stage::kEdges: {
        if (tok[0] != "e") throw ParseError(line_no, "expected an edge line 'e ...'");
        if (tok.size() != (multi ? 4u : 3u)) {
          throw ParseError(line_no, multi ? "expected 'e <u> <v> <w>'" : "expected 'e <u> <v>'");
        }
        const auto u = number(tok[1], line_no, "vertex");
        const auto v = number(tok[2], line_no, "vertex");
        if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
        if (multi) {
          const auto w = number(tok[3], line_no, "weight");
          if (w > 1) throw ParseError(line_no, "weight must be 0 or 1");
          mg.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Weight>(w));
        } else if (!sg.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          throw ParseError(line_no, "duplicate edge");
        }
        break;
      }
    }
    if (end == text.size()) break;
  }
  if (stage != Stage::kEdges) throw ParseError(line_no, "missing header or vertex count");
  if (multi) return mg;
  return sg;
}

AnyGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ExitCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize(const SimpleGraph& g) {
  std::ostringstream o;
  o << "graph simple\nv " << g.n() << '\n';
  for (auto [u, v] : g.edges()) o << "e " << u << ' ' << v << '\n';
  return o.str();
}

std::string serialize(const WeightedMultigraph& g) {
  std::ostringstream o;
  o << "graph multi\nv " << g.n() << '\n';
  for (const auto& e : g.edges()) {
    o << "e " << std::min(e.u, e.v) << ' ' << std::max(e.u, e.v) << ' ' << to_int(e.w) << '\n';
  }
  return o.str();
}

std::string serialize(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize(x); }, g);
}

std::string to_dot(const WeightedMultigraph& g, std::string_view name) {
  std::ostringstream o;
  o << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) o << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    o << "  " << e.u << " -- " << e.v << " [label=\"" << to_int(e.w) << '"';
    if (e.w == Weight::kOne) o << ", color=\"blue\"";
    o << "];\n";
  }
  o << "}\n";
  return o.str();
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream o;
  o << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) o << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) o << "  " << u << " -- " << v << ";\n";
  o << "}\n";
  return o.str();
}

}  // namespace sntrank
