#include "trifree/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "trifree/error.hpp"

namespace trifree {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
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

std::uint64_t number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw SyntaxError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    auto toks = tokens(line);
    if (!toks.empty() && toks[0][0] != '#') f(line_no, toks);
    pos = end + 1;
  }
}

}  // namespace

RotationSpec parse_rotation(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0, m = 0, header_line = 0, last_line = 0;
  RotationSpec spec;
  std::vector<bool> seen;
  std::size_t darts = 0;
  for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& t) {
    last_line = ln;
    if (t[0] == "p") {
      if (have_header) throw SyntaxError(ln, "second header line");
      if (t.size() != 3) throw SyntaxError(ln, "header must read 'p <n> <m>'");
      n = number(t[1], ln);
      m = number(t[2], ln);
      if (n > (std::uint64_t{1} << 31)) throw SyntaxError(ln, "vertex count too large");
      have_header = true;
      header_line = ln;
      spec.assign(n, {});
      seen.assign(n, false);
      return;
    }
    if (t[0] != "v") throw SyntaxError(ln, "unknown line type '" + std::string(t[0]) + "'");
    if (!have_header) throw SyntaxError(ln, "rotation line before header");
    if (t.size() < 2) throw SyntaxError(ln, "missing vertex id");
    const auto id = number(t[1], ln);
    if (id >= n) throw SyntaxError(ln, "vertex id " + std::to_string(id) + " out of range");
    if (seen[id]) throw SyntaxError(ln, "vertex " + std::to_string(id) + " listed twice");
    seen[id] = true;
    for (std::size_t i = 2; i < t.size(); ++i) {
      const auto w = number(t[i], ln);
      if (w >= n) throw SyntaxError(ln, "neighbor " + std::to_string(w) + " out of range");
      spec[id].push_back(static_cast<VertexId>(w));
    }
    darts += t.size() - 2;
  });
  if (!have_header) throw SyntaxError(last_line + 1, "missing header 'p <n> <m>'");
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw SyntaxError(last_line + 1, "no rotation line for vertex " + std::to_string(v));
  }
  if (darts != 2 * m) {
    throw SyntaxError(header_line, "header announces " + std::to_string(m) + " edges, rotations list " +
                                       std::to_string(darts) + " edge ends");
  }
  return spec;
}

PlaneGraph parse_graph(std::string_view text) { return PlaneGraph::build(parse_rotation(text)); }

std::string serialize(const PlaneGraph& g) {
  std::vector<VertexId> id(g.vertex_capacity(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
    if (g.alive(v)) id[v] = next++;
  }
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
    if (!g.alive(v)) continue;
    auto rot = g.neighbors(v);
    for (auto& w : rot) w = id[w];
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    out << "v " << id[v];
    for (VertexId w : rot) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text, std::size_t n) {
  Coloring col(n, kNoColor);
  for_each_line(text, [&](std::size_t ln, const std::vector<std::string_view>& t) {
    if (t.size() != 2) throw SyntaxError(ln, "expected 'id color'");
    const auto id = number(t[0], ln);
    const auto c = number(t[1], ln);
    if (id >= n) throw SyntaxError(ln, "vertex id " + std::to_string(id) + " out of range");
    if (c > 2) throw SyntaxError(ln, "color " + std::to_string(c) + " not in {0,1,2}");
    if (col[id] != kNoColor) throw SyntaxError(ln, "vertex " + std::to_string(id) + " colored twice");
    col[id] = static_cast<Color>(c);
  });
  return col;
}

std::string serialize_coloring(const PlaneGraph& g, const Coloring& coloring) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
    if (!g.alive(v)) continue;
    out << v << ' ' << static_cast<int>(v < coloring.size() ? coloring[v] : kNoColor) << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace trifree
