#include <charconv>
#include <string>

#include "planar5/error.hpp"
#include "planar5/instances.hpp"

namespace planar5 {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits on blanks.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

EmbeddedGraph read_pg(std::string_view text) {
  long long n = -1;
  std::vector<std::vector<Vertex>> rot;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (n < 0) {
      const auto t = tokens(line);
      if (t.size() != 2 || t[0] != "pg" || !parse_int(t[1], n) || n < 0 || n > 100'000'000) {
        parse_error(line_no, "expected header 'pg <n>'");
      }
      rot.resize(static_cast<std::size_t>(n));
      seen.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_error(line_no, "expected '<v>: <neighbors>'");
    long long v = 0;
    if (!parse_int(trim(line.substr(0, colon)), v)) parse_error(line_no, "bad vertex id");
    if (v < 0 || v >= n) parse_error(line_no, "vertex id " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) parse_error(line_no, "vertex " + std::to_string(v) + " listed twice");
    seen[static_cast<std::size_t>(v)] = true;
    for (auto tok : tokens(line.substr(colon + 1))) {
      long long u = 0;
      if (!parse_int(tok, u)) parse_error(line_no, "bad neighbor '" + std::string(tok) + "'");
      if (u < 0 || u >= n) {
        throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": neighbor " +
                                                     std::to_string(u) + " out of range");
      }
      rot[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
    }
  }
  if (n < 0) parse_error(line_no, "missing header 'pg <n>'");
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) parse_error(line_no, "no line for vertex " + std::to_string(v));
  }
  return EmbeddedGraph::build(std::move(rot));
}

std::string write_pg(const EmbeddedGraph& g) {
  std::string out = "pg " + std::to_string(g.vertex_count()) + "\n";
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v)) throw Error(ErrorCode::InvalidArgument, "pg/1 cannot represent deleted vertex " + std::to_string(v));
    out += std::to_string(v) + ":";
    for (Vertex u : g.rotation(v)) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

}  // namespace planar5
