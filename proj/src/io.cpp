#include "metrel/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace metrel::io {

namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line + 1) + ": " + what);
}

std::int32_t parse_entry(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "'" + std::string(token) + "' is not a non-negative integer");
  }
  if (value < 0) fail(line, "negative entry " + std::string(token));
  if (value > std::numeric_limits<std::int32_t>::max()) fail(line, "entry " + std::string(token) + " too large");
  return static_cast<std::int32_t>(value);
}

std::vector<std::int32_t> parse_entries(std::string_view text, char separator, std::size_t line) {
  std::vector<std::int32_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (separator == ' ') {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      if (pos == text.size()) break;
    }
    auto end = pos;
    while (end < text.size() && text[end] != separator && text[end] != '\t' && text[end] != ' ') ++end;
    out.push_back(parse_entry(text.substr(pos, end - pos), line));
    if (separator != ' ') {
      while (end < text.size() && (text[end] == ' ' || text[end] == '\t')) ++end;
      if (end < text.size()) {
        if (text[end] != separator) fail(line, "expected '" + std::string(1, separator) + "'");
        ++end;
        if (end == text.size()) fail(line, "dangling '" + std::string(1, separator) + "'");
      }
    }
    pos = end;
  }
  return out;
}

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

// Parses the set section starting at `pos`; stops at the first blank line
// after the header when `stop_at_blank` is set. Returns the set and leaves
// `pos` after the section.
VectorSet parse_section(const std::vector<std::string_view>& lines, std::size_t& pos, bool stop_at_blank) {
  std::size_t dim = 0;
  for (; pos < lines.size(); ++pos) {
    auto line = trim(lines[pos]);
    if (line.empty() || is_comment(line)) continue;
    if (line.substr(0, 4) != "dim " && line.substr(0, 4) != "dim\t") fail(pos, "expected 'dim <n>'");
    auto value = parse_entry(trim(line.substr(4)), pos);
    if (value < 1) fail(pos, "dimension must be positive");
    dim = static_cast<std::size_t>(value);
    ++pos;
    break;
  }
  if (dim == 0) throw FormatError("missing 'dim <n>' line");

  std::vector<CoordVector> vectors;
  for (; pos < lines.size(); ++pos) {
    auto line = trim(lines[pos]);
    if (line.empty()) {
      if (stop_at_blank) break;
      continue;
    }
    if (is_comment(line)) continue;
    auto entries = parse_entries(line, ' ', pos);
    if (entries.size() != dim) {
      fail(pos, "expected " + std::to_string(dim) + " entries, got " + std::to_string(entries.size()));
    }
    vectors.emplace_back(std::move(entries));
  }
  if (vectors.empty()) throw FormatError("vector set has no vectors");
  try {
    return VectorSet(std::move(vectors));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

std::string coords_joined(const CoordVector& x, char separator) {
  std::string s;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) s += separator;
    s += std::to_string(x[i]);
  }
  return s;
}

}  // namespace

VectorSet parse_vector_set(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t pos = 0;
  return parse_section(lines, pos, false);
}

LabeledGraph parse_graph(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t pos = 0;
  auto set = parse_section(lines, pos, true);

  std::vector<std::pair<CoordVector, CoordVector>> edges;
  for (; pos < lines.size(); ++pos) {
    auto line = trim(lines[pos]);
    if (line.empty() || is_comment(line)) continue;
    auto sep = line.find("--");
    if (sep == std::string_view::npos) fail(pos, "expected '<vector> -- <vector>'");
    auto lhs = parse_entries(trim(line.substr(0, sep)), ',', pos);
    auto rhs = parse_entries(trim(line.substr(sep + 2)), ',', pos);
    if (lhs.size() != set.dim() || rhs.size() != set.dim()) {
      fail(pos, "edge endpoints must have " + std::to_string(set.dim()) + " coordinates");
    }
    edges.emplace_back(CoordVector(std::move(lhs)), CoordVector(std::move(rhs)));
  }
  try {
    return LabeledGraph(std::move(set), edges);
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

std::string format_vector_set(const VectorSet& s, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "dim " + std::to_string(s.dim()) + "\n";
  for (const auto& x : s) out += coords_joined(x, ' ') + "\n";
  return out;
}

std::string format_graph(const LabeledGraph& g, const std::vector<std::string>& comments) {
  std::string out = format_vector_set(g.vertices(), comments);
  out += "\n";
  for (const auto& e : g.edges()) {
    out += coords_joined(g.label(e.first), ',') + " -- " + coords_joined(g.label(e.second), ',') + "\n";
  }
  return out;
}

std::string to_dot(const LabeledGraph& g, std::string_view name) {
  const auto& set = g.vertices();
  std::vector<bool> landmark(set.size(), false);
  for (std::size_t i = 0; i < set.dim(); ++i) {
    if (auto w = set.landmark(i)) landmark[*w] = true;
  }
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < set.size(); ++v) {
    out << "  v" << v << " [label=\"" << set[v].to_string() << "\"";
    if (landmark[v]) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& e : g.edges()) out << "  v" << e.first << " -- v" << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace metrel::io
