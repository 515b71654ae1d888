#include "kgraphlet/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_map>

namespace kgraphlet {

namespace {

std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

bool next_token(const std::string& s, std::size_t& pos, std::string_view& tok) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  if (pos >= s.size()) return false;
  const std::size_t start = pos;
  while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '\r') ++pos;
  tok = std::string_view(s).substr(start, pos - start);
  return true;
}

std::uint64_t parse_label(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError(at_line(line, "expected a non-negative integer, got '" +
                                       std::string(tok) + "'"));
  }
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::unordered_map<std::uint64_t, std::size_t> seen_edges;
  auto intern = [&](std::uint64_t label) {
    const auto [it, fresh] = dense.try_emplace(label, static_cast<VertexId>(out.labels.size()));
    if (fresh) out.labels.push_back(label);
    return it->second;
  };

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::size_t pos = 0;
    std::string_view a_tok;
    if (!next_token(text, pos, a_tok) || a_tok.front() == '#') continue;
    std::string_view b_tok;
    if (!next_token(text, pos, b_tok)) throw InputError(at_line(line, "expected two vertex ids"));
    std::string_view extra;
    if (next_token(text, pos, extra)) {
      throw InputError(at_line(line, "unexpected trailing token '" + std::string(extra) + "'"));
    }
    const std::uint64_t a_label = parse_label(a_tok, line);
    const std::uint64_t b_label = parse_label(b_tok, line);
    if (a_label == b_label) throw InputError(at_line(line, "self-loop on " + std::string(a_tok)));
    const VertexId a = intern(a_label);
    const VertexId b = intern(b_label);
    const std::uint64_t key = (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
    const auto [it, fresh] = seen_edges.try_emplace(key, line);
    if (!fresh) {
      throw InputError(at_line(line, "duplicate edge " + std::string(a_tok) + " " +
                                         std::string(b_tok) + " (first on line " +
                                         std::to_string(it->second) + ")"));
    }
    out.edges.emplace_back(a, b);
  }
  if (in.bad()) throw InputError("read error");
  if (out.labels.size() >= kNoVertex || out.edges.size() >= kNoEdge) {
    throw InputError("graph too large for 32-bit ids");
  }
  return out;
}

EdgeList read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_edge_list(in);
}

}  // namespace kgraphlet
