#include "cutfit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace cutfit {

Graph::Graph(std::vector<Edge> edges) : edges_(std::move(edges)) {
  ids_.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    ids_.push_back(e.src);
    ids_.push_back(e.dst);
  }
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  ids_.shrink_to_fit();
  if (ids_.size() > std::numeric_limits<VertexIndex>::max()) {
    throw std::length_error("graph has more vertices than VertexIndex can address");
  }

  in_.assign(ids_.size(), 0);
  out_.assign(ids_.size(), 0);
  dense_.reserve(edges_.size());
  auto lookup = [this](VertexId id) {
    return static_cast<VertexIndex>(std::lower_bound(ids_.begin(), ids_.end(), id) - ids_.begin());
  };
  for (const Edge& e : edges_) {
    const DenseEdge d{lookup(e.src), lookup(e.dst)};
    ++out_[d.src];
    ++in_[d.dst];
    dense_.push_back(d);
  }
}

std::optional<VertexIndex> Graph::index_of(VertexId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - ids_.begin());
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

LoadResult parse_edge_list(std::string_view text, bool allow_self_loops) {
  std::vector<Edge> edges;
  std::size_t dropped = 0;
  std::size_t line_no = 0;
  bool saw_data = false;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;

    VertexId ids[2];
    int got = 0;
    while (i < line.size() && got < 2) {
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      std::string_view tok = line.substr(i, j - i);
      VertexId value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected unsigned integer, got '" + std::string(tok) + "'");
      }
      ids[got++] = value;
      i = j;
      while (i < line.size() && is_blank(line[i])) ++i;
    }
    if (got < 2) throw ParseError(line_no, "expected two vertex ids");
    // Remaining tokens must still be integers per the line grammar.
    while (i < line.size()) {
      std::size_t j = i;
      while (j < line.size() && !is_blank(line[j])) ++j;
      std::string_view tok = line.substr(i, j - i);
      VertexId ignored = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ignored);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected unsigned integer, got '" + std::string(tok) + "'");
      }
      i = j;
      while (i < line.size() && is_blank(line[i])) ++i;
    }

    saw_data = true;
    if (!allow_self_loops && ids[0] == ids[1]) {
      ++dropped;
      continue;
    }
    edges.push_back({ids[0], ids[1]});
  }

  if (!saw_data) throw EmptyGraphError("edge list contains no edges");
  return {Graph(std::move(edges)), dropped};
}

LoadResult load_edge_list(const std::filesystem::path& path, bool allow_self_loops) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str(), allow_self_loops);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  } catch (const EmptyGraphError& e) {
    throw EmptyGraphError(path.string() + ": " + e.what());
  }
}

Graph canonicalize_undirected(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (e.src == e.dst) continue;
    out.push_back({std::min(e.src, e.dst), std::max(e.src, e.dst)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Graph(std::move(out));
}

namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<VertexId>{}(e.src * 0x9E3779B97F4A7C15ULL ^ e.dst);
  }
};

}  // namespace

Graph symmetrize(const Graph& g) {
  std::unordered_set<Edge, EdgeHash> present(g.edges().begin(), g.edges().end());
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  for (const Edge& e : g.edges()) {
    const Edge rev{e.dst, e.src};
    if (present.insert(rev).second) out.push_back(rev);
  }
  return Graph(std::move(out));
}

bool is_canonical_undirected(const Graph& g, Edge* offending) {
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const Edge key{std::min(e.src, e.dst), std::max(e.src, e.dst)};
    if (e.src == e.dst || !seen.insert(key).second) {
      if (offending) *offending = e;
      return false;
    }
  }
  return true;
}

}  // namespace cutfit
