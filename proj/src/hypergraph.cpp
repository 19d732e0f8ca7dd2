#include "hyperq/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperq/error.hpp"

namespace hyperq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EdgeArity: return "EdgeArity";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::ArgumentRange: return "ArgumentRange";
    case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::UniformityMismatch: return "UniformityMismatch";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(int r, std::size_t n) : r_(r), n_(n) {
  if (r < 2) throw Error(ErrorKind::ArgumentRange, "uniformity must be at least 2");
  index();
}

Hypergraph::Hypergraph(int r, std::size_t n, const std::vector<std::vector<Vertex>>& edges)
    : r_(r), n_(n), num_edges_(edges.size()) {
  if (r < 2) throw Error(ErrorKind::ArgumentRange, "uniformity must be at least 2");
  flat_.reserve(edges.size() * static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Vertex> e = edges[i];
    if (e.size() != static_cast<std::size_t>(r)) {
      throw Error(ErrorKind::EdgeArity, "edge " + std::to_string(i) + " has " +
                                            std::to_string(e.size()) + " vertices, expected " +
                                            std::to_string(r));
    }
    for (Vertex v : e) {
      if (v >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " in edge " + std::to_string(i));
      }
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorKind::EdgeArity, "edge " + std::to_string(i) + " repeats a vertex");
    }
    flat_.insert(flat_.end(), e.begin(), e.end());
  }
  index();
  for (std::size_t k = 1; k < lex_order_.size(); ++k) {
    auto prev = edge(lex_order_[k - 1]);
    auto cur = edge(lex_order_[k]);
    if (std::equal(prev.begin(), prev.end(), cur.begin())) {
      throw Error(ErrorKind::DuplicateEdge, "edges " + std::to_string(lex_order_[k - 1]) +
                                                " and " + std::to_string(lex_order_[k]));
    }
  }
}

void Hypergraph::index() {
  offsets_.assign(n_ + 1, 0);
  for (Vertex v : flat_) ++offsets_[v + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(flat_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < num_edges_; ++i) {
    for (Vertex v : edge(i)) incidence_[cursor[v]++] = static_cast<std::uint32_t>(i);
  }
  lex_order_.resize(num_edges_);
  std::iota(lex_order_.begin(), lex_order_.end(), 0u);
  std::sort(lex_order_.begin(), lex_order_.end(),
            [this](std::uint32_t a, std::uint32_t b) { return lex_less(edge(a), edge(b)); });
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted_edge) const {
  if (sorted_edge.size() != static_cast<std::size_t>(r_)) return false;
  auto it = std::lower_bound(
      lex_order_.begin(), lex_order_.end(), sorted_edge,
      [this](std::uint32_t id, std::span<const Vertex> key) { return lex_less(edge(id), key); });
  if (it == lex_order_.end()) return false;
  auto e = edge(*it);
  return std::equal(e.begin(), e.end(), sorted_edge.begin());
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < num_edges_; ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

std::vector<std::vector<Vertex>> Hypergraph::sorted_edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_edges_);
  for (std::uint32_t id : lex_order_) {
    auto e = edge(id);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

Hypergraph Hypergraph::induced(std::span<const Vertex> vertices) const {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(n_, kAbsent);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] >= n_) throw Error(ErrorKind::VertexOutOfRange, "induced vertex set");
    relabel[vertices[k]] = static_cast<Vertex>(k);
  }
  std::vector<std::vector<Vertex>> kept;
  for (std::size_t i = 0; i < num_edges_; ++i) {
    std::vector<Vertex> e;
    e.reserve(static_cast<std::size_t>(r_));
    for (Vertex v : edge(i)) {
      if (relabel[v] == kAbsent) break;
      e.push_back(relabel[v]);
    }
    if (e.size() == static_cast<std::size_t>(r_)) kept.push_back(std::move(e));
  }
  return Hypergraph(r_, vertices.size(), kept);
}

Hypergraph Hypergraph::without_vertex(Vertex w) const {
  if (w >= n_) throw Error(ErrorKind::VertexOutOfRange, "deleted vertex");
  std::vector<Vertex> keep;
  keep.reserve(n_ - 1);
  for (Vertex v = 0; v < n_; ++v) {
    if (v != w) keep.push_back(v);
  }
  return induced(keep);
}

Hypergraph Hypergraph::without_edge(std::size_t i) const {
  if (i >= num_edges_) throw Error(ErrorKind::ArgumentRange, "edge index");
  auto edges = edge_list();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
  return Hypergraph(r_, n_, edges);
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.r_ == b.r_ && a.n_ == b.n_ && a.sorted_edge_list() == b.sorted_edge_list();
}

TwoColoring TwoColoring::from_assignment(std::vector<std::uint8_t> labels) {
  TwoColoring c;
  const auto ones = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
  c.part_sizes = {labels.size() - ones, ones};
  c.assignment = std::move(labels);
  return c;
}

bool is_proper_coloring(const Hypergraph& h, const TwoColoring& coloring) {
  if (coloring.assignment.size() != h.n()) return false;
  std::size_t ones = 0;
  for (auto label : coloring.assignment) {
    if (label > 1) return false;
    ones += label;
  }
  if (coloring.part_sizes != std::pair<std::size_t, std::size_t>{h.n() - ones, ones}) return false;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    const auto first = coloring.assignment[e[0]];
    bool mixed = false;
    for (Vertex v : e) mixed = mixed || coloring.assignment[v] != first;
    if (!mixed) return false;
  }
  return true;
}

Hypergraph build_fano() {
  return Hypergraph(3, 7,
                    {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {0, 6, 3}, {1, 6, 4}, {2, 6, 5}, {1, 3, 5}});
}

Hypergraph build_complete(std::size_t n, int r) {
  if (r < 2 || n < static_cast<std::size_t>(r)) {
    throw Error(ErrorKind::ArgumentRange, "complete r-graph needs n >= r >= 2");
  }
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 0u);
  const auto k = static_cast<std::size_t>(r);
  while (true) {
    edges.push_back(pick);
    // advance to the next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(r, n, edges);
}

std::pair<Hypergraph, TwoColoring> build_two_part_complete(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a + b < 3) {
    throw Error(ErrorKind::ArgumentRange, "two-part complete 3-graph needs a, b >= 1, a + b >= 3");
  }
  const std::size_t n = a + b;
  std::vector<std::vector<Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) {
        const int in_first = (i < a) + (j < a) + (k < a);
        if (in_first == 1 || in_first == 2) edges.push_back({i, j, k});
      }
    }
  }
  std::vector<std::uint8_t> labels(n, 0);
  std::fill(labels.begin() + static_cast<std::ptrdiff_t>(a), labels.end(), 1);
  return {Hypergraph(3, n, edges), TwoColoring::from_assignment(std::move(labels))};
}

std::pair<Hypergraph, TwoColoring> build_bn(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::ArgumentRange, "B_n needs n >= 3");
  return build_two_part_complete((n + 1) / 2, n / 2);
}

Hypergraph build_expansion(const std::vector<std::pair<Vertex, Vertex>>& base_edges,
                           std::size_t n_base, int r) {
  if (r < 2) throw Error(ErrorKind::ArgumentRange, "uniformity must be at least 2");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : base_edges) {
    if (u >= n_base || v >= n_base) throw Error(ErrorKind::VertexOutOfRange, "base edge vertex");
    if (u == v) throw Error(ErrorKind::EdgeArity, "base edge is a loop");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorKind::DuplicateEdge, "base edge repeated");
    }
  }
  const auto extra = static_cast<std::size_t>(r - 2);
  Vertex fresh = static_cast<Vertex>(n_base);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(base_edges.size());
  for (auto [u, v] : base_edges) {
    std::vector<Vertex> e{u, v};
    for (std::size_t k = 0; k < extra; ++k) e.push_back(fresh++);
    edges.push_back(std::move(e));
  }
  return Hypergraph(r, n_base + extra * base_edges.size(), edges);
}

std::vector<std::vector<Vertex>> components(const Hypergraph& h) {
  // union-find over edges
  std::vector<Vertex> parent(h.n());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    for (std::size_t k = 1; k < e.size(); ++k) {
      Vertex a = find(e[0]);
      Vertex b = find(e[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> slot(h.n(), static_cast<std::size_t>(-1));
  for (Vertex v = 0; v < h.n(); ++v) {
    Vertex root = find(v);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).size() <= 1; }

std::size_t min_degree(const Hypergraph& h) {
  if (h.n() == 0) throw Error(ErrorKind::EmptyVertexSet, "minimum degree of empty hypergraph");
  std::size_t best = h.degree(0);
  for (Vertex v = 1; v < h.n(); ++v) best = std::min(best, h.degree(v));
  return best;
}

namespace {

std::vector<long long> tokenize_line(std::string_view line, std::size_t line_no) {
  std::vector<long long> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) {
      throw Error(ErrorKind::FormatError, "line " + std::to_string(line_no) + ": bad integer '" +
                                              std::string(line.substr(pos, end - pos)) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

}  // namespace

Hypergraph parse(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    rows.push_back(tokenize_line(line, line_no));
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw Error(ErrorKind::FormatError, "missing header");
  const auto& header = rows.front();
  if (header.size() != 3) throw Error(ErrorKind::FormatError, "header must be 'r n m'");
  const long long r = header[0];
  const long long n = header[1];
  const long long m = header[2];
  if (r < 2 || n < 0 || m < 0) throw Error(ErrorKind::FormatError, "header values out of range");
  if (static_cast<long long>(rows.size() - 1) != m) {
    throw Error(ErrorKind::FormatError, "header announces " + std::to_string(m) + " edges, found " +
                                            std::to_string(rows.size() - 1));
  }
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (static_cast<long long>(rows[k].size()) != r) {
      throw Error(ErrorKind::FormatError, "line " + std::to_string(line_numbers[k]) + ": expected " +
                                              std::to_string(r) + " vertex ids");
    }
    std::vector<Vertex> e;
    for (long long v : rows[k]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line_numbers[k]));
      }
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(r), static_cast<std::size_t>(n), edges);
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << h.r() << ' ' << h.n() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.sorted_edge_list()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
  return out.str();
}

Hypergraph read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void write_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << serialize(h);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace hyperq
