#include "hyperq/containment.hpp"

#include <algorithm>
#include <numeric>

#include "hyperq/error.hpp"

namespace hyperq {

bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb) {
  if (emb.map.size() != pattern.n()) return false;
  std::vector<bool> used(host.n(), false);
  for (Vertex h : emb.map) {
    if (h >= host.n() || used[h]) return false;
    used[h] = true;
  }
  std::vector<Vertex> image;
  for (std::size_t i = 0; i < pattern.num_edges(); ++i) {
    image.clear();
    for (Vertex v : pattern.edge(i)) image.push_back(emb.map[v]);
    std::sort(image.begin(), image.end());
    if (!host.has_edge(image)) return false;
  }
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Hypergraph& host, const Hypergraph& pattern)
      : host_(host), pattern_(pattern), order_(pattern.n()), closing_(pattern.n()),
        map_(pattern.n(), 0), used_(host.n(), false) {
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    std::vector<std::size_t> position(pattern.n());
    for (std::size_t k = 0; k < order_.size(); ++k) position[order_[k]] = k;
    // an edge is checked as soon as its last vertex (in search order) is placed
    for (std::size_t i = 0; i < pattern.num_edges(); ++i) {
      auto e = pattern.edge(i);
      Vertex last = *std::max_element(e.begin(), e.end(), [&](Vertex a, Vertex b) {
        return position[a] < position[b];
      });
      closing_[position[last]].push_back(static_cast<std::uint32_t>(i));
    }
  }

  std::optional<Embedding> run() {
    if (pattern_.n() > host_.n()) return std::nullopt;
    if (extend(0)) return Embedding{map_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    for (Vertex h = 0; h < host_.n(); ++h) {
      if (used_[h] || host_.degree(h) < pattern_.degree(p)) continue;
      map_[p] = h;
      if (!closes(depth)) continue;
      used_[h] = true;
      if (extend(depth + 1)) return true;
      used_[h] = false;
    }
    return false;
  }

  bool closes(std::size_t depth) {
    for (std::uint32_t id : closing_[depth]) {
      image_.clear();
      for (Vertex v : pattern_.edge(id)) image_.push_back(map_[v]);
      std::sort(image_.begin(), image_.end());
      if (!host_.has_edge(image_)) return false;
    }
    return true;
  }

  const Hypergraph& host_;
  const Hypergraph& pattern_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::uint32_t>> closing_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> image_;
};

class ColoringSearch {
 public:
  explicit ColoringSearch(const Hypergraph& h) : h_(h), label_(h.n(), kUnset) {}

  std::optional<TwoColoring> run() {
    for (Vertex v = 0; v < h_.n(); ++v) {
      if (h_.degree(v) == 0) label_[v] = 0;
    }
    if (!solve(0, true)) return std::nullopt;
    std::vector<std::uint8_t> labels(label_.begin(), label_.end());
    return TwoColoring::from_assignment(std::move(labels));
  }

 private:
  static constexpr std::int8_t kUnset = -1;

  bool solve(Vertex from, bool first_branch) {
    Vertex v = from;
    while (v < h_.n() && label_[v] != kUnset) ++v;
    if (v == h_.n()) return true;
    // swapping the two colors maps solutions to solutions
    const int colors = first_branch ? 1 : 2;
    for (int c = 0; c < colors; ++c) {
      const std::size_t mark = trail_.size();
      if (assign(v, static_cast<std::int8_t>(c)) && solve(v + 1, false)) return true;
      undo(mark);
    }
    return false;
  }

  // Sets v and propagates forced labels. Returns false on a monochromatic edge.
  bool assign(Vertex v, std::int8_t c) {
    std::vector<std::pair<Vertex, std::int8_t>> queue{{v, c}};
    while (!queue.empty()) {
      auto [u, color] = queue.back();
      queue.pop_back();
      if (label_[u] != kUnset) {
        if (label_[u] != color) return false;
        continue;
      }
      label_[u] = color;
      trail_.push_back(u);
      for (std::uint32_t id : h_.incident(u)) {
        std::size_t same = 0;
        std::size_t unset = 0;
        Vertex free_vertex = 0;
        for (Vertex w : h_.edge(id)) {
          if (label_[w] == kUnset) {
            ++unset;
            free_vertex = w;
          } else if (label_[w] == color) {
            ++same;
          }
        }
        const auto r = static_cast<std::size_t>(h_.r());
        if (same == r) return false;
        if (unset == 1 && same == r - 1) {
          queue.emplace_back(free_vertex, static_cast<std::int8_t>(1 - color));
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      label_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  const Hypergraph& h_;
  std::vector<std::int8_t> label_;
  std::vector<Vertex> trail_;
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Hypergraph& host, const Hypergraph& pattern) {
  if (host.r() != pattern.r()) {
    throw Error(ErrorKind::UniformityMismatch, "host is " + std::to_string(host.r()) +
                                                   "-uniform, pattern is " +
                                                   std::to_string(pattern.r()) + "-uniform");
  }
  return EmbeddingSearch(host, pattern).run();
}

bool is_fano_free(const Hypergraph& h) {
  static const Hypergraph fano = build_fano();
  return !contains_subgraph(h, fano).has_value();
}

std::optional<TwoColoring> two_coloring(const Hypergraph& h) { return ColoringSearch(h).run(); }

}  // namespace hyperq
