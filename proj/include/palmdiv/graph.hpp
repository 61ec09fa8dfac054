#ifndef PALMDIV_GRAPH_HPP
#define PALMDIV_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace palmdiv {

using VertexId = uint32_t;  // graph labels are dense in [1, n]

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

// Simple undirected graph: symmetric, no self-loops, no parallel edges,
// adjacency lists strictly ascending. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  // edges may contain duplicates (collapsed) but no self-loops.
  Graph(uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges);

  uint32_t n() const { return n_; }
  uint64_t m() const { return m_; }

  const std::vector<VertexId>& neighbors(VertexId u) const {
    check(u);
    return adj_[u];
  }
  uint32_t degree(VertexId u) const {
    check(u);
    return static_cast<uint32_t>(adj_[u].size());
  }
  bool adjacent(VertexId u, VertexId v) const;
  bool connected() const;

  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  void check(VertexId u) const {
    if (u < 1 || u > n_) throw RangeError("vertex label out of range");
  }
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<std::vector<VertexId>> adj_;  // index 0 unused
};

// Edge-list text format: first line "n m", then one "u v" per line.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

Graph gen_grid(uint32_t w, uint32_t h);
Graph gen_random_planar(uint32_t n, uint64_t seed);
Graph gen_path(uint32_t n);
Graph gen_cycle(uint32_t n);
Graph gen_star(uint32_t n);
Graph gen_complete(uint32_t n);

}  // namespace palmdiv

#endif
