#include "palmdiv/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace palmdiv {

Graph::Graph(uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
  n_ = n;
  adj_.assign(n_ + 1, {});
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw RangeError("edge endpoint out of range");
    if (u == v) throw ParseError("self-loop rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = 0;
  for (uint32_t u = 1; u <= n_; ++u) {
    auto& a = adj_[u];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m_ += a.size();
  }
  m_ /= 2;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check(u);
  check(v);
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  if (n_ == 1) return true;
  std::vector<uint8_t> seen(n_ + 1, 0);
  std::vector<VertexId> stack = {1};
  seen[1] = 1;
  uint32_t count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n_;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> e;
  e.reserve(m_);
  for (uint32_t u = 1; u <= n_; ++u)
    for (VertexId v : adj_[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  uint64_t lineno = 0;
  uint32_t n = 0;
  uint64_t m = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  // header
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!(ls >> n >> m)) fail("expected header 'n m'");
    break;
  }
  if (lineno == 0) throw ParseError("empty input");
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    uint64_t u, v;
    if (!(ls >> u >> v)) fail("expected edge 'u v'");
    if (u < 1 || u > n || v < 1 || v > n) fail("label out of range");
    if (u == v) fail("self-loop");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph(n, std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph gen_grid(uint32_t w, uint32_t h) {
  if (w < 1 || h < 1) throw RangeError("grid dimensions must be positive");
  uint64_t n64 = static_cast<uint64_t>(w) * h;
  if (n64 > 0xffffffffu) throw RangeError("grid too large for label width");
  uint32_t n = static_cast<uint32_t>(n64);
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto id = [&](uint32_t r, uint32_t c) { return w * (r - 1) + c; };
  for (uint32_t r = 1; r <= h; ++r)
    for (uint32_t c = 1; c <= w; ++c) {
      if (c < w) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r < h) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(n, std::move(edges));
}

// Random spanning tree over a grid skeleton plus a random subset of the
// remaining grid edges. Planar and connected by construction.
Graph gen_random_planar(uint32_t n, uint64_t seed) {
  if (n < 1) throw RangeError("n must be positive");
  uint32_t w = 1;
  while (static_cast<uint64_t>(w) * w < n) ++w;
  // grid positions 1..n row-major in a w-wide grid
  std::vector<std::pair<VertexId, VertexId>> cand;
  for (uint32_t v = 1; v <= n; ++v) {
    if (v % w != 0 && v + 1 <= n) cand.emplace_back(v, v + 1);
    if (v + w <= n) cand.emplace_back(v, v + w);
  }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xb5297a4d3f84d5b3ull);
  std::vector<uint32_t> order(cand.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<uint32_t>(i);
  for (size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng() % i]);

  // union-find for the spanning tree
  std::vector<uint32_t> parent(n + 1);
  for (uint32_t i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<uint8_t> used(cand.size(), 0);
  for (uint32_t idx : order) {
    auto [u, v] = cand[idx];
    uint32_t ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      edges.push_back(cand[idx]);
      used[idx] = 1;
    }
  }
  for (size_t i = 0; i < cand.size(); ++i)
    if (!used[i] && (rng() & 1)) edges.push_back(cand[i]);
  return Graph(n, std::move(edges));
}

Graph gen_path(uint32_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (uint32_t v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, std::move(e));
}

Graph gen_cycle(uint32_t n) {
  if (n < 3) throw RangeError("cycle needs n >= 3");
  auto e = gen_path(n).edges();
  e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

Graph gen_star(uint32_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (uint32_t v = 2; v <= n; ++v) e.emplace_back(1, v);
  return Graph(n, std::move(e));
}

Graph gen_complete(uint32_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (uint32_t u = 1; u <= n; ++u)
    for (uint32_t v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

}  // namespace palmdiv
