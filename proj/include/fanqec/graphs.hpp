#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanqec {

// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int n_vertices);

  int n_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t n_edges() const { return n_edges_; }
  // Adds {u, v}; returns false if it was already present. Self-loops and
  // out-of-range vertices throw InvalidArgument.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  // Sorted neighbour list.
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  bool is_connected() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t n_edges_ = 0;
};

Graph path(int n);
Graph complete(int n);
// Hub 0 joined to the path 1..n.
Graph fan(int n);
// Disjoint union of g1 and g2 (g2 relabelled after g1) plus every edge
// between them.
Graph join(const Graph& g1, const Graph& g2);
// One "u v" pair per line, 0-indexed, '#' starts a comment. The vertex count
// is one more than the largest index. Throws ParseError.
Graph from_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

class DistMatrix {
 public:
  explicit DistMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  int operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  int& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const;
  bool satisfies_triangle_inequality() const;

 private:
  int n_;
  std::vector<int> d_;
};

// BFS from every vertex. Throws Disconnected.
DistMatrix distance_matrix(const Graph& g);

struct PathSpectrum {
  int n = 0;
  // omega_k = 2 cos(k pi / (n+1)) for k = 1..n, stored at index k-1.
  std::vector<double> eigenvalues;

  double omega(int k) const { return eigenvalues.at(k - 1); }
};

PathSpectrum path_spectrum(int n);

// Entries sin(l k pi / (n+1)), l = 1..n; eigenvector of the path adjacency
// matrix for omega_k. Requires 1 <= k <= n.
std::vector<double> path_eigenvector(int n, int k);

// Dense adjacency matrix of P_n, row-major.
std::vector<double> path_adjacency(int n);

}  // namespace fanqec
