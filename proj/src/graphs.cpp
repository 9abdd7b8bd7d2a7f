#include "fanqec/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <queue>
#include <sstream>

#include "fanqec/error.hpp"

namespace fanqec {

Graph::Graph(int n_vertices) {
  if (n_vertices < 1) throw InvalidArgument("graph needs at least one vertex");
  adj_.resize(n_vertices);
}

bool Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_vertices() || v >= n_vertices()) {
    throw InvalidArgument("edge references a vertex outside 0.." + std::to_string(n_vertices() - 1));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++n_edges_;
  return true;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nu = adj_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n_edges_);
  for (int u = 0; u < n_vertices(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == adj_.size();
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph fan(int n) { return join(Graph(1), path(n)); }

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.n_vertices();
  const int n2 = g2.n_vertices();
  Graph g(n1 + n2);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v);
  }
  return g;
}

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  int max_vertex = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (u < 0 || v < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex index");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    pairs.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (pairs.empty()) throw ParseError("edge list contains no edges");
  Graph g(max_vertex + 1);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_edge_list(ss.str());
}

bool DistMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool DistMatrix::satisfies_triangle_inequality() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        if ((*this)(i, j) > (*this)(i, k) + (*this)(k, j)) return false;
      }
    }
  }
  return true;
}

DistMatrix distance_matrix(const Graph& g) {
  const int n = g.n_vertices();
  DistMatrix d(n);
  std::vector<int> dist(n);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw Disconnected("vertices " + std::to_string(s) + " and " + std::to_string(t) +
                           " are not connected");
      }
      d(s, t) = dist[t];
    }
  }
  return d;
}

PathSpectrum path_spectrum(int n) {
  if (n < 1) throw InvalidArgument("path_spectrum: n must be >= 1");
  PathSpectrum s;
  s.n = n;
  for (int k = 1; k <= n; ++k) s.eigenvalues.push_back(2.0 * std::cos(k * std::numbers::pi / (n + 1)));
  return s;
}

std::vector<double> path_eigenvector(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw InvalidArgument("path_eigenvector: requires 1 <= k <= n");
  std::vector<double> g(n);
  for (int l = 1; l <= n; ++l) {
    g[l - 1] = std::sin(static_cast<double>(l) * k * std::numbers::pi / (n + 1));
  }
  return g;
}

std::vector<double> path_adjacency(int n) {
  if (n < 1) throw InvalidArgument("path_adjacency: n must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i + 1 < n; ++i) {
    a[static_cast<std::size_t>(i) * n + i + 1] = 1.0;
    a[static_cast<std::size_t>(i + 1) * n + i] = 1.0;
  }
  return a;
}

}  // namespace fanqec
