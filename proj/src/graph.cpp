#include "gwnc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gwnc {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a + 1));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InputError("duplicate edge");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v >= n)
      throw InputError("edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) +
                       " outside 1.." + std::to_string(n));
    adj_[e.u * n + e.v] = 1;
    adj_[e.v * n + e.u] = 1;
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
  return Graph(n, std::move(es));
}

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int a = 0; a + 1 < n; ++a) es.emplace_back(a, a + 1);
  return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a) es.emplace_back(a, (a + 1) % n);
  return Graph(n, std::move(es));
}

bool Graph::adjacent(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw InputError("vertex out of range");
  return adj_[a * n_ + b] != 0;
}

std::vector<int> Graph::neighbours(int a) const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b)
    if (adjacent(a, b)) out.push_back(b);
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!adj_[a * n_ + b]) out.emplace_back(a, b);
  return out;
}

Graph Graph::with_edge(const Edge& e) const {
  if (has_edge(e)) throw InputError("edge already present");
  auto es = edges_;
  es.push_back(e);
  return Graph(n_, std::move(es));
}

Graph Graph::without_edge(const Edge& e) const {
  if (!has_edge(e)) throw InputError("edge not present");
  auto es = edges_;
  es.erase(std::find(es.begin(), es.end(), e));
  return Graph(n_, std::move(es));
}

Graph Graph::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != n_) throw InputError("permutation size mismatch");
  std::vector<int> pos(n_, -1);
  for (int k = 0; k < n_; ++k) {
    if (order[k] < 0 || order[k] >= n_ || pos[order[k]] != -1)
      throw InputError("not a permutation");
    pos[order[k]] = k;
  }
  std::vector<Edge> es;
  for (const auto& e : edges_) es.emplace_back(pos[e.u], pos[e.v]);
  return Graph(n_, std::move(es));
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  const int k = static_cast<int>(vertices.size());
  std::vector<Edge> es;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (adjacent(vertices[a], vertices[b])) es.emplace_back(a, b);
  return Graph(k, std::move(es));
}

bool Graph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

std::string Graph::to_text() const {
  std::ostringstream os;
  os << n_ << ' ' << edges_.size() << '\n';
  for (const auto& e : edges_) os << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

std::string Graph::to_inline() const {
  std::ostringstream os;
  os << "n:" << n_ << ";edges:";
  for (std::size_t k = 0; k < edges_.size(); ++k)
    os << (k ? "," : "") << edges_[k].u + 1 << '-' << edges_[k].v + 1;
  return os.str();
}

std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int a = 0; a < n; ++a)
      if (!visited[a] && (best < 0 || weight[a] > weight[best])) best = a;
    visited[best] = 1;
    order.push_back(best);
    for (int b : g.neighbours(best))
      if (!visited[b]) ++weight[b];
  }
  return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    if (order[k] < 0 || order[k] >= n || pos[order[k]] != -1) return false;
    pos[order[k]] = k;
  }
  for (int k = 0; k < n; ++k) {
    std::vector<int> later;
    for (int b : g.neighbours(order[k]))
      if (pos[b] > k) later.push_back(b);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.adjacent(later[i], later[j])) return false;
  }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  // The reverse of an MCS visit order is a PEO exactly when g is chordal.
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  if (is_perfect_elimination_ordering(g, order)) return {true, std::move(order)};
  return {false, std::nullopt};
}

CliqueDecomposition clique_decomposition(const Graph& g, const std::vector<int>& peo) {
  if (!is_perfect_elimination_ordering(g, peo))
    throw InputError("graph is not chordal or ordering is not a perfect elimination ordering");
  const int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[peo[k]] = k;

  // Candidate cliques {v} + later neighbours, in elimination order.  Walking
  // them in reverse gives an ordering with the running-intersection property.
  std::vector<std::vector<int>> candidates;
  for (int k = 0; k < n; ++k) {
    std::vector<int> c{peo[k]};
    for (int b : g.neighbours(peo[k]))
      if (pos[b] > k) c.push_back(b);
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  auto contained = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  CliqueDecomposition out;
  std::vector<int> seen;
  for (int k = n - 1; k >= 0; --k) {
    const auto& c = candidates[k];
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j)
      if (j != k && candidates[j].size() > c.size() && contained(c, candidates[j])) maximal = false;
    for (const auto& kept : out.cliques)
      if (maximal && kept == c) maximal = false;
    if (!maximal) continue;
    if (!out.cliques.empty()) {
      std::vector<int> sep;
      std::set_intersection(c.begin(), c.end(), seen.begin(), seen.end(), std::back_inserter(sep));
      out.separators.push_back(std::move(sep));
    }
    std::vector<int> merged;
    std::set_union(seen.begin(), seen.end(), c.begin(), c.end(), std::back_inserter(merged));
    seen = std::move(merged);
    out.cliques.push_back(c);
  }
  return out;
}

CliqueDecomposition clique_decomposition(const Graph& g) {
  auto res = is_chordal(g);
  if (!res.chordal) throw InputError("graph is not chordal");
  return clique_decomposition(g, *res.peo);
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    auto c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int u : *set) {
      std::size_t cnt = 0;
      for (int v : p) cnt += g.adjacent(u, v);
      if (pivot < 0 || cnt > best) pivot = u, best = cnt;
    }
  const auto candidates = p;
  for (int v : candidates) {
    if (g.adjacent(pivot, v)) continue;
    std::vector<int> np, nx;
    for (int u : p)
      if (g.adjacent(u, v)) np.push_back(u);
    for (int u : x)
      if (g.adjacent(u, v)) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r, p(g.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

PairClassification classify_pair(const Graph& g, int v1, int v2) {
  if (v1 == v2) throw InputError("classify_pair needs two distinct vertices");
  if (g.adjacent(v1, v2)) throw InputError("classify_pair: the pair must not be an edge");
  PairClassification c;
  for (int a = 0; a < g.num_vertices(); ++a) {
    if (a == v1 || a == v2) continue;
    const bool to1 = g.adjacent(a, v1), to2 = g.adjacent(a, v2);
    if (to1 && to2) ++c.s;
    else if (to1) ++c.y;
    else if (to2) ++c.x;
    else ++c.w;
  }
  return c;
}

int common_neighbor_count(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw InputError("common_neighbor_count: not an edge");
  int s = 0;
  for (int a = 0; a < g.num_vertices(); ++a)
    if (a != e.u && a != e.v && g.adjacent(a, e.u) && g.adjacent(a, e.v)) ++s;
  return s;
}

std::optional<Edge> find_chordal_completion_edge(const Graph& g) {
  for (const auto& e : g.non_edges())
    if (is_chordal(g.with_edge(e)).chordal) return e;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("expected an integer, got '" + std::string(s) + "'");
  return value;
}

Graph parse_inline(std::string_view text) {
  const auto semi = text.find(';');
  auto head = trim(text.substr(0, semi));
  if (head.substr(0, 2) != "n:") throw InputError("inline graph must start with 'n:'");
  const int n = parse_int(head.substr(2));
  std::vector<Edge> es;
  if (semi != std::string_view::npos) {
    auto rest = trim(text.substr(semi + 1));
    if (rest.substr(0, 6) != "edges:") throw InputError("inline graph: expected 'edges:'");
    rest = trim(rest.substr(6));
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = trim(rest.substr(0, comma));
      if (!item.empty()) {
        auto e = parse_edge(item);
        if (e.v >= n) throw InputError("inline graph: vertex out of range");
        es.push_back(e);
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return Graph(n, std::move(es));
}

}  // namespace

Edge parse_edge(std::string_view text) {
  text = trim(text);
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw InputError("edge must look like 'mu-nu'");
  const int a = parse_int(text.substr(0, dash));
  const int b = parse_int(text.substr(dash + 1));
  if (a < 1 || b < 1) throw InputError("vertex labels are 1-based");
  return Edge(a - 1, b - 1);
}

Graph parse_graph(std::string_view text) {
  if (trim(text).substr(0, 2) == "n:") return parse_inline(trim(text));
  std::istringstream is{std::string(text)};
  int n = 0, m = 0;
  if (!(is >> n >> m) || n < 0 || m < 0) throw InputError("graph file: expected header 'n m'");
  std::vector<Edge> es;
  for (int k = 0; k < m; ++k) {
    int a = 0, b = 0;
    if (!(is >> a >> b)) throw InputError("graph file: expected " + std::to_string(m) + " edges");
    if (a < 1 || b < 1 || a > n || b > n) throw InputError("graph file: vertex out of range");
    if (a >= b) throw InputError("graph file: edges must be written 'mu nu' with mu < nu");
    es.emplace_back(a - 1, b - 1);
  }
  std::string extra;
  if (is >> extra) throw InputError("graph file: trailing content");
  return Graph(n, std::move(es));
}

Graph read_graph(const std::string& path_or_inline) {
  if (trim(path_or_inline).substr(0, 2) == "n:") return parse_graph(path_or_inline);
  std::ifstream in(path_or_inline);
  if (!in) throw InputError("cannot open graph file '" + path_or_inline + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

}  // namespace gwnc
