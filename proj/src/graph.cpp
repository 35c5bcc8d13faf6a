#include "pathcover/graph.hpp"

#include <algorithm>
#include <sstream>

namespace pathcover {

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::from_edges(int n, std::vector<Edge> es) {
  if (n < 0) throw StructureError("negative vertex count");
  Graph g;
  g.n = n;
  for (auto& e : es) {
    if (e.first == e.second) throw StructureError("self loop");
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
      throw StructureError("vertex id out of range");
    e = make_edge(e.first, e.second);
  }
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw StructureError("duplicate edge");
  g.edges = std::move(es);
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

Graph Graph::induced(const std::vector<int>& keep, std::vector<int>* orig_of) const {
  std::vector<int> new_id(n, -1);
  int k = 0;
  for (int v : keep) {
    if (v < 0 || v >= n) throw StructureError("induced: vertex id out of range");
    if (new_id[v] != -1) throw StructureError("induced: duplicate vertex");
    new_id[v] = k++;
  }
  std::vector<Edge> es;
  for (const auto& [u, v] : edges)
    if (new_id[u] != -1 && new_id[v] != -1) es.push_back(make_edge(new_id[u], new_id[v]));
  if (orig_of) {
    orig_of->assign(k, -1);
    for (int v = 0; v < n; ++v)
      if (new_id[v] != -1) (*orig_of)[new_id[v]] = v;
  }
  return Graph::from_edges(k, std::move(es));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> es;
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok)) continue;  // blank or comment-only line
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'n m'");
      }
      std::string extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative header value");
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) {
      std::string tok;
      std::istringstream probe(line);
      if (!(probe >> tok)) continue;
      throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'");
    }
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    ++seen;
    if (seen > m)
      throw ParseError("line " + std::to_string(lineno) + ": more than " + std::to_string(m) +
                       " edges");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self loop");
    Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
    es.push_back(e);
  }
  if (n < 0) throw ParseError("missing header 'n m'");
  if (seen != m)
    throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", got " +
                     std::to_string(seen));
  auto sorted = es;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError("duplicate edge");
  return Graph::from_edges(static_cast<int>(n), std::move(es));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.adj[v])
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::vector<std::vector<int>> edge_set_components(int n, const EdgeSet& es,
                                                  const std::vector<int>* include) {
  std::vector<std::vector<int>> adj(n);
  std::vector<char> present(n, 0);
  for (const auto& [u, v] : es) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    present[u] = present[v] = 1;
  }
  if (include)
    for (int v : *include) present[v] = 1;
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (!present[s] || comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : adj[v])
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int Solution::covered() const {
  int total = 0;
  for (const auto& p : paths) total += p.size();
  return total;
}

ValidationResult validate_solution(const Graph& g, const Solution& sol, int min_len) {
  std::vector<char> used(g.n, 0);
  for (size_t i = 0; i < sol.paths.size(); ++i) {
    const auto& p = sol.paths[i].verts;
    if (static_cast<int>(p.size()) < min_len)
      return {false, "path " + std::to_string(i) + " has " + std::to_string(p.size()) +
                         " vertices, need at least " + std::to_string(min_len)};
    for (size_t j = 0; j < p.size(); ++j) {
      int v = p[j];
      if (v < 0 || v >= g.n)
        return {false, "path " + std::to_string(i) + " has out-of-range vertex " +
                           std::to_string(v)};
      if (used[v])
        return {false, "vertex " + std::to_string(v) + " used twice"};
      used[v] = 1;
      if (j > 0 && !g.has_edge(p[j - 1], p[j]))
        return {false, "path " + std::to_string(i) + " uses missing edge {" +
                           std::to_string(p[j - 1]) + "," + std::to_string(p[j]) + "}"};
    }
  }
  return {true, ""};
}

ContractedView contract(int n, const std::vector<std::vector<int>>& comps, const EdgeSet& cover) {
  ContractedView cv;
  cv.num_nodes = static_cast<int>(comps.size());
  cv.node_of.assign(n, -1);
  for (size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) {
      if (v < 0 || v >= n) throw StructureError("contract: vertex id out of range");
      if (cv.node_of[v] != -1) throw StructureError("contract: vertex in two components");
      cv.node_of[v] = static_cast<int>(i);
    }
  for (const auto& e : cover) {
    int a = cv.node_of[e.first], b = cv.node_of[e.second];
    if (a == -1 || b == -1) throw StructureError("contract: cover edge endpoint outside components");
    if (a == b)
      throw StructureError("contract: cover edge {" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + "} lies inside one component");
    cv.arcs.emplace_back(a, b);
    cv.arc_edges.push_back(e);
  }
  return cv;
}

}  // namespace pathcover
