#include "esgraph/whitehead.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace esgraph {

namespace {

// Canonical vertex ordering: a1 < a1^-1 < a2 < a2^-1 < ...
int vertex_slot(Letter l) { return 2 * (letter_index(l) - 1) + (l < 0 ? 1 : 0); }

std::pair<Letter, Letter> normalize_edge(Letter u, Letter v) {
  if (vertex_slot(u) > vertex_slot(v)) std::swap(u, v);
  return {u, v};
}

}  // namespace

std::vector<Letter> WhiteheadGraph::vertices() const {
  std::vector<Letter> out;
  for (int k = 1; k <= rank; ++k) {
    if (excluded && *excluded == k) continue;
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

WhiteheadGraph build_whitehead(const std::vector<Word>& words, Rank rank,
                               std::optional<int> excluded, bool augmented) {
  if (excluded && (*excluded < 1 || *excluded > rank.n)) {
    throw std::invalid_argument("excluded index out of rank range");
  }
  WhiteheadGraph g;
  g.rank = rank.n;
  g.excluded = excluded;
  g.augmented = augmented;
  for (const Word& w : words) {
    if (w.rank() != rank.n) throw std::invalid_argument("rank mismatch in whitehead build");
    if (excluded && contains_index(w, *excluded)) {
      throw std::invalid_argument("word contains the excluded generator");
    }
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      g.edges.push_back(normalize_edge(w.at(k), -w.at(k + 1)));
    }
    if (augmented && !w.empty()) {
      g.edges.push_back(normalize_edge(w.at(w.size() - 1), -w.at(0)));
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::make_pair(vertex_slot(a.first), vertex_slot(a.second)) <
           std::make_pair(vertex_slot(b.first), vertex_slot(b.second));
  });
  return g;
}

bool has_cut_vertex(const WhiteheadGraph& g) {
  std::vector<Letter> vs = g.vertices();
  int nv = static_cast<int>(vs.size());
  if (nv <= 1) return false;

  std::vector<int> slot_to_id(2 * g.rank, -1);
  for (int v = 0; v < nv; ++v) slot_to_id[vertex_slot(vs[v])] = v;

  // Simple graph underlying the multiset: parallel edges collapse, loops
  // tracked separately (a loop makes its vertex a cut vertex here).
  std::vector<std::vector<int>> adj(nv);
  bool any_loop = false;
  for (const auto& [a, b] : g.edges) {
    int u = slot_to_id[vertex_slot(a)];
    int v = slot_to_id[vertex_slot(b)];
    if (u == v) {
      any_loop = true;
      continue;
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  if (any_loop) return true;

  // Connectivity over the full vertex set.
  std::vector<int> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != nv) return true;

  // Articulation points by iterative DFS lowlink.
  std::vector<int> disc(nv, -1), low(nv, 0), parent(nv, -1), child_count(nv, 0);
  int timer = 0;
  struct Frame {
    int u;
    std::size_t next;
  };
  std::vector<Frame> frames;
  frames.push_back({0, 0});
  disc[0] = low[0] = timer++;
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next < adj[f.u].size()) {
      int v = adj[f.u][f.next++];
      if (disc[v] == -1) {
        parent[v] = f.u;
        ++child_count[f.u];
        disc[v] = low[v] = timer++;
        frames.push_back({v, 0});
      } else if (v != parent[f.u]) {
        low[f.u] = std::min(low[f.u], disc[v]);
      }
    } else {
      int u = f.u;
      frames.pop_back();
      if (!frames.empty()) {
        int p = frames.back().u;
        low[p] = std::min(low[p], low[u]);
        if (parent[p] != -1 && low[u] >= disc[p]) return true;
      }
    }
  }
  return child_count[0] >= 2;
}

std::string vertex_name(Letter l) {
  std::string name = "a" + std::to_string(letter_index(l));
  if (l < 0) name += "_inv";
  return name;
}

std::string to_dot(const WhiteheadGraph& g) {
  std::string out = "graph whitehead {\n";
  for (Letter v : g.vertices()) {
    out += "  " + vertex_name(v) + ";\n";
  }
  for (const auto& [a, b] : g.edges) {
    out += "  " + vertex_name(a) + " -- " + vertex_name(b) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const WhiteheadGraph& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.rank;
  if (g.excluded) {
    j["excluded"] = *g.excluded;
  } else {
    j["excluded"] = nullptr;
  }
  j["augmented"] = g.augmented;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges) {
    edges.push_back({vertex_name(a), vertex_name(b)});
  }
  j["edges"] = edges;
  return j.dump();
}

}  // namespace esgraph
