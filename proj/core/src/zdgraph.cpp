#include "zdlab/zdgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "zdlab/properties.hpp"

namespace zdlab {

namespace {

constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// BFS shortest-path matrix; `undirected` symmetrizes the adjacency first.
std::vector<std::vector<std::uint32_t>> distances(const ZdGraph& g,
                                                  bool undirected) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint32_t>> dist(
      n, std::vector<std::uint32_t>(n, kUnreachable));
  for (std::size_t src = 0; src < n; ++src) {
    dist[src][src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        bool edge = g.adj[v][w] || (undirected && g.adj[w][v]);
        if (edge && dist[src][w] == kUnreachable) {
          dist[src][w] = dist[src][v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

}  // namespace

ZdGraph build_graph(const FiniteStructure& s) {
  s.check_well_formed();
  ZdGraph g;
  g.vertices = zero_divisor_sets(s).proper;
  const std::size_t n = g.vertices.size();
  g.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && s.times(g.vertices[i], g.vertices[j]) == 0)
        g.adj[i][j] = true;
  return g;
}

const char* notion_name(ConnectivityNotion n) {
  switch (n) {
    case ConnectivityNotion::weak:
      return "weak";
    case ConnectivityNotion::semi:
      return "semi";
    case ConnectivityNotion::strong:
      return "strong";
  }
  return "?";
}

std::optional<ConnectivityNotion> notion_from_name(const std::string& name) {
  if (name == "weak") return ConnectivityNotion::weak;
  if (name == "semi") return ConnectivityNotion::semi;
  if (name == "strong") return ConnectivityNotion::strong;
  return std::nullopt;
}

bool connectivity(const ZdGraph& g, ConnectivityNotion notion) {
  const std::size_t n = g.size();
  if (n <= 1) return true;
  auto dist = distances(g, notion == ConnectivityNotion::weak);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool fwd = dist[i][j] != kUnreachable;
      bool back = dist[j][i] != kUnreachable;
      switch (notion) {
        case ConnectivityNotion::weak:
          if (!fwd) return false;
          break;
        case ConnectivityNotion::semi:
          if (!fwd && !back) return false;
          break;
        case ConnectivityNotion::strong:
          if (!fwd || !back) return false;
          break;
      }
    }
  return true;
}

Diameter diameter(const ZdGraph& g, ConnectivityNotion notion) {
  const std::size_t n = g.size();
  if (n <= 1) return {true, 0};
  auto dist = distances(g, notion == ConnectivityNotion::weak);
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint32_t fwd = dist[i][j], back = dist[j][i];
      std::uint32_t pair;
      switch (notion) {
        case ConnectivityNotion::weak:
          pair = fwd;
          break;
        case ConnectivityNotion::semi:
          pair = std::min(fwd, back);
          break;
        default:
          pair = std::max(fwd, back);
          break;
      }
      if (pair == kUnreachable) return {false, 0};
      best = std::max(best, pair);
    }
  return {true, best};
}

std::string to_dot(const ZdGraph& g) {
  std::string out = "digraph zd {\n";
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool isolated = true;
    for (std::size_t j = 0; j < n && isolated; ++j)
      if (g.adj[i][j] || g.adj[j][i]) isolated = false;
    if (isolated)
      out += "  \"" + std::to_string(g.vertices[i]) + "\";\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adj[i][j])
        out += "  \"" + std::to_string(g.vertices[i]) + "\" -> \"" +
               std::to_string(g.vertices[j]) + "\";\n";
  out += "}";
  return out;
}

Calibration calibrate_connectivity_notion(
    const std::vector<FiniteStructure>& corpus) {
  Calibration cal;
  cal.rows = {{"weak"}, {"semi"}, {"strong"}};
  const ConnectivityNotion notions[] = {
      ConnectivityNotion::weak, ConnectivityNotion::semi,
      ConnectivityNotion::strong};
  for (const auto& s : corpus) {
    ++cal.structures;
    ZdGraph g = build_graph(s);
    bool ever = is_eversible(s).holds();
    for (std::size_t k = 0; k < 3; ++k) {
      bool conn = connectivity(g, notions[k]);
      auto& row = cal.rows[k];
      if (conn && ever)
        ++row.both;
      else if (!conn && !ever)
        ++row.neither;
      else if (conn)
        ++row.connected_only;
      else
        ++row.eversible_only;
    }
  }
  for (std::size_t k = 3; k-- > 0;)
    if (cal.rows[k].exact()) {
      cal.exact_notions.insert(cal.exact_notions.begin(), cal.rows[k].notion);
      if (!cal.chosen)
        cal.chosen = notions[k];  // ties resolve toward the strictest notion
    }
  return cal;
}

nlohmann::json to_json(const Calibration& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"notion", r.notion},
                    {"both", r.both},
                    {"neither", r.neither},
                    {"connected_only", r.connected_only},
                    {"eversible_only", r.eversible_only},
                    {"exact", r.exact()}});
  nlohmann::json j{{"structures", c.structures},
                   {"rows", rows},
                   {"exact_notions", c.exact_notions}};
  j["chosen"] = c.chosen ? nlohmann::json(notion_name(*c.chosen))
                         : nlohmann::json(nullptr);
  return j;
}

}  // namespace zdlab
