#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "zdlab/structure.hpp"

namespace zdlab {

// Directed graph on the proper zero-divisors: edge s -> t iff s != t and
// s t = 0.  Squares s with s^2 = 0 do not get loops.
struct ZdGraph {
  std::vector<ElementId> vertices;      // ascending element ids
  std::vector<std::vector<bool>> adj;   // adj[i][j]: vertices[i] -> vertices[j]

  std::size_t size() const { return vertices.size(); }
};

ZdGraph build_graph(const FiniteStructure& s);

// weak   - the underlying undirected graph is connected
// semi   - every unordered pair has a directed path in at least one direction
// strong - every ordered pair has a directed path
// Graphs with at most one vertex count as connected under all three.
enum class ConnectivityNotion { weak, semi, strong };

const char* notion_name(ConnectivityNotion n);
std::optional<ConnectivityNotion> notion_from_name(const std::string& name);

bool connectivity(const ZdGraph& g, ConnectivityNotion notion);

struct Diameter {
  bool finite = true;
  std::uint32_t value = 0;  // meaningful only when finite
};

// Longest shortest path under the notion's idea of a path: undirected for
// weak, best direction per pair for semi, every ordered pair for strong.
// Infinite exactly when the graph is disconnected under that notion.
Diameter diameter(const ZdGraph& g, ConnectivityNotion notion);

// Stable text form: bare node lines for isolated vertices, then edge lines
// in ascending (source, target) order.  The empty graph prints as
// "digraph zd {\n}".
std::string to_dot(const ZdGraph& g);

// Scores each notion by how well graph connectivity tracks eversibility over
// a corpus; the strictest notion with perfect agreement becomes the default.
struct Calibration {
  struct Row {
    std::string notion;
    std::uint64_t both = 0;            // connected and eversible
    std::uint64_t neither = 0;
    std::uint64_t connected_only = 0;
    std::uint64_t eversible_only = 0;

    bool exact() const { return connected_only == 0 && eversible_only == 0; }
  };

  std::uint64_t structures = 0;
  std::vector<Row> rows;               // weak, semi, strong
  std::vector<std::string> exact_notions;
  std::optional<ConnectivityNotion> chosen;
};

Calibration calibrate_connectivity_notion(
    const std::vector<FiniteStructure>& corpus);

nlohmann::json to_json(const Calibration& c);

}  // namespace zdlab
